#include <gtest/gtest.h>

#include "slicedeg/bounds_engine.hpp"
#include "slicedeg/errors.hpp"

namespace slicedeg {
namespace {

KnotRecord thin_record(std::string name, std::int64_t tau) {
  KnotRecord r;
  r.name = std::move(name);
  r.signature = -2 * tau;
  r.s_invariants = {{0, 2 * tau}};
  r.tau = tau;
  r.vs_spec = vs::Thin{};
  return r;
}

KnotRecord beta_only(std::int64_t s) {
  KnotRecord r;
  r.name = "beta" + std::to_string(s);
  r.s_invariants = {{0, s}};
  return r;
}

const KnotDatabase& bundled() {
  static const KnotDatabase db = load_knot_db(SLICEDEG_BUNDLED_DB).db;
  return db;
}

TEST(ObstructionNames, RoundTrip) {
  for (auto o : all_obstructions()) EXPECT_EQ(parse_obstruction(obstruction_name(o)), o);
  EXPECT_FALSE(parse_obstruction("tau").has_value());
}

TEST(LowerBound, Trefoil) {
  auto lb = lower_bound(thin_record("3_1", 1), EngineConfig{});
  EXPECT_EQ(lb.value, 4);
  EXPECT_FALSE(lb.exhausted);
  ASSERT_TRUE(lb.surviving_class);
  EXPECT_EQ(lb.surviving_class->coords(), (std::vector<std::int64_t>{2}));
  ASSERT_EQ(lb.certificates.size(), 4u);
  EXPECT_TRUE(lb.certificates[0].level_verdict);
  for (std::size_t k = 1; k < 4; ++k) {
    for (const auto& c : lb.certificates[k].classes) EXPECT_TRUE(c.verdict.obstructed);
  }
}

TEST(LowerBound, SevenFourUsesGamma) {
  auto r = thin_record("7_4", 1);
  r.gamma = {{1, Rational(3, 5)}};
  EXPECT_EQ(lower_bound(r, EngineConfig{}).value, 5);
  EngineConfig no_gamma;
  no_gamma.enabled.erase(Obstruction::kGamma);
  EXPECT_EQ(lower_bound(r, no_gamma).value, 4);
}

TEST(LowerBound, Unknot) {
  KnotRecord r;
  r.name = "0_1";
  r.s_invariants = {{0, 0}};
  r.vs_spec = vs::Explicit{{}};
  auto lb = lower_bound(r, EngineConfig{});
  EXPECT_EQ(lb.value, 0);
  EXPECT_TRUE(lb.certificates.empty());
}

TEST(LowerBound, BetaOnly) {
  EngineConfig cfg;
  cfg.enabled = {Obstruction::kAdjunction};
  EXPECT_EQ(lower_bound(beta_only(4), cfg).value, 8);
  EXPECT_EQ(lower_bound(beta_only(8), cfg).value, 13);
}

TEST(LowerBound, ThinTorusKnots) {
  for (std::int64_t m = 1; m <= 4; ++m) EXPECT_EQ(lower_bound(thin_record("T", m), EngineConfig{}).value, 4 * m);
}

TEST(LowerBound, FriendRuleCoversEveryLevelUpToK) {
  KnotRecord r;
  r.name = "kb";
  r.friends = {{2, "K_G", 2}};
  auto lb = lower_bound(r, EngineConfig{});
  EXPECT_EQ(lb.value, 3);
  for (const auto& c : lb.certificates) {
    ASSERT_TRUE(c.level_verdict);
    EXPECT_TRUE(std::holds_alternative<FriendWitness>(c.level_verdict->witness));
  }
  EngineConfig off;
  off.enabled.erase(Obstruction::kFriend);
  EXPECT_EQ(lower_bound(r, off).value, 0);
  r.friends = {{4, "K_G", 2}};
  EXPECT_EQ(lower_bound(r, EngineConfig{}).value, 0);
}

TEST(LowerBound, ExhaustedCap) {
  auto lb = lower_bound(thin_record("T", 4), EngineConfig{}, 10);
  EXPECT_TRUE(lb.exhausted);
  EXPECT_EQ(lb.value, 11);
  EXPECT_FALSE(lb.surviving_class);
}

TEST(LowerBound, InconsistentLSpaceDataThrows) {
  KnotRecord r;
  r.name = "bad";
  r.vs_spec = vs::LSpace{};
  r.alexander = AlexanderPolynomial{{-1, 3, -1}};
  EXPECT_THROW(lower_bound(r, EngineConfig{}), DataError);
}

TEST(LowerBound, DeterministicAcrossThreadCounts) {
  for (const char* name : {"7_4", "9_10", "9_5", "8_19", "T(4,5)", "9_1"}) {
    const auto& r = bundled().at(name);
    EngineConfig one;
    const auto base = lower_bound(r, one);
    for (unsigned t : {2u, 3u, 8u}) {
      EngineConfig cfg;
      cfg.parallelism = t;
      const auto other = lower_bound(r, cfg);
      EXPECT_EQ(other.value, base.value) << name;
      EXPECT_EQ(other.surviving_class, base.surviving_class) << name;
      ASSERT_EQ(other.certificates.size(), base.certificates.size());
      for (std::size_t i = 0; i < base.certificates.size(); ++i) {
        const auto& a = base.certificates[i].classes;
        const auto& b = other.certificates[i].classes;
        ASSERT_EQ(a.size(), b.size());
        for (std::size_t j = 0; j < a.size(); ++j) {
          EXPECT_EQ(a[j].cls, b[j].cls);
          EXPECT_EQ(a[j].obstruction, b[j].obstruction);
          EXPECT_EQ(describe(a[j].verdict), describe(b[j].verdict));
        }
      }
    }
  }
}

TEST(LowerBound, MonotoneInEnabledSet) {
  const std::vector<std::set<Obstruction>> subsets = {
      {}, {Obstruction::kAdjunction}, {Obstruction::kVs}, {Obstruction::kAdjunction, Obstruction::kVs},
      all_obstructions()};
  for (const auto& [name, r] : bundled().records()) {
    std::int64_t prev = -1;
    for (const auto& s : subsets) {
      EngineConfig cfg;
      cfg.enabled = s;
      cfg.max_k = 20;
      const auto v = lower_bound(r, cfg).value;
      if (s.size() == 4 || s.size() == 2) EXPECT_GE(v, prev) << name;
      prev = std::max(prev, v);
    }
    EngineConfig sweep;
    sweep.gamma_c_sweep = true;
    sweep.max_k = 20;
    EngineConfig plain;
    plain.max_k = 20;
    EXPECT_GE(lower_bound(r, sweep).value, lower_bound(r, plain).value) << name;
  }
}

TEST(UpperBound, Sources) {
  KnotDatabase db;
  auto t = thin_record("3_1", 1);
  t.clasp_plus = 1;
  db.add(t);
  auto w = thin_record("8_19", 3);
  w.upper_witnesses = {{9, "annulus trace construction"}};
  w.slicing_number = 3;
  db.add(w);
  KnotRecord sum;
  sum.name = "3_1#3_1";
  sum.connected_sum_of = std::vector<std::string>{"3_1", "3_1"};
  db.add(sum);
  KnotRecord conc;
  conc.name = "c";
  conc.concordant_to = "8_19";
  db.add(conc);
  KnotRecord none;
  none.name = "none";
  db.add(none);
  auto table = upper_bounds(db);
  EXPECT_EQ(table.bounds.at("3_1").value, 4);
  EXPECT_EQ(table.bounds.at("8_19").value, 9);
  EXPECT_EQ(table.bounds.at("8_19").witness, "annulus trace construction");
  EXPECT_EQ(table.bounds.at("3_1#3_1").value, 8);
  EXPECT_EQ(table.bounds.at("c").value, 9);
  EXPECT_FALSE(table.bounds.at("none").value);
  EXPECT_TRUE(table.warnings.empty());
}

TEST(UpperBound, ConcordanceTransfersBothWaysAndCyclesWarn) {
  KnotDatabase db;
  KnotRecord a;
  a.name = "a";
  a.concordant_to = "b";
  a.upper_witnesses = {{3, "w"}};
  KnotRecord b;
  b.name = "b";
  b.concordant_to = "a";
  db.add(a);
  db.add(b);
  auto table = upper_bounds(db);
  EXPECT_EQ(table.bounds.at("b").value, 3);
  EXPECT_FALSE(table.warnings.empty());
}

TEST(Database, LowerNeverExceedsUpper) {
  EngineConfig cfg;
  for (const auto& rep : report_table(bundled(), cfg)) {
    ASSERT_TRUE(rep.error.empty()) << rep.knot << ": " << rep.error;
    EXPECT_FALSE(rep.lower_exhausted && rep.upper) << rep.knot;
    if (rep.upper) EXPECT_LE(rep.lower, *rep.upper) << rep.knot;
  }
}

TEST(BetaTable, Rows) {
  std::vector<std::int64_t> betas = {2, 4, 6, 8, 10, 12, 14, 16};
  auto rows = beta_table(betas);
  const std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> expected = {
      {4, {2}}, {8, {2, 2}}, {9, {3}}, {13, {3, 2}}, {16, {4}}, {16, {4}}, {20, {4, 2}}, {24, {4, 2, 2}}};
  ASSERT_EQ(rows.size(), expected.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].min_k, expected[i].first) << rows[i].beta;
    EXPECT_EQ(rows[i].witness.coords(), expected[i].second) << rows[i].beta;
    EXPECT_EQ(stau_bound(rows[i].beta) <= rows[i].min_k, true);
  }
}

TEST(Interval, Rendering) {
  BoundReport r;
  r.lower = 4;
  r.upper = 4;
  EXPECT_EQ(render_interval(r), "4");
  r.upper = 8;
  EXPECT_EQ(render_interval(r), "[4,8]");
  r.upper.reset();
  EXPECT_EQ(render_interval(r), "[4,?]");
  r.lower_exhausted = true;
  EXPECT_EQ(render_interval(r), ">=4");
}

TEST(NaturalOrder, Numbers) {
  EXPECT_TRUE(natural_less("3_1", "9_2"));
  EXPECT_TRUE(natural_less("9_2", "9_10"));
  EXPECT_FALSE(natural_less("9_10", "9_2"));
  EXPECT_TRUE(natural_less("T(2,3)", "T(2,11)"));
  EXPECT_FALSE(natural_less("a", "a"));
}

TEST(ReportTable, CapturesPerRecordErrors) {
  KnotDatabase db;
  db.add(thin_record("9_10", 1));
  db.add(thin_record("9_2", 1));
  EngineConfig bad;
  bad.max_k = -1;
  auto rows = report_table(db, bad);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].knot, "9_2");
  EXPECT_FALSE(rows[0].error.empty());
  EXPECT_EQ(render_interval(rows[0]), "error");
  rows = report_table(db, EngineConfig{});
  EXPECT_EQ(render_interval(rows[1]), "[4,?]");
}

}  // namespace
}  // namespace slicedeg
