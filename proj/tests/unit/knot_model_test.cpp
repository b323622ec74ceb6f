#include <gtest/gtest.h>

#include "slicedeg/errors.hpp"
#include "slicedeg/knot_model.hpp"

namespace slicedeg {
namespace {

KnotRecord trefoil() {
  KnotRecord r;
  r.name = "3_1";
  r.signature = -2;
  r.s_invariants = {{0, 2}};
  r.tau = 1;
  r.vs_spec = vs::Thin{};
  r.clasp_plus = 1;
  return r;
}

bool has_error(const std::vector<Diagnostic>& ds, const std::string& msg) {
  for (const auto& d : ds) {
    if (d.severity == Severity::kError && d.message == msg) return true;
  }
  return false;
}

TEST(AlexanderPolynomial, AccessorsAndSymmetry) {
  AlexanderPolynomial p{{1, -1, 1}};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p.at(-1), 1);
  EXPECT_EQ(p.at(0), -1);
  EXPECT_EQ(p.at(5), 0);
  EXPECT_TRUE(p.palindromic());
  EXPECT_EQ(p.value_at_one(), 1);
  EXPECT_FALSE((AlexanderPolynomial{{1, -1, 2}}).palindromic());
}

TEST(Validate, TrefoilAccepted) { EXPECT_TRUE(validate_record(trefoil()).empty()); }

TEST(Validate, OddSignatureRejected) {
  auto r = trefoil();
  r.signature = -3;
  EXPECT_TRUE(has_error(validate_record(r), "signature must be even"));
}

TEST(Validate, OddSInvariantRejected) {
  auto r = trefoil();
  r.s_invariants[2] = 1;
  EXPECT_FALSE(validate_record(r).empty());
}

TEST(Validate, IncreasingVsRejected) {
  auto r = trefoil();
  r.vs_spec = vs::Explicit{{1, 2}};
  EXPECT_TRUE(has_error(validate_record(r), "V_s must be non-increasing"));
}

TEST(Validate, NegativeVsRejected) {
  auto r = trefoil();
  r.vs_spec = vs::Explicit{{-1}};
  EXPECT_TRUE(has_error(validate_record(r), "V_s must be non-negative"));
}

TEST(Validate, LargeVsStepIsWarning) {
  auto r = trefoil();
  r.vs_spec = vs::Explicit{{3, 1}};
  auto ds = validate_record(r);
  ASSERT_FALSE(ds.empty());
  for (const auto& d : ds) EXPECT_EQ(d.severity, Severity::kWarning);
}

TEST(Validate, LSpaceNeedsAlexander) {
  auto r = trefoil();
  r.vs_spec = vs::LSpace{};
  EXPECT_FALSE(validate_record(r).empty());
  r.alexander = AlexanderPolynomial{{1, -1, 1}};
  EXPECT_TRUE(validate_record(r).empty());
  r.alexander = AlexanderPolynomial{{1, -2, 2, -2, 1}};
  EXPECT_FALSE(validate_record(r).empty());
}

TEST(Database, DuplicateNamesRejected) {
  KnotDatabase db;
  db.add(trefoil());
  EXPECT_THROW(db.add(trefoil()), ParseError);
}

TEST(Database, UnknownKnotSuggestsNearMatches) {
  KnotDatabase db;
  db.add(trefoil());
  auto r = trefoil();
  r.name = "9_42";
  db.add(r);
  try {
    db.at("3-1");
    FAIL() << "expected UnknownKnot";
  } catch (const UnknownKnot& e) {
    EXPECT_NE(std::string(e.what()).find("3_1"), std::string::npos);
  }
  EXPECT_EQ(db.near_matches("9_24").front(), "9_42");
}

TEST(Database, UnresolvedReferencesFlagged) {
  KnotDatabase db;
  auto r = trefoil();
  r.concordant_to = "missing";
  r.friends.push_back({0, "nobody", 2});
  db.add(r);
  EXPECT_EQ(db.unresolved_references().size(), 2u);
}

TEST(Parse, MinimalDocument) {
  auto res = parse_knot_db(R"([{"name":"3_1","signature":-2,"s_invariants":{"0":2},"tau":1,
                               "vs_spec":{"type":"thin"},"clasp_plus":1}])");
  EXPECT_EQ(res.db.at("3_1"), trefoil());
  EXPECT_TRUE(res.warnings.empty());
}

TEST(Parse, SyntaxErrorReportsLine) {
  try {
    parse_knot_db("[\n{\"name\": \"a\",\n \"signature\": }\n]");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Parse, ErrorNamesRecordAndField) {
  try {
    parse_knot_db(R"([{"name":"x","signature":-3}])");
    FAIL();
  } catch (const ParseError& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("'x'"), std::string::npos) << msg;
    EXPECT_NE(msg.find("signature"), std::string::npos) << msg;
  }
  EXPECT_THROW(parse_knot_db(R"([{"name":"x"}])"), ParseError);
  EXPECT_THROW(parse_knot_db(R"([{"name":"x","signature":"two"}])"), ParseError);
  EXPECT_THROW(parse_knot_db(R"([{"name":"x","signature":0,"vs_spec":{"type":"weird"}}])"), ParseError);
  EXPECT_THROW(parse_knot_db(R"({"name":"x"})"), ParseError);
}

TEST(Parse, UnknownFieldsWarnOnce) {
  auto res = parse_knot_db(R"([{"name":"a","signature":0,"note":"x"},{"name":"b","signature":0,"note":"y"}])");
  ASSERT_EQ(res.warnings.size(), 1u);
  EXPECT_NE(res.warnings[0].find("'note'"), std::string::npos);
  EXPECT_EQ(res.db.size(), 2u);
}

TEST(Parse, LargeIntegersRejected) {
  EXPECT_THROW(parse_knot_db(R"([{"name":"a","signature":123456789012345678901234}])"), ParseError);
  EXPECT_THROW(parse_knot_db(R"([{"name":"a","signature":0.5}])"), ParseError);
}

TEST(Parse, GammaAndWitnessForms) {
  auto res = parse_knot_db(R"([{"name":"7_4","signature":-2,"gamma":{"1":"3/5"},
      "upper_witnesses":[[8,"clasp"],{"k":9,"description":"other"}]}])");
  const auto& r = res.db.at("7_4");
  EXPECT_EQ(r.gamma.at(1), Rational(3, 5));
  ASSERT_EQ(r.upper_witnesses.size(), 2u);
  EXPECT_EQ(r.upper_witnesses[0].k, 8);
  EXPECT_EQ(r.upper_witnesses[1].description, "other");
  EXPECT_THROW(parse_knot_db(R"([{"name":"a","signature":0,"gamma":{"1":"3/0"}}])"), ParseError);
}

TEST(Parse, SerializeRoundTrip) {
  KnotDatabase db;
  db.add(trefoil());
  KnotRecord r;
  r.name = "8_19";
  r.signature = -6;
  r.s_invariants = {{0, 6}, {2, 6}};
  r.tau = 3;
  r.vs_spec = vs::LSpace{};
  r.alexander = AlexanderPolynomial{{1, -1, 0, 1, 0, -1, 1}};
  r.gamma = {{1, Rational(15, 23)}};
  r.friends = {{0, "3_1", 2}};
  r.upper_witnesses = {{9, "trace"}};
  r.concordant_to = "3_1";
  r.connected_sum_of = std::vector<std::string>{"3_1", "3_1"};
  db.add(r);
  KnotRecord e;
  e.name = "e";
  e.vs_spec = vs::Explicit{{2, 1}};
  e.slicing_number = 2;
  db.add(e);
  auto back = parse_knot_db(serialize_knot_db(db));
  EXPECT_EQ(back.db, db);
  EXPECT_EQ(serialize_knot_db(back.db), serialize_knot_db(db));
}

TEST(Parse, BundledDatabaseLoads) {
  auto res = load_knot_db(SLICEDEG_BUNDLED_DB);
  EXPECT_GE(res.db.size(), 85u);
  EXPECT_TRUE(res.db.unresolved_references().empty());
  EXPECT_THROW(load_knot_db("/nonexistent/knots.json"), DataError);
}

}  // namespace
}  // namespace slicedeg
