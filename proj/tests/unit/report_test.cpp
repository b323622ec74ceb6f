#include <gtest/gtest.h>

#include "json.hpp"
#include "slicedeg/errors.hpp"
#include "slicedeg/report.hpp"

namespace slicedeg {
namespace {

const KnotDatabase& bundled() {
  static const KnotDatabase db = load_knot_db(SLICEDEG_BUNDLED_DB).db;
  return db;
}

TEST(ReportJson, RoundTripsEveryBundledReport) {
  const auto uppers = upper_bounds(bundled());
  EngineConfig cfg;
  cfg.gamma_c_sweep = true;
  for (const auto& [name, r] : bundled().records()) {
    const auto rep = bound_report(r, uppers.bounds.at(name), cfg);
    const auto text = report_to_json(rep);
    const auto back = report_from_json(text);
    EXPECT_EQ(report_to_json(back), text) << name;
    EXPECT_EQ(back.lower, rep.lower);
    EXPECT_EQ(back.upper, rep.upper);
    EXPECT_EQ(back.surviving_class, rep.surviving_class);
    EXPECT_EQ(back.certificates.size(), rep.certificates.size());
  }
}

TEST(ReportJson, Schema) {
  const auto& r = bundled().at("7_4");
  const auto rep = bound_report(r, bundled(), EngineConfig{});
  const auto j = nlohmann::json::parse(report_to_json(rep));
  EXPECT_EQ(j.at("name"), "7_4");
  EXPECT_EQ(j.at("lower"), 5);
  EXPECT_EQ(j.at("upper"), 8);
  EXPECT_EQ(j.at("interval"), "[5,8]");
  EXPECT_EQ(j.at("surviving_class"), nlohmann::json::array({2, 1}));
  const auto& level4 = j.at("certificates").at(4);
  EXPECT_EQ(level4.at("k"), 4);
  bool saw_gamma = false;
  for (const auto& c : level4.at("classes")) {
    if (c.at("class") == nlohmann::json::array({2})) {
      EXPECT_EQ(c.at("obstruction"), "gamma");
      EXPECT_EQ(c.at("witness").at("type"), "gamma");
      EXPECT_EQ(c.at("witness").at("kappa_min"), "1/4");
      EXPECT_EQ(c.at("witness").at("gamma"), "3/5");
      saw_gamma = true;
    }
  }
  EXPECT_TRUE(saw_gamma);
}

TEST(ReportJson, MalformedInputRejected) {
  EXPECT_THROW(report_from_json("{"), DataError);
  EXPECT_THROW(report_from_json(R"({"name":"x"})"), DataError);
  EXPECT_THROW(report_from_json(R"({"name":"x","lower":1,"upper":null,"lower_exhausted":false,
      "certificates":[{"k":0,"level":{"type":"mystery"},"classes":[]}]})"),
               DataError);
}

TEST(ReportText, MentionsIntervalAndWitness) {
  const auto rep = bound_report(bundled().at("9_42"), bundled(), EngineConfig{});
  const auto text = report_to_text(rep, true);
  EXPECT_NE(text.find("9_42: sd+ in 1"), std::string::npos) << text;
  EXPECT_NE(text.find("Mazur"), std::string::npos) << text;
  EXPECT_NE(text.find("k = 0"), std::string::npos) << text;
}

TEST(Table, Formats) {
  BoundReport a;
  a.knot = "3_1";
  a.lower = 4;
  a.upper = 4;
  BoundReport b;
  b.knot = "7_4";
  b.lower = 5;
  b.upper = 8;
  const std::vector<BoundReport> rows = {a, b};
  EXPECT_EQ(render_table(rows, "md"), "| K | sd+(K) |\n|---|---|\n| 3_1 | 4 |\n| 7_4 | [5,8] |\n");
  EXPECT_EQ(render_table(rows, "text"), "3_1\t4\n7_4\t[5,8]\n");
  const auto j = nlohmann::json::parse(render_table(rows, "json"));
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1].at("interval"), "[5,8]");
}

TEST(Verdict, JsonForm) {
  const auto j = nlohmann::json::parse(verdict_to_json(beta_adjunction(HomologyClass({1, 1, 1}), 2, "s_0")));
  EXPECT_TRUE(j.at("obstructed").get<bool>());
  EXPECT_EQ(j.at("witness").at("type"), "beta");
  EXPECT_EQ(j.at("witness").at("rhs"), 0);
}

}  // namespace
}  // namespace slicedeg
