#include <gtest/gtest.h>

#include "prelie/verify.hpp"

using namespace prelie;

TEST(Verify, ProfilesAndCaps) {
  const VerifyOptions q = VerifyOptions::for_profile("quick");
  EXPECT_EQ(q.max_n, 4);
  EXPECT_EQ(q.max_degree, 5);
  const VerifyOptions f = VerifyOptions::for_profile("full");
  EXPECT_EQ(f.max_n, 6);
  EXPECT_EQ(f.max_degree, 7);
  EXPECT_THROW(VerifyOptions::for_profile("huge"), std::invalid_argument);
  VerifyOptions over = q;
  over.max_n = 5;
  EXPECT_THROW(over.validate(), std::invalid_argument);
  over.unsafe = true;
  EXPECT_NO_THROW(over.validate());
  over.max_n = 7;
  EXPECT_THROW(over.validate(), std::invalid_argument);
}

TEST(Verify, QuickProfilePassesAndListsEveryCriterionOnce) {
  const VerifyReport r = run_verify(VerifyOptions::for_profile("quick"));
  EXPECT_TRUE(r.ok()) << r.to_text();
  ASSERT_EQ(r.checks.size(), 10u);
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    const std::string prefix = (i + 1 < 10 ? "A0" : "A") + std::to_string(i + 1) + "_";
    EXPECT_EQ(r.checks[i].name.rfind(prefix, 0), 0u) << r.checks[i].name;
  }
}

TEST(Verify, ReportsAreDeterministic) {
  VerifyOptions o = VerifyOptions::for_profile("quick");
  o.max_n = 3;
  o.max_degree = 4;
  const std::string a = run_verify(o).to_json().dump(2);
  const std::string b = run_verify(o).to_json().dump(2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("elapsed_ms"), std::string::npos);
  EXPECT_NE(run_verify(o).to_json(true).dump().find("elapsed_ms"), std::string::npos);
}

TEST(Verify, JsonSchema) {
  VerifyOptions o = VerifyOptions::for_profile("quick");
  o.max_n = 2;
  o.max_degree = 3;
  const auto j = run_verify(o).to_json();
  EXPECT_EQ(j["suite_version"], kSuiteVersion);
  EXPECT_EQ(j["status"], "ok");
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c.contains("name"));
    EXPECT_TRUE(c.contains("parameters"));
    EXPECT_EQ(c["status"], "ok");
    EXPECT_TRUE(c["first_discrepancy"].is_null());
  }
}

TEST(Verify, TamperedFixtureIsCaught) {
  VerifyOptions o = VerifyOptions::for_profile("quick");
  o.tamper = true;
  const VerifyReport r = run_verify(o);
  EXPECT_FALSE(r.ok());
  for (const char* name : {"A04_character_formulas", "A05_main_theorem", "A06_reflection_theorem"}) {
    const auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const CheckRecord& c) { return c.name == name; });
    ASSERT_NE(it, r.checks.end());
    EXPECT_FALSE(it->report.ok) << name;
    ASSERT_TRUE(it->report.first_discrepancy) << name;
    EXPECT_EQ(it->report.first_discrepancy->degree, 3);
    EXPECT_EQ(it->report.first_discrepancy->partition, (std::vector<int>{2, 1}));
  }
  EXPECT_EQ(r.first_failure()->name, "A04_character_formulas");
  EXPECT_NE(r.to_text().find("partition [2,1]"), std::string::npos);
}

TEST(Verify, IndividualChecks) {
  EXPECT_TRUE(check_tree_counts(5).ok);
  EXPECT_TRUE(check_algebraic_axioms(100, 1).ok);
  EXPECT_TRUE(check_series().ok);
  EXPECT_TRUE(check_positivity(5, zX_formula(5)).ok);
  SymF bad = zX_formula(4);
  bad.add(Partition({4}), Rational(1, 3));
  const CheckReport r = check_positivity(4, bad);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.first_discrepancy->degree, 4);
}
