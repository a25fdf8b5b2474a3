#include <gtest/gtest.h>

#include "ringlab/verify.hpp"

using namespace ringlab;

namespace {

const TheoremVerdict& find(const std::vector<TheoremVerdict>& vs, std::string_view id) {
  for (const auto& v : vs)
    if (v.theorem == id) return v;
  throw std::runtime_error("missing verdict " + std::string(id));
}

std::vector<RingCatalogEntry> small_catalog() {
  CatalogOptions options;
  options.order_cap = 16;
  return default_catalog(options);
}

}  // namespace

TEST(Suites, IdsAndSelection) {
  EXPECT_TRUE(is_suite_id("T2.8"));
  EXPECT_TRUE(is_suite_id("T4.7"));  // selects both parts
  EXPECT_TRUE(is_suite_id("C3.10-set"));
  EXPECT_FALSE(is_suite_id("T4"));
  RunConfig config;
  config.theorems = {"T4.7"};
  const auto verdicts = run_verification(small_catalog(), config);
  ASSERT_EQ(verdicts.size(), 2u);
  EXPECT_EQ(verdicts[0].theorem, "T4.7-2");
  EXPECT_EQ(verdicts[1].theorem, "T4.7-3");
  config.theorems = {"nope"};
  EXPECT_THROW(run_verification(small_catalog(), config), RingError);
}

TEST(Suites, RowsFollowCatalogOrderAndOverallIsConjunction) {
  const auto catalog = small_catalog();
  RunConfig config;
  config.theorems = {"COLLAPSE", "T4.7-3"};
  config.jobs = 3;
  const auto verdicts = run_verification(catalog, config);
  const auto& collapse = find(verdicts, "COLLAPSE");
  ASSERT_EQ(collapse.rows.size(), catalog.size());
  for (std::size_t i = 0; i < catalog.size(); ++i) EXPECT_EQ(collapse.rows[i].ring, catalog[i].provenance);
  for (const auto& v : verdicts) {
    const bool all = std::all_of(v.rows.begin(), v.rows.end(), [](auto& r) { return r.agree; });
    EXPECT_EQ(v.overall, all);
  }
}

TEST(Suites, DisagreementCarriesWitness) {
  RunConfig config;
  config.theorems = {"T4.7-3"};
  const auto verdicts = run_verification(small_catalog(), config);
  const VerdictRow* bad = verdicts[0].first_disagreement();
  ASSERT_NE(bad, nullptr);
  EXPECT_EQ(bad->ring, "matrix:zmod:2:2");
  EXPECT_FALSE(bad->lhs);
  EXPECT_TRUE(bad->rhs);
  EXPECT_FALSE(bad->witness.empty());
  EXPECT_EQ(bad->witness.size(), bad->witness_names.size());
}

TEST(Suites, AgreeingImplicationsReportNoWitness) {
  RunConfig config;
  config.theorems = {"L2.1", "CHAIN-UC", "CHAIN-SC", "T4.4", "C4.9", "L4.3", "L4.6"};
  for (const auto& v : run_verification(small_catalog(), config)) {
    EXPECT_TRUE(v.overall) << v.theorem;
    for (const auto& row : v.rows) EXPECT_TRUE(row.witness.empty()) << v.theorem << ' ' << row.ring;
  }
}

TEST(Suites, LatticeCapSkipsInsteadOfFailing) {
  RunConfig config;
  config.theorems = {"RADICALS"};
  config.lattice.max_order = 8;
  const auto v = run_verification(small_catalog(), config).front();
  EXPECT_TRUE(v.overall);
  EXPECT_FALSE(v.skipped.empty());
  for (const auto& s : v.skipped) EXPECT_NE(s.reason.find("LatticeCapExceeded"), std::string::npos) << s.reason;
}

TEST(ExtensionHarness, ConditionsMatchIntendedMutations) {
  const auto cases = extension_cases();
  ASSERT_GE(cases.size(), 6u);
  int negatives = 0;
  for (const auto& c : cases) {
    EXPECT_FALSE(bimodule_violation(c.spec)) << c.name;
    const auto conds = extension_conditions(c.spec);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(conds[i], c.broken_condition != i + 1) << c.name << " condition " << i + 1;
    negatives += c.broken_condition != 0;
  }
  EXPECT_GE(negatives, 3);
  const auto& base = cases.front();
  EXPECT_EQ(base.name, "strict-upper(zmod:2,2)");
  EXPECT_TRUE(is_idempotent_free(base.spec.module));
}

TEST(Serialization, FormatsCarryTheSameRows) {
  RunConfig config;
  config.theorems = {"T2.8", "OBS-ZP1"};
  const auto verdicts = run_verification(small_catalog(), config);
  const Json doc = verdicts_to_json(verdicts);
  EXPECT_EQ(doc["overall"], true);
  EXPECT_EQ(doc["verdicts"][0]["rows"].size(), verdicts[0].rows.size());
  const std::string csv = verdicts_to_csv(verdicts);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')),
            1 + verdicts[0].rows.size() + verdicts[1].rows.size());
  const std::string text = verdicts_to_text(verdicts);
  EXPECT_NE(text.find("PASS T2.8"), std::string::npos);
  EXPECT_NE(text.find("zmod:4: 2^m uniquely clean"), std::string::npos);
}

TEST(Reports, PredicateCsvHasOneColumnPerPredicate) {
  const std::string csv = predicates_to_csv({compute_predicates(RingAnalysis(zmod(6)))});
  const std::string header = csv.substr(0, csv.find('\n'));
  EXPECT_EQ(static_cast<std::size_t>(std::count(header.begin(), header.end(), ',')), predicate_names().size());
  EXPECT_EQ(csv.substr(csv.find('\n') + 1, 8), "zmod:6,1");
}
