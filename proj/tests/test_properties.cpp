#include <gtest/gtest.h>

#include <random>

#include "ringlab/constructors.hpp"
#include "ringlab/predicates.hpp"
#include "support.hpp"

using namespace ringlab;

namespace {

std::vector<RingCatalogEntry> catalog_upto(std::size_t cap) {
  CatalogOptions options;
  options.order_cap = cap;
  return default_catalog(options);
}

}  // namespace

// Single-entry corruptions: the validator accepts exactly when a brute-force
// axiom scan does.
TEST(Property, CorruptedTablesAgreeWithAxiomOracle) {
  std::mt19937 rng(20240611);
  for (const auto& entry : catalog_upto(32)) {
    const std::size_t n = entry.ring.order();
    if (n < 2) continue;
    const int trials = n <= 16 ? 1000 : 100;
    std::uniform_int_distribution<std::size_t> cell(0, n * n - 1);
    std::uniform_int_distribution<Index> value(0, static_cast<Index>(n - 1));
    int accepted = 0;
    for (int t = 0; t < trials; ++t) {
      oracle::Raw r = raw(entry.ring);
      auto& table = (t % 2 == 0) ? r.add : r.mul;
      const std::size_t pos = cell(rng);
      Index v = value(rng);
      if (v == table[pos]) v = (v + 1) % n;
      table[pos] = v;
      const bool valid = std::holds_alternative<FiniteRing>(validate_ring(tables_of(r, entry.provenance)));
      ASSERT_EQ(valid, oracle::is_ring(r)) << entry.provenance << " trial " << t;
      accepted += valid ? 1 : 0;
    }
    // A single changed entry can never leave a ring.
    EXPECT_EQ(accepted, 0) << entry.provenance;
  }
}

TEST(Property, PowerLawExhaustive) {
  for (const auto& entry : catalog_upto(16)) {
    const FiniteRing& r = entry.ring;
    const std::size_t n = r.order();
    for (Index x = 0; x < n; ++x)
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t k = 1; k <= n; ++k) {
          ASSERT_EQ(r.pow(x, j + k), r.mul(r.pow(x, j), r.pow(x, k))) << entry.provenance << " x=" << x;
        }
  }
}

TEST(Property, PowerTrailBounds) {
  for (const auto& entry : default_catalog()) {
    const FiniteRing& r = entry.ring;
    for (Index x = 0; x < r.order(); ++x) {
      const PowerTrail t = power_trail(r, x);
      ASSERT_LE(t.powers.size(), r.order());
      std::vector<Index> sorted = t.powers;
      std::sort(sorted.begin(), sorted.end());
      ASSERT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
      ASSERT_EQ(r.mul(t.powers.back(), x), t.powers[t.cycle_start]) << entry.provenance;
      const auto [m, k] = t.period_witness();
      ASSERT_EQ(r.pow(x, m), r.pow(x, k));
    }
  }
}

TEST(Property, ElementClassesSatisfyTheirEquations) {
  for (const auto& entry : catalog_upto(64)) {
    const RingAnalysis a(entry.ring);
    const FiniteRing& r = entry.ring;
    for (Index e : a.idempotents().members) ASSERT_EQ(r.mul(e, e), e);
    for (Index u : a.units().members) ASSERT_TRUE(a.is_unit(u));
    for (Index x : a.nilpotents().members) ASSERT_EQ(r.pow(x, r.order()), r.zero());
    for (Index p : a.potents().members) ASSERT_TRUE(a.trail(p).is_potent());
    for (Index e : a.central_idempotents().members) ASSERT_TRUE(a.idempotents().contains(e));
    ASSERT_TRUE(std::is_sorted(a.units().members.begin(), a.units().members.end()));
  }
}

TEST(Property, QuotientByJacobsonOfUniquelyPiCleanRings) {
  for (const auto& entry : default_catalog()) {
    const RingAnalysis a(entry.ring);
    if (!is_uniquely_pi_clean(a)) continue;
    const RingAnalysis top(quotient(entry.ring, a.jacobson()));
    EXPECT_TRUE(is_potent_ring(top)) << entry.provenance;
    EXPECT_TRUE(is_uniquely_pi_clean(top)) << entry.provenance;
    EXPECT_TRUE(quotient_is_potent(a, a.jacobson())) << entry.provenance;
  }
}

TEST(Property, JacobsonMembersHaveUnitShifts) {
  for (const auto& entry : default_catalog()) {
    const RingAnalysis a(entry.ring);
    const FiniteRing& r = entry.ring;
    for (Index x : a.jacobson().members())
      for (std::size_t m = 1; m <= r.order(); ++m) ASSERT_TRUE(a.is_unit(r.sub(r.pow(x, m), r.one())));
  }
}
