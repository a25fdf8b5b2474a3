#include <gtest/gtest.h>

#include "ringlab/constructors.hpp"
#include "ringlab/predicates.hpp"
#include "support.hpp"

using namespace ringlab;

namespace {

using Pairs = std::vector<std::pair<Index, Index>>;

bool oracle_n_like(const oracle::Raw& r, std::size_t n) {
  for (Index a = 0; a < r.n; ++a)
    for (Index b = 0; b < r.n; ++b) {
      const Index ab = r.times(a, b);
      // (ab)^n + ab == a b^n + a^n b
      const Index lhs = r.plus(oracle::power(r, ab, n), ab);
      const Index rhs = r.plus(r.times(a, oracle::power(r, b, n)), r.times(oracle::power(r, a, n), b));
      if (lhs != rhs) return false;
    }
  return true;
}

std::vector<RingCatalogEntry> catalog_upto(std::size_t cap) {
  CatalogOptions options;
  options.order_cap = cap;
  return default_catalog(options);
}

}  // namespace

TEST(Clean, Decompositions) {
  const RingAnalysis z3(zmod(3)), z4(zmod(4));
  EXPECT_EQ(clean_decompositions(z3, 2), (Pairs{{0, 2}, {1, 1}}));
  EXPECT_EQ(clean_decompositions(z3, 1), (Pairs{{0, 1}}));
  EXPECT_EQ(clean_decompositions(z4, 2), (Pairs{{1, 1}}));
  for (Index a = 0; a < 4; ++a) EXPECT_EQ(clean_decompositions(z4, a).size(), oracle::clean_count(raw(z4.ring()), a));
}

TEST(Clean, UniquelyPiCleanExponent) {
  const RingAnalysis z3(zmod(3));
  EXPECT_EQ(uniquely_pi_clean_exponent(z3, 2), 2u);
  EXPECT_EQ(uniquely_pi_clean_exponent(z3, 1), 1u);
  const auto w = uniquely_pi_clean_witness(z3, 2);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->exponent, 2u);
  EXPECT_EQ(w->idempotent, 0u);
  EXPECT_EQ(w->complement, 1u);
  EXPECT_TRUE(is_uniquely_pi_clean(z3));
  EXPECT_TRUE(is_uniquely_pi_clean(RingAnalysis(zmod(4))));

  const RingAnalysis m2(matrix_ring(zmod(2), 2));
  const Decision d = is_uniquely_pi_clean(m2);
  ASSERT_FALSE(d);
  ASSERT_EQ(d.witness.size(), 1u);
  EXPECT_FALSE(uniquely_pi_clean_exponent(m2, d.witness[0]));
}

TEST(Clean, RingLevelExamples) {
  const RingAnalysis z3(zmod(3)), z4(zmod(4)), z6(zmod(6));
  EXPECT_TRUE(is_uniquely_clean(z4));
  EXPECT_FALSE(is_uniquely_clean(z3));
  EXPECT_EQ(is_uniquely_clean(z3).witness, (std::vector<Index>{2}));
  EXPECT_TRUE(is_clean(z3));
  EXPECT_TRUE(is_clean(z6));
  EXPECT_TRUE(is_strongly_clean(z6));
}

TEST(Exchange, Examples) {
  const RingAnalysis z4(zmod(4));
  EXPECT_TRUE(is_exchange(z4));
  EXPECT_TRUE(is_exchange(RingAnalysis(matrix_ring(zmod(2), 2))));
}

TEST(Structure, AbelianPotentPeriodic) {
  const RingAnalysis z6(zmod(6)), z4(zmod(4));
  EXPECT_TRUE(is_abelian(z6));
  EXPECT_TRUE(is_potent_ring(z6));
  EXPECT_FALSE(is_potent_ring(z4));
  EXPECT_EQ(is_potent_ring(z4).witness, (std::vector<Index>{2}));
  EXPECT_TRUE(is_periodic(z4));
  const auto witnesses = periodic_witnesses(z4);
  const auto [m, n] = witnesses[2];
  EXPECT_LT(m, n);
  EXPECT_EQ(z4.ring().pow(2, m), z4.ring().pow(2, n));

  const RingAnalysis m2(matrix_ring(zmod(2), 2));
  const Decision ab = is_abelian(m2);
  ASSERT_FALSE(ab);
  ASSERT_EQ(ab.witness.size(), 2u);
  const Index e = ab.witness[0], r = ab.witness[1];
  EXPECT_TRUE(m2.is_idempotent(e));
  EXPECT_NE(m2.ring().mul(e, r), m2.ring().mul(r, e));
}

TEST(Structure, BooleanAndLocal) {
  EXPECT_TRUE(is_boolean(RingAnalysis(product(zmod(2), zmod(2)))));
  EXPECT_FALSE(is_boolean(RingAnalysis(zmod(3))));
  EXPECT_TRUE(is_local(RingAnalysis(zmod(4))));
  EXPECT_TRUE(is_local(RingAnalysis(equal_diagonal_subring(zmod(2), 2))));
  EXPECT_FALSE(is_local(RingAnalysis(zmod(6))));
  EXPECT_FALSE(is_local(RingAnalysis(zmod(1))));
  EXPECT_FALSE(is_local(RingAnalysis(matrix_ring(zmod(2), 2))));
}

TEST(Structure, StronglyPiRegular) {
  EXPECT_TRUE(is_strongly_pi_regular(RingAnalysis(zmod(4))));
  EXPECT_TRUE(is_strongly_pi_regular(RingAnalysis(zmod(6))));
}

TEST(Lifting, ModJacobsonAndZero) {
  const RingAnalysis z4(zmod(4)), z6(zmod(6));
  EXPECT_TRUE(idempotents_lift_mod(z4, z4.jacobson()));
  EXPECT_TRUE(idempotents_lift_uniquely_mod(z4, z4.jacobson()));
  EXPECT_TRUE(idempotents_lift_mod(z6, Ideal::zero(z6.ring())));
  EXPECT_TRUE(idempotents_lift_uniquely_mod(z6, Ideal::zero(z6.ring())));
  // Every x is congruent to itself mod R, so lifting mod R is unique only when R has one idempotent.
  EXPECT_FALSE(idempotents_lift_uniquely_mod(z6, Ideal::whole(z6.ring())));
}

TEST(Sets, RadicalUnitSet) {
  EXPECT_EQ(radical_unit_set(RingAnalysis(zmod(4))), (std::vector<Index>{0, 2}));
  EXPECT_EQ(radical_unit_set(RingAnalysis(zmod(3))), (std::vector<Index>{0}));
  EXPECT_EQ(radical_unit_set(RingAnalysis(zmod(6))), (std::vector<Index>{0}));
}

TEST(Clean, PotentlyJClean) {
  EXPECT_TRUE(is_potently_J_clean(RingAnalysis(zmod(4))));
  EXPECT_TRUE(is_potently_J_clean(RingAnalysis(zmod(6))));
  const RingAnalysis m2(matrix_ring(zmod(2), 2));
  // Abelian and potently J-clean together would force uniquely pi-clean.
  if (is_potently_J_clean(m2)) EXPECT_FALSE(is_abelian(m2));
}

TEST(Clean, UniquelyNilCleanElement) {
  EXPECT_TRUE(is_uniquely_nil_clean_element(RingAnalysis(zmod(4)), 2));
  EXPECT_TRUE(is_uniquely_nil_clean_element(RingAnalysis(zmod(3)), 1));
  EXPECT_FALSE(is_uniquely_nil_clean_element(RingAnalysis(zmod(6)), 5));
}

TEST(NLike, MatchesBruteForce) {
  EXPECT_TRUE(is_generalized_n_like(RingAnalysis(gf4_frobenius_example()), 7));
  for (unsigned n = 2; n <= 9; ++n) EXPECT_TRUE(is_generalized_n_like(RingAnalysis(zmod(2)), n));
  for (const auto& entry : catalog_upto(16)) {
    const RingAnalysis a(entry.ring);
    for (unsigned n = 2; n <= 9; ++n) {
      EXPECT_EQ(is_generalized_n_like(a, n).holds, oracle_n_like(raw(entry.ring), n)) << entry.provenance << " n=" << n;
    }
  }
  EXPECT_THROW(is_generalized_n_like(RingAnalysis(zmod(2)), 1), RingError);
}

TEST(Characterizations, Examples) {
  EXPECT_TRUE(characterization(RingAnalysis(zmod(3)), Characterization::T2_8));
  EXPECT_TRUE(characterization(RingAnalysis(zmod(4)), Characterization::C2_9));
  EXPECT_FALSE(characterization(RingAnalysis(matrix_ring(zmod(2), 2)), Characterization::T4_7_2));
}

TEST(Characterizations, IdsRoundTrip) {
  for (Characterization c : all_characterizations()) EXPECT_EQ(parse_characterization(to_string(c)), c);
  EXPECT_EQ(parse_characterization("C3.10-set"), Characterization::C3_10);
  EXPECT_FALSE(parse_characterization("T9.9"));
}

TEST(Oracle, CleanFamilyMatchesBruteForce) {
  for (const auto& entry : catalog_upto(32)) {
    const RingAnalysis a(entry.ring);
    const oracle::Raw r = raw(entry.ring);
    EXPECT_EQ(is_uniquely_pi_clean(a).holds, oracle::uniquely_pi_clean(r)) << entry.provenance;
    EXPECT_EQ(is_abelian(a).holds, oracle::abelian(r)) << entry.provenance;
    bool uc = true;
    for (Index x = 0; x < r.n; ++x) uc = uc && oracle::clean_count(r, x) == 1;
    EXPECT_EQ(is_uniquely_clean(a).holds, uc) << entry.provenance;
  }
}

TEST(PredicateVector, ReEvaluationReproducesEveryValue) {
  for (const auto& entry : catalog_upto(32)) {
    const RingAnalysis a(entry.ring);
    const PredicateVector pv = compute_predicates(a);
    ASSERT_EQ(pv.values.size(), predicate_names().size());
    for (const auto& [name, d] : pv.values) {
      const Decision again = evaluate_predicate(a, name);
      EXPECT_EQ(again.holds, d.holds) << entry.provenance << ' ' << name;
      EXPECT_EQ(again.witness, d.witness) << entry.provenance << ' ' << name;
    }
    EXPECT_NE(pv.value("commutative"), pv.value("noncommutative"));
  }
  EXPECT_THROW(evaluate_predicate(RingAnalysis(zmod(2)), "no_such_thing"), RingError);
}
