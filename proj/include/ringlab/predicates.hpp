#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/radicals.hpp"

namespace ringlab {

/// A ring-level yes/no answer. When false, `witness` holds the smallest
/// element (or pair) that breaks the property.
struct Decision {
  bool holds = true;
  std::vector<Index> witness;

  explicit operator bool() const { return holds; }
  static Decision yes() { return {true, {}}; }
  static Decision no(std::vector<Index> witness) { return {false, std::move(witness)}; }
};

enum class CleanKind { clean, nil_clean, j_clean, p_clean };

/// target^exponent = idempotent + complement, complement in the class named by kind.
struct CleanWitness {
  Index target = 0;
  std::size_t exponent = 1;
  Index idempotent = 0;
  Index complement = 0;
  CleanKind kind = CleanKind::clean;
};

// ----- element level -------------------------------------------------------

/// All (e, u) with e idempotent, u a unit and e + u = a.
std::vector<std::pair<Index, Index>> clean_decompositions(const RingAnalysis& ring, Index a);

/// Smallest m (over the distinct powers of a) with a^m uniquely clean.
std::optional<std::size_t> uniquely_pi_clean_exponent(const RingAnalysis& ring, Index a);
/// Witness decomposition of a^m for the exponent above.
std::optional<CleanWitness> uniquely_pi_clean_witness(const RingAnalysis& ring, Index a);

/// Exactly one idempotent e with a - e nilpotent.
bool is_uniquely_nil_clean_element(const RingAnalysis& ring, Index a);

// ----- ring level ----------------------------------------------------------

Decision is_uniquely_pi_clean(const RingAnalysis& ring);
Decision is_uniquely_clean(const RingAnalysis& ring);
Decision is_clean(const RingAnalysis& ring);
Decision is_strongly_clean(const RingAnalysis& ring);
Decision is_exchange(const RingAnalysis& ring);
Decision is_abelian(const RingAnalysis& ring);
Decision is_commutative(const RingAnalysis& ring);
Decision is_potent_ring(const RingAnalysis& ring);
/// Always true for a finite ring.
Decision is_periodic(const RingAnalysis& ring);
/// (m, n) with a^m = a^n, m < n, for every element a.
std::vector<std::pair<std::size_t, std::size_t>> periodic_witnesses(const RingAnalysis& ring);
Decision is_boolean(const RingAnalysis& ring);
/// Non-units form a (proper) ideal.
Decision is_local(const RingAnalysis& ring);
Decision is_strongly_pi_regular(const RingAnalysis& ring);
Decision is_potently_J_clean(const RingAnalysis& ring);
Decision is_generalized_n_like(const RingAnalysis& ring, unsigned n);
/// Every a has a power a^m that is uniquely nil clean.
Decision powers_uniquely_nil_clean(const RingAnalysis& ring);
/// Every element of J is nilpotent.
Decision jacobson_is_nil(const RingAnalysis& ring);

/// Every x with x^2 - x in I is congruent mod I to an idempotent.
Decision idempotents_lift_mod(const RingAnalysis& ring, const Ideal& ideal);
/// ... to exactly one idempotent.
Decision idempotents_lift_uniquely_mod(const RingAnalysis& ring, const Ideal& ideal);
/// R/I potent: every a has n >= 2 with a^n - a in I.
Decision quotient_is_potent(const RingAnalysis& ring, const Ideal& ideal);

/// {x : x^m - 1 is a unit for every m along the power trail of x}.
std::vector<Index> radical_unit_set(const RingAnalysis& ring);

// ----- characterizations ---------------------------------------------------

enum class Characterization {
  T2_2,
  T2_4,
  C2_5,
  T2_8,
  C2_9,
  T2_10,
  C2_11,
  C2_12,
  T3_3,
  C3_4,
  T3_7,
  T3_9,
  C3_10,
  T4_7_2,
  T4_7_3,
  C4_8,
};

std::string_view to_string(Characterization c);
std::optional<Characterization> parse_characterization(std::string_view id);
const std::vector<Characterization>& all_characterizations();

/// Evaluates the right-hand condition list of a characterization from the
/// primitive predicates. May throw RingError(LatticeCapExceeded).
Decision characterization(const RingAnalysis& ring, Characterization which);

// ----- predicate vector ----------------------------------------------------

struct PredicateVector {
  std::string label;
  std::vector<std::pair<std::string, Decision>> values;

  const Decision* find(std::string_view name) const;
  bool value(std::string_view name) const;
};

/// Names in the order compute_predicates emits them.
const std::vector<std::string>& predicate_names();

/// Re-evaluates one named predicate.
Decision evaluate_predicate(const RingAnalysis& ring, std::string_view name);

PredicateVector compute_predicates(const RingAnalysis& ring);

}  // namespace ringlab
