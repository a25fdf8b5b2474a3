#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ringlab/error.hpp"

namespace ringlab {

using Index = std::uint32_t;

/// Largest ring order accepted by validation and the predicate layer.
inline constexpr std::size_t kMaxOrder = 4096;

/// Raw, unvalidated ring data. Tables are row-major n*n: add[i*n+j] is the
/// index of x_i + x_j.
struct RingTables {
  std::string label;
  std::size_t order = 0;
  std::vector<Index> add;
  std::vector<Index> mul;
  Index zero = 0;
  Index one = 0;
  /// Optional structured element names (matrix entries, polynomials, ...).
  std::vector<std::string> names;
};

enum class Axiom {
  MalformedTables,
  NotAbelianGroupUnderAdd,
  NoIdentity,
  NonAssociativeMul,
  NotDistributive,
};

std::string_view to_string(Axiom axiom);

/// First violated axiom found by validate_ring, with the offending elements.
struct RingViolation {
  Axiom axiom;
  std::vector<Index> witness;
  std::string detail;

  std::string describe() const;
};

/// A validated unital associative ring of order n on element indices 0..n-1.
/// Canonical labeling: zero is 0, one is 1 (or 0 for the zero ring).
/// Immutable; every member function is safe for concurrent use.
class FiniteRing {
 public:
  std::size_t order() const { return order_; }
  const std::string& label() const { return label_; }

  Index zero() const { return 0; }
  Index one() const { return order_ == 1 ? 0 : 1; }

  Index add(Index x, Index y) const { return add_[x * order_ + y]; }
  Index mul(Index x, Index y) const { return mul_[x * order_ + y]; }
  Index neg(Index x) const { return neg_[x]; }
  Index sub(Index x, Index y) const { return add(x, neg(y)); }
  /// x^k by repeated squaring, k >= 1.
  Index pow(Index x, std::uint64_t k) const;

  bool is_commutative() const;

  std::span<const Index> add_table() const { return add_; }
  std::span<const Index> mul_table() const { return mul_; }

  /// Structured name of an element, or its decimal index when none was given.
  std::string name(Index x) const;
  bool has_names() const { return !names_.empty(); }
  std::optional<Index> find(std::string_view name) const;

  /// Tables in canonical form (zero = 0, one = 1).
  RingTables tables() const;

  /// Copy with a different label; tables untouched.
  FiniteRing relabeled(std::string label) const;

  friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
    return a.order_ == b.order_ && a.add_ == b.add_ && a.mul_ == b.mul_;
  }

 private:
  friend std::variant<FiniteRing, RingViolation> validate_ring(RingTables candidate);
  friend FiniteRing normalize_unchecked(RingTables candidate);

  FiniteRing() = default;

  std::size_t order_ = 0;
  std::string label_;
  std::vector<Index> add_;
  std::vector<Index> mul_;
  std::vector<Index> neg_;
  std::vector<std::string> names_;
};

/// Full O(n^3) axiom scan. On success the ring is relabeled so that
/// zero -> 0 and one -> 1, other elements keeping their relative order.
std::variant<FiniteRing, RingViolation> validate_ring(RingTables candidate);

/// Canonical relabeling without the O(n^3) axiom scan. Only for tables
/// produced by a constructor whose laws are covered by tests.
FiniteRing normalize_unchecked(RingTables candidate);

/// validate_ring that throws RingError(ValidationFailed) on a violation.
FiniteRing make_ring(RingTables candidate);

/// An element handle; cheap to copy, does not own the ring.
class Elem {
 public:
  Elem(const FiniteRing& ring, Index index);

  Index index() const { return index_; }
  const FiniteRing& ring() const { return *ring_; }

  friend bool operator==(const Elem& a, const Elem& b) {
    return a.ring_ == b.ring_ && a.index_ == b.index_;
  }

 private:
  const FiniteRing* ring_;
  Index index_;
};

Elem add(Elem x, Elem y);
Elem mul(Elem x, Elem y);
Elem neg(Elem x);
Elem pow(Elem x, std::uint64_t k);

/// Successive powers a^1, a^2, ... up to (excluding) the first repeat.
/// a^(powers.size()+1) == powers[cycle_start].
struct PowerTrail {
  Index base = 0;
  std::vector<Index> powers;
  std::size_t cycle_start = 0;

  /// Exponents (m, n), m < n, with a^m == a^n.
  std::pair<std::size_t, std::size_t> period_witness() const {
    return {cycle_start + 1, powers.size() + 1};
  }
  /// a^n == a for some n >= 2.
  bool is_potent() const { return cycle_start == 0; }
};

PowerTrail power_trail(const FiniteRing& ring, Index x);
PowerTrail power_trail(Elem x);

}  // namespace ringlab
