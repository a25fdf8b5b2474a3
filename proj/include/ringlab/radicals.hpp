#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

enum class ElemKind { units, idempotents, central_idempotents, nilpotents, potents, central_elements };

std::string_view to_string(ElemKind kind);

/// A sorted, deduplicated set of element indices of one kind.
struct ElemClass {
  ElemKind kind;
  std::vector<Index> members;

  bool contains(Index x) const;
  std::size_t size() const { return members.size(); }
};

ElemClass units(const FiniteRing& ring);
ElemClass idempotents(const FiniteRing& ring);
ElemClass central_idempotents(const FiniteRing& ring);
ElemClass nilpotents(const FiniteRing& ring);
ElemClass potents(const FiniteRing& ring);
ElemClass central_elements(const FiniteRing& ring);

/// Two-sided ideal as a sorted member list. Construct through verified() or
/// the ideal-producing operations below.
class Ideal {
 public:
  /// Checks the ideal axioms; throws RingError(NotAnIdeal) otherwise.
  static Ideal verified(const FiniteRing& ring, std::vector<Index> members);
  static Ideal zero(const FiniteRing& ring);
  static Ideal whole(const FiniteRing& ring);

  const std::vector<Index>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Index x) const;
  bool is_subset_of(const Ideal& other) const;
  bool is_proper(const FiniteRing& ring) const { return members_.size() < ring.order(); }

  friend bool operator==(const Ideal&, const Ideal&) = default;
  friend auto operator<=>(const Ideal&, const Ideal&) = default;

 private:
  explicit Ideal(std::vector<Index> members) : members_(std::move(members)) {}
  std::vector<Index> members_;
};

/// Reason the set fails to be a two-sided ideal, or nullopt if it is one.
std::optional<std::string> ideal_violation(const FiniteRing& ring, std::span<const Index> members);

/// {x : 1 - r x is a unit for every r}, re-verified as a two-sided ideal.
Ideal jacobson_radical(const FiniteRing& ring);

/// Smallest ideal containing xs: additive closure of {r x s}.
Ideal ideal_generated_by(const FiniteRing& ring, std::span<const Index> xs);

struct LatticeCaps {
  std::size_t max_order = 256;
  std::size_t max_ideals = 100000;
};

/// Every two-sided ideal, sorted by (size, members). Join-closure of the
/// principal ideals. Throws RingError(LatticeCapExceeded).
std::vector<Ideal> all_ideals(const FiniteRing& ring, LatticeCaps caps = {});

/// Proper P with: for all a, b outside P there is r with a r b outside P.
bool is_prime_ideal(const FiniteRing& ring, const Ideal& ideal);

struct SpectrumReport {
  std::vector<Ideal> all_ideals;
  /// Positions into all_ideals.
  std::vector<std::size_t> maximal;
  std::vector<std::size_t> prime;
  std::vector<std::size_t> j_spec;
  Ideal jacobson;

  bool is_maximal(std::size_t i) const;
  bool is_prime(std::size_t i) const;
  bool in_j_spec(std::size_t i) const;
};

SpectrumReport spectrum(const FiniteRing& ring, LatticeCaps caps = {});

std::vector<Ideal> maximal_ideals(const FiniteRing& ring, LatticeCaps caps = {});
std::vector<Ideal> prime_ideals(const FiniteRing& ring, LatticeCaps caps = {});
std::vector<Ideal> j_spec(const FiniteRing& ring, LatticeCaps caps = {});

/// Intersection of the maximal ideals.
Ideal j_star(const FiniteRing& ring, LatticeCaps caps = {});
/// Intersection of the prime ideals.
Ideal prime_radical(const FiniteRing& ring, LatticeCaps caps = {});
Ideal intersect_all(const FiniteRing& ring, std::span<const Ideal> ideals);

/// Every nonzero coset x + P has a power equal to 1 + P.
/// Throws RingError(NotProperIdeal) when P is all of R.
bool quotient_is_torsion(const FiniteRing& ring, const Ideal& p);

/// Memoized structural data of one ring. Lazily computed members are
/// initialized once and then shared read-only across threads.
class RingAnalysis {
 public:
  explicit RingAnalysis(FiniteRing ring, LatticeCaps caps = {});
  RingAnalysis(const RingAnalysis&) = delete;
  RingAnalysis& operator=(const RingAnalysis&) = delete;

  const FiniteRing& ring() const { return ring_; }
  const LatticeCaps& caps() const { return caps_; }
  std::size_t order() const { return ring_.order(); }

  const ElemClass& units() const;
  const ElemClass& idempotents() const;
  const ElemClass& central_idempotents() const;
  const ElemClass& nilpotents() const;
  const ElemClass& potents() const;
  const PowerTrail& trail(Index x) const;

  bool is_unit(Index x) const { return units_mask()[x]; }
  bool is_idempotent(Index x) const { return ring_.mul(x, x) == x; }
  bool is_nilpotent(Index x) const;

  const Ideal& jacobson() const;
  /// Throws RingError(LatticeCapExceeded).
  const SpectrumReport& spectrum() const;
  const Ideal& j_star() const;
  const Ideal& prime_radical() const;

 private:
  template <class T>
  struct Lazy {
    std::once_flag flag;
    std::optional<T> value;
  };
  template <class T, class F>
  static const T& get(Lazy<T>& slot, F&& compute) {
    std::call_once(slot.flag, [&] { slot.value.emplace(compute()); });
    return *slot.value;
  }

  const std::vector<bool>& units_mask() const;

  FiniteRing ring_;
  LatticeCaps caps_;
  mutable Lazy<ElemClass> units_, idempotents_, central_idempotents_, nilpotents_, potents_;
  mutable Lazy<std::vector<bool>> units_mask_;
  mutable Lazy<std::vector<PowerTrail>> trails_;
  mutable Lazy<Ideal> jacobson_, j_star_, prime_radical_;
  mutable Lazy<SpectrumReport> spectrum_;
};

}  // namespace ringlab
