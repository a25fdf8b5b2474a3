#include "ringlab/radicals.hpp"

#include <algorithm>
#include <set>

namespace ringlab {

std::string_view to_string(ElemKind kind) {
  switch (kind) {
    case ElemKind::units: return "units";
    case ElemKind::idempotents: return "idempotents";
    case ElemKind::central_idempotents: return "central_idempotents";
    case ElemKind::nilpotents: return "nilpotents";
    case ElemKind::potents: return "potents";
    case ElemKind::central_elements: return "central_elements";
  }
  return "unknown";
}

bool ElemClass::contains(Index x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

namespace {

template <class Pred>
ElemClass collect(const FiniteRing& ring, ElemKind kind, Pred&& pred) {
  ElemClass out{kind, {}};
  for (Index x = 0; x < ring.order(); ++x) {
    if (pred(x)) out.members.push_back(x);
  }
  return out;
}

bool is_central(const FiniteRing& ring, Index x) {
  for (Index r = 0; r < ring.order(); ++r) {
    if (ring.mul(x, r) != ring.mul(r, x)) return false;
  }
  return true;
}

std::vector<Index> members_of(const std::vector<bool>& mask) {
  std::vector<Index> out;
  for (Index x = 0; x < mask.size(); ++x) {
    if (mask[x]) out.push_back(x);
  }
  return out;
}

// Additive subgroup generated by gens (finite, so the submonoid suffices).
std::vector<bool> additive_closure(const FiniteRing& ring, std::vector<bool> seed) {
  std::vector<Index> gens = members_of(seed);
  std::vector<bool> in(ring.order(), false);
  std::vector<Index> queue{ring.zero()};
  in[ring.zero()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Index m = queue[head];
    for (Index g : gens) {
      const Index s = ring.add(m, g);
      if (!in[s]) {
        in[s] = true;
        queue.push_back(s);
      }
    }
  }
  return in;
}

}  // namespace

ElemClass units(const FiniteRing& ring) {
  return collect(ring, ElemKind::units, [&](Index x) {
    for (Index y = 0; y < ring.order(); ++y) {
      if (ring.mul(x, y) == ring.one() && ring.mul(y, x) == ring.one()) return true;
    }
    return false;
  });
}

ElemClass idempotents(const FiniteRing& ring) {
  return collect(ring, ElemKind::idempotents, [&](Index x) { return ring.mul(x, x) == x; });
}

ElemClass central_idempotents(const FiniteRing& ring) {
  return collect(ring, ElemKind::central_idempotents,
                 [&](Index x) { return ring.mul(x, x) == x && is_central(ring, x); });
}

ElemClass nilpotents(const FiniteRing& ring) {
  return collect(ring, ElemKind::nilpotents, [&](Index x) {
    const auto trail = power_trail(ring, x);
    return std::find(trail.powers.begin(), trail.powers.end(), ring.zero()) != trail.powers.end();
  });
}

ElemClass potents(const FiniteRing& ring) {
  return collect(ring, ElemKind::potents,
                 [&](Index x) { return power_trail(ring, x).is_potent(); });
}

ElemClass central_elements(const FiniteRing& ring) {
  return collect(ring, ElemKind::central_elements, [&](Index x) { return is_central(ring, x); });
}

// ---------------------------------------------------------------------------
// Ideals

std::optional<std::string> ideal_violation(const FiniteRing& ring, std::span<const Index> members) {
  std::vector<bool> in(ring.order(), false);
  for (Index x : members) {
    if (x >= ring.order()) return "member index out of range";
    in[x] = true;
  }
  if (!in[ring.zero()]) return "does not contain zero";
  for (Index x : members) {
    if (!in[ring.neg(x)]) return "not closed under negation at " + std::to_string(x);
    for (Index y : members) {
      if (!in[ring.add(x, y)]) {
        return "not closed under addition at (" + std::to_string(x) + "," + std::to_string(y) + ")";
      }
    }
    for (Index r = 0; r < ring.order(); ++r) {
      if (!in[ring.mul(r, x)] || !in[ring.mul(x, r)]) {
        return "not absorbing at (" + std::to_string(r) + "," + std::to_string(x) + ")";
      }
    }
  }
  return std::nullopt;
}

Ideal Ideal::verified(const FiniteRing& ring, std::vector<Index> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (auto why = ideal_violation(ring, members)) {
    throw RingError(ErrorKind::NotAnIdeal, *why);
  }
  return Ideal(std::move(members));
}

Ideal Ideal::zero(const FiniteRing& ring) { return Ideal({ring.zero()}); }

Ideal Ideal::whole(const FiniteRing& ring) {
  std::vector<Index> all(ring.order());
  for (Index x = 0; x < ring.order(); ++x) all[x] = x;
  return Ideal(std::move(all));
}

bool Ideal::contains(Index x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool Ideal::is_subset_of(const Ideal& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

Ideal jacobson_radical(const FiniteRing& ring) {
  const ElemClass u = units(ring);
  std::vector<bool> is_unit(ring.order(), false);
  for (Index x : u.members) is_unit[x] = true;

  std::vector<Index> members;
  for (Index x = 0; x < ring.order(); ++x) {
    bool quasi_regular = true;
    for (Index r = 0; r < ring.order() && quasi_regular; ++r) {
      quasi_regular = is_unit[ring.sub(ring.one(), ring.mul(r, x))];
    }
    if (quasi_regular) members.push_back(x);
  }
  if (auto why = ideal_violation(ring, members)) {
    throw RingError(ErrorKind::InternalInvariantViolation, "J(R) is not an ideal: " + *why);
  }
  return Ideal::verified(ring, std::move(members));
}

Ideal ideal_generated_by(const FiniteRing& ring, std::span<const Index> xs) {
  const std::size_t n = ring.order();
  std::vector<bool> gens(n, false);
  for (Index x : xs) {
    if (x >= n) throw RingError(ErrorKind::InvalidArgument, "generator index out of range");
    for (Index r = 0; r < n; ++r) {
      const Index rx = ring.mul(r, x);
      for (Index s = 0; s < n; ++s) gens[ring.mul(rx, s)] = true;
    }
  }
  return Ideal::verified(ring, members_of(additive_closure(ring, std::move(gens))));
}

std::vector<Ideal> all_ideals(const FiniteRing& ring, LatticeCaps caps) {
  const std::size_t n = ring.order();
  if (n > caps.max_order) {
    throw RingError(ErrorKind::LatticeCapExceeded, "order " + std::to_string(n) +
                                                       " exceeds lattice cap " +
                                                       std::to_string(caps.max_order));
  }
  std::set<std::vector<Index>> seen;
  std::vector<std::vector<Index>> found;
  auto insert = [&](std::vector<Index> members) {
    if (seen.insert(members).second) {
      found.push_back(std::move(members));
      if (found.size() > caps.max_ideals) {
        throw RingError(ErrorKind::LatticeCapExceeded,
                        "more than " + std::to_string(caps.max_ideals) + " ideals");
      }
    }
  };
  for (Index x = 0; x < n; ++x) {
    const Index gen[] = {x};
    insert(ideal_generated_by(ring, gen).members());
  }
  // pairwise sums until no new ideal appears; I + J = {i + j}
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<bool> sum(n, false);
      for (Index a : found[i])
        for (Index b : found[j]) sum[ring.add(a, b)] = true;
      insert(members_of(sum));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Ideal> out;
  out.reserve(found.size());
  for (auto& members : found) out.push_back(Ideal::verified(ring, std::move(members)));
  return out;
}

bool is_prime_ideal(const FiniteRing& ring, const Ideal& ideal) {
  if (!ideal.is_proper(ring)) return false;
  const std::size_t n = ring.order();
  std::vector<Index> outside;
  for (Index x = 0; x < n; ++x) {
    if (!ideal.contains(x)) outside.push_back(x);
  }
  std::vector<bool> in(n, false);
  for (Index x : ideal.members()) in[x] = true;
  for (Index a : outside) {
    for (Index b : outside) {
      bool escapes = false;
      for (Index r = 0; r < n && !escapes; ++r) escapes = !in[ring.mul(ring.mul(a, r), b)];
      if (!escapes) return false;
    }
  }
  return true;
}

bool SpectrumReport::is_maximal(std::size_t i) const {
  return std::binary_search(maximal.begin(), maximal.end(), i);
}
bool SpectrumReport::is_prime(std::size_t i) const {
  return std::binary_search(prime.begin(), prime.end(), i);
}
bool SpectrumReport::in_j_spec(std::size_t i) const {
  return std::binary_search(j_spec.begin(), j_spec.end(), i);
}

SpectrumReport spectrum(const FiniteRing& ring, LatticeCaps caps) {
  SpectrumReport report{all_ideals(ring, caps), {}, {}, {}, jacobson_radical(ring)};
  const auto& ideals = report.all_ideals;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    const Ideal& p = ideals[i];
    if (!p.is_proper(ring)) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < ideals.size() && maximal; ++j) {
      const Ideal& q = ideals[j];
      if (q.is_proper(ring) && q.size() > p.size() && p.is_subset_of(q)) maximal = false;
    }
    if (maximal) report.maximal.push_back(i);
    if (is_prime_ideal(ring, p)) {
      report.prime.push_back(i);
      if (report.jacobson.is_subset_of(p)) report.j_spec.push_back(i);
    }
  }
  return report;
}

namespace {
std::vector<Ideal> pick(const SpectrumReport& report, const std::vector<std::size_t>& positions) {
  std::vector<Ideal> out;
  for (std::size_t i : positions) out.push_back(report.all_ideals[i]);
  return out;
}
}  // namespace

std::vector<Ideal> maximal_ideals(const FiniteRing& ring, LatticeCaps caps) {
  const auto report = spectrum(ring, caps);
  return pick(report, report.maximal);
}

std::vector<Ideal> prime_ideals(const FiniteRing& ring, LatticeCaps caps) {
  const auto report = spectrum(ring, caps);
  return pick(report, report.prime);
}

std::vector<Ideal> j_spec(const FiniteRing& ring, LatticeCaps caps) {
  const auto report = spectrum(ring, caps);
  return pick(report, report.j_spec);
}

Ideal intersect_all(const FiniteRing& ring, std::span<const Ideal> ideals) {
  // empty intersection is the whole ring
  std::vector<bool> in(ring.order(), true);
  for (const Ideal& ideal : ideals) {
    std::vector<bool> member(ring.order(), false);
    for (Index x : ideal.members()) member[x] = true;
    for (Index x = 0; x < ring.order(); ++x) in[x] = in[x] && member[x];
  }
  return Ideal::verified(ring, members_of(in));
}

Ideal j_star(const FiniteRing& ring, LatticeCaps caps) {
  const auto maximal = maximal_ideals(ring, caps);
  return intersect_all(ring, maximal);
}

Ideal prime_radical(const FiniteRing& ring, LatticeCaps caps) {
  const auto primes = prime_ideals(ring, caps);
  return intersect_all(ring, primes);
}

bool quotient_is_torsion(const FiniteRing& ring, const Ideal& p) {
  if (!p.is_proper(ring)) throw RingError(ErrorKind::NotProperIdeal, "quotient by the whole ring");
  for (Index x = 0; x < ring.order(); ++x) {
    if (p.contains(x)) continue;
    const auto trail = power_trail(ring, x);
    const bool reaches_one = std::any_of(trail.powers.begin(), trail.powers.end(), [&](Index xm) {
      return p.contains(ring.sub(xm, ring.one()));
    });
    if (!reaches_one) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// RingAnalysis

RingAnalysis::RingAnalysis(FiniteRing ring, LatticeCaps caps)
    : ring_(std::move(ring)), caps_(caps) {}

const ElemClass& RingAnalysis::units() const {
  return get(units_, [&] { return ringlab::units(ring_); });
}
const ElemClass& RingAnalysis::idempotents() const {
  return get(idempotents_, [&] { return ringlab::idempotents(ring_); });
}
const ElemClass& RingAnalysis::central_idempotents() const {
  return get(central_idempotents_, [&] { return ringlab::central_idempotents(ring_); });
}
const ElemClass& RingAnalysis::nilpotents() const {
  return get(nilpotents_, [&] { return ringlab::nilpotents(ring_); });
}
const ElemClass& RingAnalysis::potents() const {
  return get(potents_, [&] { return ringlab::potents(ring_); });
}

const PowerTrail& RingAnalysis::trail(Index x) const {
  const auto& all = get(trails_, [&] {
    std::vector<PowerTrail> trails;
    trails.reserve(ring_.order());
    for (Index y = 0; y < ring_.order(); ++y) trails.push_back(power_trail(ring_, y));
    return trails;
  });
  return all[x];
}

bool RingAnalysis::is_nilpotent(Index x) const { return nilpotents().contains(x); }

const std::vector<bool>& RingAnalysis::units_mask() const {
  return get(units_mask_, [&] {
    std::vector<bool> mask(ring_.order(), false);
    for (Index x : units().members) mask[x] = true;
    return mask;
  });
}

const Ideal& RingAnalysis::jacobson() const {
  return get(jacobson_, [&] { return jacobson_radical(ring_); });
}

const SpectrumReport& RingAnalysis::spectrum() const {
  return get(spectrum_, [&] { return ringlab::spectrum(ring_, caps_); });
}

const Ideal& RingAnalysis::j_star() const {
  return get(j_star_, [&] {
    const auto& report = spectrum();
    const auto maximal = pick(report, report.maximal);
    return intersect_all(ring_, maximal);
  });
}

const Ideal& RingAnalysis::prime_radical() const {
  return get(prime_radical_, [&] {
    const auto& report = spectrum();
    const auto primes = pick(report, report.prime);
    return intersect_all(ring_, primes);
  });
}

}  // namespace ringlab
