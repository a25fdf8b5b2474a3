#include "ringlab/predicates.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "ringlab/constructors.hpp"

namespace ringlab {

namespace {

std::vector<bool> mask_of(const Ideal& ideal, std::size_t n) {
  std::vector<bool> mask(n, false);
  for (Index x : ideal.members()) mask[x] = true;
  return mask;
}

// {a r : r in R}
std::vector<bool> right_multiples(const FiniteRing& r, Index a) {
  std::vector<bool> out(r.order(), false);
  for (Index x = 0; x < r.order(); ++x) out[r.mul(a, x)] = true;
  return out;
}

// {r a : r in R}
std::vector<bool> left_multiples(const FiniteRing& r, Index a) {
  std::vector<bool> out(r.order(), false);
  for (Index x = 0; x < r.order(); ++x) out[r.mul(x, a)] = true;
  return out;
}

// First failing decision of a conjunction, evaluated lazily in order.
Decision all_of(std::initializer_list<std::function<Decision()>> parts) {
  for (const auto& part : parts) {
    Decision d = part();
    if (!d) return d;
  }
  return Decision::yes();
}

template <class Pred>
Decision for_every_element(const RingAnalysis& ring, Pred&& pred) {
  for (Index a = 0; a < ring.order(); ++a) {
    if (!pred(a)) return Decision::no({a});
  }
  return Decision::yes();
}

Decision same_set(std::span<const Index> lhs, std::span<const Index> rhs) {
  std::vector<Index> diff;
  std::set_symmetric_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                                std::back_inserter(diff));
  if (diff.empty()) return Decision::yes();
  return Decision::no({diff.front()});
}

// For each a: some power a^m (m along the trail) admits exactly one idempotent
// e with a^m - e in the ideal.
Decision unique_idempotent_mod(const RingAnalysis& ring, const Ideal& ideal) {
  const FiniteRing& r = ring.ring();
  const auto in = mask_of(ideal, r.order());
  return for_every_element(ring, [&](Index a) {
    for (Index am : ring.trail(a).powers) {
      std::size_t count = 0;
      for (Index e : ring.idempotents().members) count += in[r.sub(am, e)] ? 1 : 0;
      if (count == 1) return true;
    }
    return false;
  });
}

// For each a: some power a^m has a central idempotent e with a^m - e in the ideal.
Decision central_idempotent_mod(const RingAnalysis& ring, const Ideal& ideal) {
  const FiniteRing& r = ring.ring();
  const auto in = mask_of(ideal, r.order());
  return for_every_element(ring, [&](Index a) {
    for (Index am : ring.trail(a).powers) {
      for (Index e : ring.central_idempotents().members) {
        if (in[r.sub(am, e)]) return true;
      }
    }
    return false;
  });
}

// For each a: some a^n admits exactly one idempotent e in a^n R with
// 1 - e in (1 - a^n) R (or the left-handed version).
Decision unique_exchange_idempotent(const RingAnalysis& ring, bool left) {
  const FiniteRing& r = ring.ring();
  return for_every_element(ring, [&](Index a) {
    for (Index an : ring.trail(a).powers) {
      const Index complement = r.sub(r.one(), an);
      const auto first = left ? left_multiples(r, an) : right_multiples(r, an);
      const auto second = left ? left_multiples(r, complement) : right_multiples(r, complement);
      std::size_t count = 0;
      for (Index e : ring.idempotents().members) {
        if (first[e] && second[r.sub(r.one(), e)]) ++count;
      }
      if (count == 1) return true;
    }
    return false;
  });
}

}  // namespace

// ---------------------------------------------------------------------------
// element level

std::vector<std::pair<Index, Index>> clean_decompositions(const RingAnalysis& ring, Index a) {
  std::vector<std::pair<Index, Index>> out;
  for (Index e : ring.idempotents().members) {
    const Index u = ring.ring().sub(a, e);
    if (ring.is_unit(u)) out.emplace_back(e, u);
  }
  return out;
}

std::optional<std::size_t> uniquely_pi_clean_exponent(const RingAnalysis& ring, Index a) {
  const auto& powers = ring.trail(a).powers;
  for (std::size_t i = 0; i < powers.size(); ++i) {
    if (clean_decompositions(ring, powers[i]).size() == 1) return i + 1;
  }
  return std::nullopt;
}

std::optional<CleanWitness> uniquely_pi_clean_witness(const RingAnalysis& ring, Index a) {
  const auto m = uniquely_pi_clean_exponent(ring, a);
  if (!m) return std::nullopt;
  const Index am = ring.trail(a).powers[*m - 1];
  const auto [e, u] = clean_decompositions(ring, am).front();
  return CleanWitness{a, *m, e, u, CleanKind::clean};
}

bool is_uniquely_nil_clean_element(const RingAnalysis& ring, Index a) {
  std::size_t count = 0;
  for (Index e : ring.idempotents().members) {
    count += ring.is_nilpotent(ring.ring().sub(a, e)) ? 1 : 0;
  }
  return count == 1;
}

// ---------------------------------------------------------------------------
// ring level

Decision is_uniquely_pi_clean(const RingAnalysis& ring) {
  return for_every_element(ring, [&](Index a) { return uniquely_pi_clean_exponent(ring, a).has_value(); });
}

Decision is_uniquely_clean(const RingAnalysis& ring) {
  return for_every_element(ring, [&](Index a) { return clean_decompositions(ring, a).size() == 1; });
}

Decision is_clean(const RingAnalysis& ring) {
  return for_every_element(ring, [&](Index a) { return !clean_decompositions(ring, a).empty(); });
}

Decision is_strongly_clean(const RingAnalysis& ring) {
  const FiniteRing& r = ring.ring();
  return for_every_element(ring, [&](Index a) {
    for (const auto& [e, u] : clean_decompositions(ring, a)) {
      if (r.mul(e, a) == r.mul(a, e)) return true;
    }
    return false;
  });
}

Decision is_exchange(const RingAnalysis& ring) {
  const FiniteRing& r = ring.ring();
  return for_every_element(ring, [&](Index a) {
    const auto a_r = right_multiples(r, a);
    const auto one_minus_a_r = right_multiples(r, r.sub(r.one(), a));
    for (Index e : ring.idempotents().members) {
      if (a_r[e] && one_minus_a_r[r.sub(r.one(), e)]) return true;
    }
    return false;
  });
}

Decision is_abelian(const RingAnalysis& ring) {
  const FiniteRing& r = ring.ring();
  for (Index e : ring.idempotents().members) {
    for (Index x = 0; x < r.order(); ++x) {
      if (r.mul(e, x) != r.mul(x, e)) return Decision::no({e, x});
    }
  }
  return Decision::yes();
}

Decision is_commutative(const RingAnalysis& ring) {
  const FiniteRing& r = ring.ring();
  for (Index a = 0; a < r.order(); ++a)
    for (Index b = a + 1; b < r.order(); ++b)
      if (r.mul(a, b) != r.mul(b, a)) return Decision::no({a, b});
  return Decision::yes();
}

Decision is_potent_ring(const RingAnalysis& ring) {
  return for_every_element(ring, [&](Index a) { return ring.trail(a).is_potent(); });
}

Decision is_periodic(const RingAnalysis& ring) {
  return for_every_element(ring, [&](Index a) {
    const auto [m, n] = ring.trail(a).period_witness();
    return m < n && ring.ring().pow(a, m) == ring.ring().pow(a, n);
  });
}

std::vector<std::pair<std::size_t, std::size_t>> periodic_witnesses(const RingAnalysis& ring) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (Index a = 0; a < ring.order(); ++a) out.push_back(ring.trail(a).period_witness());
  return out;
}

Decision is_boolean(const RingAnalysis& ring) {
  return for_every_element(ring, [&](Index a) { return ring.is_idempotent(a); });
}

Decision is_local(const RingAnalysis& ring) {
  const FiniteRing& r = ring.ring();
  std::vector<Index> non_units;
  for (Index x = 0; x < r.order(); ++x) {
    if (!ring.is_unit(x)) non_units.push_back(x);
  }
  if (non_units.empty()) return Decision::no({r.zero()});
  for (Index x : non_units) {
    for (Index y : non_units) {
      if (ring.is_unit(r.add(x, y))) return Decision::no({x, y});
    }
    for (Index s = 0; s < r.order(); ++s) {
      if (ring.is_unit(r.mul(s, x)) || ring.is_unit(r.mul(x, s))) return Decision::no({s, x});
    }
  }
  return Decision::yes();
}

Decision is_strongly_pi_regular(const RingAnalysis& ring) {
  const FiniteRing& r = ring.ring();
  return for_every_element(ring, [&](Index a) {
    Index an = a;
    for (std::size_t n = 1; n <= r.order(); ++n) {
      const Index next = r.mul(an, a);
      if (right_multiples(r, next)[an]) return true;
      an = next;
    }
    return false;
  });
}

Decision is_potently_J_clean(const RingAnalysis& ring) {
  const FiniteRing& r = ring.ring();
  const auto in_j = mask_of(ring.jacobson(), r.order());
  return for_every_element(ring, [&](Index a) {
    return std::any_of(ring.potents().members.begin(), ring.potents().members.end(),
                       [&](Index p) { return in_j[r.sub(a, p)]; });
  });
}

Decision is_generalized_n_like(const RingAnalysis& ring, unsigned n) {
  if (n < 2) throw RingError(ErrorKind::InvalidArgument, "generalized n-like needs n >= 2");
  const FiniteRing& r = ring.ring();
  std::vector<Index> nth(r.order());
  for (Index x = 0; x < r.order(); ++x) nth[x] = r.pow(x, n);
  for (Index a = 0; a < r.order(); ++a) {
    for (Index b = 0; b < r.order(); ++b) {
      const Index ab = r.mul(a, b);
      // (ab)^n - a b^n - a^n b + ab
      const Index value = r.add(r.sub(r.sub(nth[ab], r.mul(a, nth[b])), r.mul(nth[a], b)), ab);
      if (value != r.zero()) return Decision::no({a, b});
    }
  }
  return Decision::yes();
}

Decision powers_uniquely_nil_clean(const RingAnalysis& ring) {
  return for_every_element(ring, [&](Index a) {
    const auto& powers = ring.trail(a).powers;
    return std::any_of(powers.begin(), powers.end(),
                       [&](Index am) { return is_uniquely_nil_clean_element(ring, am); });
  });
}

Decision jacobson_is_nil(const RingAnalysis& ring) {
  for (Index x : ring.jacobson().members()) {
    if (!ring.is_nilpotent(x)) return Decision::no({x});
  }
  return Decision::yes();
}

Decision idempotents_lift_mod(const RingAnalysis& ring, const Ideal& ideal) {
  const FiniteRing& r = ring.ring();
  const auto in = mask_of(ideal, r.order());
  for (Index x = 0; x < r.order(); ++x) {
    if (!in[r.sub(r.mul(x, x), x)]) continue;
    const bool lifts = std::any_of(ring.idempotents().members.begin(), ring.idempotents().members.end(),
                                   [&](Index e) { return in[r.sub(x, e)]; });
    if (!lifts) return Decision::no({x});
  }
  return Decision::yes();
}

Decision idempotents_lift_uniquely_mod(const RingAnalysis& ring, const Ideal& ideal) {
  const FiniteRing& r = ring.ring();
  const auto in = mask_of(ideal, r.order());
  for (Index x = 0; x < r.order(); ++x) {
    if (!in[r.sub(r.mul(x, x), x)]) continue;
    const auto count = std::count_if(ring.idempotents().members.begin(), ring.idempotents().members.end(),
                                     [&](Index e) { return in[r.sub(x, e)]; });
    if (count != 1) return Decision::no({x});
  }
  return Decision::yes();
}

Decision quotient_is_potent(const RingAnalysis& ring, const Ideal& ideal) {
  const FiniteRing& r = ring.ring();
  const auto in = mask_of(ideal, r.order());
  return for_every_element(ring, [&](Index a) {
    const auto& trail = ring.trail(a);
    // a^n for n >= 2 runs through powers[1..] and, via the cycle, powers[cycle_start..]
    const std::size_t from = std::min<std::size_t>(1, trail.cycle_start);
    for (std::size_t j = from; j < trail.powers.size(); ++j) {
      if (in[r.sub(trail.powers[j], a)]) return true;
    }
    return false;
  });
}

std::vector<Index> radical_unit_set(const RingAnalysis& ring) {
  const FiniteRing& r = ring.ring();
  std::vector<Index> out;
  for (Index x = 0; x < r.order(); ++x) {
    const auto& powers = ring.trail(x).powers;
    const bool all_units = std::all_of(powers.begin(), powers.end(),
                                       [&](Index xm) { return ring.is_unit(r.sub(xm, r.one())); });
    if (all_units) out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// characterizations

std::string_view to_string(Characterization c) {
  switch (c) {
    case Characterization::T2_2: return "T2.2";
    case Characterization::T2_4: return "T2.4";
    case Characterization::C2_5: return "C2.5";
    case Characterization::T2_8: return "T2.8";
    case Characterization::C2_9: return "C2.9";
    case Characterization::T2_10: return "T2.10";
    case Characterization::C2_11: return "C2.11";
    case Characterization::C2_12: return "C2.12";
    case Characterization::T3_3: return "T3.3";
    case Characterization::C3_4: return "C3.4";
    case Characterization::T3_7: return "T3.7";
    case Characterization::T3_9: return "T3.9";
    case Characterization::C3_10: return "C3.10";
    case Characterization::T4_7_2: return "T4.7-2";
    case Characterization::T4_7_3: return "T4.7-3";
    case Characterization::C4_8: return "C4.8";
  }
  return "?";
}

const std::vector<Characterization>& all_characterizations() {
  static const std::vector<Characterization> all = {
      Characterization::T2_2,  Characterization::T2_4,  Characterization::C2_5,   Characterization::T2_8,
      Characterization::C2_9,  Characterization::T2_10, Characterization::C2_11,  Characterization::C2_12,
      Characterization::T3_3,  Characterization::C3_4,  Characterization::T3_7,   Characterization::T3_9,
      Characterization::C3_10, Characterization::T4_7_2, Characterization::T4_7_3, Characterization::C4_8};
  return all;
}

std::optional<Characterization> parse_characterization(std::string_view id) {
  if (id == "C3.10-set") id = "C3.10";
  for (Characterization c : all_characterizations()) {
    if (to_string(c) == id) return c;
  }
  return std::nullopt;
}

Decision characterization(const RingAnalysis& ring, Characterization which) {
  const FiniteRing& r = ring.ring();
  switch (which) {
    case Characterization::T2_2:
      return all_of({[&] { return is_abelian(ring); },
                     [&] { return idempotents_lift_mod(ring, ring.jacobson()); },
                     [&] {
                       const RingAnalysis top(quotient(r, ring.jacobson()), ring.caps());
                       return is_uniquely_pi_clean(top) ? Decision::yes() : Decision::no({});
                     }});
    case Characterization::T2_4:
      return all_of({[&] { return is_abelian(ring); },
                     [&] { return unique_exchange_idempotent(ring, false); }});
    case Characterization::C2_5:
      return all_of({[&] { return is_abelian(ring); },
                     [&] { return unique_exchange_idempotent(ring, true); }});
    case Characterization::T2_8:
      return central_idempotent_mod(ring, ring.jacobson());
    case Characterization::C2_9:
      return all_of({[&] { return is_uniquely_pi_clean(ring); },
                     [&] {
                       std::vector<Index> shifted_units;
                       for (Index x = 0; x < r.order(); ++x) {
                         if (ring.is_unit(r.sub(x, r.one()))) shifted_units.push_back(x);
                       }
                       return same_set(ring.jacobson().members(), shifted_units);
                     }});
    case Characterization::T2_10:
      return all_of({[&] { return unique_idempotent_mod(ring, ring.jacobson()); },
                     [&] { return same_set(ring.jacobson().members(), radical_unit_set(ring)); }});
    case Characterization::C2_11:
      return all_of({[&] { return unique_idempotent_mod(ring, ring.jacobson()); },
                     [&] {
                       for (Index x : ring.nilpotents().members) {
                         if (!ring.jacobson().contains(x)) return Decision::no({x});
                       }
                       return Decision::yes();
                     }});
    case Characterization::C2_12: {
      std::vector<Index> torsion_mod_j;
      for (Index x = 0; x < r.order(); ++x) {
        const auto& powers = ring.trail(x).powers;
        if (std::any_of(powers.begin(), powers.end(),
                        [&](Index xm) { return ring.jacobson().contains(r.sub(xm, r.one())); })) {
          torsion_mod_j.push_back(x);
        }
      }
      return same_set(ring.units().members, torsion_mod_j);
    }
    case Characterization::T3_3:
      return all_of({[&] { return is_abelian(ring); },
                     [&] { return idempotents_lift_mod(ring, ring.jacobson()); },
                     [&] {
                       const auto& spec = ring.spectrum();
                       for (std::size_t i : spec.j_spec) {
                         if (!quotient_is_torsion(r, spec.all_ideals[i])) {
                           return Decision::no({spec.all_ideals[i].members()});
                         }
                       }
                       return Decision::yes();
                     }});
    case Characterization::C3_4:
      return all_of({[&] { return is_uniquely_pi_clean(ring); },
                     [&] {
                       const auto& spec = ring.spectrum();
                       for (std::size_t i : spec.maximal) {
                         if (spec.all_ideals[i].size() * 2 != r.order()) {
                           return Decision::no(spec.all_ideals[i].members());
                         }
                       }
                       return Decision::yes();
                     }});
    case Characterization::T3_7:
      return all_of({[&] { return is_exchange(ring); },
                     [&] { return quotient_is_potent(ring, ring.j_star()); },
                     [&] { return idempotents_lift_uniquely_mod(ring, ring.j_star()); }});
    case Characterization::T3_9:
      return all_of({[&] { return unique_idempotent_mod(ring, ring.j_star()); },
                     [&] { return same_set(ring.j_star().members(), radical_unit_set(ring)); }});
    case Characterization::C3_10:
      return same_set(ring.prime_radical().members(), radical_unit_set(ring));
    case Characterization::T4_7_2:
      return all_of({[&] { return is_abelian(ring); }, [&] { return is_periodic(ring); }});
    case Characterization::T4_7_3:
      return unique_idempotent_mod(ring, ring.prime_radical());
    case Characterization::C4_8:
      return central_idempotent_mod(ring, ring.prime_radical());
  }
  throw RingError(ErrorKind::InvalidArgument, "unknown characterization");
}

// ---------------------------------------------------------------------------
// predicate vector

const Decision* PredicateVector::find(std::string_view name) const {
  for (const auto& [key, decision] : values) {
    if (key == name) return &decision;
  }
  return nullptr;
}

bool PredicateVector::value(std::string_view name) const {
  const Decision* d = find(name);
  if (!d) throw RingError(ErrorKind::InvalidArgument, "unknown predicate " + std::string(name));
  return d->holds;
}

const std::vector<std::string>& predicate_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out = {"commutative",
                                    "noncommutative",
                                    "clean",
                                    "uniquely_clean",
                                    "uniquely_pi_clean",
                                    "strongly_clean",
                                    "exchange",
                                    "abelian",
                                    "potent",
                                    "periodic",
                                    "boolean",
                                    "local",
                                    "strongly_pi_regular",
                                    "potently_J_clean",
                                    "idempotents_lift_J",
                                    "jacobson_nil",
                                    "powers_uniquely_nil_clean"};
    for (unsigned n = 2; n <= 9; ++n) out.push_back("generalized_" + std::to_string(n) + "_like");
    return out;
  }();
  return names;
}

Decision evaluate_predicate(const RingAnalysis& ring, std::string_view name) {
  using Fn = Decision (*)(const RingAnalysis&);
  static const std::array<std::pair<std::string_view, Fn>, 15> table = {{
      {"commutative", &is_commutative},
      {"clean", &is_clean},
      {"uniquely_clean", &is_uniquely_clean},
      {"uniquely_pi_clean", &is_uniquely_pi_clean},
      {"strongly_clean", &is_strongly_clean},
      {"exchange", &is_exchange},
      {"abelian", &is_abelian},
      {"potent", &is_potent_ring},
      {"periodic", &is_periodic},
      {"boolean", &is_boolean},
      {"local", &is_local},
      {"strongly_pi_regular", &is_strongly_pi_regular},
      {"potently_J_clean", &is_potently_J_clean},
      {"jacobson_nil", &jacobson_is_nil},
      {"powers_uniquely_nil_clean", &powers_uniquely_nil_clean},
  }};
  for (const auto& [key, fn] : table) {
    if (key == name) return fn(ring);
  }
  if (name == "noncommutative") {
    return is_commutative(ring) ? Decision::no({}) : Decision::yes();
  }
  if (name == "idempotents_lift_J") return idempotents_lift_mod(ring, ring.jacobson());
  constexpr std::string_view prefix = "generalized_";
  constexpr std::string_view suffix = "_like";
  if (name.starts_with(prefix) && name.ends_with(suffix) && name.size() == prefix.size() + suffix.size() + 1) {
    const char digit = name[prefix.size()];
    if (digit >= '2' && digit <= '9') return is_generalized_n_like(ring, static_cast<unsigned>(digit - '0'));
  }
  throw RingError(ErrorKind::InvalidArgument, "unknown predicate " + std::string(name));
}

PredicateVector compute_predicates(const RingAnalysis& ring) {
  PredicateVector out{ring.ring().label(), {}};
  for (const auto& name : predicate_names()) out.values.emplace_back(name, evaluate_predicate(ring, name));
  return out;
}

}  // namespace ringlab
