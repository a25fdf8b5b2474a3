#include "ringlab/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace ringlab {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::equivalence: return "equivalence";
    case Relation::implication: return "implication";
    case Relation::property: return "property";
    case Relation::observation: return "observation";
  }
  return "?";
}

const VerdictRow* TheoremVerdict::first_disagreement() const {
  for (const auto& row : rows) {
    if (!row.agree) return &row;
  }
  return nullptr;
}

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  return std::nullopt;
}

namespace {

Decision from_bool(bool b) { return b ? Decision::yes() : Decision::no({}); }

Decision both(const Decision& a, const Decision& b) { return a ? b : a; }

Decision same_members(std::span<const Index> lhs, std::span<const Index> rhs) {
  std::vector<Index> diff;
  std::set_symmetric_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(diff));
  return diff.empty() ? Decision::yes() : Decision::no({diff.front()});
}

struct RingContext {
  const RingCatalogEntry& entry;
  RingAnalysis analysis;
  std::optional<Decision> upc, uc;

  const std::string& label() const { return entry.provenance; }
  const FiniteRing& ring() const { return analysis.ring(); }
  const Decision& uniquely_pi_clean() {
    if (!upc) upc = is_uniquely_pi_clean(analysis);
    return *upc;
  }
  const Decision& uniquely_clean() {
    if (!uc) uc = is_uniquely_clean(analysis);
    return *uc;
  }
};

VerdictRow make_row(const FiniteRing* ring, std::string label, Relation relation, const Decision& lhs,
                    const Decision& rhs, std::string detail = {}) {
  VerdictRow row;
  row.ring = std::move(label);
  row.lhs = lhs.holds;
  row.rhs = rhs.holds;
  switch (relation) {
    case Relation::equivalence: row.agree = lhs.holds == rhs.holds; break;
    case Relation::implication: row.agree = !lhs.holds || rhs.holds; break;
    case Relation::property: row.agree = rhs.holds; break;
    case Relation::observation: row.agree = true; break;
  }
  if (!row.agree) {
    row.witness = (relation == Relation::equivalence && !lhs.holds) ? lhs.witness : rhs.witness;
    for (Index x : row.witness) {
      row.witness_names.push_back(ring && x < ring->order() ? ring->name(x) : std::to_string(x));
    }
  }
  row.detail = std::move(detail);
  return row;
}

struct Outcome {
  std::vector<VerdictRow> rows;
  std::vector<SkippedRing> skipped;
};

Outcome one_row(RingContext& c, Relation relation, const Decision& lhs, const Decision& rhs,
                std::string detail = {}) {
  return {{make_row(&c.ring(), c.label(), relation, lhs, rhs, std::move(detail))}, {}};
}

Outcome skip(RingContext& c, std::string reason) { return {{}, {SkippedRing{c.label(), std::move(reason)}}}; }

using RingSuiteFn = std::function<Outcome(RingContext&)>;

struct RingSuite {
  std::string id;
  Relation relation;
  std::string statement;
  std::string note;
  RingSuiteFn fn;
};

struct HarnessSuite {
  std::string id;
  Relation relation;
  std::string statement;
  std::string note;
  std::function<void(TheoremVerdict&, const RunConfig&)> fn;
};

std::string characterization_statement(Characterization t) {
  switch (t) {
    case Characterization::T2_2:
      return "uniquely_pi_clean <=> abelian & idempotents lift mod J & R/J uniquely_pi_clean";
    case Characterization::T2_4:
      return "uniquely_pi_clean <=> abelian & every a has a^n with a unique idempotent e in a^nR, 1-e in (1-a^n)R";
    case Characterization::C2_5:
      return "uniquely_pi_clean <=> abelian & every a has a^n with a unique idempotent e in Ra^n, 1-e in R(1-a^n)";
    case Characterization::T2_8:
      return "uniquely_pi_clean <=> every a has a^m - e in J for a central idempotent e";
    case Characterization::C2_9:
      return "uniquely_clean <=> uniquely_pi_clean & J = {x : x-1 unit}";
    case Characterization::T2_10:
      return "uniquely_pi_clean <=> unique idempotent e with a^m - e in J & J = {x : x^m-1 unit for all m}";
    case Characterization::C2_11:
      return "uniquely_pi_clean <=> unique idempotent e with a^m - e in J & N(R) in J";
    case Characterization::C2_12:
      return "local R: uniquely_pi_clean <=> U(R) = {x : x^m-1 in J for some m}";
    case Characterization::T3_3:
      return "uniquely_pi_clean <=> abelian & idempotents lift mod J & R/P torsion for all P in J-spec";
    case Characterization::C3_4:
      return "uniquely_clean <=> uniquely_pi_clean & R/M = Z2 for every maximal M";
    case Characterization::T3_7:
      return "uniquely_pi_clean <=> exchange & R/J* potent & idempotents lift uniquely mod J*";
    case Characterization::T3_9:
      return "uniquely_pi_clean <=> unique idempotent e with a^m - e in J* & J* = {x : x^m-1 unit for all m}";
    case Characterization::C3_10:
      return "uniquely_pi_clean & primes maximal => P(R) = {x : x^m-1 unit for all m}";
    case Characterization::T4_7_2:
      return "uniquely_pi_clean & J nil <=> abelian & periodic";
    case Characterization::T4_7_3:
      return "uniquely_pi_clean & J nil <=> unique idempotent e with a^m - e in P(R)";
    case Characterization::C4_8:
      return "uniquely_pi_clean & J nil <=> a^m - e in P(R) for a central idempotent e";
  }
  return {};
}

RingSuite characterization_suite(Characterization t) {
  RingSuite s{std::string(to_string(t)), Relation::equivalence, characterization_statement(t), {}, {}};
  switch (t) {
    case Characterization::C2_9:
    case Characterization::C3_4:
      s.fn = [t](RingContext& c) {
        return one_row(c, Relation::equivalence, c.uniquely_clean(), characterization(c.analysis, t));
      };
      break;
    case Characterization::C2_12:
      s.note = "Asserted on local rings only.";
      s.fn = [t](RingContext& c) {
        if (!is_local(c.analysis)) return skip(c, "hypothesis unmet: not local");
        return one_row(c, Relation::equivalence, c.uniquely_pi_clean(), characterization(c.analysis, t));
      };
      break;
    case Characterization::C3_10:
      s.relation = Relation::implication;
      s.fn = [t](RingContext& c) {
        const auto& spec = c.analysis.spectrum();
        const Decision hypothesis = both(c.uniquely_pi_clean(), from_bool(spec.prime == spec.maximal));
        return one_row(c, Relation::implication, hypothesis, characterization(c.analysis, t));
      };
      break;
    case Characterization::T4_7_2:
    case Characterization::T4_7_3:
    case Characterization::C4_8:
      s.fn = [t](RingContext& c) {
        const Decision lhs = both(c.uniquely_pi_clean(), jacobson_is_nil(c.analysis));
        return one_row(c, Relation::equivalence, lhs, characterization(c.analysis, t));
      };
      break;
    case Characterization::T3_3:
      s.note =
          "Caveat: this result is stated for strongly pi-clean rings, a notion never defined alongside it; "
          "its right side is checked against uniquely_pi_clean and any disagreement is reported.";
      [[fallthrough]];
    default:
      s.fn = [t](RingContext& c) {
        return one_row(c, Relation::equivalence, c.uniquely_pi_clean(), characterization(c.analysis, t));
      };
  }
  return s;
}

std::vector<RingSuite> ring_suites() {
  std::vector<RingSuite> out;
  for (Characterization t : all_characterizations()) out.push_back(characterization_suite(t));

  out.push_back({"COLLAPSE", Relation::equivalence, "finite R: uniquely_pi_clean <=> abelian", {},
                 [](RingContext& c) {
                   return one_row(c, Relation::equivalence, c.uniquely_pi_clean(), is_abelian(c.analysis));
                 }});
  out.push_back({"RADICALS", Relation::property, "J(R) = J*(R) = P(R)", {}, [](RingContext& c) {
                   const auto& j = c.analysis.jacobson().members();
                   return one_row(c, Relation::property, Decision::yes(),
                                  both(same_members(j, c.analysis.j_star().members()),
                                       same_members(j, c.analysis.prime_radical().members())));
                 }});
  out.push_back({"PRIME-MAX", Relation::property, "prime ideals = maximal ideals", {}, [](RingContext& c) {
                   const auto& spec = c.analysis.spectrum();
                   return one_row(c, Relation::property, Decision::yes(), from_bool(spec.prime == spec.maximal));
                 }});
  out.push_back({"L2.1", Relation::implication, "uniquely_pi_clean => abelian & exchange", {},
                 [](RingContext& c) {
                   return one_row(c, Relation::implication, c.uniquely_pi_clean(),
                                  both(is_abelian(c.analysis), is_exchange(c.analysis)));
                 }});
  out.push_back({"CHAIN-UC", Relation::implication, "uniquely_clean => uniquely_pi_clean", {},
                 [](RingContext& c) {
                   return one_row(c, Relation::implication, c.uniquely_clean(), c.uniquely_pi_clean());
                 }});
  out.push_back({"CHAIN-SC", Relation::implication, "uniquely_pi_clean => strongly_clean", {},
                 [](RingContext& c) {
                   return one_row(c, Relation::implication, c.uniquely_pi_clean(), is_strongly_clean(c.analysis));
                 }});
  out.push_back({"T4.4", Relation::implication, "abelian & potently_J_clean => uniquely_pi_clean", {},
                 [](RingContext& c) {
                   return one_row(c, Relation::implication,
                                  both(is_abelian(c.analysis), is_potently_J_clean(c.analysis)),
                                  c.uniquely_pi_clean());
                 }});
  out.push_back({"C4.9", Relation::implication, "generalized n-like (some n in 2..9) => uniquely_pi_clean", {},
                 [](RingContext& c) {
                   std::string which;
                   for (unsigned n = 2; n <= 9; ++n) {
                     if (is_generalized_n_like(c.analysis, n)) which += (which.empty() ? "" : ",") + std::to_string(n);
                   }
                   return one_row(c, Relation::implication, from_bool(!which.empty()), c.uniquely_pi_clean(),
                                  which.empty() ? std::string{} : "n-like for n=" + which);
                 }});
  out.push_back({"L4.3", Relation::implication, "potently_J_clean => exchange", {}, [](RingContext& c) {
                   return one_row(c, Relation::implication, is_potently_J_clean(c.analysis),
                                  is_exchange(c.analysis));
                 }});
  out.push_back({"L4.6", Relation::equivalence, "every a has a uniquely nil clean power <=> abelian & periodic", {},
                 [](RingContext& c) {
                   return one_row(c, Relation::equivalence, powers_uniquely_nil_clean(c.analysis),
                                  both(is_abelian(c.analysis), is_periodic(c.analysis)));
                 }});
  out.push_back({"L2.6", Relation::implication, "local & uniquely_pi_clean => R/J potent", {},
                 [](RingContext& c) {
                   return one_row(c, Relation::implication, both(is_local(c.analysis), c.uniquely_pi_clean()),
                                  quotient_is_potent(c.analysis, c.analysis.jacobson()));
                 }});
  out.push_back({"L2.7", Relation::implication, "uniquely_pi_clean => R/J potent & R/J uniquely_pi_clean", {},
                 [](RingContext& c) {
                   const RingAnalysis top(quotient(c.ring(), c.analysis.jacobson()), c.analysis.caps());
                   return one_row(c, Relation::implication, c.uniquely_pi_clean(),
                                  both(quotient_is_potent(c.analysis, c.analysis.jacobson()),
                                       from_bool(is_uniquely_pi_clean(top).holds)));
                 }});
  out.push_back({"C2.3", Relation::implication, "uniquely_pi_clean => every corner eRe uniquely_pi_clean", {},
                 [](RingContext& c) {
                   Decision corners = Decision::yes();
                   for (Index e : c.analysis.idempotents().members) {
                     const RingAnalysis sub(corner(c.ring(), e), c.analysis.caps());
                     if (!is_uniquely_pi_clean(sub)) {
                       corners = Decision::no({e});
                       break;
                     }
                   }
                   return one_row(c, Relation::implication, c.uniquely_pi_clean(), corners);
                 }});
  out.push_back({"L3.2", Relation::implication, "abelian & exchange => (RxR = R <=> x unit)", {},
                 [](RingContext& c) {
                   Decision rhs = Decision::yes();
                   for (Index x = 0; x < c.ring().order(); ++x) {
                     const Index gen[] = {x};
                     const bool whole = ideal_generated_by(c.ring(), gen).size() == c.ring().order();
                     if (whole != c.analysis.is_unit(x)) {
                       rhs = Decision::no({x});
                       break;
                     }
                   }
                   return one_row(c, Relation::implication,
                                  both(is_abelian(c.analysis), is_exchange(c.analysis)), rhs);
                 }});
  out.push_back({"T2.10-set", Relation::implication,
                 "uniquely_pi_clean => J = {x : x^m-1 unit for all m}", {}, [](RingContext& c) {
                   return one_row(c, Relation::implication, c.uniquely_pi_clean(),
                                  same_members(c.analysis.jacobson().members(), radical_unit_set(c.analysis)));
                 }});
  out.push_back({"J-UNIT", Relation::property, "every x in J has x^m-1 unit for all m", {},
                 [](RingContext& c) {
                   const auto rus = radical_unit_set(c.analysis);
                   Decision rhs = Decision::yes();
                   for (Index x : c.analysis.jacobson().members()) {
                     if (!std::binary_search(rus.begin(), rus.end(), x)) {
                       rhs = Decision::no({x});
                       break;
                     }
                   }
                   return one_row(c, Relation::property, Decision::yes(), rhs);
                 }});
  out.push_back({"NIL-P", Relation::property, "P(R) nil; commutative => N(R) = P(R)", {}, [](RingContext& c) {
                   Decision rhs = Decision::yes();
                   for (Index x : c.analysis.prime_radical().members()) {
                     if (!c.analysis.is_nilpotent(x)) rhs = Decision::no({x});
                     if (!rhs) break;
                   }
                   if (rhs && is_commutative(c.analysis)) {
                     rhs = same_members(c.analysis.nilpotents().members, c.analysis.prime_radical().members());
                   }
                   return one_row(c, Relation::property, Decision::yes(), rhs);
                 }});
  out.push_back({"SANITY", Relation::property, "finite R: clean, exchange, strongly pi-regular, periodic", {},
                 [](RingContext& c) {
                   const Decision rhs =
                       both(both(is_clean(c.analysis), is_exchange(c.analysis)),
                            both(is_strongly_pi_regular(c.analysis), is_periodic(c.analysis)));
                   return one_row(c, Relation::property, Decision::yes(), rhs);
                 }});
  out.push_back({"EXPECT", Relation::equivalence, "catalog expectations match evaluated predicates", {},
                 [](RingContext& c) {
                   Outcome out;
                   for (const auto& ex : c.entry.expected) {
                     const Decision observed = evaluate_predicate(c.analysis, ex.predicate);
                     out.rows.push_back(make_row(&c.ring(), c.label() + " " + ex.predicate, Relation::equivalence,
                                                 from_bool(ex.value), observed, ex.basis));
                   }
                   return out;
                 }});
  out.push_back({"DETERMINISM", Relation::property, "rebuilding from provenance gives identical tables", {},
                 [](RingContext& c) {
                   const FiniteRing rebuilt = ring_from_source(c.entry.provenance);
                   return one_row(c, Relation::property, Decision::yes(), from_bool(rebuilt == c.ring()));
                 }});
  out.push_back({"REVALIDATE", Relation::property, "catalog tables pass full axiom validation", {},
                 [](RingContext& c) {
                   auto result = validate_ring(c.ring().tables());
                   Decision rhs = Decision::yes();
                   if (auto* v = std::get_if<RingViolation>(&result)) {
                     rhs = Decision::no(v->witness);
                   } else if (!(std::get<FiniteRing>(result) == c.ring())) {
                     rhs = Decision::no({});
                   }
                   return one_row(c, Relation::property, Decision::yes(), rhs);
                 }});
  return out;
}

// ----- catalog-independent harnesses ---------------------------------------

PseudoRing null_z2() {
  const FiniteRing z2 = zmod(2);
  PseudoRing s{2, {}, std::vector<Index>(4, 0), 0, {"0", "1"}};
  s.add.assign(z2.add_table().begin(), z2.add_table().end());
  return s;
}

PseudoRing ring_as_pseudo(const FiniteRing& r) {
  PseudoRing s{r.order(), {}, {}, r.zero(), {}};
  s.add.assign(r.add_table().begin(), r.add_table().end());
  s.mul.assign(r.mul_table().begin(), r.mul_table().end());
  for (Index x = 0; x < r.order(); ++x) s.names.push_back(r.name(x));
  return s;
}

BimoduleSpec projection_spec(bool right_uses_second) {
  const FiniteRing base = product(zmod(2), zmod(2));
  std::vector<Index> first(base.order()), second(base.order());
  for (Index x = 0; x < base.order(); ++x) {
    const std::string& n = base.name(x);  // "(a,b)"
    first[x] = n[1] == '1' ? 1 : 0;
    second[x] = n[3] == '1' ? 1 : 0;
  }
  BimoduleSpec spec{base, null_z2(), {}, {}, {}};
  const auto& right_proj = right_uses_second ? second : first;
  for (Index r = 0; r < base.order(); ++r)
    for (Index s = 0; s < 2; ++s) spec.left_action.push_back(first[r] ? s : 0);
  for (Index s = 0; s < 2; ++s)
    for (Index r = 0; r < base.order(); ++r) spec.right_action.push_back(right_proj[r] ? s : 0);
  spec.label = right_uses_second ? "null-z2(Z2xZ2;pi1,pi2)" : "null-z2(Z2xZ2;pi1,pi1)";
  return spec;
}

BimoduleSpec regular_spec(const FiniteRing& r) {
  BimoduleSpec spec{r, ring_as_pseudo(r), {}, {}, "regular(" + r.label() + ")"};
  spec.left_action.assign(r.mul_table().begin(), r.mul_table().end());
  spec.right_action.assign(r.mul_table().begin(), r.mul_table().end());
  return spec;
}

void run_extension_harness(TheoremVerdict& v, const RunConfig&) {
  for (const auto& c : extension_cases()) {
    const FiniteRing ext = ideal_extension(c.spec);
    const RingAnalysis analysis(ext);
    const Decision lhs = both(is_uniquely_pi_clean(analysis), from_bool(is_idempotent_free(c.spec.module)));
    const auto conds = extension_conditions(c.spec);
    const Decision rhs = from_bool(conds[0] && conds[1] && conds[2]);
    bool pattern = true;
    for (int i = 0; i < 3; ++i) pattern = pattern && (conds[i] == (c.broken_condition != i + 1));
    std::string detail = "conditions " + std::to_string(conds[0]) + std::to_string(conds[1]) +
                         std::to_string(conds[2]) + (c.broken_condition ? ", built to break (" +
                                                                              std::to_string(c.broken_condition) + ")"
                                                                        : ", all conditions intended");
    VerdictRow row = make_row(&ext, c.name, Relation::equivalence, lhs, rhs, detail);
    if (!pattern) {
      row.agree = false;
      row.detail += "; condition pattern does not match the intended mutation";
    }
    v.rows.push_back(std::move(row));
  }
}

struct Invariants {
  std::size_t order, units, idempotents, nilpotents;
  std::vector<bool> predicates;
  bool operator==(const Invariants&) const = default;
};

Invariants invariants_of(const FiniteRing& r) {
  const RingAnalysis a(r);
  Invariants inv{r.order(), a.units().size(), a.idempotents().size(), a.nilpotents().size(), {}};
  for (const auto& [name, d] : compute_predicates(a).values) inv.predicates.push_back(d.holds);
  return inv;
}

void run_eqdiag_harness(TheoremVerdict& v, const RunConfig& config) {
  const std::vector<std::string> bases = {"zmod:2", "zmod:3", "zmod:4", "gf:4", "zmod:5"};
  for (const auto& src : bases) {
    const FiniteRing base = ring_from_source(src);
    for (std::size_t k = 2; k <= 3; ++k) {
      std::size_t order = 1;
      for (std::size_t i = 0; i < 1 + k * (k - 1) / 2; ++i) order *= base.order();
      const std::string label = "eqdiag:" + src + ":" + std::to_string(k);
      if (order > config.order_cap) {
        v.skipped.push_back({label, "order " + std::to_string(order) + " above cap"});
        continue;
      }
      const bool same = invariants_of(equal_diagonal_subring(base, k)) ==
                        invariants_of(ideal_extension(strict_upper_bimodule(base, k)));
      v.rows.push_back(make_row(nullptr, label + " ~ ideal-ext:" + src + ":" + std::to_string(k), Relation::property,
                                Decision::yes(), from_bool(same), "order, unit, idempotent, nilpotent counts and predicates"));
    }
  }
}

void run_gf4_harness(TheoremVerdict& v, const RunConfig&) {
  const FiniteRing r = gf4_frobenius_example();
  const RingAnalysis a(r);
  const std::string label = r.label();
  auto add = [&](const std::string& what, const Decision& d) {
    v.rows.push_back(make_row(&r, label + " " + what, Relation::property, Decision::yes(), d));
  };
  add("order=64", from_bool(r.order() == 64));
  Decision seventh = Decision::yes();
  for (Index x = 0; x < r.order(); ++x) {
    if (r.pow(x, 7) != x && r.mul(x, x) != r.zero()) {
      seventh = Decision::no({x});
      break;
    }
  }
  add("a^7=a or a^2=0", seventh);
  add("generalized_7_like", is_generalized_n_like(a, 7));
  add("noncommutative", from_bool(!is_commutative(a)));
  add("uniquely_pi_clean", is_uniquely_pi_clean(a));
}

void run_zp1_observation(TheoremVerdict& v, const RunConfig&) {
  for (std::size_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
    const RingAnalysis a(zmod(p + 1));
    std::string uc, not_uc;
    for (std::size_t m = 1; (std::size_t{1} << m) <= p; ++m) {
      const Index x = static_cast<Index>((std::size_t{1} << m) % (p + 1));
      auto& bucket = clean_decompositions(a, x).size() == 1 ? uc : not_uc;
      bucket += (bucket.empty() ? "" : ",") + std::to_string(m);
    }
    v.rows.push_back(make_row(nullptr, "zmod:" + std::to_string(p + 1), Relation::observation, Decision::yes(),
                              from_bool(uc.empty()),
                              "2^m uniquely clean for m={" + uc + "}, not for m={" + not_uc + "}"));
  }
}

std::vector<HarnessSuite> harness_suites() {
  return {
      {"T4.1", Relation::equivalence,
       "I(R;S) uniquely_pi_clean & S idempotent-free <=> (1) R uniquely_pi_clean, (2) es=se for idempotent e, "
       "(3) every s has a commuting quasi-inverse s'",
       {}, run_extension_harness},
      {"C4.2", Relation::property, "equal-diagonal subring matches the strict-upper ideal extension", {},
       run_eqdiag_harness},
      {"GF4", Relation::property, "64-element GF(4) matrix ring: periodic shape, 7-like, noncommutative, "
                                  "uniquely_pi_clean", {}, run_gf4_harness},
      {"OBS-ZP1", Relation::observation, "which 2^m (1 <= m <= log2 p) are uniquely clean in Z/(p+1)",
       "Reported only; the rows assert nothing.", run_zp1_observation},
  };
}

std::vector<std::string> all_suite_ids() {
  std::vector<std::string> out;
  for (const auto& s : ring_suites()) out.push_back(s.id);
  for (const auto& s : harness_suites()) out.push_back(s.id);
  return out;
}

// Suite ids named by one filter entry: the exact id, or every "<filter>-..."
// part when no suite carries the exact id.
std::vector<std::string> expand_filter(std::string_view want, const std::vector<std::string>& ids) {
  if (want == "C3.10-set") want = "C3.10";
  if (std::find(ids.begin(), ids.end(), want) != ids.end()) return {std::string(want)};
  std::vector<std::string> out;
  for (const auto& id : ids) {
    if (id.size() > want.size() && id.starts_with(want) && id[want.size()] == '-') out.push_back(id);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = all_suite_ids();
  return ids;
}

bool is_suite_id(std::string_view id) {
  return !expand_filter(id, suite_ids()).empty();
}

std::vector<ExtensionCase> extension_cases() {
  std::vector<ExtensionCase> out;
  for (const auto& [src, k] : std::vector<std::pair<std::string, std::size_t>>{
           {"zmod:2", 2}, {"zmod:3", 2}, {"zmod:2", 3}, {"zmod:4", 2}, {"gf:4", 2}}) {
    out.push_back({"strict-upper(" + src + "," + std::to_string(k) + ")",
                   strict_upper_bimodule(ring_from_source(src), k), 0});
  }
  out.push_back({"null-z2(Z2xZ2;pi1,pi1)", projection_spec(false), 0});
  out.push_back({"zero(matrix:zmod:2:2)", zero_bimodule(matrix_ring(zmod(2), 2)), 1});
  out.push_back({"zero(tri:zmod:2:2)", zero_bimodule(upper_triangular(zmod(2), 2)), 1});
  out.push_back({"null-z2(Z2xZ2;pi1,pi2)", projection_spec(true), 2});
  out.push_back({"regular(zmod:2)", regular_spec(zmod(2)), 3});
  out.push_back({"regular(zmod:3)", regular_spec(zmod(3)), 3});
  return out;
}

bool is_idempotent_free(const PseudoRing& s) {
  for (Index x = 0; x < s.order; ++x) {
    if (x != s.zero && s.times(x, x) == x) return false;
  }
  return true;
}

std::array<bool, 3> extension_conditions(const BimoduleSpec& spec) {
  const RingAnalysis base(spec.base);
  const PseudoRing& s = spec.module;
  std::array<bool, 3> out{};
  out[0] = is_uniquely_pi_clean(base).holds;
  out[1] = true;
  for (Index e : base.idempotents().members) {
    for (Index x = 0; x < s.order && out[1]; ++x) out[1] = spec.act_left(e, x) == spec.act_right(x, e);
  }
  out[2] = true;
  for (Index x = 0; x < s.order && out[2]; ++x) {
    bool found = false;
    for (Index y = 0; y < s.order && !found; ++y) {
      found = s.times(x, y) == s.times(y, x) && s.plus(s.plus(x, y), s.times(x, y)) == s.zero;
    }
    out[2] = found;
  }
  return out;
}

std::vector<TheoremVerdict> run_verification(const std::vector<RingCatalogEntry>& catalog,
                                             const RunConfig& config) {
  std::set<std::string> wanted;
  for (const auto& f : config.theorems) {
    const auto ids = expand_filter(f, suite_ids());
    if (ids.empty()) throw RingError(ErrorKind::InvalidArgument, "unknown theorem id " + f);
    wanted.insert(ids.begin(), ids.end());
  }
  auto selected = [&](const std::string& id) { return wanted.empty() || wanted.count(id) > 0; };

  std::vector<RingSuite> suites;
  for (auto& s : ring_suites()) {
    if (selected(s.id)) suites.push_back(std::move(s));
  }

  // One work item per ring; each item evaluates every selected suite so the
  // per-ring memo cache is shared between suites.
  const auto per_ring = parallel_map<std::vector<Outcome>>(catalog.size(), config.jobs, [&](std::size_t i) {
    const RingCatalogEntry& entry = catalog[i];
    std::vector<Outcome> outcomes(suites.size());
    if (entry.ring.order() > config.order_cap) {
      for (auto& o : outcomes) o.skipped.push_back({entry.provenance, "order above cap"});
      return outcomes;
    }
    RingContext ctx{entry, RingAnalysis(entry.ring, config.lattice), {}, {}};
    for (std::size_t s = 0; s < suites.size(); ++s) {
      try {
        outcomes[s] = suites[s].fn(ctx);
      } catch (const RingError& e) {
        if (e.kind() != ErrorKind::LatticeCapExceeded && e.kind() != ErrorKind::OrderCapExceeded) throw;
        outcomes[s].skipped.push_back({entry.provenance, e.what()});
      }
    }
    return outcomes;
  });

  std::vector<TheoremVerdict> out;
  for (std::size_t s = 0; s < suites.size(); ++s) {
    TheoremVerdict v{suites[s].id, suites[s].relation, suites[s].statement, {}, {}, true, suites[s].note};
    for (const auto& outcomes : per_ring) {
      const Outcome& o = outcomes[s];
      v.rows.insert(v.rows.end(), o.rows.begin(), o.rows.end());
      v.skipped.insert(v.skipped.end(), o.skipped.begin(), o.skipped.end());
    }
    out.push_back(std::move(v));
  }
  for (const auto& h : harness_suites()) {
    if (!selected(h.id)) continue;
    TheoremVerdict v{h.id, h.relation, h.statement, {}, {}, true, h.note};
    h.fn(v, config);
    out.push_back(std::move(v));
  }
  for (auto& v : out) {
    v.overall = std::all_of(v.rows.begin(), v.rows.end(), [](const VerdictRow& r) { return r.agree; });
  }
  return out;
}

// ----- serialization --------------------------------------------------------

Json verdicts_to_json(const std::vector<TheoremVerdict>& verdicts) {
  Json list = Json::array();
  bool overall = true;
  for (const auto& v : verdicts) {
    Json item;
    item["theorem"] = v.theorem;
    item["relation"] = to_string(v.relation);
    item["statement"] = v.statement;
    item["overall"] = v.overall;
    if (!v.note.empty()) item["note"] = v.note;
    Json rows = Json::array();
    for (const auto& r : v.rows) {
      Json row;
      row["ring"] = r.ring;
      row["lhs"] = r.lhs;
      row["rhs"] = r.rhs;
      row["agree"] = r.agree;
      row["witness"] = r.witness;
      if (!r.witness_names.empty()) row["witness_names"] = r.witness_names;
      if (!r.detail.empty()) row["detail"] = r.detail;
      rows.push_back(std::move(row));
    }
    item["rows"] = std::move(rows);
    Json skipped = Json::array();
    for (const auto& s : v.skipped) skipped.push_back({{"ring", s.ring}, {"reason", s.reason}});
    item["skipped"] = std::move(skipped);
    overall = overall && v.overall;
    list.push_back(std::move(item));
  }
  Json doc;
  doc["overall"] = overall;
  doc["verdicts"] = std::move(list);
  return doc;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string join(const std::vector<Index>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

}  // namespace

std::string verdicts_to_csv(const std::vector<TheoremVerdict>& verdicts) {
  std::ostringstream out;
  out << "theorem,ring,lhs,rhs,agree,witness,detail\n";
  for (const auto& v : verdicts) {
    for (const auto& r : v.rows) {
      out << csv_field(v.theorem) << ',' << csv_field(r.ring) << ',' << r.lhs << ',' << r.rhs << ','
          << r.agree << ',' << join(r.witness, " ") << ',' << csv_field(r.detail) << '\n';
    }
    for (const auto& s : v.skipped) {
      out << csv_field(v.theorem) << ',' << csv_field(s.ring) << ",,,skipped,," << csv_field(s.reason) << '\n';
    }
  }
  return out.str();
}

std::string verdicts_to_text(const std::vector<TheoremVerdict>& verdicts) {
  std::ostringstream out;
  for (const auto& v : verdicts) {
    out << (v.overall ? "PASS " : "FAIL ") << v.theorem << "  [" << to_string(v.relation) << "]  "
        << v.rows.size() << " rows, " << v.skipped.size() << " skipped\n";
    out << "     " << v.statement << '\n';
    if (!v.note.empty()) out << "     note: " << v.note << '\n';
    if (v.relation == Relation::observation) {
      for (const auto& r : v.rows) out << "     " << r.ring << ": " << r.detail << '\n';
    }
    if (const VerdictRow* bad = v.first_disagreement()) {
      out << "     first disagreement: " << bad->ring << " lhs=" << bad->lhs << " rhs=" << bad->rhs;
      if (!bad->witness.empty()) {
        out << " witness=";
        for (std::size_t i = 0; i < bad->witness.size(); ++i) {
          out << (i ? "," : "") << bad->witness[i];
          if (i < bad->witness_names.size()) out << '<' << bad->witness_names[i] << '>';
        }
      }
      if (!bad->detail.empty()) out << " (" << bad->detail << ')';
      out << '\n';
    }
  }
  return out.str();
}

Json predicates_to_json(const PredicateVector& pv) {
  Json values = Json::object();
  Json witnesses = Json::object();
  for (const auto& [name, d] : pv.values) {
    values[name] = d.holds;
    if (!d.holds && !d.witness.empty()) witnesses[name] = d.witness;
  }
  Json doc;
  doc["label"] = pv.label;
  doc["predicates"] = std::move(values);
  doc["witnesses"] = std::move(witnesses);
  return doc;
}

std::string predicates_to_csv(const std::vector<PredicateVector>& rows) {
  std::ostringstream out;
  out << "ring";
  for (const auto& name : predicate_names()) out << ',' << name;
  out << '\n';
  for (const auto& pv : rows) {
    out << csv_field(pv.label);
    for (const auto& name : predicate_names()) out << ',' << (pv.value(name) ? 1 : 0);
    out << '\n';
  }
  return out.str();
}

Json analyze_report(const RingAnalysis& a) {
  Json doc;
  doc["label"] = a.ring().label();
  doc["order"] = a.order();
  const PredicateVector pv = compute_predicates(a);
  Json pj = predicates_to_json(pv);
  doc["predicates"] = pj["predicates"];
  doc["witnesses"] = pj["witnesses"];
  doc["classes"] = {{"units", a.units().size()},
                    {"idempotents", a.idempotents().size()},
                    {"central_idempotents", a.central_idempotents().size()},
                    {"nilpotents", a.nilpotents().size()},
                    {"potents", a.potents().size()}};
  doc["radicals"] = {{"jacobson", a.jacobson().members()},
                     {"j_star", a.j_star().members()},
                     {"prime_radical", a.prime_radical().members()},
                     {"nilpotents", a.nilpotents().members},
                     {"radical_unit_set", radical_unit_set(a)}};
  doc["spectrum"] = spectrum_to_json(a.spectrum());
  Json chars = Json::object();
  for (Characterization t : all_characterizations()) chars[std::string(to_string(t))] = characterization(a, t).holds;
  doc["characterizations"] = std::move(chars);
  return doc;
}

std::string analyze_report_text(const RingAnalysis& a) {
  const FiniteRing& r = a.ring();
  auto names = [&](std::span<const Index> xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + r.name(xs[i]);
    return out + "}";
  };
  std::ostringstream out;
  out << "ring " << r.label() << "  order " << r.order() << '\n';
  out << "predicates:\n";
  for (const auto& [name, d] : compute_predicates(a).values) {
    out << "  " << name << " = " << (d.holds ? "true" : "false");
    if (!d.holds && !d.witness.empty()) {
      out << "  witness";
      for (Index x : d.witness) out << ' ' << x << '<' << r.name(x) << '>';
    }
    out << '\n';
  }
  out << "classes: units " << a.units().size() << ", idempotents " << a.idempotents().size()
      << ", central idempotents " << a.central_idempotents().size() << ", nilpotents " << a.nilpotents().size()
      << ", potents " << a.potents().size() << '\n';
  out << "J(R) = " << names(a.jacobson().members()) << '\n';
  out << "J*(R) = " << names(a.j_star().members()) << '\n';
  out << "P(R) = " << names(a.prime_radical().members()) << '\n';
  const auto& spec = a.spectrum();
  out << "ideals: " << spec.all_ideals.size() << " (" << spec.maximal.size() << " maximal, " << spec.prime.size()
      << " prime)\n";
  out << "characterizations:";
  for (Characterization t : all_characterizations()) {
    out << ' ' << to_string(t) << '=' << (characterization(a, t).holds ? 'T' : 'F');
  }
  out << '\n';
  return out.str();
}

}  // namespace ringlab
