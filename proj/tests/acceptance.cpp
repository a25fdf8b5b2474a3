// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "ringlab/verify.hpp"

using namespace ringlab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Gate {
  int failures = 0;

  void report(int id, const std::string& title, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    failures += ok ? 0 : 1;
  }
};

const TheoremVerdict* find(const std::vector<TheoremVerdict>& vs, std::string_view id) {
  for (const auto& v : vs)
    if (v.theorem == id) return &v;
  return nullptr;
}

// Conjunction of the named suites' overall flags; detail lists disagreements.
bool suites_pass(const std::vector<TheoremVerdict>& vs, std::initializer_list<std::string_view> ids,
                 std::ostringstream& detail) {
  bool ok = true;
  for (auto id : ids) {
    const TheoremVerdict* v = find(vs, id);
    if (!v) {
      detail << id << " missing; ";
      ok = false;
      continue;
    }
    std::size_t bad = 0;
    for (const auto& r : v->rows) bad += r.agree ? 0 : 1;
    if (bad) {
      const VerdictRow* first = v->first_disagreement();
      detail << id << ": " << bad << " disagreement(s), first " << first->ring << "; ";
      ok = false;
    }
  }
  return ok;
}

const RingCatalogEntry* entry(const std::vector<RingCatalogEntry>& catalog, std::string_view label) {
  for (const auto& e : catalog)
    if (e.provenance == label) return &e;
  return nullptr;
}

}  // namespace

int main() {
  Gate gate;

  {
    const FiniteRing z3 = zmod(3);
    const auto start = Clock::now();
    const RingAnalysis a(z3);
    const auto decomps = clean_decompositions(a, 2);
    const Decision uc = is_uniquely_clean(a);
    const Decision upc = is_uniquely_pi_clean(a);
    const auto m = uniquely_pi_clean_exponent(a, 2);
    const double elapsed = seconds_since(start);
    const bool ok = !uc && decomps == std::vector<std::pair<Index, Index>>{{0, 2}, {1, 1}} && upc && m == 2u &&
                    elapsed < 1e-3;
    std::ostringstream d;
    d << "uniquely_clean=" << uc.holds << " uniquely_pi_clean=" << upc.holds << " m=" << (m ? *m : 0)
      << " time=" << elapsed * 1e6 << "us";
    gate.report(1, "Z/3 classification", ok, d.str());
  }

  const auto catalog = default_catalog();

  {
    const auto* z3 = entry(catalog, "zmod:3");
    const auto* m2 = entry(catalog, "matrix:zmod:2:2");
    bool ok = z3 && m2;
    std::ostringstream d;
    if (ok) {
      const RingAnalysis a(z3->ring), b(m2->ring);
      const bool z3_ok = is_uniquely_pi_clean(a) && !is_uniquely_clean(a);
      const bool m2_ok = is_clean(b) && !is_uniquely_pi_clean(b);
      d << "Z/3 upc-not-uc=" << z3_ok << " M2(Z/2) clean-not-upc=" << m2_ok;
      ok = z3_ok && m2_ok;
    }
    gate.report(2, "inclusion-chain counterexamples in catalog", ok, d.str());
  }

  RunConfig config;
  const auto start = Clock::now();
  const auto verdicts = run_verification(catalog, config);
  const double full_run = seconds_since(start);

  {
    std::ostringstream d;
    const bool suites = suites_pass(verdicts,
                                    {"T2.2", "T2.4", "C2.5", "T2.8", "T2.10", "T3.7", "T3.9", "T4.7-2", "T4.7-3",
                                     "C4.8", "T3.3", "C2.9", "C3.4"},
                                    d);
    d << "full run " << full_run << "s over " << catalog.size() << " rings";
    gate.report(3, "equivalence suites", suites && full_run < 120.0, d.str());
  }
  {
    std::ostringstream d;
    gate.report(4, "uniquely_pi_clean = abelian", suites_pass(verdicts, {"COLLAPSE"}, d), d.str());
  }
  {
    std::ostringstream d;
    const TheoremVerdict* v = find(verdicts, "RADICALS");
    const bool ok = suites_pass(verdicts, {"RADICALS"}, d) && v && v->skipped.empty();
    if (v) d << v->rows.size() << " rings, " << v->skipped.size() << " skipped";
    gate.report(5, "J = J* = P", ok, d.str());
  }
  {
    std::ostringstream d;
    const bool z4 = radical_unit_set(RingAnalysis(zmod(4))) == std::vector<Index>{0, 2};
    d << "Z/4 set is {0,2}: " << z4;
    gate.report(6, "radical unit set equals J on uniquely pi-clean rings",
                suites_pass(verdicts, {"T2.10-set"}, d) && z4, d.str());
  }
  {
    const auto t0 = Clock::now();
    const FiniteRing r = gf4_frobenius_example();
    const RingAnalysis a(r);
    bool shape = true;
    for (Index x = 0; x < r.order(); ++x) shape = shape && (r.pow(x, 7) == x || r.mul(x, x) == r.zero());
    const bool seven = is_generalized_n_like(a, 7).holds;
    const bool comm = is_commutative(a).holds;
    const bool upc = is_uniquely_pi_clean(a).holds;
    const double elapsed = seconds_since(t0);
    std::ostringstream d;
    d << "order=" << r.order() << " a^7=a|a^2=0:" << shape << " 7-like:" << seven << " commutative:" << comm
      << " upc:" << upc << " time=" << elapsed << "s";
    gate.report(7, "GF(4) matrix example", r.order() == 64 && shape && seven && !comm && upc && elapsed < 5.0,
                d.str());
  }
  {
    std::ostringstream d;
    bool ok = suites_pass(verdicts, {"T4.1"}, d);
    std::array<bool, 4> covered{};
    for (const auto& c : extension_cases()) covered[c.broken_condition] = true;
    ok = ok && covered[0] && covered[1] && covered[2] && covered[3];
    if (const auto* v = find(verdicts, "T4.1")) d << v->rows.size() << " specs incl. one mutation per condition";
    gate.report(8, "ideal-extension biconditional", ok, d.str());
  }
  {
    std::ostringstream d;
    gate.report(9, "corners and R/J of uniquely pi-clean rings", suites_pass(verdicts, {"C2.3", "L2.7"}, d), d.str());
  }
  {
    std::ostringstream d;
    bool ok = suites_pass(verdicts, {"L2.1", "CHAIN-UC", "CHAIN-SC", "L4.3", "T4.4", "C4.9", "L4.6"}, d);
    for (auto id : {"L2.1", "CHAIN-UC", "CHAIN-SC", "L4.3", "T4.4", "C4.9", "L4.6"}) {
      if (const auto* v = find(verdicts, id))
        for (const auto& r : v->rows) ok = ok && (!r.agree || r.witness.empty());
    }
    gate.report(10, "implication battery", ok, d.str());
  }

  std::cout << (gate.failures ? "acceptance: " + std::to_string(gate.failures) + " criterion(s) failed"
                              : std::string("acceptance: all criteria passed"))
            << std::endl;
  return gate.failures ? 1 : 0;
}
