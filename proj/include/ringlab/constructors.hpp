#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/radicals.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Constructors refuse to build rings above this order unless told otherwise.
inline constexpr std::size_t kDefaultOrderCap = kMaxOrder;

/// Z/n with residues as indices.
FiniteRing zmod(std::size_t n);
/// GF(q) for q in {2,3,4,5,7,8,9}; non-prime fields as Z/p[t]/(irreducible).
FiniteRing gf(std::size_t q);
/// Z/n[x]/(x^2+x+1).
FiniteRing zn_alpha(std::size_t n);

FiniteRing product(const FiniteRing& r, const FiniteRing& s,
                   std::size_t order_cap = kDefaultOrderCap);
FiniteRing matrix_ring(const FiniteRing& r, std::size_t k,
                       std::size_t order_cap = kDefaultOrderCap);
FiniteRing upper_triangular(const FiniteRing& r, std::size_t k,
                            std::size_t order_cap = kDefaultOrderCap);
/// Upper triangular k x k matrices with a constant diagonal.
FiniteRing equal_diagonal_subring(const FiniteRing& r, std::size_t k,
                                  std::size_t order_cap = kDefaultOrderCap);
/// eRe with identity e. Throws RingError(NotIdempotent).
FiniteRing corner(const FiniteRing& r, Index e);
/// R/I on minimal coset representatives. Throws RingError(NotAnIdeal).
FiniteRing quotient(const FiniteRing& r, const Ideal& ideal);
FiniteRing quotient(const FiniteRing& r, std::span<const Index> members);

/// Not necessarily unital ring: additive group plus associative product.
struct PseudoRing {
  std::size_t order = 0;
  std::vector<Index> add;
  std::vector<Index> mul;
  Index zero = 0;
  std::vector<std::string> names;

  Index plus(Index a, Index b) const { return add[a * order + b]; }
  Index times(Index a, Index b) const { return mul[a * order + b]; }
};

/// Data of an ideal extension I(R;S): S is an R-R-bimodule and a pseudo-ring
/// with (s1 s2) r = s1 (s2 r), r (s1 s2) = (r s1) s2, (s1 r) s2 = s1 (r s2).
struct BimoduleSpec {
  FiniteRing base;
  PseudoRing module;
  /// |R| x |S|, left_action[r*|S|+s] = r s.
  std::vector<Index> left_action;
  /// |S| x |R|, right_action[s*|R|+r] = s r.
  std::vector<Index> right_action;
  std::string label;

  Index act_left(Index r, Index s) const { return left_action[r * module.order + s]; }
  Index act_right(Index s, Index r) const { return right_action[s * base.order() + r]; }
};

/// First violated bimodule or pseudo-ring law, or nullopt.
std::optional<std::string> bimodule_violation(const BimoduleSpec& spec);

/// R (+) S with (r1,s1)(r2,s2) = (r1 r2, s1 s2 + r1 s2 + s1 r2).
/// Throws RingError(BimoduleLawViolation).
FiniteRing ideal_extension(const BimoduleSpec& spec, std::size_t order_cap = kDefaultOrderCap);

/// Strictly upper triangular k x k matrices over R, acted on by scalars.
BimoduleSpec strict_upper_bimodule(const FiniteRing& r, std::size_t k);
/// S = 0 over R.
BimoduleSpec zero_bimodule(const FiniteRing& r);

/// The 64-element ring {[[x,y,z],[0,x^2,0],[0,0,x]] : x,y,z in GF(4)}.
FiniteRing gf4_frobenius_example();

/// Build a ring from a source expression:
///   zmod:<n> gf:<q> zn-alpha:<n> matrix:<src>:<k> tri:<src>:<k>
///   eqdiag:<src>:<k> product:<src>,<src> corner:<src>:<e> jquot:<src>
///   ideal-ext:<src>:<k> paper:gf4-example file:<path>
/// "zmod2" is accepted as shorthand for "zmod:2"; parentheses group nested
/// product operands. Throws RingError(ParseError) on bad syntax.
FiniteRing ring_from_source(const std::string& source, std::size_t order_cap = kDefaultOrderCap);

struct Expectation {
  std::string predicate;
  bool value;
  std::string basis;
};

struct RingCatalogEntry {
  FiniteRing ring;
  std::string provenance;
  std::vector<Expectation> expected;
};

struct CatalogOptions {
  std::size_t order_cap = 128;
  bool include_derived = true;
};

/// Deterministic catalog of small rings, labels equal to provenance.
std::vector<RingCatalogEntry> default_catalog(CatalogOptions options = {});

}  // namespace ringlab
