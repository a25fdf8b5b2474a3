#include "ringlab/constructors.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "ringlab/io.hpp"

namespace ringlab {

namespace {

using Key = std::vector<Index>;

// Rings above this order skip the cubic axiom scan after construction.
constexpr std::size_t kValidateConstructedUpTo = 256;

void require_order(std::size_t order, std::size_t cap, const std::string& what) {
  if (order > cap || order > kMaxOrder) {
    throw RingError(ErrorKind::OrderCapExceeded,
                    what + " has order " + std::to_string(order) + " > cap " + std::to_string(std::min(cap, kMaxOrder)));
  }
}

std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t cap, const std::string& what) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    result *= base;
    if (result > cap || result > kMaxOrder) require_order(result, cap, what);
  }
  return result;
}

FiniteRing finish(RingTables tables) {
  if (tables.order <= kValidateConstructedUpTo) return make_ring(std::move(tables));
  return normalize_unchecked(std::move(tables));
}

// Tables over an explicit element list; keys must be listed in the order that
// defines the pre-normalization indices.
template <class AddFn, class MulFn, class NameFn>
FiniteRing build_from_keys(std::string label, const std::vector<Key>& keys, AddFn&& add_fn,
                           MulFn&& mul_fn, const Key& zero, const Key& one, NameFn&& name_fn) {
  std::map<Key, Index> index;
  for (Index i = 0; i < keys.size(); ++i) index.emplace(keys[i], i);
  const auto lookup = [&](const Key& k) {
    const auto it = index.find(k);
    if (it == index.end()) {
      throw RingError(ErrorKind::ClosureViolation, label + ": operation leaves the element set");
    }
    return it->second;
  };
  const std::size_t n = keys.size();
  RingTables t;
  t.label = label;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t.add[i * n + j] = lookup(add_fn(keys[i], keys[j]));
      t.mul[i * n + j] = lookup(mul_fn(keys[i], keys[j]));
    }
  }
  t.zero = lookup(zero);
  t.one = lookup(one);
  t.names.reserve(n);
  for (const Key& k : keys) t.names.push_back(name_fn(k));
  return finish(std::move(t));
}

// All tuples of length `width` over [0, radix), lexicographic with the first
// coordinate most significant.
std::vector<Key> enumerate_tuples(std::size_t radix, std::size_t width) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < width; ++i) count *= radix;
  std::vector<Key> out;
  out.reserve(count);
  Key current(width, 0);
  for (std::size_t c = 0; c < count; ++c) {
    out.push_back(current);
    for (std::size_t pos = width; pos-- > 0;) {
      if (++current[pos] < radix) break;
      current[pos] = 0;
    }
  }
  return out;
}

// ----- polynomial quotients Z/n[t]/(monic modulus) -------------------------

std::string poly_name(const Key& coeffs, char var) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(coeffs[i]);
      continue;
    }
    if (coeffs[i] != 1) out += std::to_string(coeffs[i]);
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

// modulus holds c_0..c_{d-1} of t^d + c_{d-1} t^{d-1} + ... + c_0.
FiniteRing poly_quotient(std::string label, std::size_t n, const Key& modulus, char var) {
  const std::size_t d = modulus.size();
  const auto add = [n](const Key& a, const Key& b) {
    Key c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = static_cast<Index>((a[i] + b[i]) % n);
    return c;
  };
  const auto mul = [n, d, &modulus](const Key& a, const Key& b) {
    std::vector<std::size_t> full(2 * d, 0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) full[i + j] = (full[i + j] + a[i] * b[j]) % n;
    // t^k = t^(k-d) * (-(c_0 + ... + c_{d-1} t^{d-1}))
    for (std::size_t k = 2 * d - 1; k >= d; --k) {
      const std::size_t lead = full[k];
      full[k] = 0;
      for (std::size_t i = 0; i < d; ++i) {
        full[k - d + i] = (full[k - d + i] + (n - lead) * modulus[i]) % n;
      }
    }
    return Key(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(d));
  };
  Key zero(d, 0);
  Key one(d, 0);
  one[0] = static_cast<Index>(1 % n);
  return build_from_keys(std::move(label), enumerate_tuples(n, d), add, mul, zero, one,
                         [var](const Key& k) { return poly_name(k, var); });
}

// ----- matrices over a ring ------------------------------------------------

std::string matrix_name(const FiniteRing& r, const Key& entries, std::size_t k) {
  std::string out = "[";
  for (std::size_t i = 0; i < k; ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < k; ++j) {
      if (j) out += ",";
      out += r.name(entries[i * k + j]);
    }
    out += "]";
  }
  return out + "]";
}

Key matrix_add(const FiniteRing& r, const Key& a, const Key& b) {
  Key c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = r.add(a[i], b[i]);
  return c;
}

Key matrix_mul(const FiniteRing& r, const Key& a, const Key& b, std::size_t k) {
  Key c(k * k, r.zero());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Index acc = r.zero();
      for (std::size_t l = 0; l < k; ++l) acc = r.add(acc, r.mul(a[i * k + l], b[l * k + j]));
      c[i * k + j] = acc;
    }
  return c;
}

Key identity_matrix(const FiniteRing& r, std::size_t k) {
  Key id(k * k, r.zero());
  for (std::size_t i = 0; i < k; ++i) id[i * k + i] = r.one();
  return id;
}

// Matrices whose entries are determined by free variables. slot[p] is the
// free variable at row-major position p, or -1 for a fixed zero. Free
// variables are numbered in order of first appearance, so enumerating them
// lexicographically enumerates the full matrices lexicographically.
FiniteRing matrix_family(std::string label, const FiniteRing& r, std::size_t k,
                         const std::vector<int>& slot, std::size_t order_cap) {
  const std::size_t free_count = static_cast<std::size_t>(*std::max_element(slot.begin(), slot.end()) + 1);
  checked_power(r.order(), free_count, order_cap, label);
  std::vector<Key> keys;
  for (const Key& vars : enumerate_tuples(r.order(), free_count)) {
    Key m(k * k, r.zero());
    for (std::size_t p = 0; p < k * k; ++p) {
      if (slot[p] >= 0) m[p] = vars[static_cast<std::size_t>(slot[p])];
    }
    keys.push_back(std::move(m));
  }
  return build_from_keys(
      std::move(label), keys, [&](const Key& a, const Key& b) { return matrix_add(r, a, b); },
      [&](const Key& a, const Key& b) { return matrix_mul(r, a, b, k); }, Key(k * k, r.zero()),
      identity_matrix(r, k), [&](const Key& m) { return matrix_name(r, m, k); });
}

void require_dimension(std::size_t k, std::size_t min, const char* what) {
  if (k < min) {
    throw RingError(ErrorKind::InvalidArgument,
                    std::string(what) + " needs k >= " + std::to_string(min));
  }
}

}  // namespace

// ---------------------------------------------------------------------------

FiniteRing zmod(std::size_t n) {
  if (n == 0) throw RingError(ErrorKind::InvalidArgument, "zmod needs n >= 1");
  require_order(n, kMaxOrder, "zmod");
  RingTables t;
  t.label = "zmod:" + std::to_string(n);
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t.add[i * n + j] = static_cast<Index>((i + j) % n);
      t.mul[i * n + j] = static_cast<Index>((i * j) % n);
    }
  t.zero = 0;
  t.one = static_cast<Index>(1 % n);
  return finish(std::move(t));
}

FiniteRing gf(std::size_t q) {
  const std::string label = "gf:" + std::to_string(q);
  switch (q) {
    case 2:
    case 3:
    case 5:
    case 7:
      return zmod(q).relabeled(label);
    case 4: return poly_quotient(label, 2, {1, 1}, 't');     // t^2 + t + 1
    case 8: return poly_quotient(label, 2, {1, 1, 0}, 't');  // t^3 + t + 1
    case 9: return poly_quotient(label, 3, {1, 0}, 't');     // t^2 + 1
    default:
      throw RingError(ErrorKind::UnsupportedFieldOrder, "no GF(" + std::to_string(q) + ")");
  }
}

FiniteRing zn_alpha(std::size_t n) {
  if (n < 2) throw RingError(ErrorKind::InvalidArgument, "zn-alpha needs n >= 2");
  checked_power(n, 2, kMaxOrder, "zn-alpha");
  return poly_quotient("zn-alpha:" + std::to_string(n), n, {1, 1}, 'a');
}

FiniteRing product(const FiniteRing& r, const FiniteRing& s, std::size_t order_cap) {
  const std::string label = "product:" + r.label() + "," + s.label();
  require_order(r.order() * s.order(), order_cap, label);
  std::vector<Key> keys;
  for (Index a = 0; a < r.order(); ++a)
    for (Index b = 0; b < s.order(); ++b) keys.push_back({a, b});
  return build_from_keys(
      label, keys, [&](const Key& x, const Key& y) { return Key{r.add(x[0], y[0]), s.add(x[1], y[1])}; },
      [&](const Key& x, const Key& y) { return Key{r.mul(x[0], y[0]), s.mul(x[1], y[1])}; },
      Key{r.zero(), s.zero()}, Key{r.one(), s.one()},
      [&](const Key& x) { return "(" + r.name(x[0]) + "," + s.name(x[1]) + ")"; });
}

FiniteRing matrix_ring(const FiniteRing& r, std::size_t k, std::size_t order_cap) {
  require_dimension(k, 1, "matrix_ring");
  std::vector<int> slot(k * k);
  for (std::size_t p = 0; p < k * k; ++p) slot[p] = static_cast<int>(p);
  return matrix_family("matrix:" + r.label() + ":" + std::to_string(k), r, k, slot, order_cap);
}

FiniteRing upper_triangular(const FiniteRing& r, std::size_t k, std::size_t order_cap) {
  require_dimension(k, 1, "upper_triangular");
  std::vector<int> slot(k * k, -1);
  int next = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) slot[i * k + j] = next++;
  return matrix_family("tri:" + r.label() + ":" + std::to_string(k), r, k, slot, order_cap);
}

FiniteRing equal_diagonal_subring(const FiniteRing& r, std::size_t k, std::size_t order_cap) {
  require_dimension(k, 2, "equal_diagonal_subring");
  std::vector<int> slot(k * k, -1);
  int next = 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) slot[i * k + j] = (i == j) ? 0 : next++;
  return matrix_family("eqdiag:" + r.label() + ":" + std::to_string(k), r, k, slot, order_cap);
}

FiniteRing corner(const FiniteRing& r, Index e) {
  if (e >= r.order() || r.mul(e, e) != e) {
    throw RingError(ErrorKind::NotIdempotent, "corner needs an idempotent, got " + std::to_string(e));
  }
  std::set<Index> elements;
  for (Index x = 0; x < r.order(); ++x) elements.insert(r.mul(r.mul(e, x), e));
  std::vector<Key> keys;
  for (Index x : elements) keys.push_back({x});
  return build_from_keys(
      "corner:" + r.label() + ":" + std::to_string(e), keys,
      [&](const Key& a, const Key& b) { return Key{r.add(a[0], b[0])}; },
      [&](const Key& a, const Key& b) { return Key{r.mul(a[0], b[0])}; }, Key{r.zero()}, Key{e},
      [&](const Key& a) { return r.name(a[0]); });
}

FiniteRing quotient(const FiniteRing& r, const Ideal& ideal) {
  if (auto why = ideal_violation(r, ideal.members())) {
    throw RingError(ErrorKind::NotAnIdeal, *why);
  }
  const std::size_t n = r.order();
  std::vector<Index> rep(n);
  for (Index x = 0; x < n; ++x) {
    Index best = x;
    for (Index p : ideal.members()) best = std::min(best, r.add(x, p));
    rep[x] = best;
  }
  std::vector<Index> reps(rep.begin(), rep.end());
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::vector<Key> keys;
  for (Index x : reps) keys.push_back({x});
  return build_from_keys(
      "quotient:" + r.label(), keys,
      [&](const Key& a, const Key& b) { return Key{rep[r.add(a[0], b[0])]}; },
      [&](const Key& a, const Key& b) { return Key{rep[r.mul(a[0], b[0])]}; }, Key{rep[r.zero()]},
      Key{rep[r.one()]}, [&](const Key& a) { return r.name(a[0]) + "+I"; });
}

FiniteRing quotient(const FiniteRing& r, std::span<const Index> members) {
  return quotient(r, Ideal::verified(r, std::vector<Index>(members.begin(), members.end())));
}

// ---------------------------------------------------------------------------
// Ideal extensions

std::optional<std::string> bimodule_violation(const BimoduleSpec& spec) {
  const FiniteRing& r = spec.base;
  const PseudoRing& s = spec.module;
  const std::size_t nr = r.order();
  const std::size_t ns = s.order;
  if (ns == 0 || s.add.size() != ns * ns || s.mul.size() != ns * ns || s.zero >= ns) {
    return "pseudo-ring tables malformed";
  }
  if (spec.left_action.size() != nr * ns || spec.right_action.size() != ns * nr) {
    return "action tables malformed";
  }
  for (Index v : s.add) if (v >= ns) return "pseudo-ring entry out of range";
  for (Index v : s.mul) if (v >= ns) return "pseudo-ring entry out of range";
  for (Index v : spec.left_action) if (v >= ns) return "left action entry out of range";
  for (Index v : spec.right_action) if (v >= ns) return "right action entry out of range";

  const auto w = [](auto... xs) {
    std::string out = "(";
    bool first = true;
    ((out += (first ? "" : ",") + std::to_string(xs), first = false), ...);
    return out + ")";
  };
  for (Index a = 0; a < ns; ++a) {
    if (s.plus(a, s.zero) != a) return "S: zero is not additive identity at " + w(a);
    bool inverse = false;
    for (Index b = 0; b < ns; ++b) {
      if (s.plus(a, b) != s.plus(b, a)) return "S: addition not commutative at " + w(a, b);
      inverse = inverse || s.plus(a, b) == s.zero;
      for (Index c = 0; c < ns; ++c) {
        if (s.plus(s.plus(a, b), c) != s.plus(a, s.plus(b, c))) return "S: addition not associative at " + w(a, b, c);
        if (s.times(s.times(a, b), c) != s.times(a, s.times(b, c))) return "S: product not associative at " + w(a, b, c);
        if (s.times(a, s.plus(b, c)) != s.plus(s.times(a, b), s.times(a, c)) ||
            s.times(s.plus(b, c), a) != s.plus(s.times(b, a), s.times(c, a))) {
          return "S: not distributive at " + w(a, b, c);
        }
      }
    }
    if (!inverse) return "S: no additive inverse for " + w(a);
  }
  for (Index x = 0; x < nr; ++x) {
    for (Index y = 0; y < nr; ++y) {
      for (Index a = 0; a < ns; ++a) {
        if (spec.act_left(r.add(x, y), a) != s.plus(spec.act_left(x, a), spec.act_left(y, a)) ||
            spec.act_right(a, r.add(x, y)) != s.plus(spec.act_right(a, x), spec.act_right(a, y))) {
          return "action not additive in R at " + w(x, y, a);
        }
        if (spec.act_left(r.mul(x, y), a) != spec.act_left(x, spec.act_left(y, a)) ||
            spec.act_right(a, r.mul(x, y)) != spec.act_right(spec.act_right(a, x), y) ||
            spec.act_right(spec.act_left(x, a), y) != spec.act_left(x, spec.act_right(a, y))) {
          return "not an R-R-bimodule at " + w(x, y, a);
        }
      }
    }
    for (Index a = 0; a < ns; ++a) {
      for (Index b = 0; b < ns; ++b) {
        if (spec.act_left(x, s.plus(a, b)) != s.plus(spec.act_left(x, a), spec.act_left(x, b)) ||
            spec.act_right(s.plus(a, b), x) != s.plus(spec.act_right(a, x), spec.act_right(b, x))) {
          return "action not additive in S at " + w(x, a, b);
        }
        if (spec.act_right(s.times(a, b), x) != s.times(a, spec.act_right(b, x))) {
          return "(s1 s2) r != s1 (s2 r) at " + w(a, b, x);
        }
        if (spec.act_left(x, s.times(a, b)) != s.times(spec.act_left(x, a), b)) {
          return "r (s1 s2) != (r s1) s2 at " + w(x, a, b);
        }
        if (s.times(spec.act_right(a, x), b) != s.times(a, spec.act_left(x, b))) {
          return "(s1 r) s2 != s1 (r s2) at " + w(a, x, b);
        }
      }
    }
  }
  return std::nullopt;
}

FiniteRing ideal_extension(const BimoduleSpec& spec, std::size_t order_cap) {
  if (auto why = bimodule_violation(spec)) {
    throw RingError(ErrorKind::BimoduleLawViolation, spec.label + ": " + *why);
  }
  const FiniteRing& r = spec.base;
  const PseudoRing& s = spec.module;
  for (Index a = 0; a < s.order; ++a) {
    if (spec.act_left(r.one(), a) != a || spec.act_right(a, r.one()) != a) {
      throw RingError(ErrorKind::BimoduleLawViolation,
                      spec.label + ": identity of R does not act as identity on S");
    }
  }
  const std::string label = spec.label.empty() ? "ideal-ext:" + r.label() : spec.label;
  require_order(r.order() * s.order, order_cap, label);
  std::vector<Key> keys;
  for (Index a = 0; a < r.order(); ++a)
    for (Index b = 0; b < s.order; ++b) keys.push_back({a, b});
  const auto name_of = [&](Index b) { return s.names.empty() ? std::to_string(b) : s.names[b]; };
  return build_from_keys(
      label, keys,
      [&](const Key& x, const Key& y) { return Key{r.add(x[0], y[0]), s.plus(x[1], y[1])}; },
      [&](const Key& x, const Key& y) {
        const Index ss = s.times(x[1], y[1]);
        const Index rs = spec.act_left(x[0], y[1]);
        const Index sr = spec.act_right(x[1], y[0]);
        return Key{r.mul(x[0], y[0]), s.plus(s.plus(ss, rs), sr)};
      },
      Key{r.zero(), s.zero}, Key{r.one(), s.zero},
      [&](const Key& x) { return "(" + r.name(x[0]) + "," + name_of(x[1]) + ")"; });
}

BimoduleSpec strict_upper_bimodule(const FiniteRing& r, std::size_t k) {
  require_dimension(k, 2, "strict_upper_bimodule");
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) positions.push_back(i * k + j);
  const std::size_t ns = checked_power(r.order(), positions.size(), kMaxOrder, "strict upper module");

  std::vector<Key> mats;
  std::map<Key, Index> index;
  for (const Key& vars : enumerate_tuples(r.order(), positions.size())) {
    Key m(k * k, r.zero());
    for (std::size_t p = 0; p < positions.size(); ++p) m[positions[p]] = vars[p];
    index.emplace(m, static_cast<Index>(mats.size()));
    mats.push_back(std::move(m));
  }
  PseudoRing s;
  s.order = ns;
  s.zero = 0;
  s.add.resize(ns * ns);
  s.mul.resize(ns * ns);
  for (std::size_t a = 0; a < ns; ++a) {
    s.names.push_back(matrix_name(r, mats[a], k));
    for (std::size_t b = 0; b < ns; ++b) {
      s.add[a * ns + b] = index.at(matrix_add(r, mats[a], mats[b]));
      s.mul[a * ns + b] = index.at(matrix_mul(r, mats[a], mats[b], k));
    }
  }
  BimoduleSpec spec{r, std::move(s), {}, {}, "ideal-ext:" + r.label() + ":" + std::to_string(k)};
  spec.left_action.resize(r.order() * ns);
  spec.right_action.resize(ns * r.order());
  for (Index x = 0; x < r.order(); ++x) {
    for (std::size_t a = 0; a < ns; ++a) {
      Key left = mats[a];
      Key right = mats[a];
      for (std::size_t p = 0; p < k * k; ++p) {
        left[p] = r.mul(x, mats[a][p]);
        right[p] = r.mul(mats[a][p], x);
      }
      spec.left_action[x * ns + a] = index.at(left);
      spec.right_action[a * r.order() + x] = index.at(right);
    }
  }
  return spec;
}

BimoduleSpec zero_bimodule(const FiniteRing& r) {
  PseudoRing s{1, {0}, {0}, 0, {"0"}};
  return BimoduleSpec{r, std::move(s), std::vector<Index>(r.order(), 0),
                      std::vector<Index>(r.order(), 0), "ideal-ext:" + r.label() + ":zero"};
}

FiniteRing gf4_frobenius_example() {
  const FiniteRing f = gf(4);
  const auto frob = [&](Index x) { return f.mul(x, x); };
  const auto embed = [&](const Key& xyz) {
    const Index x = xyz[0], y = xyz[1], z = xyz[2], o = f.zero();
    return Key{x, y, z, o, frob(x), o, o, o, x};
  };
  std::vector<Key> keys = enumerate_tuples(f.order(), 3);
  const auto project = [&](const Key& m) {
    const Key xyz{m[0], m[1], m[2]};
    if (embed(xyz) != m) {
      throw RingError(ErrorKind::ClosureViolation, "gf4 example: product left the matrix family");
    }
    return xyz;
  };
  return build_from_keys(
      "paper:gf4-example", keys,
      [&](const Key& a, const Key& b) { return project(matrix_add(f, embed(a), embed(b))); },
      [&](const Key& a, const Key& b) { return project(matrix_mul(f, embed(a), embed(b), 3)); },
      Key{0, 0, 0}, Key{f.one(), 0, 0},
      [&](const Key& a) { return matrix_name(f, embed(a), 3); });
}

// ---------------------------------------------------------------------------
// Source expressions

namespace {

[[noreturn]] void parse_fail(const std::string& source, const std::string& why) {
  throw RingError(ErrorKind::ParseError, "ring source '" + source + "': " + why);
}

std::size_t parse_count(const std::string& text, const std::string& source) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) parse_fail(source, "expected an integer, got '" + text + "'");
  return value;
}

std::string strip_parens(std::string s) {
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool wraps = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
      if (depth == 0 && i + 1 < s.size()) {
        wraps = false;
        break;
      }
    }
    if (!wraps) break;
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

// Position of the last (or first) delimiter outside parentheses.
std::size_t find_top_level(const std::string& s, char delim, bool last) {
  int depth = 0;
  std::size_t found = std::string::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (depth == 0 && s[i] == delim) {
      found = i;
      if (!last) break;
    }
  }
  return found;
}

}  // namespace

FiniteRing ring_from_source(const std::string& raw, std::size_t order_cap) {
  const std::string source = strip_parens(raw);
  if (source == "paper:gf4-example") return gf4_frobenius_example();
  if (source.rfind("file:", 0) == 0) return load_ring_file(source.substr(5));

  std::size_t colon = source.find(':');
  std::string head = source.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : source.substr(colon + 1);
  if (colon == std::string::npos) {
    // shorthand: zmod2, gf4
    const auto digit = head.find_first_of("0123456789");
    if (digit == std::string::npos || digit == 0) parse_fail(source, "unknown ring source");
    rest = head.substr(digit);
    head = head.substr(0, digit);
  }

  const auto with_dimension = [&](auto&& build) {
    const std::size_t split = find_top_level(rest, ':', true);
    if (split == std::string::npos) parse_fail(source, "expected <src>:<k>");
    const FiniteRing inner = ring_from_source(rest.substr(0, split), order_cap);
    return build(inner, parse_count(rest.substr(split + 1), source));
  };

  FiniteRing ring = [&]() -> FiniteRing {
    if (head == "zmod") return zmod(parse_count(rest, source));
    if (head == "gf") return gf(parse_count(rest, source));
    if (head == "zn-alpha") return zn_alpha(parse_count(rest, source));
    if (head == "matrix") {
      return with_dimension([&](const FiniteRing& r, std::size_t k) { return matrix_ring(r, k, order_cap); });
    }
    if (head == "tri") {
      return with_dimension([&](const FiniteRing& r, std::size_t k) { return upper_triangular(r, k, order_cap); });
    }
    if (head == "eqdiag") {
      return with_dimension([&](const FiniteRing& r, std::size_t k) { return equal_diagonal_subring(r, k, order_cap); });
    }
    if (head == "corner") {
      return with_dimension([&](const FiniteRing& r, std::size_t e) { return corner(r, static_cast<Index>(e)); });
    }
    if (head == "ideal-ext") {
      return with_dimension([&](const FiniteRing& r, std::size_t k) {
        return ideal_extension(strict_upper_bimodule(r, k), order_cap);
      });
    }
    if (head == "jquot") {
      const FiniteRing inner = ring_from_source(rest, order_cap);
      return quotient(inner, jacobson_radical(inner));
    }
    if (head == "product") {
      const std::size_t comma = find_top_level(rest, ',', false);
      if (comma == std::string::npos) parse_fail(source, "expected product:<src>,<src>");
      const FiniteRing a = ring_from_source(rest.substr(0, comma), order_cap);
      const FiniteRing b = ring_from_source(rest.substr(comma + 1), order_cap);
      return product(a, b, order_cap);
    }
    parse_fail(source, "unknown constructor '" + head + "'");
  }();
  require_order(ring.order(), order_cap, source);
  return ring.relabeled(raw);
}

// ---------------------------------------------------------------------------
// Catalog

std::vector<RingCatalogEntry> default_catalog(CatalogOptions options) {
  std::vector<std::string> sources;
  for (int n = 1; n <= 16; ++n) sources.push_back("zmod:" + std::to_string(n));
  sources.push_back("zmod:27");
  sources.push_back("zmod:32");
  for (int q : {2, 3, 4, 5, 7, 8, 9}) sources.push_back("gf:" + std::to_string(q));
  for (const char* s : {"product:zmod:2,zmod:2", "product:zmod:2,zmod:3", "product:zmod:2,zmod:4",
                        "product:zmod:3,zmod:3", "product:zmod:2,gf:4", "product:zmod:4,zmod:4",
                        "product:zmod:2,zmod:8", "product:zmod:3,zmod:4", "product:zmod:3,zmod:9",
                        "product:zmod:4,zmod:9", "product:zmod:6,zmod:6", "product:gf:4,gf:4",
                        "product:zmod:2,tri:zmod:2:2", "product:zmod:2,matrix:zmod:2:2",
                        "product:zmod:3,eqdiag:zmod:2:2"}) {
    sources.push_back(s);
  }
  for (const char* s : {"matrix:zmod:2:2", "matrix:zmod:3:2", "tri:zmod:2:2", "tri:zmod:3:2",
                        "tri:zmod:4:2", "eqdiag:zmod:2:2", "eqdiag:zmod:2:3", "eqdiag:zmod:3:2",
                        "eqdiag:gf:4:2", "zn-alpha:2", "zn-alpha:3", "zn-alpha:4", "ideal-ext:zmod:2:2",
                        "ideal-ext:zmod:3:2", "paper:gf4-example"}) {
    sources.push_back(s);
  }

  const std::map<std::string, std::vector<Expectation>> expectations = {
      {"zmod:3", {{"uniquely_clean", false, "literature"}, {"uniquely_pi_clean", true, "literature"}}},
      {"zmod:4", {{"uniquely_clean", true, "derived"}}},
      {"matrix:zmod:2:2", {{"uniquely_pi_clean", false, "derived"}, {"abelian", false, "derived"}}},
      {"zn-alpha:3", {{"uniquely_pi_clean", true, "literature"}}},
      {"eqdiag:zmod:3:2", {{"uniquely_pi_clean", true, "literature"}}},
      {"ideal-ext:zmod:2:2", {{"uniquely_pi_clean", true, "literature"}}},
      {"paper:gf4-example",
       {{"uniquely_pi_clean", true, "literature"}, {"commutative", false, "literature"},
        {"generalized_7_like", true, "literature"}}},
  };

  std::vector<RingCatalogEntry> catalog;
  std::set<std::pair<std::vector<Index>, std::vector<Index>>> seen;
  const auto admit = [&](FiniteRing ring, const std::string& provenance, bool dedupe) {
    if (ring.order() > options.order_cap) return;
    auto key = std::make_pair(std::vector<Index>(ring.add_table().begin(), ring.add_table().end()),
                              std::vector<Index>(ring.mul_table().begin(), ring.mul_table().end()));
    const bool fresh = seen.insert(std::move(key)).second;
    if (dedupe && !fresh) return;
    RingCatalogEntry entry{std::move(ring), provenance, {}};
    if (auto it = expectations.find(provenance); it != expectations.end()) entry.expected = it->second;
    catalog.push_back(std::move(entry));
  };

  for (const auto& source : sources) admit(ring_from_source(source), source, false);
  if (options.include_derived) {
    const std::size_t base_count = catalog.size();
    for (std::size_t i = 0; i < base_count; ++i) {
      const FiniteRing base = catalog[i].ring;
      const std::string src = catalog[i].provenance;
      const Ideal j = jacobson_radical(base);
      if (j.size() > 1 && j.is_proper(base)) {
        const std::string provenance = "jquot:" + src;
        admit(quotient(base, j).relabeled(provenance), provenance, true);
      }
      for (Index e : idempotents(base).members) {
        if (e == base.zero() || e == base.one()) continue;
        const std::string provenance = "corner:" + src + ":" + std::to_string(e);
        admit(corner(base, e).relabeled(provenance), provenance, true);
      }
    }
  }
  return catalog;
}

}  // namespace ringlab
