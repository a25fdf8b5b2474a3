#include "ringlab/ring.hpp"

#include <sstream>

namespace ringlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::LatticeCapExceeded: return "LatticeCapExceeded";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotProperIdeal: return "NotProperIdeal";
    case ErrorKind::BimoduleLawViolation: return "BimoduleLawViolation";
    case ErrorKind::ClosureViolation: return "ClosureViolation";
    case ErrorKind::UnsupportedFieldOrder: return "UnsupportedFieldOrder";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::MalformedTables: return "MalformedTables";
    case Axiom::NotAbelianGroupUnderAdd: return "NotAbelianGroupUnderAdd";
    case Axiom::NoIdentity: return "NoIdentity";
    case Axiom::NonAssociativeMul: return "NonAssociativeMul";
    case Axiom::NotDistributive: return "NotDistributive";
  }
  return "Unknown";
}

std::string RingViolation::describe() const {
  std::ostringstream out;
  out << to_string(axiom);
  if (!witness.empty()) {
    out << " witness=(";
    for (std::size_t i = 0; i < witness.size(); ++i) out << (i ? "," : "") << witness[i];
    out << ")";
  }
  if (!detail.empty()) out << ": " << detail;
  return out.str();
}

namespace {

std::optional<RingViolation> check_shape(const RingTables& t) {
  const std::size_t n = t.order;
  auto bad = [](std::string detail) {
    return RingViolation{Axiom::MalformedTables, {}, std::move(detail)};
  };
  if (n == 0) return bad("order must be positive");
  if (t.add.size() != n * n || t.mul.size() != n * n) return bad("tables must be n x n");
  if (t.zero >= n || t.one >= n) return bad("zero/one index out of range");
  for (std::size_t i = 0; i < n * n; ++i) {
    if (t.add[i] >= n || t.mul[i] >= n) {
      return bad("table entry out of range at (" + std::to_string(i / n) + "," +
                 std::to_string(i % n) + ")");
    }
  }
  if (!t.names.empty() && t.names.size() != n) return bad("names must list every element");
  return std::nullopt;
}

std::optional<RingViolation> check_axioms(const RingTables& t) {
  const std::size_t n = t.order;
  const auto add = [&](Index a, Index b) { return t.add[a * n + b]; };
  const auto mul = [&](Index a, Index b) { return t.mul[a * n + b]; };
  const Index N = static_cast<Index>(n);

  for (Index a = 0; a < N; ++a) {
    if (add(a, t.zero) != a || add(t.zero, a) != a) {
      return RingViolation{Axiom::NotAbelianGroupUnderAdd, {a}, "zero is not an additive identity"};
    }
  }
  for (Index a = 0; a < N; ++a) {
    bool has_inverse = false;
    for (Index b = 0; b < N; ++b) {
      if (add(a, b) != add(b, a)) {
        return RingViolation{Axiom::NotAbelianGroupUnderAdd, {a, b}, "addition not commutative"};
      }
      has_inverse = has_inverse || add(a, b) == t.zero;
    }
    if (!has_inverse) {
      return RingViolation{Axiom::NotAbelianGroupUnderAdd, {a}, "no additive inverse"};
    }
  }
  for (Index a = 0; a < N; ++a)
    for (Index b = 0; b < N; ++b)
      for (Index c = 0; c < N; ++c)
        if (add(add(a, b), c) != add(a, add(b, c))) {
          return RingViolation{Axiom::NotAbelianGroupUnderAdd, {a, b, c}, "addition not associative"};
        }

  if (n > 1 && t.zero == t.one) {
    return RingViolation{Axiom::NoIdentity, {t.one}, "one equals zero in a nonzero ring"};
  }
  for (Index a = 0; a < N; ++a) {
    if (mul(t.one, a) != a || mul(a, t.one) != a) {
      return RingViolation{Axiom::NoIdentity, {a}, "one is not a two-sided identity"};
    }
  }

  for (Index a = 0; a < N; ++a)
    for (Index b = 0; b < N; ++b) {
      const Index ab = mul(a, b);
      for (Index c = 0; c < N; ++c)
        if (mul(ab, c) != mul(a, mul(b, c))) {
          return RingViolation{Axiom::NonAssociativeMul, {a, b, c}, "(ab)c != a(bc)"};
        }
    }

  for (Index a = 0; a < N; ++a)
    for (Index b = 0; b < N; ++b)
      for (Index c = 0; c < N; ++c) {
        const Index bc = add(b, c);
        if (mul(a, bc) != add(mul(a, b), mul(a, c))) {
          return RingViolation{Axiom::NotDistributive, {a, b, c}, "a(b+c) != ab+ac"};
        }
        if (mul(bc, a) != add(mul(b, a), mul(c, a))) {
          return RingViolation{Axiom::NotDistributive, {a, b, c}, "(b+c)a != ba+ca"};
        }
      }
  return std::nullopt;
}

}  // namespace

std::variant<FiniteRing, RingViolation> validate_ring(RingTables candidate) {
  if (candidate.order > kMaxOrder) {
    throw RingError(ErrorKind::OrderCapExceeded, "order " + std::to_string(candidate.order) +
                                                     " exceeds " + std::to_string(kMaxOrder));
  }
  if (auto v = check_shape(candidate)) return *v;
  if (auto v = check_axioms(candidate)) return *v;
  return normalize_unchecked(std::move(candidate));
}

FiniteRing normalize_unchecked(RingTables candidate) {
  if (auto v = check_shape(candidate)) {
    throw RingError(ErrorKind::ValidationFailed, v->describe());
  }
  const std::size_t n = candidate.order;
  // new index -> old index: zero, one, then the rest in original order
  std::vector<Index> to_old;
  to_old.reserve(n);
  to_old.push_back(candidate.zero);
  if (n > 1) to_old.push_back(candidate.one);
  for (Index x = 0; x < n; ++x) {
    if (x != candidate.zero && x != candidate.one) to_old.push_back(x);
  }
  std::vector<Index> to_new(n);
  for (Index i = 0; i < n; ++i) to_new[to_old[i]] = i;

  FiniteRing ring;
  ring.order_ = n;
  ring.label_ = std::move(candidate.label);
  ring.add_.resize(n * n);
  ring.mul_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t old = to_old[i] * n + to_old[j];
      ring.add_[i * n + j] = to_new[candidate.add[old]];
      ring.mul_[i * n + j] = to_new[candidate.mul[old]];
    }
  }
  ring.neg_.resize(n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (ring.add_[a * n + b] == 0) {
        ring.neg_[a] = b;
        break;
      }
    }
  }
  if (!candidate.names.empty()) {
    ring.names_.resize(n);
    for (std::size_t i = 0; i < n; ++i) ring.names_[i] = std::move(candidate.names[to_old[i]]);
  }
  return ring;
}

FiniteRing make_ring(RingTables candidate) {
  std::string label = candidate.label;
  auto result = validate_ring(std::move(candidate));
  if (auto* v = std::get_if<RingViolation>(&result)) {
    throw RingError(ErrorKind::ValidationFailed, label + ": " + v->describe());
  }
  return std::get<FiniteRing>(std::move(result));
}

Index FiniteRing::pow(Index x, std::uint64_t k) const {
  if (k == 0) throw RingError(ErrorKind::InvalidArgument, "pow exponent must be >= 1");
  Index result = x;
  Index base = x;
  --k;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    base = mul(base, base);
    k >>= 1u;
  }
  return result;
}

bool FiniteRing::is_commutative() const {
  for (Index a = 0; a < order_; ++a)
    for (Index b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string FiniteRing::name(Index x) const {
  return names_.empty() ? std::to_string(x) : names_[x];
}

std::optional<Index> FiniteRing::find(std::string_view name) const {
  for (Index x = 0; x < order_; ++x) {
    if (this->name(x) == name) return x;
  }
  return std::nullopt;
}

RingTables FiniteRing::tables() const {
  return RingTables{label_, order_, add_, mul_, zero(), one(), names_};
}

FiniteRing FiniteRing::relabeled(std::string label) const {
  FiniteRing copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

Elem::Elem(const FiniteRing& ring, Index index) : ring_(&ring), index_(index) {
  if (index >= ring.order()) {
    throw RingError(ErrorKind::InvalidArgument,
                    "element index " + std::to_string(index) + " out of range");
  }
}

namespace {
void require_same_ring(const Elem& x, const Elem& y) {
  if (&x.ring() != &y.ring()) {
    throw RingError(ErrorKind::RingMismatch, "operands belong to different rings");
  }
}
}  // namespace

Elem add(Elem x, Elem y) {
  require_same_ring(x, y);
  return Elem(x.ring(), x.ring().add(x.index(), y.index()));
}

Elem mul(Elem x, Elem y) {
  require_same_ring(x, y);
  return Elem(x.ring(), x.ring().mul(x.index(), y.index()));
}

Elem neg(Elem x) { return Elem(x.ring(), x.ring().neg(x.index())); }

Elem pow(Elem x, std::uint64_t k) { return Elem(x.ring(), x.ring().pow(x.index(), k)); }

PowerTrail power_trail(const FiniteRing& ring, Index x) {
  PowerTrail trail;
  trail.base = x;
  std::vector<std::int32_t> position(ring.order(), -1);
  Index current = x;
  while (position[current] < 0) {
    position[current] = static_cast<std::int32_t>(trail.powers.size());
    trail.powers.push_back(current);
    current = ring.mul(current, x);
  }
  trail.cycle_start = static_cast<std::size_t>(position[current]);
  return trail;
}

PowerTrail power_trail(Elem x) { return power_trail(x.ring(), x.index()); }

}  // namespace ringlab
