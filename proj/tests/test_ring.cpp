#include <gtest/gtest.h>

#include "ringlab/constructors.hpp"
#include "support.hpp"

using namespace ringlab;

namespace {

RingViolation violation_of(RingTables t) {
  auto result = validate_ring(std::move(t));
  EXPECT_TRUE(std::holds_alternative<RingViolation>(result));
  return std::get<RingViolation>(result);
}

}  // namespace

TEST(Validate, AcceptsModularArithmetic) {
  auto result = validate_ring(tables_of(oracle::zmod(4)));
  ASSERT_TRUE(std::holds_alternative<FiniteRing>(result));
  EXPECT_EQ(std::get<FiniteRing>(result).order(), 4u);
}

TEST(Validate, ZeroRingIsValid) {
  const FiniteRing r = make_ring(tables_of(oracle::zmod(1)));
  EXPECT_EQ(r.order(), 1u);
  EXPECT_EQ(r.zero(), r.one());
}

TEST(Validate, CorruptedZ6ProductIsRejectedWithWitness) {
  auto t = tables_of(oracle::zmod(6));
  t.mul[2 * 6 + 3] = 1;
  const RingViolation v = violation_of(t);
  EXPECT_TRUE(v.axiom == Axiom::NotDistributive || v.axiom == Axiom::NonAssociativeMul) << v.describe();
  EXPECT_EQ(v.witness.size(), 3u);
  // The reported triple really breaks the named law.
  const auto& w = v.witness;
  auto add = [&](Index a, Index b) { return t.add[a * 6 + b]; };
  auto mul = [&](Index a, Index b) { return t.mul[a * 6 + b]; };
  if (v.axiom == Axiom::NonAssociativeMul) {
    EXPECT_NE(mul(mul(w[0], w[1]), w[2]), mul(w[0], mul(w[1], w[2])));
  } else {
    const bool left = mul(w[0], add(w[1], w[2])) != add(mul(w[0], w[1]), mul(w[0], w[2]));
    const bool right = mul(add(w[0], w[1]), w[2]) != add(mul(w[0], w[2]), mul(w[1], w[2]));
    EXPECT_TRUE(left || right);
  }
}

TEST(Validate, ReportsEachAxiomFamily) {
  auto bad_range = tables_of(oracle::zmod(3));
  bad_range.add[4] = 7;
  EXPECT_EQ(violation_of(bad_range).axiom, Axiom::MalformedTables);

  auto short_table = tables_of(oracle::zmod(3));
  short_table.mul.pop_back();
  EXPECT_EQ(violation_of(short_table).axiom, Axiom::MalformedTables);

  auto not_group = tables_of(oracle::zmod(3));
  not_group.add[1 * 3 + 2] = 1;  // 1 + 2 = 1 breaks commutativity against 2 + 1 = 0
  EXPECT_EQ(violation_of(not_group).axiom, Axiom::NotAbelianGroupUnderAdd);

  auto no_one = tables_of(oracle::zmod(3));
  no_one.one = 2;
  EXPECT_EQ(violation_of(no_one).axiom, Axiom::NoIdentity);

  auto same = tables_of(oracle::zmod(3));
  same.one = 0;
  EXPECT_EQ(violation_of(same).axiom, Axiom::NoIdentity);
}

TEST(Validate, NonAssociativeMultiplicationIsNamed) {
  // Z/2-algebra on {1, x, y} with x*y = x and every other basis product of x, y zero.
  // Bilinear and unital, but (x*y)*y = x while x*(y*y) = 0.
  oracle::Raw r{8, std::vector<Index>(64), std::vector<Index>(64), 0, 1};
  for (Index a = 0; a < 8; ++a)
    for (Index b = 0; b < 8; ++b) {
      const Index a1 = a & 1, ax = (a >> 1) & 1, ay = (a >> 2) & 1;
      const Index b1 = b & 1, bx = (b >> 1) & 1, by = (b >> 2) & 1;
      r.add[a * 8 + b] = a ^ b;
      const Index c1 = a1 & b1;
      const Index cx = (a1 & bx) ^ (ax & b1) ^ (ax & by);
      const Index cy = (a1 & by) ^ (ay & b1);
      r.mul[a * 8 + b] = c1 | (cx << 1) | (cy << 2);
    }
  ASSERT_FALSE(oracle::is_ring(r));
  const RingViolation v = violation_of(tables_of(r));
  EXPECT_EQ(v.axiom, Axiom::NonAssociativeMul) << v.describe();
  const auto& w = v.witness;
  EXPECT_NE(r.times(r.times(w[0], w[1]), w[2]), r.times(w[0], r.times(w[1], w[2])));
}

TEST(Validate, NormalizesZeroAndOneToFront) {
  // Z/3 with elements listed as {1, 2, 0}: index i stands for residue (i + 1) % 3.
  oracle::Raw r{3, std::vector<Index>(9), std::vector<Index>(9), 2, 0};
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) {
      const Index a = (i + 1) % 3, b = (j + 1) % 3;
      r.add[i * 3 + j] = ((a + b) % 3 + 2) % 3;
      r.mul[i * 3 + j] = ((a * b) % 3 + 2) % 3;
    }
  const FiniteRing ring = make_ring(tables_of(r));
  EXPECT_EQ(ring.zero(), 0u);
  EXPECT_EQ(ring.one(), 1u);
  EXPECT_EQ(ring, zmod(3));
}

TEST(Validate, OrderCapIsEnforced) {
  RingTables t;
  t.order = kMaxOrder + 1;
  try {
    validate_ring(t);
    FAIL() << "expected OrderCapExceeded";
  } catch (const RingError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderCapExceeded);
  }
}

TEST(Arithmetic, TableLookups) {
  const FiniteRing z6 = zmod(6), z4 = zmod(4), z3 = zmod(3);
  EXPECT_EQ(z6.mul(2, 3), 0u);
  EXPECT_EQ(z4.pow(3, 2), 1u);
  EXPECT_EQ(z3.pow(2, 2), 1u);
  EXPECT_EQ(z6.neg(2), 4u);
  EXPECT_EQ(z6.sub(1, 3), 4u);
  EXPECT_EQ(z4.pow(3, 1), 3u);
}

TEST(Arithmetic, ElemHandles) {
  const FiniteRing z6 = zmod(6);
  const Elem two(z6, 2), three(z6, 3);
  EXPECT_EQ(mul(two, three).index(), 0u);
  EXPECT_EQ(add(two, three).index(), 5u);
  EXPECT_EQ(neg(two).index(), 4u);
  EXPECT_EQ(pow(two, 3).index(), 2u);
}

TEST(Arithmetic, MixingRingsThrows) {
  const FiniteRing a = zmod(6), b = zmod(6);
  try {
    add(Elem(a, 1), Elem(b, 1));
    FAIL() << "expected RingMismatch";
  } catch (const RingError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RingMismatch);
  }
  EXPECT_THROW(Elem(a, 6), RingError);
}

TEST(PowerTrail, SpecExamples) {
  const auto z6_two = power_trail(zmod(6), 2);
  EXPECT_EQ(z6_two.powers, (std::vector<Index>{2, 4}));
  EXPECT_EQ(z6_two.cycle_start, 0u);
  EXPECT_TRUE(z6_two.is_potent());

  const auto z4_two = power_trail(zmod(4), 2);
  EXPECT_EQ(z4_two.powers, (std::vector<Index>{2, 0}));
  EXPECT_EQ(z4_two.cycle_start, 1u);
  EXPECT_FALSE(z4_two.is_potent());
  EXPECT_EQ(z4_two.period_witness(), (std::pair<std::size_t, std::size_t>{2, 3}));

  for (const auto& r : {zmod(5), matrix_ring(zmod(2), 2)}) {
    const auto one = power_trail(r, r.one());
    EXPECT_EQ(one.powers, (std::vector<Index>{r.one()}));
    EXPECT_EQ(one.cycle_start, 0u);
  }
}
