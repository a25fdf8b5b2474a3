#pragma once

#include "oracle.hpp"
#include "ringlab/ring.hpp"

inline oracle::Raw raw(const ringlab::FiniteRing& r) {
  oracle::Raw out;
  out.n = r.order();
  out.add.assign(r.add_table().begin(), r.add_table().end());
  out.mul.assign(r.mul_table().begin(), r.mul_table().end());
  out.zero = r.zero();
  out.one = r.one();
  return out;
}

inline ringlab::RingTables tables_of(const oracle::Raw& r, std::string label = "raw") {
  return {std::move(label), r.n, r.add, r.mul, r.zero, r.one, {}};
}
