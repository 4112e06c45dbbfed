#pragma once

#include <cassert>

#include "matpow/integer.hpp"

namespace matpow {

/// Generalized binomial coefficient: 0 for k < 0, otherwise the falling
/// factorial a(a-1)...(a-k+1)/k!. The upper index may be negative or exceed
/// machine range; for 0 <= a < k the product hits zero. Total function, exact.
inline Integer binomial(const Integer& a, const Integer& k) {
  if (k.sign() < 0) return Integer(0);
  if (k.is_zero()) return Integer(1);
  if (a.sign() >= 0 && a < k) return Integer(0);
  assert(k.bit_length() <= 32);  // iteration count must stay sane
  const long long kk = k.to_long_long();
  Integer result(1);
  Integer factor = a;
  for (long long i = 1; i <= kk; ++i) {
    result *= factor;
    result /= Integer(i);  // exact: after this step result == C(a, i)
    factor -= Integer(1);
  }
  return result;
}

inline Integer binomial(long long a, long long k) { return binomial(Integer(a), Integer(k)); }

}  // namespace matpow
