#pragma once

#include <cassert>

#include "matpow/gaussian.hpp"
#include "matpow/integer.hpp"
#include "matpow/rational.hpp"

namespace matpow {

// one_like(x): multiplicative identity of x's ring, found by ADL. Matrix and
// polynomial rings add their own overloads next to their types.
inline Integer one_like(const Integer&) { return Integer(1); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline GaussianRational one_like(const GaussianRational&) { return GaussianRational(1); }

/// x^k by binary exponentiation, x^0 = one. Works for any ring with * and one_like.
template <typename R>
R int_pow(R base, long long k) {
  assert(k >= 0);
  R result = one_like(base);
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

// from_rational<R>: embed an exact rational into rings that admit halving.
template <typename R>
struct ring_cast_impl;

template <>
struct ring_cast_impl<Rational> {
  static Rational from_rational(const Rational& q) { return q; }
};

template <>
struct ring_cast_impl<GaussianRational> {
  static GaussianRational from_rational(const Rational& q) { return GaussianRational(q); }
};

template <typename R>
R from_rational(const Rational& q) {
  return ring_cast_impl<R>::from_rational(q);
}

}  // namespace matpow
