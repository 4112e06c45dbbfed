#pragma once

#include <array>
#include <cassert>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matpow/errors.hpp"
#include "matpow/mat2.hpp"
#include "matpow/poly.hpp"

namespace matpow {

/// Fibonacci values F_0 = 0, F_1 = 1, extended on demand.
class FibCache {
public:
  const Integer& at(long long n) {
    assert(n >= 0);
    while (static_cast<long long>(v_.size()) <= n)
      v_.push_back(v_[v_.size() - 1] + v_[v_.size() - 2]);
    return v_[static_cast<std::size_t>(n)];
  }

private:
  std::vector<Integer> v_{Integer(0), Integer(1)};
};

/// F_n for n >= -1; the backward extension F_{-1} = 1 keeps fixture entries
/// like F_{n-2} meaningful at n = 1. Cache is thread-local (worker-confined).
inline Integer fibonacci(long long n) {
  assert(n >= -1);
  if (n == -1) return Integer(1);
  thread_local FibCache cache;
  return cache.at(n);
}

/// L_1 = 1, L_2 = 3, L_{n+1} = L_n + L_{n-1}; computed by its own recurrence
/// so it stays independent of the Fibonacci path.
inline Integer lucas(long long n) {
  assert(n >= 1);
  thread_local std::vector<Integer> v{Integer(1), Integer(3)};
  while (static_cast<long long>(v.size()) < n)
    v.push_back(v[v.size() - 1] + v[v.size() - 2]);
  return v[static_cast<std::size_t>(n - 1)];
}

/// (x_n, y_n) of the Pell solution chain read off the power of
/// [[x1, m y1], [y1, x1]]; validates the starting pair.
inline std::pair<Integer, Integer> pell_pair(const Integer& m, const Integer& x1, const Integer& y1,
                                             long long n) {
  assert(n >= 1);
  if (x1 * x1 - m * y1 * y1 != Integer(1))
    throw precondition_error("pell starting pair must satisfy x1^2 - m*y1^2 = 1");
  Mat2<Integer> base{x1, m * y1, y1, x1};
  Mat2<Integer> p = pow_naive(base, n);
  return {p.a, p.c};
}

/// Brahmagupta polynomial pair (x_n, y_n) in variables x1, y1, t from powers
/// of [[x1, y1], [t y1, x1]].
inline std::pair<Poly<Integer>, Poly<Integer>> brahmagupta_pair(long long n) {
  assert(n >= 1);
  using P = Poly<Integer>;
  const P x1 = P::var("x1"), y1 = P::var("y1"), t = P::var("t");
  Mat2<P> base{x1, y1, t * y1, x1};
  Mat2<P> p = pow_naive(base, n);
  return {p.a, p.b};
}

/// Morgan-Voyce pair (B_n, b_n): B_n is the (1,1) entry of [[x+2, -1], [1, 0]]^n
/// and b_n = B_n - B_{n-1} (read from the (2,1) entry).
inline std::pair<Poly<Integer>, Poly<Integer>> morgan_voyce(long long n) {
  assert(n >= 1);
  using P = Poly<Integer>;
  Mat2<P> base{P::var("x") + P(2), P(-1), P(1), P(0)};
  Mat2<P> p = pow_naive(base, n);
  return {p.a, p.a - p.c};
}

/// (cos part, sin part / s) of [[c, s], [-s, c]]^n, reduced modulo
/// s^2 = 1 - c^2 so both components are polynomials in c alone.
inline std::pair<Poly<Integer>, Poly<Integer>> chebyshev_pair(long long n) {
  assert(n >= 1);
  using P = Poly<Integer>;
  const P c = P::var("c"), s = P::var("s");
  Mat2<P> base{c, s, P(0) - s, c};
  Mat2<P> p = pow_naive(base, n);
  P cos_part = p.a.reduce_sin_cos("s", "c");
  // (1,2) entry is s times a polynomial in c; divide out the single factor of s
  const P reduced_b = p.b.reduce_sin_cos("s", "c");
  P sin_ratio;
  for (const auto& [m, coeff] : reduced_b.terms()) {
    assert(m.exponent("s") == 1);
    sin_ratio += P::term(m.without("s"), coeff);
  }
  return {cos_part, sin_ratio};
}

struct SequenceFixture {
  std::string name;
  Mat2<Integer> base;
};

/// The four matrices whose n-th powers have printed closed forms.
inline const std::array<SequenceFixture, 4>& fixtures() {
  static const std::array<SequenceFixture, 4> fx = {{
      {"identity", {1, 0, 0, 1}},
      {"nilpotent-shift", {2, 1, -1, 0}},
      {"doubling", {3, 1, -2, 0}},
      {"fib-sign", {-2, -1, 1, 1}},
  }};
  return fx;
}

inline const Mat2<Integer>& fixture_matrix(std::string_view name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f.base;
  throw unknown_fixture(std::string(name));
}

/// Closed-form n-th power of a fixture matrix, built from the printed entry
/// formulas rather than matrix multiplication.
inline Mat2<Integer> fixture_power(std::string_view name, long long n) {
  assert(n >= 1);
  if (name == "identity") return Mat2<Integer>::identity();
  if (name == "nilpotent-shift") return {n + 1, n, -n, -n + 1};
  if (name == "doubling") {
    Integer p = int_pow(Integer(2), n);
    Integer p2 = p * Integer(2);
    return {p2 - Integer(1), p - Integer(1), -p2 + Integer(2), -p + Integer(2)};
  }
  if (name == "fib-sign") {
    Integer sign = (n % 2 == 0) ? Integer(1) : Integer(-1);
    return {sign * fibonacci(n + 2), sign * fibonacci(n),
            -(sign * fibonacci(n)), -(sign * fibonacci(n - 2))};
  }
  throw unknown_fixture(std::string(name));
}

}  // namespace matpow
