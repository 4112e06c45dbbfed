#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "matpow/binomial.hpp"
#include "matpow/mat2.hpp"
#include "matpow/ring.hpp"

namespace matpow {

/// y_n = sum_{i=0}^{floor(n/2)} C(n-i, i) T^(n-2i) (-D)^i, the trace/determinant
/// sequence behind the explicit power formula. y_0 = 1, y_1 = T.
template <typename R>
R y_explicit(const R& T, const R& D, long long n) {
  assert(n >= 0);
  R acc = R(0);
  const R minus_d = R(0) - D;
  for (long long i = 0; 2 * i <= n; ++i)
    acc = acc + R(binomial(n - i, i)) * int_pow(T, n - 2 * i) * int_pow(minus_d, i);
  return acc;
}

/// Same sequence by its three-term recurrence y_{k+1} = T y_k - D y_{k-1}.
template <typename R>
R y_recurrence(const R& T, const R& D, long long n) {
  assert(n >= 0);
  R prev = R(1);  // y_0
  if (n == 0) return prev;
  R cur = T;  // y_1
  for (long long k = 1; k < n; ++k) {
    R next = T * cur - D * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Memoized y-sequence for one (T, D) context. Values are extended on demand;
/// each instance is confined to one worker (no shared state).
template <typename R>
class YZSeq {
public:
  YZSeq(R T, R D) : T_(std::move(T)), D_(std::move(D)) { values_.push_back(R(1)); }

  const R& trace() const { return T_; }
  const R& determinant() const { return D_; }

  const R& y_at(long long n) {
    assert(n >= 0);
    while (static_cast<long long>(values_.size()) <= n) {
      if (values_.size() == 1) {
        values_.push_back(T_);
      } else {
        const auto k = values_.size();
        values_.push_back(T_ * values_[k - 1] - D_ * values_[k - 2]);
      }
    }
    return values_[static_cast<std::size_t>(n)];
  }

  long long computed() const { return static_cast<long long>(values_.size()); }

private:
  R T_, D_;
  std::vector<R> values_;
};

/// z_n = (sum_{m} C(n, 2m+1) T^(n-2m-1) (T^2-4D)^m) / 2^(n-1), the
/// eigenvalue-free divided power difference. Requires a ring containing
/// 1/2^(n-1); z_1 = 1 and z satisfies the same recurrence as y with z_n = y_{n-1}.
template <typename R>
R z_explicit(const R& T, const R& D, long long n) {
  assert(n >= 1);
  const R disc = T * T - R(4) * D;
  R acc = R(0);
  for (long long m = 0; 2 * m + 1 <= n; ++m)
    acc = acc + R(binomial(n, 2 * m + 1)) * int_pow(T, n - 2 * m - 1) * int_pow(disc, m);
  Integer half_den(1);
  for (long long i = 1; i < n; ++i) half_den *= Integer(2);
  return acc * from_rational<R>(Rational(Integer(1), half_den));
}

/// z over integer inputs, with the integrality of the result asserted
/// (z obeys an integer recurrence, so a fractional value is an arithmetic bug).
inline Integer z_int(const Integer& T, const Integer& D, long long n) {
  Rational z = z_explicit<Rational>(Rational(T), Rational(D), n);
  assert(z.is_integer());
  return z.num();
}

/// A^n from the explicit y-sequence formula:
///   [[y_n - d y_{n-1}, b y_{n-1}], [c y_{n-1}, y_n - a y_{n-1}]].
template <typename R>
Mat2<R> theorem1_power(const Mat2<R>& A, long long n) {
  assert(n >= 1);
  const R T = A.trace();
  const R D = A.det();
  const R yn = y_explicit(T, D, n);
  const R yn1 = y_explicit(T, D, n - 1);
  return {yn - A.d * yn1, A.b * yn1, A.c * yn1, yn - A.a * yn1};
}

/// Same closed form driven by a shared memoized sequence (range sweeps).
template <typename R>
Mat2<R> theorem1_power(const Mat2<R>& A, long long n, YZSeq<R>& seq) {
  assert(n >= 1);
  assert(seq.trace() == A.trace() && seq.determinant() == A.det());
  const R yn = seq.y_at(n);
  const R yn1 = seq.y_at(n - 1);
  return {yn - A.d * yn1, A.b * yn1, A.c * yn1, yn - A.a * yn1};
}

/// A^n = z_n A - z_{n-1} D I. Needs a ring admitting halving (from_rational).
template <typename R>
Mat2<R> williams_power(const Mat2<R>& A, long long n) {
  assert(n >= 1);
  const R T = A.trace();
  const R D = A.det();
  const R zn = z_explicit(T, D, n);
  const R zn1 = n >= 2 ? z_explicit(T, D, n - 1) : R(0);
  Mat2<R> r = zn * A;
  const R shift = zn1 * D;
  r.a = r.a - shift;
  r.d = r.d - shift;
  return r;
}

/// Exact square root of a non-negative rational, if one exists.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  Integer sn = isqrt(q.num());
  if (sn * sn != q.num()) return std::nullopt;
  Integer sd = isqrt(q.den());
  if (sd * sd != q.den()) return std::nullopt;
  return Rational(sn, sd);
}

/// Eigenvalue-form power, restricted to the branch where both eigenvalues are
/// rational: distinct case a^n (A - bI)/(a - b) + b^n (A - aI)/(b - a),
/// repeated case a^(n-1) (nA - (n-1) a I). Throws non_rational_eigenvalues
/// when the discriminant T^2 - 4D is not a rational square.
inline Mat2<Rational> williams_eigen_power(const Mat2<Rational>& A, long long n) {
  assert(n >= 1);
  const Rational T = A.trace();
  const Rational D = A.det();
  const Rational disc = T * T - Rational(4) * D;
  auto root = rational_sqrt(disc);
  if (!root)
    throw non_rational_eigenvalues("discriminant " + disc.to_string() +
                                   " is not the square of a rational");
  const Rational half(Integer(1), Integer(2));
  const Rational alpha = (T + *root) * half;
  const Rational beta = (T - *root) * half;
  const Mat2<Rational> I = Mat2<Rational>::identity();
  if (alpha == beta) {
    Mat2<Rational> base = Rational(n) * A - (Rational(n - 1) * alpha) * I;
    return int_pow(alpha, n - 1) * base;
  }
  const Rational gap = alpha - beta;
  Mat2<Rational> first = int_pow(alpha, n) * (A - beta * I);
  Mat2<Rational> second = int_pow(beta, n) * (A - alpha * I);
  Mat2<Rational> diff = first - second;
  const Rational inv_gap = Rational(1) / gap;
  return inv_gap * diff;
}

}  // namespace matpow
