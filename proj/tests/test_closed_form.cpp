#include <doctest.h>

#include <random>

#include "matpow/closed_form.hpp"
#include "matpow/poly.hpp"

using namespace matpow;
using IMat = Mat2<Integer>;
using QMat = Mat2<Rational>;
using IPoly = Poly<Integer>;
using QPoly = Poly<Rational>;

TEST_CASE("y sequence by explicit sum and by recurrence") {
  CHECK(y_explicit(Integer(3), Integer(7), 0) == Integer(1));
  CHECK(y_recurrence(Integer(3), Integer(7), 0) == Integer(1));
  CHECK(y_recurrence(Integer(3), Integer(7), 1) == Integer(3));
  CHECK(y_explicit(Integer(1), Integer(-1), 5) == Integer(8));  // F_6
  CHECK(y_explicit(Integer(2), Integer(1), 4) == Integer(5));
  for (long long n = 0; n <= 30; ++n)
    CHECK(y_explicit(Integer(4), Integer(-3), n) == y_recurrence(Integer(4), Integer(-3), n));
}

TEST_CASE("y at symbolic trace and determinant") {
  const IPoly T = IPoly::var("T"), D = IPoly::var("D");
  CHECK(y_explicit(T, D, 3) == T * T * T - IPoly(2) * T * D);
  for (long long n = 0; n <= 12; ++n) CHECK(y_explicit(T, D, n) == y_recurrence(T, D, n));
}

TEST_CASE("degenerate zero trace collapses odd terms") {
  const IPoly D = IPoly::var("D");
  const IPoly zero;
  for (long long k = 0; 2 * k <= 20; ++k) {
    if (2 * k + 1 <= 20) CHECK(y_explicit(zero, D, 2 * k + 1).is_zero());
    CHECK(y_explicit(zero, D, 2 * k) == int_pow(IPoly(0) - D, k));
  }
}

TEST_CASE("z sequence values") {
  CHECK(z_explicit(Rational(9), Rational(4), 1) == Rational(1));
  CHECK(z_explicit(Rational(1), Rational(-1), 5) == Rational(5));    // F_5
  CHECK(z_explicit(Rational(1), Rational(-1), 12) == Rational(144)); // F_12
  CHECK(z_int(Integer(1), Integer(-1), 30) == Integer(832040));
  // z obeys z_{n+1} = T z_n - D z_{n-1} with z_1 = 1, z_2 = T
  const Integer T(5), D(3);
  Integer prev = z_int(T, D, 1), cur = z_int(T, D, 2);
  CHECK(prev == Integer(1));
  CHECK(cur == T);
  for (long long n = 3; n <= 25; ++n) {
    const Integer next = T * cur - D * prev;
    CHECK(z_int(T, D, n) == next);
    prev = cur;
    cur = next;
  }
}

TEST_CASE("bridge: y_{n-1} equals z_n symbolically") {
  const QPoly T = QPoly::var("T"), D = QPoly::var("D");
  for (long long n = 1; n <= 12; ++n)
    CHECK(z_explicit(T, D, n) == y_explicit(T, D, n - 1));
}

TEST_CASE("theorem1_power matches stated values") {
  const IMat fib{1, 1, 1, 0};
  CHECK(theorem1_power(fib, 1) == fib);
  CHECK((theorem1_power(fib, 10) == IMat{89, 55, 55, 34}));
  CHECK((theorem1_power(IMat{3, 1, -2, 0}, 4) == IMat{31, 15, -30, -14}));
}

TEST_CASE("theorem1_power with a shared sequence cache") {
  const IMat m{3, 1, -2, 0};
  YZSeq<Integer> seq(m.trace(), m.det());
  CHECK(seq.y_at(0) == Integer(1));
  CHECK(seq.y_at(1) == m.trace());
  for (long long n = 1; n <= 16; ++n)
    CHECK(theorem1_power(m, n, seq) == pow_naive(m, n));
  CHECK(seq.computed() >= 17);
}

TEST_CASE("williams_power matches stated values") {
  const QMat fib{1, 1, 1, 0};
  CHECK(williams_power(fib, 1) == fib);
  CHECK((williams_power(fib, 6) == QMat{13, 8, 8, 5}));
  CHECK((williams_power(QMat{2, 1, -1, 0}, 7) == QMat{8, 7, -7, -6}));
}

TEST_CASE("williams_eigen_power on rational-eigenvalue matrices") {
  // repeated eigenvalue 1
  CHECK((williams_eigen_power(QMat{2, 1, -1, 0}, 5) == QMat{6, 5, -5, -4}));
  // distinct eigenvalues 2 and 1
  CHECK((williams_eigen_power(QMat{3, 1, -2, 0}, 3) == QMat{15, 7, -14, -6}));
  // triangular with eigenvalues 4 and 2
  CHECK((williams_eigen_power(QMat{4, 1, 0, 2}, 2) == QMat{16, 6, 0, 4}));
  // fractional eigenvalues: disc of [[1/2,1],[0,3/2]] is 1
  const QMat half{Rational(Integer(1), Integer(2)), Rational(1), Rational(0),
                  Rational(Integer(3), Integer(2))};
  CHECK(williams_eigen_power(half, 3) == pow_naive(half, 3));
  CHECK_THROWS_AS(williams_eigen_power(QMat{1, 1, 1, 0}, 3), non_rational_eigenvalues);
}

TEST_CASE("all power routes agree on random integer matrices") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long long> e(-9, 9), ns(1, 12);
  for (int it = 0; it < 60; ++it) {
    const IMat m{Integer(e(rng)), Integer(e(rng)), Integer(e(rng)), Integer(e(rng))};
    const long long n = ns(rng);
    const IMat oracle = pow_naive(m, n);
    CHECK(theorem1_power(m, n) == oracle);
    CHECK(pow_binary(m, n) == oracle);
    const QMat mq = mat_cast<Rational>(m);
    CHECK(williams_power(mq, n) == mat_cast<Rational>(oracle));
  }
}

TEST_CASE("symbolic theorem1 equals the naive product") {
  Mat2<IPoly> sym{IPoly::var("a"), IPoly::var("b"), IPoly::var("c"), IPoly::var("d")};
  for (long long n = 1; n <= 5; ++n) CHECK(theorem1_power(sym, n) == pow_naive(sym, n));
}

TEST_CASE("commuting splits behind the expansion families") {
  using P = IPoly;
  const Mat2<P> A{P::var("a"), P::var("b"), P::var("c"), P::var("d")};
  const Mat2<P> I = Mat2<P>::identity();
  const P m = P::var("m"), w = P::var("w"), g = P::var("g");

  // additive split: (mA + wI) and ((1-m)A - wI) commute and sum to A
  const Mat2<P> left = m * A + w * I;
  const Mat2<P> right = (P(1) - m) * A - w * I;
  CHECK(left + right == A);
  CHECK(left * right == right * left);

  // multiplicative split: (A + gI)(gA + DI) = (g^2 + Tg + D) A, factors commute
  const P T = A.trace(), D = A.det();
  const Mat2<P> f1 = A + g * I;
  const Mat2<P> f2 = g * A + D * I;
  CHECK(f1 * f2 == f2 * f1);
  CHECK(f1 * f2 == (g * g + T * g + D) * A);
}
