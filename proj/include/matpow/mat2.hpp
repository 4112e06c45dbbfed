#pragma once

#include <cassert>
#include <ostream>
#include <string>

#include "matpow/ring.hpp"

namespace matpow {

/// 2x2 matrix over an exact ring (scalar or polynomial), row-major entries
/// a b / c d. Immutable value type; pow_naive is the ground-truth oracle the
/// closed forms are checked against.
template <typename R>
struct Mat2 {
  R a{}, b{}, c{}, d{};

  static Mat2 identity() { return {R(1), R(0), R(0), R(1)}; }

  R trace() const { return a + d; }
  R det() const { return a * d - b * c; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }

  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }

  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }

  friend Mat2 operator*(const R& s, const Mat2& x) {
    return {s * x.a, s * x.b, s * x.c, s * x.d};
  }

  friend bool operator==(const Mat2&, const Mat2&) = default;

  std::string to_string() const {
    return "[[" + render(a) + ", " + render(b) + "], [" + render(c) + ", " + render(d) + "]]";
  }

  friend std::ostream& operator<<(std::ostream& os, const Mat2& m) { return os << m.to_string(); }

private:
  static std::string render(const R& v) { return v.to_string(); }
};

template <typename R>
Mat2<R> one_like(const Mat2<R>&) {
  return Mat2<R>::identity();
}

/// n-fold repeated multiplication; the independent oracle. A^0 = I.
template <typename R>
Mat2<R> pow_naive(const Mat2<R>& m, long long n) {
  assert(n >= 0);
  Mat2<R> r = Mat2<R>::identity();
  for (long long i = 0; i < n; ++i) r = r * m;
  return r;
}

/// Square-and-multiply; must agree with pow_naive exactly.
template <typename R>
Mat2<R> pow_binary(const Mat2<R>& m, long long n) {
  return int_pow(m, n);
}

/// Entry-wise conversion, e.g. Mat2<Integer> into Mat2<Poly<Integer>>.
template <typename To, typename From>
Mat2<To> mat_cast(const Mat2<From>& m) {
  return {To(m.a), To(m.b), To(m.c), To(m.d)};
}

}  // namespace matpow
