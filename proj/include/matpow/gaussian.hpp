#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "matpow/errors.hpp"
#include "matpow/rational.hpp"

namespace matpow {

/// Gaussian rational a + b*i with exact rational parts; multiplication uses
/// i^2 = -1 and division goes through the conjugate.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long long v) : re_(v) {}
  GaussianRational(int v) : re_(v) {}
  GaussianRational(Integer v) : re_(std::move(v)) {}
  GaussianRational(Rational re) : re_(std::move(re)) {}
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conjugate() const { return GaussianRational(re_, -im_); }

  /// Squared modulus re^2 + im^2, exact.
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  friend GaussianRational operator-(GaussianRational x) {
    x.re_ = -x.re_;
    x.im_ = -x.im_;
    return x;
  }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw division_by_zero();
    Rational n = b.norm2();
    GaussianRational t = a * b.conjugate();
    return GaussianRational(t.re_ / n, t.im_ / n);
  }

  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  std::string to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string im_part;
    if (im_ == Rational(1))
      im_part = "i";
    else if (im_ == Rational(-1))
      im_part = "-i";
    else
      im_part = im_.to_string() + "i";
    if (re_.is_zero()) return im_part;
    if (im_.sign() < 0) return re_.to_string() + im_part;  // sign travels with the part
    return re_.to_string() + "+" + im_part;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
    return os << x.to_string();
  }

private:
  Rational re_;
  Rational im_;
};

/// Exact Gaussian quotient; throws division_by_zero when y = 0.
inline GaussianRational gaussian_div(const GaussianRational& x, const GaussianRational& y) {
  return x / y;
}

}  // namespace matpow
