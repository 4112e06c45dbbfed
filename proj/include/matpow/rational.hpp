#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "matpow/errors.hpp"
#include "matpow/integer.hpp"

namespace matpow {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator, so defaulted equality is value equality.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}
  Rational(int v) : num_(v), den_(1) {}
  Rational(Integer v) : num_(std::move(v)), den_(1) {}

  Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == Integer(1); }
  int sign() const { return num_.sign(); }

  friend Rational operator-(Rational x) {
    x.num_ = -x.num_;
    return x;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw division_by_zero();
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  std::string to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

private:
  void normalize() {
    if (den_.is_zero()) throw division_by_zero();
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = Integer(1);
      return;
    }
    Integer g = gcd(num_, den_);
    if (g != Integer(1)) {
      num_ /= g;
      den_ /= g;
    }
  }

  Integer num_;
  Integer den_;
};

}  // namespace matpow
