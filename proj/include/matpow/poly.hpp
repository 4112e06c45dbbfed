#pragma once

#include <map>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>

#include "matpow/monomial.hpp"
#include "matpow/ring.hpp"

namespace matpow {

/// Sparse multivariate polynomial over an exact coefficient ring R.
/// Canonical form stores no zero coefficients, so structural (map) equality
/// is polynomial equality and is_zero() is emptiness. Immutable value type:
/// every operation returns a fresh canonical polynomial.
template <typename R>
class Poly {
public:
  Poly() = default;
  Poly(long long c) { add_term(Monomial(), R(c)); }
  Poly(int c) { add_term(Monomial(), R(c)); }
  Poly(const R& c) { add_term(Monomial(), c); }
  Poly(const Integer& c)
    requires(!std::is_same_v<R, Integer>)
  {
    add_term(Monomial(), R(c));
  }

  static Poly var(const std::string& name) {
    Poly p;
    p.add_term(Monomial::var(name), R(1));
    return p;
  }

  static Poly term(const Monomial& m, const R& c) {
    Poly p;
    p.add_term(m, c);
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }
  const std::map<Monomial, R>& terms() const { return t_; }

  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_unit()); }

  /// The coefficient of the unit monomial (the whole value for constants).
  R constant_value() const { return coefficient_of(Monomial()); }

  R coefficient_of(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? R(0) : it->second;
  }

  friend Poly operator-(const Poly& p) {
    Poly r;
    for (const auto& [m, c] : p.t_) r.t_.emplace(m, R(0) - c);
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b.t_) r.add_term(m, c);
    return r;
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b.t_) r.add_term(m, R(0) - c);
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Image under the ring homomorphism sending one variable to a polynomial
  /// and fixing everything else.
  Poly substitute(const std::string& name, const Poly& value) const {
    Poly r;
    for (const auto& [m, c] : t_) {
      unsigned e = m.exponent(name);
      Poly piece = Poly::term(m.without(name), c);
      if (e > 0) piece = piece * int_pow(value, e);
      r += piece;
    }
    return r;
  }

  /// Rewrite modulo s^2 = 1 - c^2 until no monomial carries an s-exponent >= 2.
  Poly reduce_sin_cos(const std::string& s, const std::string& c) const {
    const Poly one_minus_c2 = Poly(1) - Poly::var(c) * Poly::var(c);
    Poly r;
    for (const auto& [m, coeff] : t_) {
      unsigned e = m.exponent(s);
      if (e < 2) {
        r += Poly::term(m, coeff);
        continue;
      }
      Poly piece = Poly::term(m.with_exponent(s, e % 2), coeff);
      r += piece * int_pow(one_minus_c2, e / 2);
    }
    return r;
  }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : t_) {
      std::string cs = coefficient_string(c);
      std::string term;
      if (m.is_unit())
        term = cs;
      else if (cs == "1")
        term = m.to_string();
      else if (cs == "-1")
        term = "-" + m.to_string();
      else
        term = cs + "*" + m.to_string();
      if (out.empty()) {
        out = term;
      } else if (term.front() == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

private:
  static std::string coefficient_string(const R& c) {
    if constexpr (std::is_same_v<R, GaussianRational>) {
      std::string s = c.to_string();
      // parenthesize mixed re/im parts so the rendered sum stays unambiguous
      if (s.find('+', 1) != std::string::npos || s.find('-', 1) != std::string::npos)
        return "(" + s + ")";
      return s;
    } else {
      return c.to_string();
    }
  }

  void add_term(const Monomial& m, const R& c) {
    if (c == R(0)) return;
    auto [it, inserted] = t_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == R(0)) t_.erase(it);
    }
  }

  std::map<Monomial, R> t_;
};

template <typename R>
Poly<R> one_like(const Poly<R>&) {
  return Poly<R>(1);
}

template <typename R>
struct ring_cast_impl<Poly<R>> {
  static Poly<R> from_rational(const Rational& q) { return Poly<R>(ring_cast_impl<R>::from_rational(q)); }
};

/// Coefficient-wise conversion, e.g. Poly<Integer> into Poly<Rational>.
template <typename To, typename From>
Poly<To> poly_cast(const Poly<From>& p) {
  Poly<To> r;
  for (const auto& [m, c] : p.terms()) r += Poly<To>::term(m, To(c));
  return r;
}

}  // namespace matpow
