#pragma once

#include <compare>
#include <map>
#include <string>

namespace matpow {

/// Power product of named variables. Zero exponents are never stored, so the
/// defaulted comparison doubles as a deterministic (name-lexicographic) term
/// order for serialization.
class Monomial {
public:
  Monomial() = default;

  static Monomial var(const std::string& name, unsigned k = 1) {
    Monomial m;
    if (k > 0) m.e_[name] = k;
    return m;
  }

  bool is_unit() const { return e_.empty(); }

  unsigned exponent(const std::string& name) const {
    auto it = e_.find(name);
    return it == e_.end() ? 0u : it->second;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [name, k] : e_) d += k;
    return d;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (const auto& [name, k] : o.e_) r.e_[name] += k;
    return r;
  }

  /// Copy with the given variable removed entirely.
  Monomial without(const std::string& name) const {
    Monomial r = *this;
    r.e_.erase(name);
    return r;
  }

  Monomial with_exponent(const std::string& name, unsigned k) const {
    Monomial r = *this;
    if (k == 0)
      r.e_.erase(name);
    else
      r.e_[name] = k;
    return r;
  }

  const std::map<std::string, unsigned>& exponents() const { return e_; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::string to_string() const {
    std::string out;
    for (const auto& [name, k] : e_) {
      if (!out.empty()) out += "*";
      out += name;
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

private:
  std::map<std::string, unsigned> e_;
};

}  // namespace matpow
