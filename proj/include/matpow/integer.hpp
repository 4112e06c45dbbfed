#pragma once

#include <bit>
#include <cassert>
#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matpow/errors.hpp"

namespace matpow {

/// Arbitrary-precision signed integer: sign plus little-endian base-2^32
/// magnitude. Canonical form has no leading zero limbs and sign == 0 exactly
/// when the magnitude is empty, so defaulted equality is structural equality.
class Integer {
  using u32 = std::uint32_t;
  using u64 = std::uint64_t;
  using i64 = std::int64_t;

public:
  Integer() = default;

  Integer(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    u64 m = v < 0 ? ~static_cast<u64>(v) + 1 : static_cast<u64>(v);
    mag_.push_back(static_cast<u32>(m));
    if (m >> 32) mag_.push_back(static_cast<u32>(m >> 32));
  }

  Integer(int v) : Integer(static_cast<long long>(v)) {}

  explicit Integer(std::string_view decimal) {
    std::size_t i = 0;
    int sg = 1;
    if (i < decimal.size() && (decimal[i] == '-' || decimal[i] == '+')) {
      sg = decimal[i] == '-' ? -1 : 1;
      ++i;
    }
    if (i == decimal.size()) throw parse_error("empty integer literal");
    for (; i < decimal.size(); ++i) {
      char c = decimal[i];
      if (c < '0' || c > '9') throw parse_error("bad digit in integer literal: " + std::string(decimal));
      mul_small(mag_, 10);
      add_small(mag_, static_cast<u32>(c - '0'));
    }
    sign_ = mag_.empty() ? 0 : sg;
  }

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_even() const { return mag_.empty() || (mag_[0] & 1u) == 0; }

  Integer abs() const {
    Integer r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  friend Integer operator-(Integer x) {
    x.sign_ = -x.sign_;
    return x;
  }

  friend Integer operator+(const Integer& a, const Integer& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    Integer r;
    if (a.sign_ == b.sign_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_mag(a.mag_, b.mag_);
      if (c == 0) return Integer();
      if (c > 0) {
        r.mag_ = sub_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_;
      } else {
        r.mag_ = sub_mag(b.mag_, a.mag_);
        r.sign_ = b.sign_;
      }
    }
    return r;
  }

  friend Integer operator-(const Integer& a, const Integer& b) { return a + (-b); }

  friend Integer operator*(const Integer& a, const Integer& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return Integer();
    Integer r;
    r.mag_ = mul_mag(a.mag_, b.mag_);
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  /// Truncated division: q = trunc(a/b), r = a - q*b (r has the dividend's sign).
  static void divmod(const Integer& a, const Integer& b, Integer& q, Integer& r) {
    if (b.sign_ == 0) throw division_by_zero();
    if (a.sign_ == 0) {
      q = Integer();
      r = Integer();
      return;
    }
    std::vector<u32> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q.mag_ = std::move(qm);
    r.mag_ = std::move(rm);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
  }

  friend Integer operator/(const Integer& a, const Integer& b) {
    Integer q, r;
    divmod(a, b, q, r);
    return q;
  }

  friend Integer operator%(const Integer& a, const Integer& b) {
    Integer q, r;
    divmod(a, b, q, r);
    return r;
  }

  Integer& operator+=(const Integer& o) { return *this = *this + o; }
  Integer& operator-=(const Integer& o) { return *this = *this - o; }
  Integer& operator*=(const Integer& o) { return *this = *this * o; }
  Integer& operator/=(const Integer& o) { return *this = *this / o; }

  friend bool operator==(const Integer&, const Integer&) = default;

  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = cmp_mag(a.mag_, b.mag_);
    if (a.sign_ < 0) c = -c;
    return c <=> 0;
  }

  std::size_t bit_length() const {
    if (mag_.empty()) return 0;
    return 32 * mag_.size() - static_cast<std::size_t>(std::countl_zero(mag_.back()));
  }

  /// Low 64 bits with sign; callers must know the value fits.
  long long to_long_long() const {
    assert(bit_length() <= 63);
    u64 m = 0;
    if (!mag_.empty()) m = mag_[0];
    if (mag_.size() > 1) m |= static_cast<u64>(mag_[1]) << 32;
    return sign_ < 0 ? -static_cast<long long>(m) : static_cast<long long>(m);
  }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    std::vector<u32> m = mag_;
    std::string out;
    while (!m.empty()) {
      u32 rem = div_small(m, 1000000000u);
      std::string chunk = std::to_string(rem);
      if (!m.empty()) chunk.insert(0, 9 - chunk.size(), '0');
      out.insert(0, chunk);
    }
    if (sign_ < 0) out.insert(0, 1, '-');
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& x) { return os << x.to_string(); }

  friend Integer gcd(Integer a, Integer b) {
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    while (!b.is_zero()) {
      Integer q, r;
      divmod(a, b, q, r);
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

  /// Floor square root of a non-negative value (integer Newton iteration).
  friend Integer isqrt(const Integer& n) {
    assert(n.sign_ >= 0);
    if (n.sign_ == 0) return Integer();
    if (n.bit_length() <= 52) {
      auto v = static_cast<unsigned long long>(n.to_long_long());
      auto r = static_cast<unsigned long long>(std::sqrt(static_cast<double>(v)));
      while (r * r > v) --r;
      while ((r + 1) * (r + 1) <= v) ++r;
      return Integer(static_cast<long long>(r));
    }
    Integer x = Integer(1);
    x = shifted_left(x, (n.bit_length() + 2) / 2);
    for (;;) {
      Integer y = (x + n / x) / Integer(2);
      if (y >= x) return x;
      x = std::move(y);
    }
  }

private:
  static void trim(std::vector<u32>& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
  }

  static int cmp_mag(const std::vector<u32>& a, const std::vector<u32>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<u32> add_mag(const std::vector<u32>& a, const std::vector<u32>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<u32> r(big.size());
    u64 carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
      u64 s = carry + big[i] + (i < small.size() ? small[i] : 0u);
      r[i] = static_cast<u32>(s);
      carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<u32>(carry));
    return r;
  }

  // requires a >= b
  static std::vector<u32> sub_mag(const std::vector<u32>& a, const std::vector<u32>& b) {
    std::vector<u32> r(a.size());
    i64 borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      i64 d = static_cast<i64>(a[i]) - borrow - (i < b.size() ? static_cast<i64>(b[i]) : 0);
      if (d < 0) {
        d += (1ll << 32);
        borrow = 1;
      } else {
        borrow = 0;
      }
      r[i] = static_cast<u32>(d);
    }
    trim(r);
    return r;
  }

  static std::vector<u32> mul_mag(const std::vector<u32>& a, const std::vector<u32>& b) {
    std::vector<u32> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      u64 carry = 0;
      for (std::size_t j = 0; j < b.size(); ++j) {
        u64 cur = static_cast<u64>(a[i]) * b[j] + r[i + j] + carry;
        r[i + j] = static_cast<u32>(cur);
        carry = cur >> 32;
      }
      r[i + b.size()] = static_cast<u32>(carry);
    }
    trim(r);
    return r;
  }

  static void mul_small(std::vector<u32>& m, u32 f) {
    u64 carry = 0;
    for (auto& limb : m) {
      u64 cur = static_cast<u64>(limb) * f + carry;
      limb = static_cast<u32>(cur);
      carry = cur >> 32;
    }
    if (carry) m.push_back(static_cast<u32>(carry));
  }

  static void add_small(std::vector<u32>& m, u32 v) {
    u64 carry = v;
    for (auto& limb : m) {
      if (!carry) return;
      u64 cur = static_cast<u64>(limb) + carry;
      limb = static_cast<u32>(cur);
      carry = cur >> 32;
    }
    if (carry) m.push_back(static_cast<u32>(carry));
  }

  // in-place divide by a single limb, returns remainder
  static u32 div_small(std::vector<u32>& m, u32 d) {
    u64 rem = 0;
    for (std::size_t i = m.size(); i-- > 0;) {
      u64 cur = (rem << 32) | m[i];
      m[i] = static_cast<u32>(cur / d);
      rem = cur % d;
    }
    trim(m);
    return static_cast<u32>(rem);
  }

  // Knuth algorithm D on base-2^32 limbs
  static void divmod_mag(const std::vector<u32>& u, const std::vector<u32>& v, std::vector<u32>& q,
                         std::vector<u32>& r) {
    if (cmp_mag(u, v) < 0) {
      q.clear();
      r = u;
      return;
    }
    if (v.size() == 1) {
      q = u;
      u32 rem = div_small(q, v[0]);
      r.clear();
      if (rem) r.push_back(rem);
      return;
    }
    const int s = std::countl_zero(v.back());
    const std::size_t n = v.size();
    const std::size_t m = u.size() - n;
    std::vector<u32> vn(n), un(u.size() + 1, 0);
    for (std::size_t i = n; i-- > 0;)
      vn[i] = (v[i] << s) | (i > 0 && s ? static_cast<u32>(static_cast<u64>(v[i - 1]) >> (32 - s)) : 0);
    un[u.size()] = s ? static_cast<u32>(static_cast<u64>(u.back()) >> (32 - s)) : 0;
    for (std::size_t i = u.size(); i-- > 0;)
      un[i] = (u[i] << s) | (i > 0 && s ? static_cast<u32>(static_cast<u64>(u[i - 1]) >> (32 - s)) : 0);

    q.assign(m + 1, 0);
    for (std::size_t j = m + 1; j-- > 0;) {
      u64 num = (static_cast<u64>(un[j + n]) << 32) | un[j + n - 1];
      u64 qhat = num / vn[n - 1];
      u64 rhat = num % vn[n - 1];
      while (qhat >= (1ull << 32) ||
             qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
        --qhat;
        rhat += vn[n - 1];
        if (rhat >= (1ull << 32)) break;
      }
      u64 carry = 0;
      i64 borrow = 0;
      for (std::size_t i = 0; i < n; ++i) {
        u64 p = qhat * vn[i] + carry;
        carry = p >> 32;
        i64 t = static_cast<i64>(un[i + j]) - static_cast<i64>(p & 0xFFFFFFFFull) - borrow;
        if (t < 0) {
          t += (1ll << 32);
          borrow = 1;
        } else {
          borrow = 0;
        }
        un[i + j] = static_cast<u32>(t);
      }
      i64 t = static_cast<i64>(un[j + n]) - static_cast<i64>(carry) - borrow;
      if (t < 0) {
        t += (1ll << 32);
        un[j + n] = static_cast<u32>(t);
        --qhat;
        u64 c2 = 0;
        for (std::size_t i = 0; i < n; ++i) {
          u64 s2 = static_cast<u64>(un[i + j]) + vn[i] + c2;
          un[i + j] = static_cast<u32>(s2);
          c2 = s2 >> 32;
        }
        un[j + n] = static_cast<u32>(un[j + n] + c2);
      } else {
        un[j + n] = static_cast<u32>(t);
      }
      q[j] = static_cast<u32>(qhat);
    }
    trim(q);
    r.assign(un.begin(), un.begin() + static_cast<std::ptrdiff_t>(n));
    if (s) {
      for (std::size_t i = 0; i < n; ++i)
        r[i] = (r[i] >> s) | (i + 1 < n ? r[i + 1] << (32 - s) : 0);
    }
    trim(r);
  }

  static Integer shifted_left(const Integer& x, std::size_t bits) {
    if (x.is_zero()) return x;
    Integer r;
    r.sign_ = x.sign_;
    const std::size_t limbs = bits / 32, rem = bits % 32;
    r.mag_.assign(limbs, 0);
    u32 carry = 0;
    for (u32 limb : x.mag_) {
      r.mag_.push_back((limb << rem) | carry);
      carry = rem ? static_cast<u32>(static_cast<u64>(limb) >> (32 - rem)) : 0;
    }
    if (carry) r.mag_.push_back(carry);
    trim(r.mag_);
    return r;
  }

  int sign_ = 0;
  std::vector<u32> mag_;
};

}  // namespace matpow
