#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "matpow/identities.hpp"

// Registry of every verified identity family F01..F29. Each family evaluates
// its two sides by independent routes (explicit sum vs. oracle sequence,
// recurrence, or polynomial expansion); the only shared code is the exact
// arithmetic layer. Families over free ring parameters are checked as
// polynomial identities, which covers all parameter values at once.

namespace matpow {

namespace detail {

inline std::vector<Params> n_sweep(const SweepOptions& o, long long def_max,
                                   const char* key = "n") {
  std::vector<Params> out;
  const long long hi = o.n_max.value_or(def_max);
  for (long long n = 1; n <= hi; ++n) out.push_back({{key, n}});
  return out;
}

inline std::vector<Family> build_registry() {
  std::vector<Family> reg;
  auto add = [&reg](FamilyDescriptor desc, std::function<CheckResult(const Params&)> check,
                    std::function<std::vector<Params>(const SweepOptions&)> domain) {
    reg.push_back(Family{std::move(desc), std::move(check), std::move(domain)});
  };

  // F01 -- lhs: one binomial; rhs: signed power-of-two sum over the deeper index.
  add(
      {"F01", "odd-index binomial as a signed power-of-two sum", "we equate the $(1,2)$",
       "1 <= n <= 40, 1 <= j <= floor((n-1)/2)", CheckMode::numeric,
       {{"n", 1}, {"j", 0}},
       "holds at j = 0 as well; the default sweep keeps the stated 1 <= j"},
      [](const Params& p) {
        const long long n = p_get(p, "n"), j = p_get(p, "j");
        Integer lhs = binomial(n, 2 * j + 1);
        Integer rhs(0);
        for (long long i = j; 2 * i <= n - 1; ++i)
          rhs += pm(i - j) * pow2(n - 1 - 2 * i) * binomial(i, j) * binomial(n - 1 - i, i);
        return make_result("F01", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) {
        std::vector<Params> out;
        for (long long n = 1; n <= o.n_max.value_or(40); ++n)
          for (long long j = 1; 2 * j <= n - 1; ++j) out.push_back({{"n", n}, {"j", j}});
        return out;
      });

  // F02 -- lhs: one binomial; rhs: rational-weighted sum of odd-index binomials.
  add(
      {"F02", "shallow-diagonal binomial from odd-index binomials", "we equate the $(1,2)$",
       "1 <= n <= 40, 1 <= j <= floor((n-1)/2)", CheckMode::numeric,
       {{"n", 1}, {"j", 0}},
       ""},
      [](const Params& p) {
        const long long n = p_get(p, "n"), j = p_get(p, "j");
        Rational lhs(binomial(n - 1 - j, j));
        Integer sum(0);
        for (long long i = j; 2 * i <= n - 1; ++i) sum += binomial(n, 2 * i + 1) * binomial(i, j);
        Rational rhs = Rational(sum) * pow2q(-n + 1 + 2 * j);
        return make_result("F02", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) {
        std::vector<Params> out;
        for (long long n = 1; n <= o.n_max.value_or(40); ++n)
          for (long long j = 1; 2 * j <= n - 1; ++j) out.push_back({{"n", n}, {"j", j}});
        return out;
      });

  // F03 -- lhs: Fibonacci recurrence oracle; rhs: 5^m odd-binomial sum over 2^(n-1).
  add(
      {"F03", "Fibonacci via the 5^m odd-binomial sum (Vajda 91)",
       "Formula 91 from Vajda's list", "1 <= n <= 60", CheckMode::numeric, {{"n", 1}}, ""},
      [](const Params& p) {
        const long long n = p_get(p, "n");
        Rational lhs(fibonacci(n));
        Integer sum(0);
        for (long long m = 0; 2 * m + 1 <= n; ++m)
          sum += binomial(n, 2 * m + 1) * int_pow(Integer(5), m);
        Rational rhs = Rational(sum) * pow2q(1 - n);
        return make_result("F03", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) { return n_sweep(o, 60); });

  // F04 -- lhs: Fibonacci recurrence oracle; rhs: shallow diagonal of Pascal's triangle.
  add(
      {"F04", "Fibonacci as the shallow Pascal diagonal", "upon setting $T=-D=b=1$",
       "1 <= n <= 60", CheckMode::numeric, {{"n", 1}}, ""},
      [](const Params& p) {
        const long long n = p_get(p, "n");
        Integer lhs = fibonacci(n);
        Integer rhs(0);
        for (long long i = 0; 2 * i <= n - 1; ++i) rhs += binomial(n - 1 - i, i);
        return make_result("F04", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) { return n_sweep(o, 60); });

  // F05 -- lhs: Fibonacci oracle at index n*k; rhs: Lucas-power sum times F_n.
  add(
      {"F05", "Fibonacci index multiplication via Lucas powers",
       "facts that $L_{n}=F_{n+1}+F_{n-1}$", "1 <= n <= 12, 1 <= k <= 8", CheckMode::numeric,
       {{"n", 1}, {"k", 1}},
       ""},
      [](const Params& p) {
        const long long n = p_get(p, "n"), k = p_get(p, "k");
        Integer lhs = fibonacci(n * k);
        const Integer ln = lucas(n);
        Integer sum(0);
        for (long long i = 0; 2 * i <= k - 1; ++i)
          sum += binomial(k - 1 - i, i) * int_pow(ln, k - 1 - 2 * i) * pm(i * (n + 1));
        Integer rhs = fibonacci(n) * sum;
        return make_result("F05", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) {
        std::vector<Params> out;
        for (long long n = 1; n <= o.n_max.value_or(12); ++n)
          for (long long k = 1; k <= 8; ++k) out.push_back({{"k", k}, {"n", n}});
        return out;
      });

  // F06 -- lhs: Fibonacci oracle embedded in the Gaussian rationals; rhs:
  // (2+i)-power sum divided by i^(k-1). Equality forces the imaginary part to 0.
  add(
      {"F06", "Fibonacci from a Gaussian binomial sum (Ram's FeiPi variant)",
       "a variant of Ram's formula", "1 <= k <= 30", CheckMode::numeric, {{"k", 1}}, ""},
      [](const Params& p) {
        const long long k = p_get(p, "k");
        GaussianRational lhs(fibonacci(k));
        const GaussianRational two_plus_i(Rational(2), Rational(1));
        GaussianRational sum(0);
        for (long long m = 0; m <= k - 1; ++m)
          sum += GaussianRational(Rational(binomial(2 * k - 1 - m, m) * pm(m))) *
                 int_pow(two_plus_i, k - 1 - m);
        GaussianRational rhs = gaussian_div(sum, int_pow(GaussianRational::i(), k - 1));
        return make_result("F06", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) { return n_sweep(o, 30, "k"); });

  // F07 -- lhs: one binomial; rhs: triangular-matrix double sum.
  add(
      {"F07", "binomial C(n,t) from a triangular-matrix power expansion",
       "The eigenvalues of $A$ are clearly", "1 <= n <= 25, 1 <= t <= n", CheckMode::numeric,
       {{"n", 1}, {"t", 1}},
       ""},
      [](const Params& p) {
        const long long n = p_get(p, "n"), t = p_get(p, "t");
        Integer lhs = binomial(n, t);
        Integer rhs(0);
        for (long long m = 0; 2 * m <= n - 1; ++m)
          for (long long j = 0; j <= n - 1 - 2 * m; ++j)
            rhs += pm(m) * pow2(n - 1 - 2 * m - j) * binomial(n - 1 - m, m) *
                   binomial(n - 1 - 2 * m, j) * binomial(m, t - j - 1);
        return make_result("F07", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) {
        std::vector<Params> out;
        for (long long n = 1; n <= o.n_max.value_or(25); ++n)
          for (long long t = 1; t <= n; ++t) out.push_back({{"n", n}, {"t", t}});
        return out;
      });

  // F08 -- lhs: direct expansion of (f+e)^n; rhs: the shifted-binomial sum formula.
  add(
      {"F08", "binomial-shift expansion of (f+e)^n", "replace $e$ by $e/2$", "1 <= n <= 18",
       CheckMode::symbolic, {{"n", 1}}, ""},
      [](const Params& p) {
        const long long n = p_get(p, "n");
        using P = Poly<Integer>;
        const P e = P::var("e"), f = P::var("f");
        P lhs = int_pow(f + e, n);
        P sum;
        for (long long m = 0; 2 * m <= n - 1; ++m)
          sum += P(binomial(n - 1 - m, m)) * int_pow(e + P(2) * f, n - 1 - 2 * m) *
                 int_pow(-(f * (e + f)), m);
        P rhs = int_pow(f, n) + e * sum;
        return make_result("F08", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) { return n_sweep(o, 18); });

  // F09 -- lhs: Kronecker target C(n,k)[r=n]; rhs: alternating triple-binomial sum.
  add(
      {"F09", "Kronecker-delta alternating triple-binomial sum",
       "Expand the right side of Equation", "1 <= n <= 20, 0 <= k <= r <= n",
       CheckMode::numeric,
       {{"n", 1}, {"k", 0}, {"r", 0}},
       ""},
      [](const Params& p) {
        const long long n = p_get(p, "n"), k = p_get(p, "k"), r = p_get(p, "r");
        Integer lhs = r == n ? binomial(n, k) : Integer(0);
        Integer sum(0);
        for (long long j = 0; j <= n - k; ++j)
          sum += binomial(n, j) * binomial(n - j, k) * binomial(j, r - k) * pm(j);
        Integer rhs = pm(n - k) * sum;
        return make_result("F09", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) {
        std::vector<Params> out;
        for (long long n = 1; n <= o.n_max.value_or(20); ++n)
          for (long long r = 0; r <= n; ++r)
            for (long long k = 0; k <= r; ++k) out.push_back({{"k", k}, {"n", n}, {"r", r}});
        return out;
      });

  // F10 -- lhs: y-series value of the matrix, a w-free constant; rhs: the
  // trace-shifted double sum as a polynomial in w.
  add(
      {"F10", "trace-shift expansion of the y-series in w", "compare values in the $(1,2)$",
       "30 seeded matrices, 1 <= n <= 12, symbolic in w", CheckMode::symbolic,
       {{"n", 1}, {"a", std::nullopt}, {"b", std::nullopt}, {"c", std::nullopt}, {"d", std::nullopt}},
       ""},
      [](const Params& p) {
        const long long n = p_get(p, "n");
        const Mat2<Integer> A = params_matrix(p);
        const Integer T = A.trace(), D = A.det();
        using P = Poly<Integer>;
        P lhs;
        for (long long i = 0; 2 * i <= n - 1; ++i)
          lhs += P(binomial(n - 1 - i, i) * int_pow(T, n - 1 - 2 * i) * int_pow(-D, i));
        const P w = P::var("w");
        const P shift_T = P(T) - P(2) * w;
        const P shift_negD = P(A.b * A.c) - (P(A.a) - w) * (P(A.d) - w);
        P rhs;
        for (long long j = 1; j <= n; ++j) {
          P inner;
          for (long long r = 0; 2 * r <= j - 1; ++r)
            inner += P(binomial(j - 1 - r, r)) * int_pow(shift_T, j - 1 - 2 * r) *
                     int_pow(shift_negD, r);
          rhs += P(binomial(n, j)) * int_pow(w, n - j) * inner;
        }
        return make_result("F10", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) {
        std::vector<Params> out;
        SplitMix64 rng(o.seed);
        for (int s = 0; s < 30; ++s) {
          const auto e = sample_entries(rng, false);
          for (long long n = 1; n <= o.n_max.value_or(12); ++n) {
            Params p{{"n", n}};
            push_matrix(p, e);
            out.push_back(std::move(p));
          }
        }
        return out;
      });

  // F11 -- lhs: Fibonacci oracle as a constant polynomial; rhs: two-parameter
  // w-sum, which must collapse to that constant.
  add(
      {"F11", "Fibonacci as a two-index polynomial sum in w",
       "For every complex number $w$ different", "1 <= n <= 20, symbolic in w",
       CheckMode::symbolic, {{"n", 1}}, ""},
      [](const Params& p) {
        const long long n = p_get(p, "n");
        using P = Poly<Integer>;
        P lhs(fibonacci(n));
        const P w = P::var("w");
        const P lin = P(1) - P(2) * w;
        const P quad = P(1) + w - w * w;
        P rhs;
        for (long long j = 1; j <= n; ++j)
          for (long long r = 0; 2 * r <= j - 1; ++r)
            rhs += P(binomial(n, j) * binomial(j - 1 - r, r)) * int_pow(w, n - j) *
                   int_pow(lin, j - 1 - 2 * r) * int_pow(quad, r);
        return make_result("F11", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) { return n_sweep(o, 20); });

  // F12 -- lhs: Fibonacci oracle; rhs: alternating binomial self-convolution.
  add(
      {"F12", "Fibonacci alternating binomial self-convolution (Vajda 46 case)",
       "special case of Formula 46", "1 <= n <= 40", CheckMode::numeric, {{"n", 1}}, ""},
      [](const Params& p) {
        const long long n = p_get(p, "n");
        Integer lhs = fibonacci(n);
        Integer rhs(0);
        for (long long j = 1; j <= n; ++j) rhs += pm(j - 1) * binomial(n, j) * fibonacci(j);
        return make_result("F12", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) { return n_sweep(o, 40); });

  // F13 -- lhs: shallow-diagonal target C(n-1-i,i)[t=0]; rhs: five-fold sum.
  add(
      {"F13", "five-fold binomial sum collapsing to the shallow diagonal",
       "We set $m=0$ in Equations", "1 <= n <= 12, 0 <= i <= floor((n-1)/2), 0 <= t <= n",
       CheckMode::numeric,
       {{"n", 1}, {"i", 0}, {"t", 0}},
       ""},
      [](const Params& p) {
        const long long n = p_get(p, "n"), i = p_get(p, "i"), t = p_get(p, "t");
        Integer lhs = t == 0 ? binomial(n - 1 - i, i) : Integer(0);
        Integer rhs(0);
        for (long long j = 1; j <= n; ++j)
          for (long long r = i; 2 * r <= j - 1; ++r)
            for (long long k = 0; k <= j - 1 - 2 * r; ++k)
              rhs += binomial(n, j) * binomial(j - 1 - r, r) * binomial(j - 1 - 2 * r, k) *
                     binomial(r, i) * binomial(r - i, j - k - r + i - n + t) *
                     pm(r + t + j + n + i) * pow2(k);
        return make_result("F13", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) {
        std::vector<Params> out;
        for (long long n = 1; n <= o.n_max.value_or(12); ++n)
          for (long long i = 0; 2 * i <= n - 1; ++i)
            for (long long t = 0; t <= n; ++t)
              out.push_back({{"i", i}, {"n", n}, {"t", t}});
        return out;
      });

  // F14 -- matrix identity; lhs: A^n (naive oracle) times a scalar binomial sum,
  // rhs: parity-restricted convolution over powers A^r. Both sides are scaled by
  // D^(2n), which clears every determinant power in sight.
  add(
      {"F14", "matrix power convolution with parity-restricted binomials",
       "coefficients of like powers of $g$",
       "30 seeded matrices with D != 0, 1 <= n <= 10, 0 <= m <= 2n", CheckMode::matrix,
       {{"n", 1}, {"m", 0}, {"a", std::nullopt}, {"b", std::nullopt}, {"c", std::nullopt},
        {"d", std::nullopt}},
       ""},
      [](const Params& p) {
        const long long n = p_get(p, "n"), m = p_get(p, "m");
        const Mat2<Integer> A = params_matrix(p);
        const Integer T = A.trace(), D = A.det();
        std::vector<Mat2<Integer>> pw{Mat2<Integer>::identity()};
        for (long long r = 1; r <= 2 * n; ++r) pw.push_back(pw.back() * A);
        const Integer d2n = int_pow(D, 2 * n);
        Integer lsum(0);
        for (long long j = 0; j <= n; ++j) {
          const Integer bj = binomial(n, j) * binomial(j, m - j);
          if (bj.is_zero()) continue;  // zero terms may hide negative trace powers
          lsum += bj * int_pow(D, n - j) * int_pow(T, 2 * j - m);
        }
        const Mat2<Integer> lhs = (lsum * d2n) * pw[static_cast<std::size_t>(n)];
        Mat2<Integer> rhs{};
        for (long long r = 0; r <= 2 * n; ++r) {
          if ((r + m + n) % 2 != 0) continue;
          const Integer br = binomial(n, (r - m + n) / 2) * binomial(n, (r + m - n) / 2);
          if (br.is_zero()) continue;
          rhs = rhs + (br * int_pow(D, (3 * n - r - m) / 2 + 2 * n)) *
                          pw[static_cast<std::size_t>(r)];
        }
        return make_result("F14", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) {
        std::vector<Params> out;
        SplitMix64 rng(o.seed);
        for (int s = 0; s < 30; ++s) {
          const auto e = sample_entries(rng, true);
          for (long long n = 1; n <= o.n_max.value_or(10); ++n)
            for (long long m = 0; m <= 2 * n; ++m) {
              Params p{{"m", m}, {"n", n}};
              push_matrix(p, e);
              out.push_back(std::move(p));
            }
        }
        return out;
      });

  // F15 -- window identity; both sides are alternating binomial sums with
  // disjoint index patterns. Outside the nontrivial window both collapse to 0.
  add(
      {"F15", "window binomial identity from the power convolution",
       "this identity is non-trivial", "1 <= n <= 14, 0 <= m <= 2n, -n <= w <= n",
       CheckMode::numeric,
       {{"n", 1}, {"m", 0}, {"w", std::nullopt}},
       "nontrivial only for m/2 - floor((n-1)/2) <= w <= m; other w hold as 0 = 0"},
      [](const Params& p) {
        const long long n = p_get(p, "n"), m = p_get(p, "m"), w = p_get(p, "w");
        Integer lhs(0);
        for (long long k = 0; k <= n - 1; ++k)
          lhs += binomial(n - 1 - k, k) * binomial(n, w + k) * binomial(k + w, m - k - w) * pm(k);
        Integer rhs(0);
        for (long long k = m + 1 - n - 2 * w; k <= m - w; ++k)
          rhs += binomial(n, k + w) * binomial(n, n + k + w - m) *
                 binomial(k + n + 2 * w - m - 1, k) * pm(k);
        return make_result("F15", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) {
        std::vector<Params> out;
        for (long long n = 1; n <= o.n_max.value_or(14); ++n)
          for (long long m = 0; m <= 2 * n; ++m)
            for (long long w = -n; w <= n; ++w)
              out.push_back({{"m", m}, {"n", n}, {"w", w}});
        return out;
      });

  // F16..F19 share the parity-binomial convolution skeleton; each instantiates
  // it with one fixture matrix's closed-form entries as weights.

  // F16 -- identity-matrix weights: lhs 2^(2j-m) sum, rhs plain parity sum.
  add(
      {"F16", "parity binomial convolution, unit-power weights",
       "using, respectively, the following identities", "1 <= n <= 20, 0 <= m <= 2n",
       CheckMode::numeric,
       {{"n", 1}, {"m", 0}},
       ""},
      [](const Params& p) {
        const long long n = p_get(p, "n"), m = p_get(p, "m");
        Integer lhs(0);
        for (long long j = 0; j <= n; ++j) {
          const Integer bj = binomial(n, j) * binomial(j, m - j);
          if (bj.is_zero()) continue;
          lhs += bj * pow2(2 * j - m);
        }
        Integer rhs(0);
        for (long long r = 0; r <= 2 * n; ++r) {
          if ((r + m + n) % 2 != 0) continue;
          rhs += binomial(n, (r - m + n) / 2) * binomial(n, (r + m - n) / 2);
        }
        return make_result("F16", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) {
        std::vector<Params> out;
        for (long long n = 1; n <= o.n_max.value_or(20); ++n)
          for (long long m = 0; m <= 2 * n; ++m) out.push_back({{"m", m}, {"n", n}});
        return out;
      });

  // F17 -- repeated-eigenvalue weights: factors n+1 and r+1.
  add(
      {"F17", "parity binomial convolution, linear weights",
       "using, respectively, the following identities", "1 <= n <= 20, 0 <= m <= 2n",
       CheckMode::numeric,
       {{"n", 1}, {"m", 0}},
       ""},
      [](const Params& p) {
        const long long n = p_get(p, "n"), m = p_get(p, "m");
        Integer lhs(0);
        for (long long j = 0; j <= n; ++j) {
          const Integer bj = binomial(n, j) * binomial(j, m - j);
          if (bj.is_zero()) continue;
          lhs += bj * pow2(2 * j - m);
        }
        lhs *= Integer(n + 1);
        Integer rhs(0);
        for (long long r = 0; r <= 2 * n; ++r) {
          if ((r + m + n) % 2 != 0) continue;
          rhs += binomial(n, (r - m + n) / 2) * binomial(n, (r + m - n) / 2) * Integer(r + 1);
        }
        return make_result("F17", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) {
        std::vector<Params> out;
        for (long long n = 1; n <= o.n_max.value_or(20); ++n)
          for (long long m = 0; m <= 2 * n; ++m) out.push_back({{"m", m}, {"n", n}});
        return out;
      });

  // F18 -- doubling-matrix weights: powers of 2 and 3 on the left, 2^((3n-r-m)/2)
  // and 2^(r+1)-1 on the right.
  add(
      {"F18", "parity binomial convolution, doubling weights",
       "using, respectively, the following identities", "1 <= n <= 20, 0 <= m <= 2n",
       CheckMode::numeric,
       {{"n", 1}, {"m", 0}},
       ""},
      [](const Params& p) {
        const long long n = p_get(p, "n"), m = p_get(p, "m");
        Integer lhs(0);
        for (long long j = 0; j <= n; ++j) {
          const Integer bj = binomial(n, j) * binomial(j, m - j);
          if (bj.is_zero()) continue;
          lhs += bj * pow2(n - j) * int_pow(Integer(3), 2 * j - m);
        }
        lhs *= pow2(n + 1) - Integer(1);
        Integer rhs(0);
        for (long long r = 0; r <= 2 * n; ++r) {
          if ((r + m + n) % 2 != 0) continue;
          const Integer br = binomial(n, (r - m + n) / 2) * binomial(n, (r + m - n) / 2);
          if (br.is_zero()) continue;
          rhs += br * pow2((3 * n - r - m) / 2) * (pow2(r + 1) - Integer(1));
        }
        return make_result("F18", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) {
        std::vector<Params> out;
        for (long long n = 1; n <= o.n_max.value_or(20); ++n)
          for (long long m = 0; m <= 2 * n; ++m) out.push_back({{"m", m}, {"n", n}});
        return out;
      });

  // F19 -- Fibonacci weights with the printed sign rule (-1)^((-n+r-m)/2); relies
  // on F_{-1} = 1 via the fixture convention at n = 1.
  add(
      {"F19", "parity binomial convolution, Fibonacci weights",
       "using, respectively, the following identities", "1 <= n <= 20, 0 <= m <= 2n",
       CheckMode::numeric,
       {{"n", 1}, {"m", 0}},
       "sign exponent (-n+r-m)/2 taken by parity; negative values use |e| mod 2"},
      [](const Params& p) {
        const long long n = p_get(p, "n"), m = p_get(p, "m");
        Integer lhs(0);
        for (long long j = 0; j <= n; ++j) {
          const Integer bj = binomial(n, j) * binomial(j, m - j);
          if (bj.is_zero()) continue;
          lhs += bj * pm(m + j);
        }
        lhs *= fibonacci(n + 2);
        Integer rhs(0);
        for (long long r = 0; r <= 2 * n; ++r) {
          if ((r + m + n) % 2 != 0) continue;
          const Integer br = binomial(n, (r - m + n) / 2) * binomial(n, (r + m - n) / 2);
          if (br.is_zero()) continue;
          rhs += br * pm((-n + r - m) / 2) * fibonacci(r + 2);
        }
        return make_result("F19", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) {
        std::vector<Params> out;
        for (long long n = 1; n <= o.n_max.value_or(20); ++n)
          for (long long m = 0; m <= 2 * n; ++m) out.push_back({{"m", m}, {"n", n}});
        return out;
      });

  // F20 -- lhs: Fibonacci oracle times the cleared prefactor (-1)^n (g^2+g-1)^n g^(2n);
  // rhs: double binomial sum with g powers cleared by the same factor.
  add(
      {"F20", "Fibonacci from the g-parameter double binomial sum",
       "different from $0$, $-\\phi$ or", "1 <= n <= 14, symbolic in g", CheckMode::symbolic,
       {{"n", 1}}, ""},
      [](const Params& p) {
        const long long n = p_get(p, "n");
        using P = Poly<Integer>;
        const P g = P::var("g");
        const P quad = g * g + g - P(1);
        P lhs = P(fibonacci(n) * pm(n)) * int_pow(quad, n) * int_pow(g, 2 * n);
        P rhs;
        for (long long r = 0; r <= 2 * n; ++r)
          for (long long i = std::max<long long>(0, r - n); i <= std::min(r, n); ++i)
            rhs += P::term(Monomial::var("g", static_cast<unsigned>(3 * n + r - 2 * i)),
                           binomial(n, i) * binomial(n, r - i) * pm(r + i) * fibonacci(r));
        return make_result("F20", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) { return n_sweep(o, 14); });

  // F21 -- lhs: n itself; rhs: signed power-of-two shallow-diagonal sum.
  add(
      {"F21", "n as a signed power-of-two shallow-diagonal sum",
       "has both eigenvalues equal to 1", "1 <= n <= 60", CheckMode::numeric, {{"n", 1}}, ""},
      [](const Params& p) {
        const long long n = p_get(p, "n");
        Integer lhs(n);
        Integer rhs(0);
        for (long long i = 0; 2 * i <= n - 1; ++i)
          rhs += binomial(n - 1 - i, i) * pow2(n - 1 - 2 * i) * pm(i);
        return make_result("F21", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) { return n_sweep(o, 60); });

  // F22 -- lhs: zero; rhs: alternating product sum from diagonal-matrix powers.
  add(
      {"F22", "vanishing alternating binomial sum from diagonal powers",
       "compare coefficients of $i^{s}j^{n-s}$", "1 <= n <= 40, 0 <= s <= n-1",
       CheckMode::numeric,
       {{"n", 1}, {"s", 0}},
       ""},
      [](const Params& p) {
        const long long n = p_get(p, "n"), s = p_get(p, "s");
        Integer lhs(0);
        Integer rhs(0);
        for (long long k = 0; k <= s; ++k)
          rhs += binomial(s, k) * binomial(n - k - 1, s - 1) * pm(k);
        return make_result("F22", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) {
        std::vector<Params> out;
        for (long long n = 1; n <= o.n_max.value_or(40); ++n)
          for (long long s = 0; s <= n - 1; ++s) out.push_back({{"n", n}, {"s", s}});
        return out;
      });

  // F23 -- lhs: difference of binomial products; rhs: the closed product form.
  add(
      {"F23", "binomial product difference lemma", "Finally, we note that",
       "1 <= n <= 30, 0 <= s <= n-1, 0 <= k <= n", CheckMode::numeric,
       {{"n", 1}, {"s", 0}, {"k", 0}},
       ""},
      [](const Params& p) {
        const long long n = p_get(p, "n"), s = p_get(p, "s"), k = p_get(p, "k");
        Integer lhs = binomial(n - k, k) * binomial(n - 2 * k, s - k) -
                      binomial(n - 1 - k, k) * binomial(n - 1 - 2 * k, s - k);
        Integer rhs = binomial(s, k) * binomial(n - k - 1, s - 1);
        return make_result("F23", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) {
        std::vector<Params> out;
        for (long long n = 1; n <= o.n_max.value_or(30); ++n)
          for (long long s = 0; s <= n - 1; ++s)
            for (long long k = 0; k <= n; ++k)
              out.push_back({{"k", k}, {"n", n}, {"s", s}});
        return out;
      });

  // F24 -- matrix identity in g; lhs: A^n (naive oracle) times (g^2+Tg+D)^n,
  // rhs: commuting-factor double sum over powers A^r. Index bounds keep every
  // g and D exponent non-negative, matching the cleared fraction-field form.
  add(
      {"F24", "commuting-factor matrix power expansion in g", "raised to the $n$-th power",
       "20 seeded matrices with D != 0, 1 <= n <= 8, symbolic in g", CheckMode::matrix,
       {{"n", 1}, {"a", std::nullopt}, {"b", std::nullopt}, {"c", std::nullopt},
        {"d", std::nullopt}},
       ""},
      [](const Params& p) {
        const long long n = p_get(p, "n");
        const Mat2<Integer> A = params_matrix(p);
        const Integer T = A.trace(), D = A.det();
        using P = Poly<Integer>;
        const P g = P::var("g");
        const P quad = g * g + P(T) * g + P(D);
        std::vector<Mat2<Integer>> pw{Mat2<Integer>::identity()};
        for (long long r = 1; r <= 2 * n; ++r) pw.push_back(pw.back() * A);
        const Mat2<P> lhs = int_pow(quad, n) * mat_cast<P>(pw[static_cast<std::size_t>(n)]);
        Mat2<P> rhs{};
        for (long long r = 0; r <= 2 * n; ++r)
          for (long long i = std::max<long long>(0, r - n); i <= std::min(r, n); ++i) {
            const P scalar =
                P::term(Monomial::var("g", static_cast<unsigned>(n + r - 2 * i)),
                        binomial(n, i) * binomial(n, r - i) * int_pow(D, n + i - r));
            rhs = rhs + scalar * mat_cast<P>(pw[static_cast<std::size_t>(r)]);
          }
        return make_result("F24", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) {
        std::vector<Params> out;
        SplitMix64 rng(o.seed);
        for (int s = 0; s < 20; ++s) {
          const auto e = sample_entries(rng, true);
          for (long long n = 1; n <= o.n_max.value_or(8); ++n) {
            Params p{{"n", n}};
            push_matrix(p, e);
            out.push_back(std::move(p));
          }
        }
        return out;
      });

  // F25 -- lhs: rotation power entries via the explicit closed form, reduced mod
  // s^2 = 1-c^2, plus the Pythagorean residue; rhs: the naive-oracle Chebyshev
  // pair and the constant 1.
  add(
      {"F25", "rotation powers: Chebyshev entries and Pythagorean check",
       "derived from De Moivre's Theorem", "1 <= n <= 16, symbolic mod s^2 = 1 - c^2",
       CheckMode::symbolic, {{"n", 1}}, ""},
      [](const Params& p) {
        const long long n = p_get(p, "n");
        using P = Poly<Integer>;
        const P c = P::var("c"), s = P::var("s");
        const Mat2<P> rot{c, s, -s, c};
        const Mat2<P> t1 = theorem1_power(rot, n);
        const P t11 = t1.a.reduce_sin_cos("s", "c");
        const P t12 = t1.b.reduce_sin_cos("s", "c");
        const P norm = (t11 * t11 + t12 * t12).reduce_sin_cos("s", "c");
        const auto cheb = chebyshev_pair(n);
        std::string lhs =
            "cos=" + t11.to_string() + "; sin=" + t12.to_string() + "; norm=" + norm.to_string();
        std::string rhs = "cos=" + cheb.first.to_string() +
                          "; sin=" + (s * cheb.second).to_string() + "; norm=1";
        return make_result("F25", p, std::move(lhs), std::move(rhs));
      },
      [](const SweepOptions& o) { return n_sweep(o, 16); });

  // F26 -- lhs: Pell pair from the naive power plus its invariant and symmetry
  // residues; rhs: the same pair via the explicit closed form with target values.
  add(
      {"F26", "Pell solution pairs from matrix powers", "satisfying the Pell equation",
       "(m,x1,y1) in {(2,3,2),(3,2,1),(5,9,4)}, 1 <= n <= 12", CheckMode::numeric,
       {{"n", 1}, {"m", 1}, {"x1", std::nullopt}, {"y1", std::nullopt}},
       ""},
      [](const Params& p) {
        const long long n = p_get(p, "n");
        const Integer m(p_get(p, "m")), x1(p_get(p, "x1")), y1(p_get(p, "y1"));
        if (x1 * x1 - m * y1 * y1 != Integer(1))
          throw malformed_params("pell start must satisfy x1^2 - m*y1^2 = 1");
        const Mat2<Integer> base{x1, m * y1, y1, x1};
        const Mat2<Integer> naive = pow_naive(base, n);
        const Mat2<Integer> closed = theorem1_power(base, n);
        const Integer residual = naive.a * naive.a - m * naive.c * naive.c;
        std::string lhs = "x=" + naive.a.to_string() + " y=" + naive.c.to_string() +
                          " pell=" + residual.to_string() +
                          " sym=" + (naive.a - naive.d).to_string() + "," +
                          (naive.b - m * naive.c).to_string();
        std::string rhs =
            "x=" + closed.a.to_string() + " y=" + closed.c.to_string() + " pell=1 sym=0,0";
        return make_result("F26", p, std::move(lhs), std::move(rhs));
      },
      [](const SweepOptions& o) {
        std::vector<Params> out;
        const long long starts[3][3] = {{2, 3, 2}, {3, 2, 1}, {5, 9, 4}};
        for (const auto& st : starts)
          for (long long n = 1; n <= o.n_max.value_or(12); ++n)
            out.push_back({{"m", st[0]}, {"n", n}, {"x1", st[1]}, {"y1", st[2]}});
        return out;
      });

  // F27 -- lhs: norm x_n^2 - t y_n^2 of the matrix-power pair; rhs: direct
  // expansion of (x1^2 - t y1^2)^n.
  add(
      {"F27", "Brahmagupta polynomial norm invariant", "the Brahmagupta polynomials",
       "1 <= n <= 8, symbolic in x1, y1, t", CheckMode::symbolic, {{"n", 1}}, ""},
      [](const Params& p) {
        const long long n = p_get(p, "n");
        using P = Poly<Integer>;
        const auto [xn, yn] = brahmagupta_pair(n);
        const P x1 = P::var("x1"), y1 = P::var("y1"), t = P::var("t");
        P lhs = xn * xn - t * (yn * yn);
        P rhs = int_pow(x1 * x1 - t * (y1 * y1), n);
        return make_result("F27", p, lhs.to_string(), rhs.to_string());
      },
      [](const SweepOptions& o) { return n_sweep(o, 8); });

  // F28 -- lhs: Morgan-Voyce data read from the naive matrix power; rhs: the
  // same data rebuilt from the three-term recurrence B_n = (x+2)B_{n-1} - B_{n-2}.
  add(
      {"F28", "Morgan-Voyce polynomials from matrix powers", "the Morgan-Voyce polynomials",
       "1 <= n <= 16, symbolic in x", CheckMode::symbolic, {{"n", 1}}, ""},
      [](const Params& p) {
        const long long n = p_get(p, "n");
        using P = Poly<Integer>;
        const P xp2 = P::var("x") + P(2);
        const Mat2<P> base{xp2, P(-1), P(1), P(0)};
        const Mat2<P> pw = pow_naive(base, n);
        std::vector<P> B{P(0), P(1)};  // B_{-1}, B_0
        for (long long k = 1; k <= n; ++k)
          B.push_back(xp2 * B[static_cast<std::size_t>(k)] - B[static_cast<std::size_t>(k - 1)]);
        const P& Bn = B[static_cast<std::size_t>(n + 1)];
        const P& Bn1 = B[static_cast<std::size_t>(n)];
        const P& Bn2 = B[static_cast<std::size_t>(n - 1)];
        const Mat2<P> fixture{Bn, -Bn1, Bn1, -Bn2};
        std::string lhs = "B=" + pw.a.to_string() + "; b=" + (pw.a - pw.c).to_string() +
                          "; M=" + pw.to_string();
        std::string rhs = "B=" + Bn.to_string() + "; b=" + (Bn - Bn1).to_string() +
                          "; M=" + fixture.to_string();
        return make_result("F28", p, std::move(lhs), std::move(rhs));
      },
      [](const SweepOptions& o) { return n_sweep(o, 16); });

  // F29 -- lhs: naive power of each fixture matrix; rhs: its printed closed form.
  add(
      {"F29", "closed-form fixture powers against the iterated product",
       "using, respectively, the following identities",
       "fixtures {identity, nilpotent-shift, doubling, fib-sign}, 1 <= n <= 20",
       CheckMode::numeric,
       {{"n", 1}, {"fixture", 0}},
       "fib-sign at n = 1 reads F_{-1} = 1 (backward recurrence extension)"},
      [](const Params& p) {
        const long long n = p_get(p, "n"), fi = p_get(p, "fixture");
        if (fi < 0 || fi > 3) throw malformed_params("fixture index must be in 0..3");
        const auto& fx = fixtures()[static_cast<std::size_t>(fi)];
        const Mat2<Integer> oracle = pow_naive(fx.base, n);
        const Mat2<Integer> closed = fixture_power(fx.name, n);
        return make_result("F29", p, fx.name + ": " + oracle.to_string(),
                           fx.name + ": " + closed.to_string());
      },
      [](const SweepOptions& o) {
        std::vector<Params> out;
        for (long long fi = 0; fi < 4; ++fi)
          for (long long n = 1; n <= o.n_max.value_or(20); ++n)
            out.push_back({{"fixture", fi}, {"n", n}});
        return out;
      });

  return reg;
}

}  // namespace detail

inline const std::vector<Family>& all_families() {
  static const std::vector<Family> registry = detail::build_registry();
  return registry;
}

}  // namespace matpow
