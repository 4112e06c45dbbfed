#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matpow/binomial.hpp"
#include "matpow/closed_form.hpp"
#include "matpow/errors.hpp"
#include "matpow/gaussian.hpp"
#include "matpow/mat2.hpp"
#include "matpow/poly.hpp"
#include "matpow/sequences.hpp"

namespace matpow {

using Params = std::map<std::string, long long>;

enum class CheckMode { numeric, symbolic, matrix };

inline const char* to_string(CheckMode m) {
  switch (m) {
    case CheckMode::numeric: return "numeric";
    case CheckMode::symbolic: return "symbolic";
    case CheckMode::matrix: return "matrix";
  }
  return "?";
}

struct ParamSpec {
  std::string name;
  std::optional<long long> min;  // declared type bound; violations are malformed
};

struct FamilyDescriptor {
  std::string id;
  std::string title;
  std::string anchor;  // verbatim source quote the family is pinned to
  std::string domain;  // human-readable default sweep domain
  CheckMode mode = CheckMode::numeric;
  std::vector<ParamSpec> params;
  std::string note;  // extensions or conventions worth surfacing
};

/// Outcome of one instance. Both sides are rendered from canonical values and
/// the verdict is literal equality of the renders, so equal holds exactly when
/// the two values are structurally identical.
struct CheckResult {
  std::string family;
  Params params;
  std::string lhs;
  std::string rhs;
  bool equal = false;
  double elapsed_ms = 0.0;
};

struct FamilyReport {
  std::string id;
  std::string domain;  // the domain actually swept, including any override
  long long instances = 0;
  std::vector<CheckResult> failures;
  double elapsed_ms = 0.0;
};

inline constexpr std::uint64_t kDefaultSeed = 0x9E3779B97F4A7C15ull;

struct SweepOptions {
  std::optional<long long> n_max;  // overrides the family's leading sweep bound
  std::uint64_t seed = kDefaultSeed;
};

struct Family {
  FamilyDescriptor desc;
  std::function<CheckResult(const Params&)> check;
  std::function<std::vector<Params>(const SweepOptions&)> domain;
};

// deterministic seeded generator for the random-matrix families
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  long long uniform(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

namespace detail {

inline long long p_get(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw malformed_params("missing parameter: " + key);
  return it->second;
}

inline Integer pm(long long e) { return e % 2 == 0 ? Integer(1) : Integer(-1); }

inline Integer pow2(long long e) { return int_pow(Integer(2), e); }

inline Rational pow2q(long long e) {
  return e >= 0 ? Rational(pow2(e)) : Rational(Integer(1), pow2(-e));
}

inline CheckResult make_result(std::string family, const Params& params, std::string lhs,
                               std::string rhs) {
  CheckResult r;
  r.family = std::move(family);
  r.params = params;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.equal = r.lhs == r.rhs;
  return r;
}

inline std::array<long long, 4> sample_entries(SplitMix64& rng, bool require_nonzero_det) {
  for (;;) {
    std::array<long long, 4> e{rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(-9, 9),
                               rng.uniform(-9, 9)};
    if (!require_nonzero_det || e[0] * e[3] - e[1] * e[2] != 0) return e;
  }
}

inline Mat2<Integer> params_matrix(const Params& p) {
  return {Integer(p_get(p, "a")), Integer(p_get(p, "b")), Integer(p_get(p, "c")),
          Integer(p_get(p, "d"))};
}

inline void push_matrix(Params& p, const std::array<long long, 4>& e) {
  p["a"] = e[0];
  p["b"] = e[1];
  p["c"] = e[2];
  p["d"] = e[3];
}

}  // namespace detail

const std::vector<Family>& all_families();

inline const Family& family_by_id(const std::string& id) {
  for (const auto& f : all_families())
    if (f.desc.id == id) return f;
  throw unknown_family(id);
}

inline std::vector<FamilyDescriptor> list_families() {
  std::vector<FamilyDescriptor> out;
  for (const auto& f : all_families()) out.push_back(f.desc);
  return out;
}

/// Run one instance: validates params against the declared specs, then
/// evaluates both sides by their independent routes.
inline CheckResult check_instance(const std::string& id, const Params& params) {
  const Family& fam = family_by_id(id);
  for (const auto& spec : fam.desc.params) {
    long long v = detail::p_get(params, spec.name);
    if (spec.min && v < *spec.min)
      throw malformed_params("parameter " + spec.name + " = " + std::to_string(v) +
                             " below declared minimum " + std::to_string(*spec.min));
  }
  auto t0 = std::chrono::steady_clock::now();
  CheckResult r = fam.check(params);
  auto t1 = std::chrono::steady_clock::now();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

/// The two rendered sides without the verdict (debugging aid).
inline std::pair<std::string, std::string> lhs_rhs(const std::string& id, const Params& params) {
  CheckResult r = check_instance(id, params);
  return {r.lhs, r.rhs};
}

/// Sweep an arbitrary family definition (also used by harness self-tests).
inline FamilyReport sweep_family(const Family& fam, const SweepOptions& opts = {}) {
  auto t0 = std::chrono::steady_clock::now();
  FamilyReport report;
  report.id = fam.desc.id;
  report.domain = fam.desc.domain;
  if (opts.n_max)
    report.domain += " [sweep bound override: " + std::to_string(*opts.n_max) + "]";
  for (const Params& p : fam.domain(opts)) {
    auto i0 = std::chrono::steady_clock::now();
    CheckResult r = fam.check(p);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - i0)
                       .count();
    ++report.instances;
    if (!r.equal) report.failures.push_back(std::move(r));
  }
  auto t1 = std::chrono::steady_clock::now();
  report.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return report;
}

inline FamilyReport verify_family(const std::string& id, const SweepOptions& opts = {}) {
  return sweep_family(family_by_id(id), opts);
}

}  // namespace matpow

#include "matpow/families.hpp"
