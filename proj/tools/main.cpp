// Command-line front end: compute 2x2 matrix powers by any implemented method,
// sweep the identity-family registry, list families, and print the reference
// sequences. Exit codes: 0 success / all instances pass, 1 verification
// failures, 2 usage or parse errors, 3 non-rational eigenvalues, 4 I/O errors.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matpow/closed_form.hpp"
#include "matpow/identities.hpp"
#include "matpow/parse.hpp"
#include "matpow/report.hpp"
#include "matpow/sequences.hpp"

namespace {

struct RunConfig {
  std::vector<std::string> families;         // ids, or the single entry "all"
  std::map<std::string, long long> n_max;    // per-family overrides, "" = global
  std::uint64_t seed = matpow::kDefaultSeed;
  std::string format = "text";               // json | csv | text
  std::string output;                        // empty = stdout
};

template <typename R>
int print_power(const matpow::Mat2<R>& m) {
  std::cout << m.a.to_string() << ' ' << m.b.to_string() << '\n'
            << m.c.to_string() << ' ' << m.d.to_string() << '\n';
  return 0;
}

template <typename R>
matpow::Mat2<R> dispatch_power(const matpow::Mat2<R>& m, long long n, const std::string& method) {
  if (method == "naive") return matpow::pow_naive(m, n);
  if (method == "binary") return matpow::pow_binary(m, n);
  if (method == "theorem1") return matpow::theorem1_power(m, n);
  if (method == "williams") return matpow::williams_power(m, n);
  throw matpow::parse_error("unknown method: " + method);
}

int cmd_power(const std::string& literal, long long n, const std::string& method, bool timed) {
  if (n < 0) {
    std::cerr << "error: n must be >= 0\n";
    return 2;
  }
  const bool gaussian = literal.find('i') != std::string::npos;
  if (gaussian && method == "eigen") {
    std::cerr << "error: method eigen needs a rational matrix\n";
    return 2;
  }
  const auto t0 = std::chrono::steady_clock::now();
  int rc = 0;
  if (gaussian) {
    const auto m = matpow::parse_mat2_gaussian(literal);
    rc = print_power(n == 0 ? matpow::Mat2<matpow::GaussianRational>::identity()
                            : dispatch_power(m, n, method));
  } else {
    const auto m = matpow::parse_mat2_rational(literal);
    if (n == 0) {
      rc = print_power(matpow::Mat2<matpow::Rational>::identity());
    } else if (method == "eigen") {
      rc = print_power(matpow::williams_eigen_power(m, n));
    } else {
      rc = print_power(dispatch_power(m, n, method));
    }
  }
  if (timed) {
    const auto t1 = std::chrono::steady_clock::now();
    std::cerr << "elapsed_ms="
              << std::chrono::duration<double, std::milli>(t1 - t0).count() << '\n';
  }
  return rc;
}

int cmd_list() {
  for (const auto& desc : matpow::list_families()) {
    std::cout << desc.id << "  [" << matpow::to_string(desc.mode) << "]  " << desc.title
              << "\n      anchor: \"" << desc.anchor << "\"\n      domain: " << desc.domain
              << '\n';
    if (!desc.note.empty()) std::cout << "      note: " << desc.note << '\n';
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  std::vector<std::string> ids;
  if (cfg.families.size() == 1 && cfg.families[0] == "all") {
    for (const auto& f : matpow::all_families()) ids.push_back(f.desc.id);
  } else {
    ids = cfg.families;
    for (const auto& id : ids) matpow::family_by_id(id);  // reject unknown ids up front
  }

  std::vector<matpow::FamilyReport> reports;
  for (const auto& id : ids) {
    matpow::SweepOptions opts;
    opts.seed = cfg.seed;
    if (auto it = cfg.n_max.find(id); it != cfg.n_max.end())
      opts.n_max = it->second;
    else if (auto global = cfg.n_max.find(""); global != cfg.n_max.end())
      opts.n_max = global->second;
    reports.push_back(matpow::verify_family(id, opts));
  }

  std::string rendered;
  if (cfg.format == "json")
    rendered = matpow::report_to_json(reports).dump(2) + "\n";
  else if (cfg.format == "csv")
    rendered = matpow::report_to_csv(reports);
  else
    rendered = matpow::report_to_text(reports);

  long long failures = 0;
  long long instances = 0;
  for (const auto& rep : reports) {
    failures += static_cast<long long>(rep.failures.size());
    instances += rep.instances;
  }

  if (cfg.output.empty()) {
    std::cout << rendered;
  } else {
    matpow::write_atomic(cfg.output, rendered);
  }
  std::cerr << "checked " << instances << " instances across " << reports.size()
            << " families, " << failures << " failures\n";
  return failures == 0 ? 0 : 1;
}

int cmd_seq(const std::string& kind, long long n, const std::string& fixture_name,
            long long m, long long x1, long long y1) {
  using namespace matpow;
  const long long min_n = kind == "fib" ? -1 : 1;
  if (n < min_n) {
    std::cerr << "error: --n must be >= " << min_n << " for kind " << kind << '\n';
    return 2;
  }
  if (kind == "fib") {
    std::cout << fibonacci(n).to_string() << '\n';
  } else if (kind == "lucas") {
    std::cout << lucas(n).to_string() << '\n';
  } else if (kind == "morgan-voyce") {
    auto [B, b] = morgan_voyce(n);
    std::cout << "B: " << B.to_string() << "\nb: " << b.to_string() << '\n';
  } else if (kind == "chebyshev") {
    auto [cosn, sinn] = chebyshev_pair(n);
    std::cout << "cos: " << cosn.to_string() << "\nsin/s: " << sinn.to_string() << '\n';
  } else if (kind == "brahmagupta") {
    auto [xn, yn] = brahmagupta_pair(n);
    std::cout << "x: " << xn.to_string() << "\ny: " << yn.to_string() << '\n';
  } else if (kind == "pell") {
    auto [xn, yn] = pell_pair(Integer(m), Integer(x1), Integer(y1), n);
    std::cout << xn.to_string() << ' ' << yn.to_string() << '\n';
  } else if (kind == "fixture") {
    std::cout << fixture_power(fixture_name, n).to_string() << '\n';
  } else {
    std::cerr << "error: unknown sequence kind: " << kind << '\n';
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact 2x2 matrix powers and the identity-family verifier"};
  app.require_subcommand(1);

  // power
  std::string matrix_literal, method = "theorem1";
  long long power_n = 1;
  bool timed = false;
  auto* power = app.add_subcommand("power", "compute a matrix power by a chosen method");
  power->add_option("--matrix", matrix_literal, "matrix literal a,b,c,d")->required();
  power->add_option("--n", power_n, "exponent (>= 0; 0 prints the identity)")->required();
  power->add_option("--method", method, "naive|binary|theorem1|williams|eigen");
  power->add_flag("--time", timed, "print elapsed_ms to stderr");

  // verify
  RunConfig cfg;
  std::vector<std::string> nmax_args;
  std::string seed_arg;
  auto* verify = app.add_subcommand("verify", "sweep identity families and report");
  verify->add_option("--family", cfg.families, "family ids or 'all'")
      ->required()
      ->delimiter(',');
  verify->add_option("--n-max", nmax_args,
                     "sweep bound override: N for all selected, or ID=N per family");
  verify->add_option("--seed", seed_arg, "64-bit seed for the random-matrix families");
  verify->add_option("--format", cfg.format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("--output", cfg.output, "write the report to this path (atomic)");

  // list
  auto* list = app.add_subcommand("list", "list all identity families");

  // seq
  std::string seq_kind, fixture_name = "identity";
  long long seq_n = 1, pell_m = 2, pell_x1 = 3, pell_y1 = 2;
  auto* seq = app.add_subcommand("seq", "print reference sequence values");
  seq->add_option("--kind", seq_kind,
                  "fib|lucas|morgan-voyce|chebyshev|brahmagupta|pell|fixture")
      ->required();
  seq->add_option("--n", seq_n, "index")->required();
  seq->add_option("--name", fixture_name, "fixture name for --kind fixture");
  seq->add_option("--m", pell_m, "pell: the non-square m");
  seq->add_option("--x1", pell_x1, "pell: starting x");
  seq->add_option("--y1", pell_y1, "pell: starting y");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (power->parsed()) return cmd_power(matrix_literal, power_n, method, timed);
    if (list->parsed()) return cmd_list();
    if (seq->parsed()) return cmd_seq(seq_kind, seq_n, fixture_name, pell_m, pell_x1, pell_y1);
    if (verify->parsed()) {
      if (const char* env = std::getenv("MATPOW_SEED"); env && seed_arg.empty())
        cfg.seed = std::stoull(env);
      if (!seed_arg.empty()) cfg.seed = std::stoull(seed_arg);
      for (const auto& spec : nmax_args) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos)
          cfg.n_max[""] = std::stoll(spec);
        else
          cfg.n_max[spec.substr(0, eq)] = std::stoll(spec.substr(eq + 1));
      }
      return cmd_verify(cfg);
    }
  } catch (const matpow::non_rational_eigenvalues& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const matpow::io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const matpow::unknown_family& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {  // parse_error, malformed_params, bad numbers
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
