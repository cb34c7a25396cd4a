// cliffcalc: command-line calculator for complex Clifford algebras Cl(p,q).
//
// Exit codes: 0 ok, 1 verify failure, 2 expression parse error, 3 domain
// error (bad signature, not invertible, ...), 4 det oracle mismatch,
// 5 unsupported dimension.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "cliffcalc/detinv.hpp"
#include "cliffcalc/errors.hpp"
#include "cliffcalc/json_io.hpp"
#include "cliffcalc/parse.hpp"
#include "cliffcalc/repr.hpp"
#include "cliffcalc/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitDomainError = 3;
constexpr int kExitOracleMismatch = 4;
constexpr int kExitUnsupportedDimension = 5;

cliffcalc::Signature parse_sig_option(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("--sig expects the form p,q (e.g. --sig 2,0)");
  }
  int p = 0;
  int q = 0;
  try {
    std::size_t used = 0;
    p = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    const std::string rest = text.substr(comma + 1);
    q = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("--sig expects the form p,q (e.g. --sig 2,0)");
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("--sig values out of range");
  }
  return cliffcalc::Signature(p, q);
}

nlohmann::json complex_to_json(cliffcalc::Complex z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

struct Options {
  std::string sig_text;
  bool sig_given = false;
  double tol = 1e-9;
  bool tol_given = false;
  bool json = false;
  std::uint64_t seed = 0;
  int trials = 100;
  bool check = false;
  std::string only_suite;
  bool only_given = false;
};

cliffcalc::Signature require_sig(const Options& opt) {
  if (!opt.sig_given) throw std::invalid_argument("--sig p,q is required for this subcommand");
  return parse_sig_option(opt.sig_text);
}

cliffcalc::Signature require_sig_n5(const Options& opt, const char* what) {
  const cliffcalc::Signature sig = require_sig(opt);
  if (sig.n() > 5) {
    throw cliffcalc::UnsupportedDimensionError(std::string(what) +
                                               " supports n <= 5, got n = " +
                                               std::to_string(sig.n()));
  }
  return sig;
}

int run_eval(const Options& opt, const std::string& expr) {
  const auto sig = require_sig(opt);
  const auto value = cliffcalc::eval_string(expr, sig);
  if (opt.json) {
    std::cout << cliffcalc::multivector_to_json(value).dump() << "\n";
  } else {
    std::cout << cliffcalc::to_canonical_text(value) << "\n";
  }
  return kExitOk;
}

int run_det(const Options& opt, const std::string& expr) {
  const auto sig = require_sig_n5(opt, "det");
  const auto value = cliffcalc::eval_string(expr, sig);
  const cliffcalc::Complex d = cliffcalc::det(value);

  std::optional<cliffcalc::Complex> oracle;
  if (opt.check) oracle = cliffcalc::det_via_matrix(value);

  if (opt.json) {
    nlohmann::json out{{"value", complex_to_json(d)}};
    if (oracle) out["oracle"] = complex_to_json(*oracle);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << cliffcalc::format_complex(d) << "\n";
    if (oracle) std::cout << "oracle " << cliffcalc::format_complex(*oracle) << "\n";
  }

  if (oracle && std::abs(d - *oracle) > opt.tol * (1.0 + std::abs(*oracle))) {
    std::cerr << "det: closed form and matrix oracle differ by "
              << std::abs(d - *oracle) << " (tol " << opt.tol << ")\n";
    return kExitOracleMismatch;
  }
  return kExitOk;
}

int run_inv(const Options& opt, const std::string& expr) {
  const auto sig = require_sig_n5(opt, "inv");
  const auto value = cliffcalc::eval_string(expr, sig);
  const auto result = opt.tol_given ? cliffcalc::inverse(value, opt.tol)
                                    : cliffcalc::inverse(value);
  if (opt.json) {
    std::cout << cliffcalc::multivector_to_json(result).dump() << "\n";
  } else {
    std::cout << cliffcalc::to_canonical_text(result) << "\n";
  }
  return kExitOk;
}

int run_trace(const Options& opt, const std::string& expr) {
  const auto sig = require_sig(opt);
  const auto value = cliffcalc::eval_string(expr, sig);
  const cliffcalc::Complex t = cliffcalc::trace(value);
  if (opt.json) {
    std::cout << nlohmann::json{{"value", complex_to_json(t)}}.dump() << "\n";
  } else {
    std::cout << cliffcalc::format_complex(t) << "\n";
  }
  return kExitOk;
}

int run_matrix(const Options& opt, const std::string& expr) {
  const auto sig = require_sig(opt);
  const auto value = cliffcalc::eval_string(expr, sig);
  std::cout << cliffcalc::matrix_to_json(cliffcalc::represent(value)).dump() << "\n";
  return kExitOk;
}

int run_verify(const Options& opt) {
  cliffcalc::VerifyOptions vopt;
  vopt.trials = opt.trials;
  vopt.seed = opt.seed;
  vopt.tol = opt.tol;
  if (opt.sig_given) {
    const auto sig = parse_sig_option(opt.sig_text);
    if (sig.n() > 5) {
      throw cliffcalc::UnsupportedDimensionError("verify supports n <= 5, got n = " +
                                                 std::to_string(sig.n()));
    }
    vopt.only_sig = sig;
  }
  if (opt.only_given) {
    const auto& names = cliffcalc::suite_names();
    if (std::find(names.begin(), names.end(), opt.only_suite) == names.end()) {
      std::string known;
      for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
      throw std::invalid_argument("unknown suite '" + opt.only_suite + "' (known: " + known + ")");
    }
    vopt.only_suite = opt.only_suite;
  }

  const auto results = cliffcalc::run_verification(vopt);
  int failed_suites = 0;
  for (const auto& r : results) {
    std::cout << "SUITE sig=" << r.sig.str() << " name=" << r.suite << " trials=" << r.trials
              << " failures=" << r.failures << "\n";
    for (const auto& line : r.failure_lines) std::cout << "  " << line << "\n";
    if (r.failures > 0) ++failed_suites;
  }
  std::cout << "verify: " << (results.size() - failed_suites) << "/" << results.size()
            << " suites passed\n";
  return failed_suites == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"complex Clifford algebra calculator (Cl(p,q), n = p+q <= 9)"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--sig", opt.sig_text, "signature as p,q (e.g. --sig 2,0)");
  app.add_option("--tol", opt.tol, "comparison / invertibility tolerance (default 1e-9)");
  app.add_flag("--json", opt.json, "emit JSON instead of canonical text");
  app.add_option("--seed", opt.seed, "base seed for randomized suites (default 0)");
  app.add_option("--trials", opt.trials, "random cases per suite (default 100)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--check", opt.check, "det: also print the matrix-oracle value and compare");
  app.add_option("--only", opt.only_suite, "verify: run a single suite by name");

  std::string expr;
  auto* eval_cmd = app.add_subcommand("eval", "parse and evaluate an expression");
  auto* det_cmd = app.add_subcommand("det", "closed-form determinant (n <= 5)");
  auto* inv_cmd = app.add_subcommand("inv", "closed-form inverse (n <= 5)");
  auto* trace_cmd = app.add_subcommand("trace", "scalar-part trace");
  auto* matrix_cmd = app.add_subcommand("matrix", "recurrent matrix representation (JSON)");
  auto* verify_cmd = app.add_subcommand("verify", "run the randomized cross-check suites");
  for (auto* cmd : {eval_cmd, det_cmd, inv_cmd, trace_cmd, matrix_cmd}) {
    cmd->add_option("expr", expr, "multivector expression")->required();
    cmd->fallthrough();
  }
  verify_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  opt.sig_given = app.count("--sig") > 0;
  opt.tol_given = app.count("--tol") > 0;
  opt.only_given = app.count("--only") > 0;

  try {
    if (eval_cmd->parsed()) return run_eval(opt, expr);
    if (det_cmd->parsed()) return run_det(opt, expr);
    if (inv_cmd->parsed()) return run_inv(opt, expr);
    if (trace_cmd->parsed()) return run_trace(opt, expr);
    if (matrix_cmd->parsed()) return run_matrix(opt, expr);
    if (verify_cmd->parsed()) return run_verify(opt);
  } catch (const cliffcalc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const cliffcalc::NotInvertibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const cliffcalc::UnsupportedDimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupportedDimension;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}
