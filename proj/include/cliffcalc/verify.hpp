#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliffcalc/multivector.hpp"

namespace cliffcalc {

// Randomized cross-check suites shared by the CLI `verify` subcommand and
// the acceptance tests. Every case derives its own seed from (seed,
// signature, suite, case index), so a failure line is reproducible in
// isolation.
struct VerifyOptions {
  std::optional<Signature> only_sig;
  std::optional<std::string> only_suite;
  int trials = 100;
  std::uint64_t seed = 0;
  double tol = 1e-9;
};

struct SuiteResult {
  Signature sig;
  std::string suite;
  int trials = 0;
  int failures = 0;
  std::vector<std::string> failure_lines;
};

// Fixed suite order: det-oracle, multiplicativity, conj-invariance,
// similarity, parity-n4, repr-indep.
const std::vector<std::string>& suite_names();

// All (p,q) with 0 <= n <= max_n, n ascending then p descending.
std::vector<Signature> signatures_up_to(int max_n);

// Results in signature-major order; inapplicable suites (parity-n4 away from
// n = 4) are skipped.
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

}  // namespace cliffcalc
