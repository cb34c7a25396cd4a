#include "cliffcalc/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "cliffcalc/detinv.hpp"
#include "cliffcalc/involutions.hpp"
#include "cliffcalc/repr.hpp"

namespace cliffcalc {

namespace {

std::string sci(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3e", x);
  return buffer;
}

// Alternate representations go through a random similarity transform, so
// their comparisons get the looser documented bound.
constexpr double kReprIndepTol = 1e-7;

// Similarity cases need a decently conditioned U, not merely Det != 0.
constexpr double kSimilarityDetFloor = 0.05;

std::uint64_t case_seed(const VerifyOptions& options, const Signature& sig, int suite_index,
                        int case_index, int stream) {
  const std::uint64_t salt = (std::uint64_t(sig.p) << 40) ^ (std::uint64_t(sig.q) << 32) ^
                             (std::uint64_t(suite_index) << 24) ^
                             (std::uint64_t(case_index) << 4) ^ std::uint64_t(stream);
  return mix_seed(options.seed, salt);
}

bool close(Complex actual, Complex expected, double tol) {
  return std::abs(actual - expected) <= tol * (1.0 + std::abs(expected));
}

void record_failure(SuiteResult& result, std::uint64_t seed, int case_index,
                    const std::string& what) {
  ++result.failures;
  if (result.failure_lines.size() < 25) {
    result.failure_lines.push_back("FAIL sig=" + result.sig.str() + " suite=" + result.suite +
                                   " seed=" + std::to_string(seed) + " case=" +
                                   std::to_string(case_index) + ": " + what);
  }
}

Multivector draw_invertible(const Signature& sig, std::uint64_t seed) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    const Multivector u = random_multivector(sig, mix_seed(seed, std::uint64_t(attempt)));
    if (std::abs(det(u)) > kSimilarityDetFloor) return u;
  }
  return Multivector::scalar(sig, Complex{1.0, 0.0});
}

void suite_det_oracle(const Signature& sig, const VerifyOptions& options, int suite_index,
                      SuiteResult& result) {
  for (int i = 0; i < options.trials; ++i) {
    const std::uint64_t seed = case_seed(options, sig, suite_index, i, 0);
    const Multivector u = random_multivector(sig, seed);
    const Complex closed = det(u);
    const Complex oracle = det_via_matrix(u);
    ++result.trials;
    if (!close(closed, oracle, options.tol)) {
      record_failure(result, seed, i,
                     "|det - det_via_matrix| = " + sci(std::abs(closed - oracle)));
    }
  }
}

void suite_multiplicativity(const Signature& sig, const VerifyOptions& options, int suite_index,
                            SuiteResult& result) {
  for (int i = 0; i < options.trials; ++i) {
    const std::uint64_t seed = case_seed(options, sig, suite_index, i, 0);
    const Multivector u = random_multivector(sig, seed);
    const Multivector v = random_multivector(sig, case_seed(options, sig, suite_index, i, 1));
    SplitMix64 rng{case_seed(options, sig, suite_index, i, 2)};
    const Complex alpha = rng.next_in_unit_disc();

    ++result.trials;
    bool ok = close(det(u * v), det(u) * det(v), options.tol);
    const Complex scaled = det(scale(alpha, u));
    const Complex expected = std::pow(alpha, sig.matrix_order()) * det(u);
    ok = ok && close(scaled, expected, options.tol);
    if (!ok) record_failure(result, seed, i, "Det(UV) or Det(aU) identity violated");
  }
}

void suite_conj_invariance(const Signature& sig, const VerifyOptions& options, int suite_index,
                           SuiteResult& result) {
  for (int i = 0; i < options.trials; ++i) {
    const std::uint64_t seed = case_seed(options, sig, suite_index, i, 0);
    const Multivector u = random_multivector(sig, seed);
    const Complex d = det(u);
    const Complex t = trace(u);

    ++result.trials;
    bool ok = close(det(grade_involution(u)), d, options.tol) &&
              close(det(reverse(u)), d, options.tol) &&
              close(std::conj(det(complex_conjugate(u))), d, options.tol) &&
              close(std::conj(det(pseudo_hermitian(u))), d, options.tol) &&
              close(std::conj(det(hermitian(u))), d, options.tol);
    ok = ok && close(trace(grade_involution(u)), t, options.tol) &&
         close(trace(reverse(u)), t, options.tol) &&
         close(std::conj(trace(complex_conjugate(u))), t, options.tol) &&
         close(std::conj(trace(pseudo_hermitian(u))), t, options.tol) &&
         close(std::conj(trace(hermitian(u))), t, options.tol);
    if (!ok) record_failure(result, seed, i, "conjugation invariance of Det/Tr violated");
  }
}

void suite_similarity(const Signature& sig, const VerifyOptions& options, int suite_index,
                      SuiteResult& result) {
  for (int i = 0; i < options.trials; ++i) {
    const std::uint64_t seed = case_seed(options, sig, suite_index, i, 0);
    const Multivector u = draw_invertible(sig, seed);
    const Multivector v = random_multivector(sig, case_seed(options, sig, suite_index, i, 1));
    const Multivector conjugated = inverse(u) * v * u;

    ++result.trials;
    const bool ok = close(trace(conjugated), trace(v), options.tol) &&
                    close(det(conjugated), det(v), options.tol);
    if (!ok) record_failure(result, seed, i, "similarity invariance of Det/Tr violated");
  }
}

void suite_parity_n4(const Signature& sig, const VerifyOptions& options, int suite_index,
                    SuiteResult& result) {
  for (int i = 0; i < options.trials; ++i) {
    const std::uint64_t seed = case_seed(options, sig, suite_index, i, 0);
    const Multivector even = random_multivector(sig, seed, CoeffProfile::Even);
    const Multivector odd =
        random_multivector(sig, case_seed(options, sig, suite_index, i, 1), CoeffProfile::Odd);

    ++result.trials;
    const bool ok = close(det_parity_n4(even), det(even), options.tol) &&
                    close(det_parity_n4(odd), det(odd), options.tol);
    if (!ok) record_failure(result, seed, i, "parity determinant disagrees with det");
  }
}

void suite_repr_indep(const Signature& sig, const VerifyOptions& options, int suite_index,
                      SuiteResult& result) {
  const double tol = std::max(options.tol, kReprIndepTol);
  for (int i = 0; i < options.trials; ++i) {
    const std::uint64_t seed = case_seed(options, sig, suite_index, i, 0);
    const Multivector u = random_multivector(sig, case_seed(options, sig, suite_index, i, 1));
    const Complex t_ref = trace_via_matrix(u);
    const Complex d_ref = det_via_matrix(u);

    ++result.trials;
    bool ok = true;
    const auto betas = alternate_representation(sig, seed, false);
    const ComplexMatrix rep = represent(u, betas);
    ok = ok && close(mat_trace(rep) / double(sig.matrix_order()), t_ref, tol);
    ok = ok && close(mat_det(rep), d_ref, tol);
    if (sig.n() % 2 == 1) {
      const auto negated = alternate_representation(sig, seed, true);
      const ComplexMatrix rep_neg = represent(u, negated);
      ok = ok && close(mat_trace(rep_neg) / double(sig.matrix_order()), t_ref, tol);
      ok = ok && close(mat_det(rep_neg), d_ref, tol);
    }
    if (!ok) record_failure(result, seed, i, "alternate representation changed Tr or Det");
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"det-oracle",  "multiplicativity",
                                                 "conj-invariance", "similarity",
                                                 "parity-n4",   "repr-indep"};
  return names;
}

std::vector<Signature> signatures_up_to(int max_n) {
  std::vector<Signature> sigs;
  for (int n = 0; n <= max_n; ++n) {
    for (int p = n; p >= 0; --p) sigs.emplace_back(p, n - p);
  }
  return sigs;
}

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
  using SuiteFn = std::function<void(const Signature&, const VerifyOptions&, int, SuiteResult&)>;
  const std::vector<SuiteFn> runners = {suite_det_oracle, suite_multiplicativity,
                                        suite_conj_invariance, suite_similarity, suite_parity_n4,
                                        suite_repr_indep};
  const auto& names = suite_names();

  std::vector<Signature> sigs;
  if (options.only_sig) {
    sigs.push_back(*options.only_sig);
  } else {
    sigs = signatures_up_to(5);
  }

  std::vector<SuiteResult> results;
  for (const Signature& sig : sigs) {
    for (std::size_t s = 0; s < runners.size(); ++s) {
      if (options.only_suite && names[s] != *options.only_suite) continue;
      if (names[s] == "parity-n4" && sig.n() != 4) continue;
      SuiteResult result;
      result.sig = sig;
      result.suite = names[s];
      runners[s](sig, options, int(s), result);
      results.push_back(std::move(result));
    }
  }
  return results;
}

}  // namespace cliffcalc
