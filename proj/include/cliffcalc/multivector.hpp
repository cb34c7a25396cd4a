#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cliffcalc/signature.hpp"

namespace cliffcalc {

using Complex = std::complex<double>;

// A canonical basis blade e^{a1...ak}, a1 < ... < ak, as a bitmask:
// bit (a-1) set iff generator a is present. Mask 0 is the identity e.
using BladeMask = std::uint32_t;

int blade_grade(BladeMask mask);

struct BladeProduct {
  BladeMask mask;
  int sign;  // +1 or -1
};

// Product of two canonical blades. The result mask is a XOR b; the sign
// collects the anticommutation swaps needed to merge the index lists and
// eta^{cc} for every generator the blades share.
BladeProduct blade_mul(BladeMask a, BladeMask b, const Signature& sig);

// Dense multivector over complex doubles: coeffs[mask] is the coefficient
// of the blade with that mask; coeffs.size() == 2^n always.
struct Multivector {
  Signature sig;
  std::vector<Complex> coeffs;

  explicit Multivector(Signature s) : sig(s), coeffs(s.coeff_count(), Complex{}) {}

  static Multivector scalar(Signature s, Complex value);
  static Multivector basis_blade(Signature s, BladeMask mask, Complex coeff = Complex{1.0, 0.0});

  Complex operator[](BladeMask mask) const { return coeffs[mask]; }
  Complex& operator[](BladeMask mask) { return coeffs[mask]; }
};

Multivector add(const Multivector& u, const Multivector& v);
Multivector sub(const Multivector& u, const Multivector& v);
Multivector scale(Complex alpha, const Multivector& u);
Multivector geometric_product(const Multivector& u, const Multivector& v);

// Keeps the grade-k coefficients, zeroes the rest. Throws for k outside 0..n.
Multivector grade_project(const Multivector& u, int k);
Multivector even_part(const Multivector& u);
Multivector odd_part(const Multivector& u);

double max_abs_coeff(const Multivector& u);
bool is_zero(const Multivector& u);

// True iff the largest coefficientwise |u - v| is <= tol.
bool approx_eq(const Multivector& u, const Multivector& v, double tol);

inline Multivector operator+(const Multivector& u, const Multivector& v) { return add(u, v); }
inline Multivector operator-(const Multivector& u, const Multivector& v) { return sub(u, v); }
inline Multivector operator*(const Multivector& u, const Multivector& v) {
  return geometric_product(u, v);
}
inline Multivector operator*(Complex alpha, const Multivector& u) { return scale(alpha, u); }
inline Multivector operator*(double alpha, const Multivector& u) {
  return scale(Complex{alpha, 0.0}, u);
}
inline Multivector operator-(const Multivector& u) { return scale(Complex{-1.0, 0.0}, u); }

// Deterministic, explicit-state generator (splitmix64). Used everywhere a
// reproducible stream is needed; never global.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next();
  double next_unit();          // [0, 1)
  Complex next_in_unit_disc();  // |z| <= 1, uniform
};

// Derives an independent stream seed from (seed, salt).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

enum class CoeffProfile { Full, Even, Odd };

// Coefficients uniform in the complex unit disc; identical draws for a given
// seed regardless of profile, profile just zeroes the complementary grades.
Multivector random_multivector(const Signature& sig, std::uint64_t seed,
                               CoeffProfile profile = CoeffProfile::Full);

}  // namespace cliffcalc
