#include "cliffcalc/detinv.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "cliffcalc/errors.hpp"
#include "cliffcalc/involutions.hpp"
#include "cliffcalc/repr.hpp"

namespace cliffcalc {

namespace {

std::string sci(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3e", x);
  return buffer;
}

// The closed-form products are scalars; anything beyond rounding in the
// nonscalar coefficients means the implementation is broken.
void require_rank0(const Multivector& product, const Multivector& input) {
  const int degree = input.sig.matrix_order();
  const double bound = 1e-9 * (1.0 + std::pow(max_abs_coeff(input), degree));
  for (BladeMask m = 1; m < BladeMask(product.coeffs.size()); ++m) {
    if (std::abs(product.coeffs[m]) > bound) {
      throw std::logic_error("determinant product has a nonscalar part (" +
                             sci(std::abs(product.coeffs[m])) + " at mask " +
                             std::to_string(m) + "); closed form is broken");
    }
  }
}

}  // namespace

Complex trace(const Multivector& u) { return u.coeffs[0]; }

Complex trace_via_matrix(const Multivector& u) {
  return mat_trace(represent(u)) / double(u.sig.matrix_order());
}

Complex det_via_matrix(const Multivector& u) { return mat_det(represent(u)); }

Multivector det_numerator(const Multivector& u) {
  switch (u.sig.n()) {
    case 0:
      return Multivector::scalar(u.sig, Complex{1.0, 0.0});
    case 1:
      return grade_involution(u);
    case 2:
      return clifford_conjugation(u);
    case 3:
      return reverse(u) * grade_involution(u) * clifford_conjugation(u);
    case 4:
      return reverse(u) * nabla(grade_involution(u) * clifford_conjugation(u));
    case 5: {
      const Multivector inner = nabla(grade_involution(u) * clifford_conjugation(u));
      const Multivector left = u * reverse(u) * inner;
      return reverse(u) * inner * triangle(left);
    }
    default:
      throw UnsupportedDimensionError("closed forms are defined for n <= 5, got n = " +
                                      std::to_string(u.sig.n()));
  }
}

Complex det(const Multivector& u) {
  if (u.sig.n() > 5) return det_via_matrix(u);
  const Multivector product = u * det_numerator(u);
  require_rank0(product, u);
  return product.coeffs[0];
}

double default_invertibility_tol(const Multivector& u) {
  return 1e-12 * std::pow(std::max(1.0, max_abs_coeff(u)), u.sig.matrix_order());
}

Multivector inverse(const Multivector& u, double tol) {
  if (u.sig.n() > 5) {
    throw UnsupportedDimensionError("closed-form inverse is defined for n <= 5, got n = " +
                                    std::to_string(u.sig.n()));
  }
  const Multivector numerator = det_numerator(u);
  const Multivector product = u * numerator;
  require_rank0(product, u);
  const Complex d = product.coeffs[0];
  if (std::abs(d) <= tol) {
    throw NotInvertibleError("not invertible: |Det U| = " + sci(std::abs(d)) + " <= " +
                             sci(tol));
  }
  return scale(Complex{1.0, 0.0} / d, numerator);
}

Multivector inverse(const Multivector& u) { return inverse(u, default_invertibility_tol(u)); }

Complex det_parity_n4(const Multivector& u) {
  if (u.sig.n() != 4) {
    throw UnsupportedDimensionError("parity determinant is defined for n = 4, got n = " +
                                    std::to_string(u.sig.n()));
  }
  const bool even = is_zero(odd_part(u));
  const bool odd = is_zero(even_part(u));
  if (!even && !odd) {
    throw std::invalid_argument("parity determinant needs a purely even or purely odd element");
  }
  Multivector product(u.sig);
  if (even) {
    const Multivector rev = reverse(u);
    product = u * rev * plus_conj(rev) * plus_conj(u);
  } else {
    const Multivector rev = reverse(u);
    product = u * rev * rev * u;
  }
  require_rank0(product, u);
  return product.coeffs[0];
}

bool is_invertible(const Multivector& u, double tol) { return std::abs(det(u)) > tol; }

bool is_invertible(const Multivector& u) {
  return is_invertible(u, default_invertibility_tol(u));
}

}  // namespace cliffcalc
