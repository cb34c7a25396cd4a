#pragma once

#include <cstddef>
#include <vector>

#include "cliffcalc/multivector.hpp"

namespace cliffcalc {

// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : dim_(dim), entries_(std::size_t(dim) * dim, Complex{}) {}

  static ComplexMatrix identity(int dim);

  int dim() const { return dim_; }

  Complex at(int r, int c) const { return entries_[std::size_t(r) * dim_ + c]; }
  Complex& at(int r, int c) { return entries_[std::size_t(r) * dim_ + c]; }

  const std::vector<Complex>& entries() const { return entries_; }
  std::vector<Complex>& entries() { return entries_; }

 private:
  int dim_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix mat_add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix mat_scale(Complex alpha, const ComplexMatrix& m);
Complex mat_trace(const ComplexMatrix& m);
ComplexMatrix mat_hermitian_transpose(const ComplexMatrix& m);

// LU decomposition with partial pivoting on the largest-modulus pivot.
// Singular matrices come back as (approximately) zero.
Complex mat_det(const ComplexMatrix& m);

// Gauss-Jordan with partial pivoting; throws std::invalid_argument if a
// pivot vanishes.
ComplexMatrix mat_inverse(const ComplexMatrix& m);

double mat_max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool mat_approx_eq(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return mat_mul(a, b);
}
inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  return mat_add(a, b);
}
inline ComplexMatrix operator*(Complex alpha, const ComplexMatrix& m) {
  return mat_scale(alpha, m);
}
inline ComplexMatrix operator-(const ComplexMatrix& m) {
  return mat_scale(Complex{-1.0, 0.0}, m);
}

}  // namespace cliffcalc
