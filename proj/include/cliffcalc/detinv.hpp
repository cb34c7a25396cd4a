#pragma once

#include "cliffcalc/multivector.hpp"

namespace cliffcalc {

// Projection onto the scalar subspace: Tr(u e + u_a e^a + ...) = u.
Complex trace(const Multivector& u);

// tr(represent(u)) / 2^floor((n+1)/2); equals trace(u).
Complex trace_via_matrix(const Multivector& u);

// Determinant of the matrix representation, computed on the matrix side.
Complex det_via_matrix(const Multivector& u);

// Closed-form determinant for n <= 5:
//   n=0: U                      n=1: U U^gi
//   n=2: U U^cc                 n=3: U U^rev U^gi U^cc
//   n=4: U U^rev (U^gi U^cc)^nabla
//   n=5: U U^rev (U^gi U^cc)^nabla (U U^rev (U^gi U^cc)^nabla)^triangle
// The product is checked to be pure rank 0 (anything else is a bug) and its
// scalar coefficient returned. n > 5 falls back to det_via_matrix.
Complex det(const Multivector& u);

// The closed-form product with the leading U removed (the adjugate-style
// numerator of the inverse); defined for n <= 5.
Multivector det_numerator(const Multivector& u);

// 1e-12 * max(1, max|coeff|)^(2^floor((n+1)/2)) — the determinant is a
// polynomial of that degree in the coefficients, so the floor scales with it.
double default_invertibility_tol(const Multivector& u);

// U^-1 = det_numerator(U) / Det U, for n <= 5. Throws NotInvertibleError
// when |Det U| <= tol and UnsupportedDimensionError for n > 5.
Multivector inverse(const Multivector& u, double tol);
Multivector inverse(const Multivector& u);

// Parity-split n = 4 determinant:
//   even U: U U^rev (U^rev)^plus U^plus
//   odd  U: U U^rev U^rev U
// Throws for n != 4 or mixed-parity input.
Complex det_parity_n4(const Multivector& u);

bool is_invertible(const Multivector& u, double tol);
bool is_invertible(const Multivector& u);

}  // namespace cliffcalc
