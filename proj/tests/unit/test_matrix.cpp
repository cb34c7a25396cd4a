#include "doctest.h"

#include <cmath>

#include "cliffcalc/matrix.hpp"
#include "cliffcalc/multivector.hpp"

using namespace cliffcalc;

namespace {

ComplexMatrix random_matrix(int dim, std::uint64_t seed) {
  SplitMix64 rng{mix_seed(seed, 0x6d6174u)};
  ComplexMatrix m(dim);
  for (auto& e : m.entries()) e = rng.next_in_unit_disc();
  return m;
}

// Cofactor expansion along the first row; independent of the LU path.
Complex cofactor_det(const ComplexMatrix& m) {
  const int n = m.dim();
  if (n == 0) return Complex{1.0, 0.0};
  if (n == 1) return m.at(0, 0);
  Complex total{};
  for (int col = 0; col < n; ++col) {
    ComplexMatrix minor(n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == col) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    const double sign = (col % 2 == 0) ? 1.0 : -1.0;
    total += sign * m.at(0, col) * cofactor_det(minor);
  }
  return total;
}

}  // namespace

TEST_CASE("determinant and trace of simple matrices") {
  CHECK(mat_det(ComplexMatrix::identity(4)) == Complex{1.0, 0.0});
  ComplexMatrix diag(2);
  diag.at(0, 0) = Complex{2.0, 0.0};
  diag.at(1, 1) = Complex{3.0, 0.0};
  CHECK(mat_det(diag) == Complex{6.0, 0.0});
  CHECK(mat_trace(ComplexMatrix::identity(4)) == Complex{4.0, 0.0});
}

TEST_CASE("mat_det matches cofactor expansion on random matrices") {
  for (int dim = 1; dim <= 4; ++dim) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const ComplexMatrix m = random_matrix(dim, seed * 10 + dim);
      CHECK(std::abs(mat_det(m) - cofactor_det(m)) <= 1e-9);
    }
  }
}

TEST_CASE("singular matrices give a zero determinant") {
  ComplexMatrix m(3);
  for (int c = 0; c < 3; ++c) {
    m.at(0, c) = Complex{1.0, 0.0};
    m.at(1, c) = Complex{2.0, 0.0};  // row 1 = 2 * row 0
    m.at(2, c) = Complex{double(c), 1.0};
  }
  CHECK(std::abs(mat_det(m)) <= 1e-12);
}

TEST_CASE("mat_mul matches the brute-force triple loop") {
  const ComplexMatrix a = random_matrix(4, 3);
  const ComplexMatrix b = random_matrix(4, 4);
  const ComplexMatrix got = a * b;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Complex want{};
      for (int k = 0; k < 4; ++k) want += a.at(i, k) * b.at(k, j);
      CHECK(std::abs(got.at(i, j) - want) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(mat_mul(random_matrix(2, 0), random_matrix(3, 0)), std::invalid_argument);
}

TEST_CASE("hermitian transpose") {
  const ComplexMatrix m = random_matrix(3, 7);
  const ComplexMatrix h = mat_hermitian_transpose(m);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(h.at(i, j) == std::conj(m.at(j, i)));
    }
  }
  CHECK(mat_max_abs_diff(mat_hermitian_transpose(h), m) == 0.0);
}

TEST_CASE("mat_inverse inverts well-conditioned matrices") {
  const ComplexMatrix m = random_matrix(4, 11);
  const ComplexMatrix inv = mat_inverse(m);
  CHECK(mat_approx_eq(m * inv, ComplexMatrix::identity(4), 1e-10));
  CHECK(mat_approx_eq(inv * m, ComplexMatrix::identity(4), 1e-10));

  ComplexMatrix singular(2);
  singular.at(0, 0) = Complex{1.0, 0.0};
  singular.at(1, 0) = Complex{1.0, 0.0};
  CHECK_THROWS_AS(mat_inverse(singular), std::invalid_argument);
}
