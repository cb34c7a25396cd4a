#include "doctest.h"
#include <limits>

#include <stdexcept>

#include "cliffcalc/multivector.hpp"
#include "test_helpers.hpp"

using namespace cliffcalc;
using test_helpers::all_sigs_n5;
using test_helpers::bubble_sort_sign_oracle;
using test_helpers::mv;
using test_helpers::unit;

namespace {
const Complex kOne{1.0, 0.0};
const Complex kI{0.0, 1.0};
}  // namespace

TEST_CASE("signature validation and metric") {
  CHECK_THROWS_AS(Signature(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Signature(5, 5), std::invalid_argument);
  const Signature sig(1, 3);
  CHECK(sig.metric(1) == 1);
  CHECK(sig.metric(2) == -1);
  CHECK(sig.metric(4) == -1);
  CHECK(sig.matrix_order() == 4);
  CHECK(Signature(0, 0).matrix_order() == 1);
  CHECK(Signature(5, 0).matrix_order() == 8);
}

TEST_CASE("blade_mul worked examples") {
  const Signature cl20(2, 0);
  auto r = blade_mul(0b01, 0b10, cl20);  // e1 * e2
  CHECK(r.mask == 0b11);
  CHECK(r.sign == 1);

  r = blade_mul(0b10, 0b01, cl20);  // e2 * e1
  CHECK(r.mask == 0b11);
  CHECK(r.sign == -1);

  const Signature cl01(0, 1);
  r = blade_mul(0b1, 0b1, cl01);  // e1 * e1 with eta = -1
  CHECK(r.mask == 0);
  CHECK(r.sign == -1);
}

TEST_CASE("blade_mul agrees with the bubble-sort oracle everywhere") {
  for (const Signature& sig : all_sigs_n5()) {
    const BladeMask dim = BladeMask(sig.coeff_count());
    for (BladeMask a = 0; a < dim; ++a) {
      for (BladeMask b = 0; b < dim; ++b) {
        const auto got = blade_mul(a, b, sig);
        CHECK(got.mask == (a ^ b));
        CHECK(got.sign == bubble_sort_sign_oracle(a, b, sig));
      }
    }
  }
}

TEST_CASE("generator relations hold exactly") {
  for (const Signature& sig : all_sigs_n5()) {
    for (int a = 1; a <= sig.n(); ++a) {
      for (int b = 1; b <= sig.n(); ++b) {
        const Multivector ea = Multivector::basis_blade(sig, BladeMask(1) << (a - 1));
        const Multivector eb = Multivector::basis_blade(sig, BladeMask(1) << (b - 1));
        const Multivector lhs = ea * eb + eb * ea;
        Multivector rhs(sig);
        if (a == b) rhs.coeffs[0] = Complex{2.0 * sig.metric(a), 0.0};
        CHECK(is_zero(lhs - rhs));
      }
    }
  }
}

TEST_CASE("geometric product worked examples") {
  const Signature cl20(2, 0);
  const Multivector sum = mv(cl20, {{0b01, kOne}, {0b10, kOne}});
  CHECK(approx_eq(sum * sum, mv(cl20, {{0, Complex{2.0, 0.0}}}), 0.0));

  const Multivector e12 = Multivector::basis_blade(cl20, 0b11);
  CHECK(approx_eq(e12 * e12, mv(cl20, {{0, Complex{-1.0, 0.0}}}), 0.0));

  const Signature cl11(1, 1);
  const Multivector a = mv(cl11, {{0, kOne}, {0b01, kOne}});
  const Multivector b = mv(cl11, {{0, kOne}, {0b01, Complex{-1.0, 0.0}}});
  CHECK(is_zero(a * b));
}

TEST_CASE("geometric product is associative and unital") {
  for (const Signature& sig : all_sigs_n5()) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Multivector u = random_multivector(sig, mix_seed(seed, 1));
      const Multivector v = random_multivector(sig, mix_seed(seed, 2));
      const Multivector w = random_multivector(sig, mix_seed(seed, 3));
      CHECK(approx_eq((u * v) * w, u * (v * w), 1e-10));
      CHECK(approx_eq(u * unit(sig), u, 0.0));
      CHECK(approx_eq(unit(sig) * u, u, 0.0));
    }
  }
}

TEST_CASE("geometric product rejects mismatched signatures") {
  const Multivector u = unit(Signature(2, 0));
  const Multivector v = unit(Signature(1, 1));
  CHECK_THROWS_AS(geometric_product(u, v), std::invalid_argument);
  CHECK_THROWS_AS(add(u, v), std::invalid_argument);
  CHECK_THROWS_AS(approx_eq(u, v, 1e-9), std::invalid_argument);
}

TEST_CASE("grade_project worked examples") {
  const Signature cl20(2, 0);
  const Multivector u = mv(cl20, {{0, Complex{2, 0}}, {0b01, Complex{3, 0}}, {0b11, kOne}});
  CHECK(approx_eq(grade_project(u, 1), mv(cl20, {{0b01, Complex{3, 0}}}), 0.0));
  CHECK(approx_eq(grade_project(u, 0), mv(cl20, {{0, Complex{2, 0}}}), 0.0));
  CHECK(is_zero(grade_project(Multivector::basis_blade(cl20, 0b11), 1)));
  CHECK_THROWS_AS(grade_project(u, 3), std::invalid_argument);
  CHECK_THROWS_AS(grade_project(u, -1), std::invalid_argument);
}

TEST_CASE("grade_project is idempotent, orthogonal, and complete") {
  const Signature sig(2, 3);
  const Multivector u = random_multivector(sig, 17);
  Multivector total(sig);
  for (int k = 0; k <= sig.n(); ++k) {
    const Multivector part = grade_project(u, k);
    CHECK(approx_eq(grade_project(part, k), part, 0.0));
    for (int j = 0; j <= sig.n(); ++j) {
      if (j != k) CHECK(is_zero(grade_project(part, j)));
    }
    total = total + part;
  }
  CHECK(approx_eq(total, u, 0.0));
}

TEST_CASE("even and odd parts") {
  const Signature cl20(2, 0);
  const Multivector u = mv(cl20, {{0, Complex{2, 0}}, {0b01, Complex{3, 0}}, {0b11, kOne}});
  CHECK(approx_eq(even_part(u), mv(cl20, {{0, Complex{2, 0}}, {0b11, kOne}}), 0.0));
  CHECK(approx_eq(odd_part(u), mv(cl20, {{0b01, Complex{3, 0}}}), 0.0));
  CHECK(is_zero(odd_part(unit(cl20))));
  CHECK(approx_eq(even_part(u) + odd_part(u), u, 0.0));
}

TEST_CASE("add, scale, approx_eq") {
  const Signature cl20(2, 0);
  const Multivector e1 = Multivector::basis_blade(cl20, 0b01);
  CHECK(approx_eq(e1 + e1, mv(cl20, {{0b01, Complex{2, 0}}}), 0.0));
  CHECK(approx_eq(scale(kI, e1), mv(cl20, {{0b01, kI}}), 0.0));
  const Multivector nudged = unit(cl20) + scale(Complex{1e-15, 0}, e1);
  CHECK(approx_eq(unit(cl20), nudged, 1e-12));
  CHECK_FALSE(approx_eq(unit(cl20), nudged, 1e-16));
}

TEST_CASE("non-finite coefficients are rejected at construction") {
  const Signature sig(1, 0);
  const double inf = std::numeric_limits<double>::infinity();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(Multivector::scalar(sig, Complex{inf, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(Multivector::scalar(sig, Complex{0.0, nan}), std::invalid_argument);
  CHECK_THROWS_AS(Multivector::basis_blade(sig, 0b1, Complex{nan, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("random_multivector is deterministic and profiled") {
  const Signature sig(1, 3);
  const Multivector a = random_multivector(sig, 1);
  const Multivector b = random_multivector(sig, 1);
  CHECK(approx_eq(a, b, 0.0));
  CHECK_FALSE(approx_eq(a, random_multivector(sig, 2), 1e-12));

  const Multivector even = random_multivector(sig, 1, CoeffProfile::Even);
  CHECK(is_zero(odd_part(even)));
  const Multivector odd = random_multivector(sig, 1, CoeffProfile::Odd);
  CHECK(is_zero(even_part(odd)));
  CHECK(approx_eq(even + odd, a, 0.0));

  const Multivector c = random_multivector(sig, 2);
  CHECK(max_abs_coeff(c) <= 1.0);
}
