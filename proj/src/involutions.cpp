#include "cliffcalc/involutions.hpp"

#include <stdexcept>

#include "cliffcalc/errors.hpp"

namespace cliffcalc {

namespace {

// Applies a per-grade sign to every coefficient.
template <typename SignOfGrade>
Multivector grade_signed(const Multivector& u, SignOfGrade&& sign_of) {
  Multivector out = u;
  for (BladeMask m = 0; m < BladeMask(out.coeffs.size()); ++m) {
    if (sign_of(blade_grade(m)) < 0) out.coeffs[m] = -out.coeffs[m];
  }
  return out;
}

// b^-1 for a unit basis blade: b*b = s*e with s = +-1, so b^-1 = s*b.
Multivector blade_inverse(const Signature& sig, BladeMask mask) {
  const int s = blade_mul(mask, mask, sig).sign;
  return Multivector::basis_blade(sig, mask, Complex{double(s), 0.0});
}

}  // namespace

Multivector complex_conjugate(const Multivector& u) {
  Multivector out = u;
  for (auto& c : out.coeffs) c = std::conj(c);
  return out;
}

Multivector reverse(const Multivector& u) {
  return grade_signed(u, [](int k) { return (k * (k - 1) / 2) % 2 ? -1 : 1; });
}

Multivector grade_involution(const Multivector& u) {
  return grade_signed(u, [](int k) { return k % 2 ? -1 : 1; });
}

Multivector clifford_conjugation(const Multivector& u) {
  return grade_signed(u, [](int k) { return (k * (k + 1) / 2) % 2 ? -1 : 1; });
}

Multivector pseudo_hermitian(const Multivector& u) { return reverse(complex_conjugate(u)); }

Multivector hermitian(const Multivector& u) {
  const Signature& sig = u.sig;
  Multivector core = pseudo_hermitian(u);
  if (sig.p % 2 == 0) core = grade_involution(core);
  if (sig.p == 0) return core;
  const BladeMask conjugator = (BladeMask(1) << sig.p) - 1;  // e^{1..p}
  const Multivector blade = Multivector::basis_blade(sig, conjugator);
  return blade_inverse(sig, conjugator) * core * blade;
}

Multivector grade_flip(const Multivector& u, const std::vector<int>& grades) {
  unsigned flip_set = 0;
  for (int k : grades) {
    if (k < 0 || k > u.sig.n()) {
      throw std::invalid_argument("grade_flip: grade " + std::to_string(k) +
                                  " out of range for " + u.sig.str());
    }
    flip_set |= 1u << k;
  }
  return grade_signed(u, [flip_set](int k) { return (flip_set >> k) & 1 ? -1 : 1; });
}

Multivector nabla(const Multivector& u) {
  switch (u.sig.n()) {
    case 4:
      return grade_flip(u, {4});
    case 5:
      return grade_flip(u, {4, 5});
    default:
      throw UnsupportedDimensionError("nabla is defined for n = 4 or 5, got n = " +
                                      std::to_string(u.sig.n()));
  }
}

Multivector triangle(const Multivector& u) {
  if (u.sig.n() != 5) {
    throw UnsupportedDimensionError("triangle is defined for n = 5, got n = " +
                                    std::to_string(u.sig.n()));
  }
  return grade_flip(u, {5});
}

Multivector plus_conj(const Multivector& u) {
  if (u.sig.n() != 4) {
    throw UnsupportedDimensionError("plus conjugation is defined for n = 4, got n = " +
                                    std::to_string(u.sig.n()));
  }
  if (!is_zero(odd_part(u))) {
    throw std::invalid_argument("plus conjugation is defined on even elements only");
  }
  Multivector out = u;
  for (BladeMask m = 0; m < BladeMask(out.coeffs.size()); ++m) {
    // Even blades containing e^1 anticommute with it.
    if ((m & 1u) && (blade_grade(m) & 1) == 0) out.coeffs[m] = -out.coeffs[m];
  }
  return out;
}

}  // namespace cliffcalc
