#include "cliffcalc/multivector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace cliffcalc {

namespace {

void require_same_sig(const Multivector& u, const Multivector& v, const char* op) {
  if (u.sig != v.sig) {
    throw std::invalid_argument(std::string(op) + ": signature mismatch " + u.sig.str() +
                                " vs " + v.sig.str());
  }
}

void require_valid_mask(const Signature& sig, BladeMask mask, const char* op) {
  if (mask >= sig.coeff_count()) {
    throw std::invalid_argument(std::string(op) + ": blade mask " + std::to_string(mask) +
                                " out of range for " + sig.str());
  }
}

}  // namespace

int blade_grade(BladeMask mask) { return std::popcount(mask); }

BladeProduct blade_mul(BladeMask a, BladeMask b, const Signature& sig) {
  require_valid_mask(sig, a, "blade_mul");
  require_valid_mask(sig, b, "blade_mul");

  // Inversions between the two ascending index lists: for each generator in
  // b, every strictly higher generator in a costs one swap.
  int swaps = 0;
  for (BladeMask high = a >> 1; high != 0; high >>= 1) {
    swaps += std::popcount(high & b);
  }
  int sign = (swaps & 1) ? -1 : 1;

  // Shared generators contract through the metric.
  for (BladeMask common = a & b; common != 0; common &= common - 1) {
    sign *= sig.metric(std::countr_zero(common) + 1);
  }
  return {a ^ b, sign};
}

namespace {

void require_finite(Complex value, const char* op) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw std::invalid_argument(std::string(op) + ": coefficient must be finite");
  }
}

}  // namespace

Multivector Multivector::scalar(Signature s, Complex value) {
  require_finite(value, "scalar");
  Multivector out(s);
  out.coeffs[0] = value;
  return out;
}

Multivector Multivector::basis_blade(Signature s, BladeMask mask, Complex coeff) {
  require_valid_mask(s, mask, "basis_blade");
  require_finite(coeff, "basis_blade");
  Multivector out(s);
  out.coeffs[mask] = coeff;
  return out;
}

Multivector add(const Multivector& u, const Multivector& v) {
  require_same_sig(u, v, "add");
  Multivector out = u;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += v.coeffs[i];
  return out;
}

Multivector sub(const Multivector& u, const Multivector& v) {
  require_same_sig(u, v, "sub");
  Multivector out = u;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= v.coeffs[i];
  return out;
}

Multivector scale(Complex alpha, const Multivector& u) {
  Multivector out = u;
  for (auto& c : out.coeffs) c *= alpha;
  return out;
}

Multivector geometric_product(const Multivector& u, const Multivector& v) {
  require_same_sig(u, v, "geometric_product");
  Multivector out(u.sig);
  const auto dim = BladeMask(u.coeffs.size());
  for (BladeMask a = 0; a < dim; ++a) {
    const Complex ua = u.coeffs[a];
    if (ua == Complex{}) continue;
    for (BladeMask b = 0; b < dim; ++b) {
      const Complex vb = v.coeffs[b];
      if (vb == Complex{}) continue;
      const auto [mask, sign] = blade_mul(a, b, u.sig);
      out.coeffs[mask] += double(sign) * ua * vb;
    }
  }
  return out;
}

Multivector grade_project(const Multivector& u, int k) {
  if (k < 0 || k > u.sig.n()) {
    throw std::invalid_argument("grade_project: grade " + std::to_string(k) +
                                " out of range for " + u.sig.str());
  }
  Multivector out(u.sig);
  for (BladeMask m = 0; m < BladeMask(u.coeffs.size()); ++m) {
    if (blade_grade(m) == k) out.coeffs[m] = u.coeffs[m];
  }
  return out;
}

Multivector even_part(const Multivector& u) {
  Multivector out(u.sig);
  for (BladeMask m = 0; m < BladeMask(u.coeffs.size()); ++m) {
    if ((blade_grade(m) & 1) == 0) out.coeffs[m] = u.coeffs[m];
  }
  return out;
}

Multivector odd_part(const Multivector& u) {
  Multivector out(u.sig);
  for (BladeMask m = 0; m < BladeMask(u.coeffs.size()); ++m) {
    if ((blade_grade(m) & 1) == 1) out.coeffs[m] = u.coeffs[m];
  }
  return out;
}

double max_abs_coeff(const Multivector& u) {
  double best = 0.0;
  for (const auto& c : u.coeffs) best = std::max(best, std::abs(c));
  return best;
}

bool is_zero(const Multivector& u) {
  for (const auto& c : u.coeffs) {
    if (c != Complex{}) return false;
  }
  return true;
}

bool approx_eq(const Multivector& u, const Multivector& v, double tol) {
  require_same_sig(u, v, "approx_eq");
  for (std::size_t i = 0; i < u.coeffs.size(); ++i) {
    if (std::abs(u.coeffs[i] - v.coeffs[i]) > tol) return false;
  }
  return true;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double SplitMix64::next_unit() { return double(next() >> 11) * 0x1.0p-53; }

Complex SplitMix64::next_in_unit_disc() {
  for (;;) {
    const double x = 2.0 * next_unit() - 1.0;
    const double y = 2.0 * next_unit() - 1.0;
    if (x * x + y * y <= 1.0) return {x, y};
  }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  SplitMix64 g{seed};
  SplitMix64 h{g.next() ^ (salt + 0x9e3779b97f4a7c15ull)};
  return h.next();
}

Multivector random_multivector(const Signature& sig, std::uint64_t seed, CoeffProfile profile) {
  SplitMix64 rng{mix_seed(seed, 0x636f656666u)};
  Multivector out(sig);
  for (BladeMask m = 0; m < BladeMask(out.coeffs.size()); ++m) {
    const Complex c = rng.next_in_unit_disc();
    const bool even = (blade_grade(m) & 1) == 0;
    if (profile == CoeffProfile::Full || (profile == CoeffProfile::Even && even) ||
        (profile == CoeffProfile::Odd && !even)) {
      out.coeffs[m] = c;
    }
  }
  return out;
}

}  // namespace cliffcalc
