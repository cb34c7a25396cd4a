#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliffcalc {

// Hard cap on the number of generators. Textual blade tokens use single
// digits and the closed forms stop at n = 5, so 9 is plenty.
inline constexpr int kMaxDimension = 9;

// Metric signature of Cl(p,q): generators 1..p square to +e, the remaining
// q square to -e. n = 0 is the degenerate scalar algebra.
struct Signature {
  int p = 0;
  int q = 0;

  Signature() = default;

  Signature(int p_in, int q_in) : p(p_in), q(q_in) {
    if (p < 0 || q < 0 || p + q > kMaxDimension) {
      throw std::invalid_argument("signature (" + std::to_string(p_in) + "," +
                                  std::to_string(q_in) +
                                  ") out of range: need p,q >= 0 and p+q <= " +
                                  std::to_string(kMaxDimension));
    }
  }

  int n() const { return p + q; }

  // Number of basis blades, 2^n.
  std::size_t coeff_count() const { return std::size_t{1} << n(); }

  // eta^{aa} for the 1-based generator index a.
  int metric(int a) const { return a <= p ? 1 : -1; }

  // Order of the recurrent representation matrices, 2^floor((n+1)/2).
  int matrix_order() const { return 1 << ((n() + 1) / 2); }

  bool operator==(const Signature&) const = default;

  std::string str() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
};

}  // namespace cliffcalc
