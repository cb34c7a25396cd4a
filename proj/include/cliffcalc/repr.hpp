#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cliffcalc/matrix.hpp"
#include "cliffcalc/multivector.hpp"

namespace cliffcalc {

// The n generator matrices gamma^1..gamma^n of order 2^floor((n+1)/2),
// produced by the recurrent scheme. Entries are exact Gaussian integers
// (0, +-1, +-i), so golden comparisons can be bit-exact.
struct Representation {
  Signature sig;
  std::vector<ComplexMatrix> generators;
};

// Recurrent construction: Cl(1,0) and Cl(2,0) bases, the block-diagonal odd
// step with the i^k gamma^1..gamma^n volume block, the off-diagonal identity
// even step, then multiplication by i for generators past p. Requires n >= 1.
Representation build_generators(const Signature& sig);

// All 2^n blade matrices for an arbitrary generator set (empty set allowed:
// the scalar algebra represents on 1x1 matrices).
std::vector<ComplexMatrix> blade_matrices(const Signature& sig,
                                          std::span<const ComplexMatrix> generators);

// Algebra homomorphism extending e^a -> generators[a-1].
ComplexMatrix represent(const Multivector& u, std::span<const ComplexMatrix> generators);

// Same, using the recurrent representation of u's signature.
ComplexMatrix represent(const Multivector& u);

// beta^a = T^-1 gamma^a T (negated when `negate`; only odd n admits the
// negated family). T = identity returns the generators unchanged.
std::vector<ComplexMatrix> conjugated_generators(const Representation& rep,
                                                 const ComplexMatrix& transform, bool negate);

// Random T with entries uniform in the unit disc, redrawn from the next seed
// while |det T| < 1e-3.
ComplexMatrix random_invertible_matrix(int dim, std::uint64_t seed);

// Draws T as above and conjugates the recurrent generators.
std::vector<ComplexMatrix> alternate_representation(const Signature& sig, std::uint64_t seed,
                                                    bool negate);

}  // namespace cliffcalc
