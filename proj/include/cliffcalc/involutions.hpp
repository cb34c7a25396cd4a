#pragma once

#include <vector>

#include "cliffcalc/multivector.hpp"

namespace cliffcalc {

// Coefficientwise complex conjugation.
Multivector complex_conjugate(const Multivector& u);

// Grade-k part multiplied by (-1)^(k(k-1)/2); reverses products.
Multivector reverse(const Multivector& u);

// Grade-k part multiplied by (-1)^k; an algebra automorphism.
Multivector grade_involution(const Multivector& u);

// Grade involution composed with reverse: factor (-1)^(k(k+1)/2).
Multivector clifford_conjugation(const Multivector& u);

// Reverse composed with complex conjugation.
Multivector pseudo_hermitian(const Multivector& u);

// The conjugation whose matrix image under the recurrent representation is
// the Hermitian transpose; (e^a)^dagger = (e^a)^-1. Implemented through the
// p-parity pair: conjugation of the pseudo-Hermitian (grade-involuted when p
// is even) by e^{1..p}, the empty product meaning e.
Multivector hermitian(const Multivector& u);

// Negates the grade-k parts for k in `grades`, fixes the rest.
Multivector grade_flip(const Multivector& u, const std::vector<int>& grades);

// Flips grade 4 (n = 4) or grades 4 and 5 (n = 5); other dimensions throw.
Multivector nabla(const Multivector& u);

// Flips grade 5; defined for n = 5 only.
Multivector triangle(const Multivector& u);

// On even elements of an n = 4 algebra: negates the basis blades that
// anticommute with e^1 (the even blades containing index 1). Throws for
// n != 4 or input with a nonzero odd part.
Multivector plus_conj(const Multivector& u);

}  // namespace cliffcalc
