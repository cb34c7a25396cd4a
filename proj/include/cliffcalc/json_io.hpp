#pragma once

#include "json.hpp"

#include "cliffcalc/matrix.hpp"
#include "cliffcalc/multivector.hpp"

namespace cliffcalc {

// {"p": p, "q": q, "coeffs": {"": [re,im], "1,3": [re,im], ...}}
// Keys are comma-separated ascending indices, "" for the scalar; zero
// coefficients are omitted on output and may be absent on input.
nlohmann::json multivector_to_json(const Multivector& u);

// Throws std::invalid_argument on malformed input (bad key, index out of
// range, non-finite coefficient, wrong shapes).
Multivector multivector_from_json(const nlohmann::json& j);

// {"dim": d, "entries": [[re,im], ...]} row-major.
nlohmann::json matrix_to_json(const ComplexMatrix& m);

}  // namespace cliffcalc
