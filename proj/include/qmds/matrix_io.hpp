#pragma once

#include <string>
#include <string_view>

#include "qmds/field.hpp"
#include "qmds/grs.hpp"
#include "qmds/params.hpp"

namespace qmds {

// Plain-text matrix file, bit-exact:
//   line 1: "p m q n k L lambda tau rho sigma" (decimal, single spaces)
//   line 2: base modulus, m+1 coefficients over GF(p), ascending degree
//   line 3: extension modulus, 3 elements of GF(q), each m comma-separated
//           base-p digits ascending degree
//   then k rows of n elements, each 2m comma-separated base-p digits
//   ascending degree; trailing newline, no other whitespace.
//
// The moduli travel with the data so an independent implementation can
// re-verify without sharing field-construction conventions.

struct LoadedMatrix {
    FieldContext ctx;
    ConstructionParams params;  // L taken from the header verbatim
    GeneratorMatrix G;
};

std::string serialize_matrix(const FieldContext& F, const ConstructionParams& P,
                             const GeneratorMatrix& G);

// Throws ParseError (with a line number) on malformed input and ParamError
// when the header violates a construction hypothesis.
LoadedMatrix parse_matrix(std::string_view text);

}  // namespace qmds
