#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qmds/field.hpp"
#include "qmds/params.hpp"

namespace qmds {

// The n evaluation points A(i,j,k) = zeta_lambda^i * zeta_tau^j * zeta_rho^k
// in lexicographic (i,j,k) order; all distinct and nonzero.
struct EvaluationSet {
    std::vector<Fq2> points;
};

// s_0..s_{sigma-1} in GF(q)^*, summing to zero.
struct SVector {
    std::vector<Fq> s;
};

// Twist entries v(i,j,k) in GF(q^2)^* together with the certified profile
// profile(i,j,k) = v(i,j,k)^{q+1} = zeta_lambda^{-iL} * s_k, constant in j.
struct TwistVector {
    std::vector<Fq2> v;
    std::vector<Fq> profile;
};

// k x n generator matrix, row-major; row e at column (i,j,k) is
// v(i,j,k) * A(i,j,k)^e. Column index = (i*tau + j)*sigma + k.
struct GeneratorMatrix {
    ConstructionParams params;
    uint32_t k = 0;
    uint64_t n = 0;
    std::vector<Fq2> a;

    std::span<const Fq2> row(uint32_t e) const { return {a.data() + uint64_t(e) * n, n}; }
    Fq2 at(uint32_t r, uint64_t c) const { return a[uint64_t(r) * n + c]; }
};

EvaluationSet build_evaluation_set(const FieldContext& F, const ConstructionParams& P);

// sigma = 2 gives (1, -1); otherwise ones, then the first admissible pick
// outside {0, -(sum so far)}, then the balancing last entry.
SVector build_s_vector(const FieldContext& F, uint32_t sigma);

TwistVector build_twist_vector(const FieldContext& F, const ConstructionParams& P);

GeneratorMatrix generator_matrix(const FieldContext& F, const ConstructionParams& P, uint32_t k);

// The evaluation vector of the monomial X^e: column c holds v[c] * A[c]^e.
std::vector<Fq2> evaluate_monomial(const FieldContext& F, const EvaluationSet& A,
                                   const TwistVector& tv, int64_t e);

// sum a_i * b_i^q
Fq2 hermitian_product(const FieldContext& F, std::span<const Fq2> a, std::span<const Fq2> b);
// sum a_i * b_i
Fq2 euclidean_product(const FieldContext& F, std::span<const Fq2> a, std::span<const Fq2> b);

}  // namespace qmds
