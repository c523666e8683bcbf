#include "qmds/grs.hpp"

#include <string>

namespace qmds {
namespace {

constexpr uint64_t kMaxConstructionLength = 10'000'000;

void check_length(uint64_t n) {
    if (n > kMaxConstructionLength)
        throw Error("n = " + std::to_string(n) + " is too large to construct");
}

}  // namespace

EvaluationSet build_evaluation_set(const FieldContext& F, const ConstructionParams& P) {
    check_length(P.n);
    const Fq2 zl = F.root_of_unity(P.lambda);
    const Fq2 zt = F.root_of_unity(P.tau);
    const Fq2 zr = F.root_of_unity(P.rho);

    std::vector<Fq2> lpow(P.lambda), tpow(P.tau), rpow(P.sigma);
    lpow[0] = tpow[0] = rpow[0] = F.one();
    for (uint32_t i = 1; i < P.lambda; ++i) lpow[i] = F.mul(lpow[i - 1], zl);
    for (uint32_t j = 1; j < P.tau; ++j) tpow[j] = F.mul(tpow[j - 1], zt);
    for (uint32_t k = 1; k < P.sigma; ++k) rpow[k] = F.mul(rpow[k - 1], zr);

    EvaluationSet A;
    A.points.reserve(P.n);
    for (uint32_t i = 0; i < P.lambda; ++i)
        for (uint32_t j = 0; j < P.tau; ++j) {
            Fq2 ij = F.mul(lpow[i], tpow[j]);
            for (uint32_t k = 0; k < P.sigma; ++k) A.points.push_back(F.mul(ij, rpow[k]));
        }
    return A;
}

SVector build_s_vector(const FieldContext& F, uint32_t sigma) {
    if (sigma < 2) throw Error("sigma must be at least 2");
    SVector S;
    S.s.reserve(sigma);
    if (sigma == 2) {
        S.s.push_back(F.project(F.one()));
        S.s.push_back(F.project(F.neg(F.one())));
        return S;
    }
    Fq2 sum = F.zero();
    for (uint32_t k = 0; k + 2 < sigma; ++k) {
        S.s.push_back(F.project(F.one()));
        sum = F.add(sum, F.one());
    }
    const Fq2 excluded = F.neg(sum);
    Fq2 pick = F.one();
    if (pick == excluded) pick = F.add(F.one(), F.one());
    if (pick.v == 0 || pick == excluded) {
        // characteristic 2 with 1 excluded: take the first admissible
        // element of GF(q) in canonical order
        for (uint32_t r = 0;; ++r) {
            Fq2 cand = F.embed(F.subfield_at_rank(r));
            if (cand.v != 0 && !(cand == excluded)) {
                pick = cand;
                break;
            }
        }
    }
    S.s.push_back(F.project(pick));
    sum = F.add(sum, pick);
    S.s.push_back(F.project(F.neg(sum)));
    return S;
}

TwistVector build_twist_vector(const FieldContext& F, const ConstructionParams& P) {
    check_length(P.n);
    SVector S = build_s_vector(F, P.sigma);
    const Fq2 zl = F.root_of_unity(P.lambda);

    TwistVector tv;
    tv.v.reserve(P.n);
    tv.profile.reserve(P.n);
    for (uint32_t i = 0; i < P.lambda; ++i) {
        const Fq2 zli = F.pow(zl, -int64_t(i) * int64_t(P.L));
        for (uint32_t j = 0; j < P.tau; ++j)
            for (uint32_t k = 0; k < P.sigma; ++k) {
                Fq w = F.project(F.mul(zli, F.embed(S.s[k])));
                Fq2 root = F.solve_norm(w);
                tv.v.push_back(root);
                tv.profile.push_back(w);
            }
    }
    return tv;
}

GeneratorMatrix generator_matrix(const FieldContext& F, const ConstructionParams& P, uint32_t k) {
    if (k < 1 || k > P.n)
        throw Error("k = " + std::to_string(k) + " is out of range [1, " + std::to_string(P.n) +
                    "]");
    check_length(P.n * k);
    const EvaluationSet A = build_evaluation_set(F, P);
    const TwistVector tv = build_twist_vector(F, P);

    GeneratorMatrix G;
    G.params = P;
    G.k = k;
    G.n = P.n;
    G.a.resize(uint64_t(k) * P.n);
    std::vector<Fq2> pw(P.n, F.one());
    for (uint32_t e = 0; e < k; ++e) {
        Fq2* row = G.a.data() + uint64_t(e) * P.n;
        for (uint64_t c = 0; c < P.n; ++c) {
            row[c] = F.mul(tv.v[c], pw[c]);
            pw[c] = F.mul(pw[c], A.points[c]);
        }
    }
    return G;
}

std::vector<Fq2> evaluate_monomial(const FieldContext& F, const EvaluationSet& A,
                                   const TwistVector& tv, int64_t e) {
    if (A.points.size() != tv.v.size()) throw Error("evaluation set / twist length mismatch");
    std::vector<Fq2> row(A.points.size());
    for (size_t c = 0; c < row.size(); ++c) row[c] = F.mul(tv.v[c], F.pow(A.points[c], e));
    return row;
}

Fq2 hermitian_product(const FieldContext& F, std::span<const Fq2> a, std::span<const Fq2> b) {
    if (a.size() != b.size()) throw Error("hermitian product: length mismatch");
    Fq2 acc{};
    for (size_t i = 0; i < a.size(); ++i) acc = F.add(acc, F.mul(a[i], F.frobenius(b[i])));
    return acc;
}

Fq2 euclidean_product(const FieldContext& F, std::span<const Fq2> a, std::span<const Fq2> b) {
    if (a.size() != b.size()) throw Error("euclidean product: length mismatch");
    Fq2 acc{};
    for (size_t i = 0; i < a.size(); ++i) acc = F.add(acc, F.mul(a[i], b[i]));
    return acc;
}

}  // namespace qmds
