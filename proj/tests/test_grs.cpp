#include <algorithm>
#include <random>

#include "doctest.h"
#include "qmds/grs.hpp"

using namespace qmds;

namespace {

Fq2 sum_in_subfield(const FieldContext& F, const SVector& S) {
    Fq2 acc{};
    for (Fq s : S.s) acc = F.add(acc, F.embed(s));
    return acc;
}

// Independent route to the Hermitian product of two monomial rows: the
// product of the three geometric sums over i, j and k.
Fq2 factorized_product(const FieldContext& F, const ConstructionParams& P, const SVector& S,
                       int64_t e1, int64_t e2) {
    const int64_t ee = e1 + int64_t(F.q()) * e2;
    const Fq2 zl = F.root_of_unity(P.lambda);
    const Fq2 zt = F.root_of_unity(P.tau);
    const Fq2 zr = F.root_of_unity(P.rho);
    Fq2 f1{}, f2{}, f3{};
    for (uint32_t i = 0; i < P.lambda; ++i)
        f1 = F.add(f1, F.pow(zl, int64_t(i) * (ee - int64_t(P.L))));
    for (uint32_t j = 0; j < P.tau; ++j) f2 = F.add(f2, F.pow(zt, int64_t(j) * ee));
    for (uint32_t k = 0; k < P.sigma; ++k)
        f3 = F.add(f3, F.mul(F.embed(S.s[k]), F.pow(zr, int64_t(k) * ee)));
    return F.mul(F.mul(f1, f2), f3);
}

}  // namespace

TEST_CASE("evaluation set entries and distinctness") {
    FieldContext F = FieldContext::make(11, 1);
    ConstructionParams P = validate_params(11, 5, 3, 4, 3);
    EvaluationSet A = build_evaluation_set(F, P);
    REQUIRE(A.points.size() == 45);
    CHECK(A.points[0] == F.one());
    CHECK(A.points[1 * 3 * 3] == F.root_of_unity(5));  // entry (1,0,0)
    CHECK(A.points[1 * 3] == F.root_of_unity(3));      // entry (0,1,0)
    CHECK(A.points[1] == F.root_of_unity(4));          // entry (0,0,1)

    std::vector<uint32_t> idx;
    for (Fq2 x : A.points) {
        CHECK(x.v != 0);
        idx.push_back(x.v);
    }
    std::sort(idx.begin(), idx.end());
    CHECK(std::adjacent_find(idx.begin(), idx.end()) == idx.end());
}

TEST_CASE("s-vector recipe") {
    FieldContext F11 = FieldContext::make(11, 1);
    SVector S = build_s_vector(F11, 2);
    CHECK(S.s == std::vector<Fq>{Fq{1}, Fq{10}});  // (1, -1)

    S = build_s_vector(F11, 3);
    CHECK(S.s == std::vector<Fq>{Fq{1}, Fq{1}, Fq{9}});

    FieldContext F3 = FieldContext::make(3, 1);
    S = build_s_vector(F3, 4);
    CHECK(S.s == std::vector<Fq>{Fq{1}, Fq{1}, Fq{2}, Fq{2}});

    // sum zero and entries nonzero, including characteristic 2 with odd sigma
    for (auto [p, m] : {std::pair<uint32_t, uint32_t>{2, 2}, {2, 3}, {3, 2}, {7, 1}}) {
        FieldContext F = FieldContext::make(p, m);
        for (uint32_t sigma = 2; sigma <= 7; ++sigma) {
            SVector s = build_s_vector(F, sigma);
            REQUIRE(s.s.size() == sigma);
            for (Fq e : s.s) CHECK(e.v != 0);
            CHECK(sum_in_subfield(F, s) == F.zero());
        }
    }
}

TEST_CASE("twist vector satisfies the certified power profile") {
    FieldContext F = FieldContext::make(11, 1);
    ConstructionParams P = validate_params(11, 5, 3, 4, 3);
    REQUIRE(P.L == 4);
    TwistVector tv = build_twist_vector(F, P);
    SVector S = build_s_vector(F, P.sigma);
    const Fq2 zl = F.root_of_unity(P.lambda);

    uint64_t c = 0;
    for (uint32_t i = 0; i < P.lambda; ++i)
        for (uint32_t j = 0; j < P.tau; ++j)
            for (uint32_t k = 0; k < P.sigma; ++k, ++c) {
                Fq expect = F.project(F.mul(F.pow(zl, -int64_t(i) * P.L), F.embed(S.s[k])));
                CHECK(tv.profile[c] == expect);
                CHECK(F.norm(tv.v[c]) == expect);
                CHECK(tv.v[c].v != 0);
            }

    // profile does not depend on j
    auto at = [&](uint32_t i, uint32_t j, uint32_t k) {
        return tv.v[(uint64_t(i) * P.tau + j) * P.sigma + k];
    };
    for (uint32_t i = 0; i < P.lambda; ++i)
        for (uint32_t k = 0; k < P.sigma; ++k)
            for (uint32_t j = 1; j < P.tau; ++j) CHECK(at(i, j, k) == at(i, 0, k));

    // w(0,j,0) = s_0 = 1 and w(1,j,0) = zeta_lambda^{-L} = zeta_lambda
    CHECK(tv.profile[0] == Fq{1});
    CHECK(F.embed(tv.profile[1 * 3 * 3]) == F.pow(zl, -int64_t(P.L)));
    CHECK(F.embed(tv.profile[1 * 3 * 3]) == zl);  // order 5, so zl^{-4} = zl
}

TEST_CASE("hermitian and euclidean products") {
    FieldContext F = FieldContext::make(3, 1);
    const Fq2 one_plus_i{4};
    const Fq2 i{3};
    std::vector<Fq2> a{one_plus_i}, zero{Fq2{}};
    CHECK(hermitian_product(F, a, zero) == F.zero());
    CHECK(hermitian_product(F, a, a) == Fq2{2});  // (1+i)^4 = 2

    std::vector<Fq2> u{F.one(), i};
    CHECK(euclidean_product(F, u, u) == F.zero());  // 1 + i^2 = 0

    std::mt19937 rng(17);
    for (int t = 0; t < 50; ++t) {
        std::vector<Fq2> x(6), y(6);
        for (int j = 0; j < 6; ++j) {
            x[j] = Fq2{static_cast<uint32_t>(rng() % 9)};
            y[j] = Fq2{static_cast<uint32_t>(rng() % 9)};
        }
        CHECK(euclidean_product(F, x, y) == euclidean_product(F, y, x));
    }
    std::vector<Fq2> bad{F.one()};
    CHECK_THROWS_AS(hermitian_product(F, u, bad), Error);
    CHECK_THROWS_AS(euclidean_product(F, u, bad), Error);
}

TEST_CASE("monomial rows are orthogonal when any condition holds") {
    FieldContext F = FieldContext::make(11, 1);
    ConstructionParams P = validate_params(11, 5, 3, 4, 3);
    EvaluationSet A = build_evaluation_set(F, P);
    TwistVector tv = build_twist_vector(F, P);
    SVector S = build_s_vector(F, P.sigma);

    for (int64_t e1 = 0; e1 <= 12; ++e1)
        for (int64_t e2 = 0; e2 <= 12; ++e2) {
            Fq2 direct = hermitian_product(F, evaluate_monomial(F, A, tv, e1),
                                           evaluate_monomial(F, A, tv, e2));
            bool cond1 = (e1 + e2 - int64_t(P.L)) % P.lambda != 0;
            bool cond2 = (e1 - e2) % P.tau != 0;
            bool cond3 = (e1 - e2) % P.rho == 0;
            if (cond1 || cond2 || cond3) CHECK(direct == F.zero());
            CHECK(direct == factorized_product(F, P, S, e1, e2));
        }
}

TEST_CASE("products depend only on the twist power profile") {
    FieldContext F = FieldContext::make(7, 1);
    ConstructionParams P = validate_params(7, 3, 2, 8, 2);
    EvaluationSet A = build_evaluation_set(F, P);
    TwistVector tv = build_twist_vector(F, P);

    // any other norm preimage differs by a (q+1)-th root of unity
    TwistVector alt = tv;
    std::mt19937 rng(23);
    const Fq2 zq1 = F.root_of_unity(F.q() + 1);
    for (auto& v : alt.v) v = F.mul(v, F.pow(zq1, rng() % (F.q() + 1)));
    for (size_t c = 0; c < alt.v.size(); ++c) CHECK(F.norm(alt.v[c]) == tv.profile[c]);

    for (int64_t e1 = 0; e1 <= 8; ++e1)
        for (int64_t e2 = 0; e2 <= 8; ++e2) {
            Fq2 a = hermitian_product(F, evaluate_monomial(F, A, tv, e1),
                                      evaluate_monomial(F, A, tv, e2));
            Fq2 b = hermitian_product(F, evaluate_monomial(F, A, alt, e1),
                                      evaluate_monomial(F, A, alt, e2));
            CHECK(a == b);
        }
}

TEST_CASE("generator matrix layout") {
    FieldContext F = FieldContext::make(11, 1);
    ConstructionParams P = validate_params(11, 5, 3, 4, 3);
    GeneratorMatrix G = generator_matrix(F, P, 6);
    CHECK(G.k == 6);
    CHECK(G.n == 45);

    TwistVector tv = build_twist_vector(F, P);
    EvaluationSet A = build_evaluation_set(F, P);
    for (uint64_t c = 0; c < G.n; ++c) {
        CHECK(G.at(0, c) == tv.v[c]);  // row 0 is the twist vector
        for (uint32_t e = 1; e < 6; ++e)
            CHECK(G.at(e, c) == F.mul(G.at(e - 1, c), A.points[c]));
    }

    GeneratorMatrix one_row = generator_matrix(F, P, 1);
    CHECK(one_row.a == tv.v);
    CHECK_THROWS_AS(generator_matrix(F, P, 0), Error);
    CHECK_THROWS_AS(generator_matrix(F, P, 46), Error);
}

TEST_CASE("distinctness across enumerated tuples at small q") {
    for (uint32_t q : {7u, 9u, 11u, 13u}) {
        auto pm = prime_power_decomposition(q);
        FieldContext F = FieldContext::make(pm->first, pm->second);
        for (const auto& P : enumerate_params(q, 400)) {
            EvaluationSet A = build_evaluation_set(F, P);
            std::vector<uint32_t> idx;
            for (Fq2 x : A.points) idx.push_back(x.v);
            std::sort(idx.begin(), idx.end());
            CHECK(std::adjacent_find(idx.begin(), idx.end()) == idx.end());
        }
    }
}
