#include "qmds/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <thread>

namespace qmds {
namespace {

uint32_t worker_count() {
    if (const char* env = std::getenv("QMDS_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<uint32_t>(v);
    }
    uint32_t hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// C(n,k) clamped at 2^62 to keep comparisons against caps safe.
uint64_t binomial_capped(uint64_t n, uint64_t k) {
    constexpr uint64_t kClamp = uint64_t(1) << 62;
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > kClamp) return kClamp;
    }
    return static_cast<uint64_t>(r);
}

// Lexicographic k-combination of given rank.
std::vector<uint32_t> unrank_combination(uint64_t rank, uint32_t n, uint32_t k) {
    std::vector<uint32_t> cols(k);
    uint32_t c = 0;
    for (uint32_t i = 0; i < k; ++i) {
        for (uint32_t v = c;; ++v) {
            uint64_t cnt = binomial_capped(n - 1 - v, k - 1 - i);
            if (rank < cnt) {
                cols[i] = v;
                c = v + 1;
                break;
            }
            rank -= cnt;
        }
    }
    return cols;
}

bool next_combination(std::vector<uint32_t>& cols, uint32_t n) {
    const uint32_t k = static_cast<uint32_t>(cols.size());
    int32_t i = static_cast<int32_t>(k) - 1;
    while (i >= 0 && cols[i] == n - k + i) --i;
    if (i < 0) return false;
    ++cols[i];
    for (uint32_t j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
    return true;
}

// In-place elimination; only nonzero-ness of the determinant is needed, so
// row swaps are free and the pivot product is never formed.
bool minor_nonzero(const FieldContext& F, uint32_t k, Fq2* w) {
    for (uint32_t c = 0; c < k; ++c) {
        uint32_t piv = c;
        while (piv < k && w[piv * k + c].v == 0) ++piv;
        if (piv == k) return false;
        if (piv != c)
            for (uint32_t j = c; j < k; ++j) std::swap(w[piv * k + j], w[c * k + j]);
        const Fq2 pinv = F.inv(w[c * k + c]);
        for (uint32_t r = c + 1; r < k; ++r) {
            const Fq2 lead = w[r * k + c];
            if (lead.v == 0) continue;
            const Fq2 f = F.mul(lead, pinv);
            for (uint32_t j = c + 1; j < k; ++j)
                w[r * k + j] = F.sub(w[r * k + j], F.mul(f, w[c * k + j]));
        }
    }
    return true;
}

void gather(const GeneratorMatrix& G, const std::vector<uint32_t>& cols, uint32_t k, Fq2* w) {
    for (uint32_t r = 0; r < k; ++r) {
        const Fq2* row = G.a.data() + uint64_t(r) * G.n;
        for (uint32_t j = 0; j < k; ++j) w[r * k + j] = row[cols[j]];
    }
}

struct SweepResult {
    bool all_nonzero = true;
    uint64_t checked = 0;
};

SweepResult sweep_all_minors(const FieldContext& F, const GeneratorMatrix& G, uint64_t total) {
    const uint32_t k = G.k;
    const uint32_t n32 = static_cast<uint32_t>(G.n);
    constexpr uint64_t kChunk = 8192;
    std::atomic<uint64_t> next{0};
    std::atomic<uint64_t> done{0};
    std::atomic<bool> bad{false};

    auto work = [&] {
        std::vector<Fq2> scratch(uint64_t(k) * k);
        while (!bad.load(std::memory_order_relaxed)) {
            uint64_t start = next.fetch_add(kChunk);
            if (start >= total) return;
            uint64_t count = std::min(kChunk, total - start);
            std::vector<uint32_t> cols = unrank_combination(start, n32, k);
            for (uint64_t i = 0; i < count; ++i) {
                gather(G, cols, k, scratch.data());
                if (!minor_nonzero(F, k, scratch.data())) {
                    bad.store(true);
                    done.fetch_add(i + 1);
                    return;
                }
                if (i + 1 < count) next_combination(cols, n32);
            }
            done.fetch_add(count);
        }
    };

    uint32_t threads = std::min<uint64_t>(worker_count(), (total + kChunk - 1) / kChunk);
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (uint32_t t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return {!bad.load(), done.load()};
}

SweepResult sweep_sampled_minors(const FieldContext& F, const GeneratorMatrix& G, uint32_t count,
                                 uint64_t seed) {
    const uint32_t k = G.k;
    const uint32_t n32 = static_cast<uint32_t>(G.n);

    // Subsets drawn up-front from the seeded engine so the sample is
    // independent of the worker count.
    std::mt19937_64 rng(seed);
    std::vector<uint32_t> subsets(uint64_t(count) * k);
    std::vector<uint8_t> used(n32, 0);
    for (uint32_t s = 0; s < count; ++s) {
        uint32_t* cols = subsets.data() + uint64_t(s) * k;
        for (uint32_t i = 0; i < k;) {
            uint32_t c = static_cast<uint32_t>(rng() % n32);
            if (!used[c]) {
                used[c] = 1;
                cols[i++] = c;
            }
        }
        std::sort(cols, cols + k);
        for (uint32_t i = 0; i < k; ++i) used[cols[i]] = 0;
    }

    std::atomic<uint32_t> next{0};
    std::atomic<uint64_t> done{0};
    std::atomic<bool> bad{false};
    auto work = [&] {
        std::vector<Fq2> scratch(uint64_t(k) * k);
        std::vector<uint32_t> cols(k);
        while (!bad.load(std::memory_order_relaxed)) {
            uint32_t s = next.fetch_add(1);
            if (s >= count) return;
            const uint32_t* cp = subsets.data() + uint64_t(s) * k;
            std::copy(cp, cp + k, cols.begin());
            gather(G, cols, k, scratch.data());
            if (!minor_nonzero(F, k, scratch.data())) bad.store(true);
            done.fetch_add(1);
        }
    };
    uint32_t threads = std::min<uint32_t>(worker_count(), std::max<uint32_t>(count, 1));
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (uint32_t t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return {!bad.load(), done.load()};
}

}  // namespace

bool check_self_orthogonal(const FieldContext& F, const GeneratorMatrix& G) {
    for (uint32_t r1 = 0; r1 < G.k; ++r1)
        for (uint32_t r2 = r1; r2 < G.k; ++r2)
            if (hermitian_product(F, G.row(r1), G.row(r2)).v != 0) return false;
    return true;
}

uint32_t matrix_rank(const FieldContext& F, const GeneratorMatrix& G) {
    std::vector<Fq2> w = G.a;
    const uint64_t n = G.n;
    uint32_t rank = 0;
    for (uint64_t c = 0; c < n && rank < G.k; ++c) {
        uint32_t piv = rank;
        while (piv < G.k && w[piv * n + c].v == 0) ++piv;
        if (piv == G.k) continue;
        if (piv != rank)
            for (uint64_t j = c; j < n; ++j) std::swap(w[piv * n + j], w[rank * n + j]);
        const Fq2 pinv = F.inv(w[rank * n + c]);
        for (uint32_t r = rank + 1; r < G.k; ++r) {
            const Fq2 lead = w[r * n + c];
            if (lead.v == 0) continue;
            const Fq2 f = F.mul(lead, pinv);
            for (uint64_t j = c; j < n; ++j) w[r * n + j] = F.sub(w[r * n + j], F.mul(f, w[rank * n + j]));
        }
        ++rank;
    }
    return rank;
}

MdsReport check_mds_via_minors(const FieldContext& F, const GeneratorMatrix& G,
                               const VerifyCaps& caps) {
    if (matrix_rank(F, G) != G.k) throw Error("matrix is rank-deficient");
    MdsReport rep;
    rep.seed = caps.seed;
    const uint64_t total = binomial_capped(G.n, G.k);
    if (total <= caps.minor_cap) {
        rep.mode = MdsMode::full;
        SweepResult r = sweep_all_minors(F, G, total);
        rep.all_nonzero = r.all_nonzero;
        rep.minors_checked = r.checked;
    } else {
        rep.mode = MdsMode::sampled_structural;
        SweepResult r = sweep_sampled_minors(F, G, caps.sample_count, caps.seed);
        rep.all_nonzero = r.all_nonzero;
        rep.minors_checked = r.checked;
    }
    return rep;
}

uint64_t min_distance_exhaustive(const FieldContext& F, const GeneratorMatrix& G, uint64_t cap) {
    const uint32_t q2 = F.q2();
    uint64_t messages = 1;
    for (uint32_t i = 0; i < G.k; ++i) {
        if (messages > cap / q2 + 1) throw Error("exhaustive enumeration exceeds cap");
        messages *= q2;
    }
    if (messages > cap) throw Error("exhaustive enumeration exceeds cap");

    const uint64_t n = G.n;
    std::vector<std::vector<Fq2>> partial(G.k + 1, std::vector<Fq2>(n));
    uint64_t best = n + 1;

    auto rec = [&](auto&& self, uint32_t level, bool nonzero) -> void {
        if (level == G.k) {
            if (!nonzero) return;
            uint64_t w = 0;
            for (uint64_t c = 0; c < n; ++c) w += partial[level][c].v != 0;
            best = std::min(best, w);
            return;
        }
        auto& cur = partial[level + 1];
        const auto& prev = partial[level];
        cur = prev;
        self(self, level + 1, nonzero);
        const Fq2* row = G.a.data() + uint64_t(level) * n;
        for (uint32_t val = 1; val < q2; ++val) {
            const Fq2 scale{val};
            for (uint64_t c = 0; c < n; ++c) cur[c] = F.add(prev[c], F.mul(scale, row[c]));
            self(self, level + 1, true);
        }
    };
    rec(rec, 0, false);
    return best;
}

QuantumCodeParams derive_quantum_params(const ConstructionParams& P, uint32_t d) {
    if (d < 2 || d > P.T)
        throw ParamError("distance-range", "d = " + std::to_string(d) +
                                               " must satisfy 2 <= d <= T = " + std::to_string(P.T));
    QuantumCodeParams Q;
    Q.q = P.q;
    Q.n = P.n;
    Q.d = d;
    Q.k_q = int64_t(P.n) - 2 * int64_t(d) + 2;
    if (Q.k_q + 2 * int64_t(d) != int64_t(Q.n) + 2) throw Error("quantum Singleton equality failed");
    return Q;
}

namespace {

// Shared tail of the two certification entry points.
void certify_common(const FieldContext& F, const GeneratorMatrix& G, const VerifyCaps& caps,
                    bool structural_ok, Certificate& cert) {
    cert.self_orth_pairs = uint64_t(G.k) * (G.k + 1) / 2;
    cert.self_orthogonal = check_self_orthogonal(F, G);
    if (!cert.self_orthogonal) cert.violations.push_back("self-orthogonality");

    bool mds_violated = false;
    try {
        cert.mds = check_mds_via_minors(F, G, caps);
        mds_violated = !cert.mds.all_nonzero;
        if (mds_violated) cert.violations.push_back("mds-minors");
    } catch (const Error& e) {
        cert.violations.push_back(std::string("mds-minors: ") + e.what());
        cert.mds.all_nonzero = false;
        mds_violated = true;
    }
    if (cert.mds.mode == MdsMode::sampled_structural) {
        cert.mds.structural_ok = structural_ok;
        if (!structural_ok) cert.violations.push_back("grs-structure");
        cert.notes.push_back("mds grounded by " + std::to_string(cert.mds.minors_checked) +
                             " sampled minors plus the structural GRS certificate");
    } else if (!mds_violated) {
        cert.notes.push_back("mds grounded by the full sweep of " +
                             std::to_string(cert.mds.minors_checked) + " minors");
    }

    uint64_t messages = 1;
    bool within = caps.exhaustive_cap > 0;
    for (uint32_t i = 0; i < G.k && within; ++i) {
        if (messages > caps.exhaustive_cap / F.q2()) {
            within = false;
            break;
        }
        messages *= F.q2();
    }
    if (within && messages <= caps.exhaustive_cap) {
        uint64_t dist = min_distance_exhaustive(F, G, caps.exhaustive_cap);
        cert.exhaustive_distance = dist;
        if (dist != G.n - G.k + 1) cert.violations.push_back("exhaustive-distance");
    }

    try {
        cert.quantum = derive_quantum_params(cert.params, G.k + 1);
    } catch (const ParamError& e) {
        cert.violations.push_back(std::string("quantum-params: ") + e.what());
    }
    cert.notes.push_back(
        "quantum distance inherited from the classical dual-distance certificate");
}

}  // namespace

Certificate full_certificate(const FieldContext& F, const ConstructionParams& P, uint32_t d,
                             const VerifyCaps& caps) {
    if (d < 2 || d > P.T)
        throw ParamError("distance-range", "d = " + std::to_string(d) +
                                               " must satisfy 2 <= d <= T = " + std::to_string(P.T));
    Certificate cert;
    cert.params = P;
    cert.k = d - 1;

    const EvaluationSet A = build_evaluation_set(F, P);
    const TwistVector tv = build_twist_vector(F, P);

    std::vector<uint32_t> idx(A.points.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = A.points[i].v;
    std::sort(idx.begin(), idx.end());
    bool distinct = std::adjacent_find(idx.begin(), idx.end()) == idx.end() &&
                    (idx.empty() || idx.front() != 0);
    if (!distinct) cert.violations.push_back("evaluation-set-distinctness");

    // profile certification: v^{q+1} = zeta_lambda^{-iL} * s_k exactly
    const Fq2 zl = F.root_of_unity(P.lambda);
    const SVector S = build_s_vector(F, P.sigma);
    bool profile_ok = true;
    uint64_t c = 0;
    for (uint32_t i = 0; i < P.lambda && profile_ok; ++i) {
        const Fq2 zli = F.pow(zl, -int64_t(i) * int64_t(P.L));
        for (uint32_t j = 0; j < P.tau && profile_ok; ++j)
            for (uint32_t k2 = 0; k2 < P.sigma && profile_ok; ++k2, ++c) {
                Fq expect = F.project(F.mul(zli, F.embed(S.s[k2])));
                if (!(tv.profile[c] == expect) || !(F.norm(tv.v[c]) == expect) || tv.v[c].v == 0)
                    profile_ok = false;
            }
    }
    if (!profile_ok) cert.violations.push_back("twist-profile");

    GeneratorMatrix G = generator_matrix(F, P, d - 1);
    certify_common(F, G, caps, distinct && profile_ok, cert);
    return cert;
}

Certificate certify_matrix(const FieldContext& F, const GeneratorMatrix& G,
                           const VerifyCaps& caps) {
    Certificate cert;
    cert.params = G.params;
    cert.k = G.k;

    // structural GRS evidence from the rows themselves
    bool structural = true;
    for (uint64_t c = 0; c < G.n; ++c)
        if (G.at(0, c).v == 0) structural = false;
    if (structural && G.k >= 2) {
        std::vector<Fq2> ratio(G.n);
        for (uint64_t c = 0; c < G.n; ++c) ratio[c] = F.div(G.at(1, c), G.at(0, c));
        for (uint32_t r = 2; r < G.k && structural; ++r)
            for (uint64_t c = 0; c < G.n; ++c)
                if (!(G.at(r, c) == F.mul(G.at(r - 1, c), ratio[c]))) {
                    structural = false;
                    break;
                }
        std::vector<uint32_t> idx(G.n);
        for (uint64_t c = 0; c < G.n; ++c) idx[c] = ratio[c].v;
        std::sort(idx.begin(), idx.end());
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) structural = false;
    }

    certify_common(F, G, caps, structural, cert);
    return cert;
}

}  // namespace qmds
