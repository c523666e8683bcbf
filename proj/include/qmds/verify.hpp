#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmds/field.hpp"
#include "qmds/grs.hpp"
#include "qmds/params.hpp"

namespace qmds {

struct VerifyCaps {
    uint64_t minor_cap = 10'000'000;       // full sweep when C(n,k) is at most this
    uint64_t exhaustive_cap = 10'000'000;  // codeword enumeration when q^(2k) is at most this
    uint32_t sample_count = 100'000;       // sampled minors above the cap
    uint64_t seed = 0x51D2024;             // recorded for replay
};

enum class MdsMode { full, sampled_structural };

struct MdsReport {
    MdsMode mode = MdsMode::full;
    bool all_nonzero = false;
    uint64_t minors_checked = 0;
    uint64_t seed = 0;
    // Only meaningful in sampled mode: distinct evaluation points and a
    // nonzero twist ground the GRS => MDS implication.
    std::optional<bool> structural_ok;
};

struct Certificate {
    ConstructionParams params;
    uint32_t k = 0;
    bool self_orthogonal = false;
    uint64_t self_orth_pairs = 0;
    MdsReport mds;
    std::optional<uint64_t> exhaustive_distance;
    QuantumCodeParams quantum;
    std::vector<std::string> notes;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

// True iff G * conj(G)^T = 0 exactly, i.e. every pair of rows (including a
// row with itself) has Hermitian product zero.
bool check_self_orthogonal(const FieldContext& F, const GeneratorMatrix& G);

uint32_t matrix_rank(const FieldContext& F, const GeneratorMatrix& G);

// Full sweep of all C(n,k) k-column minors when within caps.minor_cap;
// otherwise caps.sample_count uniformly sampled minors (seeded). A zero
// minor makes all_nonzero false. Throws on rank-deficient input.
MdsReport check_mds_via_minors(const FieldContext& F, const GeneratorMatrix& G,
                               const VerifyCaps& caps);

// Minimum Hamming weight over all q^(2k)-1 nonzero codewords by
// message-space enumeration. Throws when q^(2k) exceeds cap.
uint64_t min_distance_exhaustive(const FieldContext& F, const GeneratorMatrix& G, uint64_t cap);

// [[n, n-2d+2, d]]_q with the quantum Singleton equality asserted; requires
// 2 <= d <= T.
QuantumCodeParams derive_quantum_params(const ConstructionParams& P, uint32_t d);

// Builds the code for distance d (k = d-1) and checks every obligation:
// evaluation-point distinctness, twist-profile identity, self-orthogonality,
// MDS (full or sampled+structural), exhaustive distance where feasible.
Certificate full_certificate(const FieldContext& F, const ConstructionParams& P, uint32_t d,
                             const VerifyCaps& caps = {});

// Same obligations for a matrix read back from a file. Structural GRS
// evidence is re-derived from the rows themselves (row 0 nonzero, rows in
// geometric progression, column ratios distinct).
Certificate certify_matrix(const FieldContext& F, const GeneratorMatrix& G,
                           const VerifyCaps& caps = {});

}  // namespace qmds
