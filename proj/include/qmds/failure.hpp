#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace qmds {

// An exponent pair at which none of the three orthogonality-sufficient
// congruence conditions holds. Search routines return pairs with e1 < e2.
struct FailurePoint {
    int64_t e1 = 0;
    int64_t e2 = 0;
    friend bool operator==(FailurePoint, FailurePoint) = default;
};

// True iff all three hold:
//   e1 + e2 == L   (mod lambda)
//   e1 == e2       (mod tau)
//   e1 != e2       (mod rho)
bool is_failure_point(int64_t e1, int64_t e2, uint32_t lambda, uint32_t tau, uint32_t rho,
                      uint32_t L);

// Safe search bound: the closed forms give T2 < lambda + 4*tau at the
// optimal L, and any residue admits a failure point with e2 <= lambda + 2*tau
// for admissible tuples.
inline int64_t default_search_bound(uint32_t lambda, uint32_t tau) {
    return 2 * int64_t(lambda) + 8 * int64_t(tau);
}

// Scans pairs with 0 <= e1 < e2 <= bound, e2 ascending then e1 ascending,
// and returns the first failure point, or nothing if none exists in range.
std::optional<FailurePoint> first_failure_point_bruteforce(uint32_t lambda, uint32_t tau,
                                                           uint32_t rho, uint32_t L,
                                                           int64_t bound);

// The summary-table pair (T1, T2) for the optimal L:
//   case 1: ((lambda-2)/2, (lambda+4*tau-2)/2)
//   case 2: (lambda-1, lambda+tau-1)
//   case 3: ((lambda+tau-2)/2, (lambda+3*tau-2)/2)
FailurePoint first_failure_point_closed_form(int case_id, uint32_t lambda, uint32_t tau);

// Brute-force first failure point for every residue L in [0, lambda-1].
std::vector<std::optional<FailurePoint>> scan_all_L(uint32_t lambda, uint32_t tau, uint32_t rho,
                                                    int64_t bound);

}  // namespace qmds
