#include "qmds/failure.hpp"

#include <string>

#include "qmds/errors.hpp"

namespace qmds {

bool is_failure_point(int64_t e1, int64_t e2, uint32_t lambda, uint32_t tau, uint32_t rho,
                      uint32_t L) {
    if ((e1 + e2 - int64_t(L)) % int64_t(lambda) != 0) return false;
    if ((e1 - e2) % int64_t(tau) != 0) return false;
    return (e1 - e2) % int64_t(rho) != 0;
}

std::optional<FailurePoint> first_failure_point_bruteforce(uint32_t lambda, uint32_t tau,
                                                           uint32_t rho, uint32_t L,
                                                           int64_t bound) {
    for (int64_t e2 = 1; e2 <= bound; ++e2)
        for (int64_t e1 = 0; e1 < e2; ++e1)
            if (is_failure_point(e1, e2, lambda, tau, rho, L)) return FailurePoint{e1, e2};
    return std::nullopt;
}

FailurePoint first_failure_point_closed_form(int case_id, uint32_t lambda, uint32_t tau) {
    const int64_t l = lambda, t = tau;
    switch (case_id) {
        case 1:
            if (l % 2 != 0) throw Error("case 1 requires even lambda");
            return {(l - 2) / 2, (l + 4 * t - 2) / 2};
        case 2:
            return {l - 1, l + t - 1};
        case 3:
            if (l % 2 == 0 || t % 2 == 0) throw Error("case 3 requires odd lambda and tau");
            return {(l + t - 2) / 2, (l + 3 * t - 2) / 2};
        default:
            throw Error("unknown case id " + std::to_string(case_id));
    }
}

std::vector<std::optional<FailurePoint>> scan_all_L(uint32_t lambda, uint32_t tau, uint32_t rho,
                                                    int64_t bound) {
    std::vector<std::optional<FailurePoint>> out(lambda);
    for (uint32_t L = 0; L < lambda; ++L)
        out[L] = first_failure_point_bruteforce(lambda, tau, rho, L, bound);
    return out;
}

}  // namespace qmds
