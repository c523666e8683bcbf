#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qmds/errors.hpp"

namespace qmds {

// A validated parameter tuple for the construction, together with the
// derived quantities: kappa = gcd(lambda,rho)*gcd(tau,rho), n = lambda*tau*sigma,
// the case of the summary table, the table-optimal L (reduced mod lambda)
// and the maximal quantum distance T.
struct ConstructionParams {
    uint32_t q = 0;
    uint32_t lambda = 0;  // divisor of q-1, > 1
    uint32_t tau = 0;     // divisor of q+1, > 1
    uint32_t rho = 0;     // divisor of q+1, > 1
    uint32_t sigma = 0;   // 2 <= sigma <= rho/kappa
    uint32_t kappa1 = 0, kappa2 = 0, kappa = 0;
    uint64_t n = 0;
    int case_id = 0;  // 1, 2 or 3
    uint32_t L = 0;   // reduced mod lambda
    uint32_t T = 0;
};

struct QuantumCodeParams {
    uint32_t q = 0;
    uint64_t n = 0;
    int64_t k_q = 0;  // n - 2d + 2
    uint32_t d = 0;
};

// (p, m) with q = p^m, or nothing if q is not a prime power >= 2.
std::optional<std::pair<uint32_t, uint32_t>> prime_power_decomposition(uint64_t q);

// Case of the summary table:
//   1: lambda even
//   2: lambda odd and (lambda < tau or tau even or rho = 2)
//   3: lambda odd, lambda > tau, tau odd, rho != 2
// The three conditions partition all tuples with lambda,tau,rho > 1 and
// gcd(lambda,tau) = 1 (lambda = tau is impossible).
int classify_case(uint32_t lambda, uint32_t tau, uint32_t rho);

// (2*tau - 2) mod lambda for cases 1 and 3, (tau - 2) mod lambda for case 2.
uint32_t optimal_L(int case_id, uint32_t lambda, uint32_t tau);

// (lambda+4*tau)/2, lambda+tau, (lambda+3*tau)/2 for cases 1, 2, 3.
uint32_t max_distance_T(int case_id, uint32_t lambda, uint32_t tau);

// Checks every construction hypothesis and fills in the derived
// fields. Throws ParamError naming the violated hypothesis.
ConstructionParams validate_params(uint32_t q, uint32_t lambda, uint32_t tau, uint32_t rho,
                                   uint32_t sigma);

// Every admissible (lambda, tau, rho, sigma) for this q with n <= max_n
// (unbounded if absent), in lexicographic order, fully classified.
std::vector<ConstructionParams> enumerate_params(uint32_t q,
                                                 std::optional<uint64_t> max_n = std::nullopt);

}  // namespace qmds
