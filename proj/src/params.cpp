#include "qmds/params.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qmds {
namespace {

std::vector<uint32_t> divisors_above_one(uint32_t n) {
    std::vector<uint32_t> out;
    for (uint32_t d = 2; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

}  // namespace

std::optional<std::pair<uint32_t, uint32_t>> prime_power_decomposition(uint64_t q) {
    if (q < 2 || q > UINT32_MAX) return std::nullopt;
    uint64_t r = q;
    uint32_t p = 0;
    for (uint64_t d = 2; d * d <= r; ++d) {
        if (r % d == 0) {
            p = static_cast<uint32_t>(d);
            break;
        }
    }
    if (p == 0) return std::make_pair(static_cast<uint32_t>(q), 1u);
    uint32_t m = 0;
    while (r % p == 0) {
        r /= p;
        ++m;
    }
    if (r != 1) return std::nullopt;
    return std::make_pair(p, m);
}

int classify_case(uint32_t lambda, uint32_t tau, uint32_t rho) {
    if (lambda < 2 || tau < 2 || rho < 2)
        throw ParamError("moduli-range", "lambda, tau and rho must all exceed 1");
    if (std::gcd(lambda, tau) != 1)
        throw ParamError("gcd-lambda-tau", "gcd(lambda, tau) must be 1");
    if (lambda % 2 == 0) return 1;
    if (lambda < tau || tau % 2 == 0 || rho == 2) return 2;
    return 3;
}

uint32_t optimal_L(int case_id, uint32_t lambda, uint32_t tau) {
    switch (case_id) {
        case 1:
        case 3:
            return (2 * tau - 2) % lambda;
        case 2:
            return (tau - 2) % lambda;
        default:
            throw Error("unknown case id " + std::to_string(case_id));
    }
}

uint32_t max_distance_T(int case_id, uint32_t lambda, uint32_t tau) {
    switch (case_id) {
        case 1:
            if (lambda % 2 != 0) throw Error("case 1 requires even lambda");
            return (lambda + 4 * tau) / 2;
        case 2:
            return lambda + tau;
        case 3:
            if (lambda % 2 == 0 || tau % 2 == 0) throw Error("case 3 requires odd lambda and tau");
            return (lambda + 3 * tau) / 2;
        default:
            throw Error("unknown case id " + std::to_string(case_id));
    }
}

ConstructionParams validate_params(uint32_t q, uint32_t lambda, uint32_t tau, uint32_t rho,
                                   uint32_t sigma) {
    auto pm = prime_power_decomposition(q);
    if (!pm || q < 3)
        throw ParamError("q-prime-power", "q = " + std::to_string(q) +
                                              " must be a prime power >= 3");
    if (lambda < 2)
        throw ParamError("lambda-range", "lambda must exceed 1");
    if ((q - 1) % lambda != 0)
        throw ParamError("lambda-divides",
                         "lambda = " + std::to_string(lambda) + " must divide q-1 = " +
                             std::to_string(q - 1));
    if (tau < 2) throw ParamError("tau-range", "tau must exceed 1");
    if ((q + 1) % tau != 0)
        throw ParamError("tau-divides", "tau = " + std::to_string(tau) +
                                            " must divide q+1 = " + std::to_string(q + 1));
    if (rho < 2) throw ParamError("rho-range", "rho must exceed 1");
    if ((q + 1) % rho != 0)
        throw ParamError("rho-divides", "rho = " + std::to_string(rho) +
                                            " must divide q+1 = " + std::to_string(q + 1));
    if (std::gcd(lambda, tau) != 1)
        throw ParamError("gcd-lambda-tau", "gcd(lambda, tau) = " +
                                               std::to_string(std::gcd(lambda, tau)) +
                                               " but must be 1");

    ConstructionParams P;
    P.q = q;
    P.lambda = lambda;
    P.tau = tau;
    P.rho = rho;
    P.sigma = sigma;
    P.kappa1 = std::gcd(lambda, rho);
    P.kappa2 = std::gcd(tau, rho);
    P.kappa = P.kappa1 * P.kappa2;
    // kappa1 and kappa2 are coprime (they divide lambda and tau), so kappa | rho.
    if (rho / P.kappa < 2)
        throw ParamError("rho-over-kappa", "rho/kappa = " + std::to_string(rho / P.kappa) +
                                               " but must be at least 2");
    if (sigma < 2 || sigma > rho / P.kappa)
        throw ParamError("sigma-range", "sigma = " + std::to_string(sigma) +
                                            " must satisfy 2 <= sigma <= rho/kappa = " +
                                            std::to_string(rho / P.kappa));
    P.n = uint64_t(lambda) * tau * sigma;
    P.case_id = classify_case(lambda, tau, rho);
    P.L = optimal_L(P.case_id, lambda, tau);
    P.T = max_distance_T(P.case_id, lambda, tau);
    // Dimension feasibility guard; never binding for admissible tuples
    // (sigma >= 2 forces n >= 2*lambda*tau > 2T) but kept as a check.
    if (2 * (uint64_t(P.T) - 1) > P.n)
        throw ParamError("dimension-feasibility", "2(T-1) exceeds n");
    return P;
}

std::vector<ConstructionParams> enumerate_params(uint32_t q, std::optional<uint64_t> max_n) {
    auto pm = prime_power_decomposition(q);
    if (!pm || q < 3)
        throw ParamError("q-prime-power",
                         "q = " + std::to_string(q) + " must be a prime power >= 3");
    std::vector<ConstructionParams> out;
    for (uint32_t lambda : divisors_above_one(q - 1)) {
        for (uint32_t tau : divisors_above_one(q + 1)) {
            if (std::gcd(lambda, tau) != 1) continue;
            for (uint32_t rho : divisors_above_one(q + 1)) {
                uint32_t kappa = std::gcd(lambda, rho) * std::gcd(tau, rho);
                if (rho / kappa < 2) continue;
                for (uint32_t sigma = 2; sigma <= rho / kappa; ++sigma) {
                    uint64_t n = uint64_t(lambda) * tau * sigma;
                    if (max_n && n > *max_n) break;
                    out.push_back(validate_params(q, lambda, tau, rho, sigma));
                }
            }
        }
    }
    return out;
}

}  // namespace qmds
