#include "qmds/reproduce.hpp"

#include <string>

#include "qmds/errors.hpp"

namespace qmds {
namespace {

std::vector<uint32_t> admissible_m_c2(uint32_t q) {
    std::vector<uint32_t> out;
    const uint32_t half = (q + 1) / 2;
    for (uint32_t m = 1; m < half; ++m)
        if (half % m == 0 && (half / m) % 2 == 0) out.push_back(m);
    return out;
}

std::vector<uint32_t> admissible_m_c3(uint32_t q) {
    std::vector<uint32_t> out;
    const uint32_t half = (q + 1) / 2;
    for (uint32_t m = 2; m < half; ++m)
        if (half % m == 0) out.push_back(m);
    return out;
}

std::string joined(const std::vector<uint32_t>& v) {
    std::string s;
    for (uint32_t x : v) {
        if (!s.empty()) s += ", ";
        s += std::to_string(x);
    }
    return s.empty() ? "none" : s;
}

uint32_t resolve_m(std::string_view fixture, uint32_t q, std::optional<uint32_t> m,
                   uint32_t default_q, uint32_t default_m,
                   const std::vector<uint32_t>& admissible) {
    if (!m) {
        if (q == default_q) return default_m;
        throw ParamError("fixture-m", std::string(fixture) + " at q = " + std::to_string(q) +
                                          " needs an explicit m (admissible: " +
                                          joined(admissible) + ")");
    }
    for (uint32_t a : admissible)
        if (a == *m) return *m;
    throw ParamError("fixture-m", "m = " + std::to_string(*m) + " is not admissible for " +
                                      std::string(fixture) + " at q = " + std::to_string(q) +
                                      " (admissible: " + joined(admissible) + ")");
}

}  // namespace

uint32_t fixture_default_q(std::string_view fixture) {
    if (fixture == "c1") return 11;
    if (fixture == "c2") return 83;
    if (fixture == "c3") return 29;
    if (fixture == "small-d") return 7;
    throw ParamError("fixture-name",
                     "unknown fixture '" + std::string(fixture) + "' (use c1, c2, c3 or small-d)");
}

std::vector<FixtureCode> fixture_codes(std::string_view fixture, uint32_t q,
                                       std::optional<uint32_t> m) {
    if (!prime_power_decomposition(q) || q < 3)
        throw ParamError("q-prime-power", "q = " + std::to_string(q) +
                                              " must be a prime power >= 3");
    std::vector<FixtureCode> out;
    if (fixture == "c1") {
        if (q % 8 != 3 || q <= 3)
            throw ParamError("fixture-congruence",
                             "c1 requires q = 3 (mod 8) and q > 3, got q = " + std::to_string(q));
        ConstructionParams P = validate_params(q, (q - 1) / 2, (q + 1) / 4, 4, 3);
        out.push_back({P, P.T});
    } else if (fixture == "c2") {
        if (q % 2 == 0)
            throw ParamError("fixture-congruence", "c2 requires odd q, got q = " + std::to_string(q));
        uint32_t mm = resolve_m(fixture, q, m, 83, 7, admissible_m_c2(q));
        ConstructionParams P = validate_params(q, (q - 1) / 2, (q + 1) / (2 * mm), q + 1, 2);
        out.push_back({P, P.T});
    } else if (fixture == "c3") {
        if (q % 8 != 5)
            throw ParamError("fixture-congruence",
                             "c3 requires q = 5 (mod 8), got q = " + std::to_string(q));
        uint32_t mm = resolve_m(fixture, q, m, 29, 3, admissible_m_c3(q));
        ConstructionParams P = validate_params(q, q - 1, (q + 1) / (2 * mm), q + 1, 2);
        out.push_back({P, P.T});
    } else if (fixture == "small-d") {
        if (q % 6 != 1)
            throw ParamError("fixture-congruence",
                             "small-d requires q = 1 (mod 6), got q = " + std::to_string(q));
        for (uint32_t sigma = 2; sigma <= (q + 1) / 2; ++sigma) {
            ConstructionParams P = validate_params(q, 3, 2, q + 1, sigma);
            out.push_back({P, P.T});
        }
    } else {
        throw ParamError("fixture-name", "unknown fixture '" + std::string(fixture) +
                                             "' (use c1, c2, c3 or small-d)");
    }
    return out;
}

}  // namespace qmds
