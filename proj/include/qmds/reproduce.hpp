#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qmds/params.hpp"

namespace qmds {

// One code named by a fixture family: the parameter tuple plus the distance
// to certify (always the maximal distance T of the tuple).
struct FixtureCode {
    ConstructionParams params;
    uint32_t d = 0;
};

// Fixture families:
//   c1      q = 3 (mod 8), q > 3:  lambda=(q-1)/2, tau=(q+1)/4, rho=4, sigma=3
//   c2      q odd, m | (q+1)/2 with (q+1)/(2m) even:
//           lambda=(q-1)/2, tau=(q+1)/(2m), rho=q+1, sigma=2
//   c3      q = 5 (mod 8), m | (q+1)/2, 1 < m < (q+1)/2:
//           lambda=q-1, tau=(q+1)/(2m), rho=q+1, sigma=2
//   small-d q = 1 (mod 6): lambda=3, tau=2, rho=q+1, sigma=2..(q+1)/2, d=5
// Defaults: c1 -> q=11; c2 -> q=83, m=7; c3 -> q=29, m=3; small-d -> q=7.
// c2/c3 at a non-default q require an explicit m; the error message lists
// the admissible values.
uint32_t fixture_default_q(std::string_view fixture);

std::vector<FixtureCode> fixture_codes(std::string_view fixture, uint32_t q,
                                       std::optional<uint32_t> m = std::nullopt);

}  // namespace qmds
