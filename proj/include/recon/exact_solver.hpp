#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "recon/mission.hpp"

namespace recon {

/// Thrown when an exact solve would need more memory than allowed.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

struct ExactResult {
    Plan plan;
    double value = 0.0;
};

// Estimated bytes for the dynamic program's tables at the given horizon.
std::uint64_t exact_memory_estimate(const Mission& m, int horizon);

// Optimal plan among all plans with at most `horizon` crossings, found by
// dynamic programming over (remaining time, position, observed set, carried
// set). Sets over vertices with positive information value only. Pass
// horizon <= 0 to use the default n^2 - 1, which is always enough for the
// unrestricted optimum. Ties are broken deterministically: terminate before
// moving, lower neighbor id first, carrying before sending.
//
// Throws CapacityError when the tables would exceed `max_bytes`, and
// std::invalid_argument on an invalid or disconnected mission.
ExactResult solve_exact(const Mission& m, int horizon = 0,
                        std::uint64_t max_bytes = 2'000'000'000ULL);

// Independent oracle: depth-first enumeration of every base-to-base walk of
// at most max_len crossings together with every send strategy, evaluated via
// expected_value_single. Branches that provably cannot beat the incumbent
// are cut, which keeps the search exact. Small instances only (n <= 6,
// max_len <= 26).
ExactResult brute_force_enumerate(const Mission& m, int max_len);

}  // namespace recon
