#pragma once

#include <vector>

#include "recon/mission.hpp"

namespace recon {

/// Full evaluation of one plan.
struct EvalBreakdown {
    double expected_value = 0.0;           // expected units of transmitted information
    double survival = 0.0;                 // probability the drone finishes the plan
    std::vector<double> per_vertex_delivery;  // P(information of v reaches the base)
};

// Probability of surviving the whole walk and every attempted transmission.
// Throws std::invalid_argument on an invalid plan.
double survival_probability(const Mission& m, const Plan& plan);

// Expected transmitted information. Information at a vertex is collected on
// the first visit only; a transmission sends everything gathered since the
// previous one. The expected value is accumulated per transmission, the
// delivery probabilities per vertex; the two viewpoints agree up to rounding.
EvalBreakdown expected_value_single(const Mission& m, const Plan& plan);

// Per-vertex delivery probabilities computed straight from the definition:
// for a vertex first seen at position f with the next send at position s,
// P(D_v) multiplies every crossing up to s and every transmission up to and
// including s. Kept separate from expected_value_single so the two can be
// cross-checked.
std::vector<double> delivery_probabilities(const Mission& m, const Plan& plan);

// Multi-drone expected value: drones fail independently, so vertex v is
// delivered with probability 1 - prod_i (1 - P(D_iv)). A single drone
// reduces to expected_value_single exactly.
double expected_value_multi(const Mission& m, const MultiPlan& mp);

}  // namespace recon
