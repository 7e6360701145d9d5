#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "recon/mission.hpp"

namespace recon {

enum class VarKind { Binary, Continuous };

struct MilpVar {
    std::string name;
    VarKind kind = VarKind::Continuous;
    double lb = 0.0;
    double ub = 1.0;
};

struct LinTerm {
    int var = 0;
    double coeff = 0.0;
};

struct MilpConstraint {
    std::string name;
    std::vector<LinTerm> terms;
    char sense = '<';  // '<' (<=), '>' (>=), '='
    double rhs = 0.0;
};

/// Time-indexed mixed-integer model of the reconnaissance problem. One time
/// period = move over one directed arc (a {0,0} self loop lets the drone
/// idle at the base), then observe, then optionally transmit. Continuous
/// auxiliaries linearize the products between survival / carried-value
/// state and the binary decisions.
struct MilpModel {
    int n = 0;
    int horizon = 0;     // number of time periods
    double big_m = 0.0;  // sum of all information values
    bool literal_carry_rule = false;

    std::vector<std::pair<int, int>> arcs;  // directed (from, to), (0,0) first
    std::vector<double> arc_q;              // crossing probability per arc

    std::vector<MilpVar> vars;
    std::vector<MilpConstraint> constraints;
    std::vector<LinTerm> objective;  // maximized

    std::unordered_map<std::string, int> var_index;

    // var id by (period-1, arc id) / (period-1, vertex)
    std::vector<std::vector<int>> x_var, y_var, z_var, eps_var;

    int index_of(const std::string& name) const;
};

// Builds the complete model for `t_max` periods. With `literal_carry_rule`
// the post-transmission value is capped by the pre-observation value and
// gated on the observation variable instead of the transmission variable;
// that variant zeroes carried value on observation and is kept only for
// comparison.
MilpModel build_milp(const Mission& m, int t_max, bool literal_carry_rule = false);

// Deterministic LP-format text (Maximize / Subject To / Bounds / Binary /
// End). Coefficients use the shortest decimal form that round-trips, at most
// 17 significant digits.
std::string export_lp(const MilpModel& model);

/// Variable assignment, name -> value. Missing names read as 0.
using Assignment = std::unordered_map<std::string, double>;

// Parses "name value" lines; blank lines and lines starting with '#' are
// skipped. This matches the .sol files written by common MIP solvers.
Assignment parse_solution_text(const std::string& text);
Assignment load_solution(const std::string& path);

// Returns a human-readable description per violated row or bound, empty when
// the assignment is feasible within tol.
std::vector<std::string> check_assignment(const MilpModel& model, const Assignment& a,
                                          double tol = 1e-9);

double assignment_objective(const MilpModel& model, const Assignment& a);

// Feasible assignment encoding a valid plan: route padded with base self
// loops up to the horizon, auxiliaries set to their exact products. The
// assignment's objective equals the plan's expected value.
Assignment assignment_from_plan(const Mission& m, const MilpModel& model, const Plan& plan);

/// Raised by import_solution on malformed or inconsistent assignments.
class MilpImportError : public std::runtime_error {
public:
    explicit MilpImportError(const std::string& what) : std::runtime_error(what) {}
};

struct ImportedSolution {
    Plan plan;
    double assignment_objective = 0.0;  // read from the eps variables
    double evaluated_objective = 0.0;   // expected_value_single of the plan
};

// Reconstructs the walk from the x variables (base self loops collapse away)
// and the send strategy from z, then cross-checks the assignment's objective
// against the evaluator. Throws MilpImportError on fractional binaries,
// broken flow structure, or an objective mismatch beyond 1e-5.
ImportedSolution import_solution(const Mission& m, const MilpModel& model, const Assignment& a);

}  // namespace recon
