#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace recon {

/// A reconnaissance mission instance: an undirected weighted graph where
/// vertex 0 is the base camp. Edge weights q are the probabilities of
/// surviving a crossing, vertex weights p the probabilities that a
/// transmission made there is not intercepted, and w the amount of
/// information available at each vertex. Immutable after construction.
class Mission {
public:
    Mission() = default;

    // Builds a mission from a full n*n crossing-probability matrix (row-major,
    // 0 = no edge, diagonal ignored). The matrix must be symmetric.
    static Mission from_matrix(int n, const std::vector<double>& q,
                               std::vector<double> p, std::vector<double> w);

    // Builds a mission from an explicit edge list {i, j, q_ij}. Edges with
    // q = 0 are dropped; self loops and duplicate pairs are rejected.
    static Mission from_edges(int n,
                              const std::vector<std::tuple<int, int, double>>& edges,
                              std::vector<double> p, std::vector<double> w);

    int vertex_count() const { return n_; }
    double q(int i, int j) const { return q_[static_cast<std::size_t>(i) * n_ + j]; }
    bool has_edge(int i, int j) const { return q(i, j) != 0.0; }
    double p(int i) const { return p_[i]; }
    double w(int i) const { return w_[i]; }

    const std::vector<double>& p() const { return p_; }
    const std::vector<double>& w() const { return w_; }

    // Neighbor ids in ascending order.
    const std::vector<int>& neighbors(int i) const { return adj_[i]; }

    // Unordered edge pairs (i < j), sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    double total_weight() const;
    bool is_connected() const;

    friend bool operator==(const Mission& a, const Mission& b) {
        return a.n_ == b.n_ && a.q_ == b.q_ && a.p_ == b.p_ && a.w_ == b.w_;
    }

private:
    int n_ = 0;
    std::vector<double> q_;    // dense n*n, symmetric, 0 = absent
    std::vector<double> p_;
    std::vector<double> w_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;

    void rebuild_adjacency();
};

/// One drone's plan: a closed walk from the base plus an aligned binary send
/// strategy (1 = transmit everything carried at that step).
struct Plan {
    std::vector<int> route;
    std::vector<std::uint8_t> send;

    bool operator==(const Plan&) const = default;
};

/// One plan per drone.
struct MultiPlan {
    std::vector<Plan> plans;

    bool operator==(const MultiPlan&) const = default;
};

// Returns std::nullopt when the mission is well formed, otherwise a
// description of the first violated invariant.
std::optional<std::string> validate_mission(const Mission& m);

// Checks a plan against a mission: closed walk from the base over existing
// edges, final send forced to 1, first send 0 (except the single-vertex
// plan). Repeated vertices are legal.
std::optional<std::string> validate_plan(const Mission& m, const Plan& plan);

std::optional<std::string> validate_multiplan(const Mission& m, const MultiPlan& mp);

// Path graph 0-1-...-(n-1) with q = 1/sqrt(n) on every edge, p_i = 1 only at
// the base and one unit of information everywhere else. Any optimal plan on
// this family needs n^2 - n crossings.
Mission make_path_instance(int n);

// Uniform-q instance over an arbitrary connected graph: p_i = 1 everywhere,
// w_i = 1 off the base. Returns the mission together with the threshold
// r = (q - q^n) / (1 - q); the optimum reaches r exactly when the graph has a
// Hamiltonian path starting at vertex 0.
std::pair<Mission, double> make_hardness_instance(
    int n, const std::vector<std::pair<int, int>>& edges, double q);

}  // namespace recon
