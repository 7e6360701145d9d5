#include "recon/mission.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace recon {

void Mission::rebuild_adjacency() {
    adj_.assign(n_, {});
    edges_.clear();
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (i != j && q(i, j) != 0.0) adj_[i].push_back(j);
        }
    }
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            if (q(i, j) != 0.0) edges_.emplace_back(i, j);
        }
    }
}

Mission Mission::from_matrix(int n, const std::vector<double>& q,
                             std::vector<double> p, std::vector<double> w) {
    if (n < 1) throw std::invalid_argument("mission needs at least one vertex");
    if (q.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("crossing matrix must be n*n");
    if (p.size() != static_cast<std::size_t>(n) || w.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("p and w must have one entry per vertex");

    Mission m;
    m.n_ = n;
    m.q_.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double qij = q[static_cast<std::size_t>(i) * n + j];
            const double qji = q[static_cast<std::size_t>(j) * n + i];
            if (std::abs(qij - qji) > 1e-12)
                throw std::invalid_argument("crossing matrix must be symmetric");
            m.q_[static_cast<std::size_t>(i) * n + j] = qij;
            m.q_[static_cast<std::size_t>(j) * n + i] = qij;
        }
    }
    m.p_ = std::move(p);
    m.w_ = std::move(w);
    m.rebuild_adjacency();
    return m;
}

Mission Mission::from_edges(int n,
                            const std::vector<std::tuple<int, int, double>>& edges,
                            std::vector<double> p, std::vector<double> w) {
    if (n < 1) throw std::invalid_argument("mission needs at least one vertex");
    if (p.size() != static_cast<std::size_t>(n) || w.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("p and w must have one entry per vertex");

    Mission m;
    m.n_ = n;
    m.q_.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (const auto& [i, j, qij] : edges) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (i == j) throw std::invalid_argument("self loops are not allowed");
        if (qij == 0.0) continue;  // q = 0 means the edge does not exist
        if (m.q_[static_cast<std::size_t>(i) * n + j] != 0.0)
            throw std::invalid_argument("duplicate edge");
        m.q_[static_cast<std::size_t>(i) * n + j] = qij;
        m.q_[static_cast<std::size_t>(j) * n + i] = qij;
    }
    m.p_ = std::move(p);
    m.w_ = std::move(w);
    m.rebuild_adjacency();
    return m;
}

double Mission::total_weight() const {
    double s = 0.0;
    for (double x : w_) s += x;
    return s;
}

bool Mission::is_connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : adj_[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == n_;
}

std::optional<std::string> validate_mission(const Mission& m) {
    const int n = m.vertex_count();
    if (n < 1) return "mission needs at least one vertex";
    if (m.p(0) != 1.0) return "base transmission probability must be 1";
    if (m.w(0) != 0.0) return "base information value must be 0";
    for (int i = 0; i < n; ++i) {
        if (m.p(i) < 0.0 || m.p(i) > 1.0)
            return "transmission probability out of [0,1] at vertex " + std::to_string(i);
        if (m.w(i) < 0.0)
            return "negative information value at vertex " + std::to_string(i);
        for (int j = i + 1; j < n; ++j) {
            const double q = m.q(i, j);
            if (q < 0.0 || q > 1.0)
                return "crossing probability out of [0,1] on edge {" + std::to_string(i) +
                       "," + std::to_string(j) + "}";
        }
    }
    if (!m.is_connected()) return "graph not connected";
    return std::nullopt;
}

std::optional<std::string> validate_plan(const Mission& m, const Plan& plan) {
    const auto& route = plan.route;
    const auto& send = plan.send;
    if (route.empty()) return "route is empty";
    if (route.size() != send.size()) return "route and send lengths differ";
    for (int v : route) {
        if (v < 0 || v >= m.vertex_count())
            return "route vertex out of range: " + std::to_string(v);
    }
    if (route.front() != 0) return "route must start at the base";
    if (route.back() != 0) return "route must end at the base";
    for (std::size_t j = 1; j < route.size(); ++j) {
        if (!m.has_edge(route[j - 1], route[j]))
            return "route uses missing edge {" + std::to_string(route[j - 1]) + "," +
                   std::to_string(route[j]) + "}";
    }
    for (std::uint8_t b : send) {
        if (b > 1) return "send entries must be 0 or 1";
    }
    if (send.back() != 1) return "final send must be 1";
    if (route.size() > 1 && send.front() != 0) return "first send must be 0";
    return std::nullopt;
}

std::optional<std::string> validate_multiplan(const Mission& m, const MultiPlan& mp) {
    if (mp.plans.empty()) return "multiplan has no drones";
    for (std::size_t i = 0; i < mp.plans.size(); ++i) {
        if (auto err = validate_plan(m, mp.plans[i]))
            return "drone " + std::to_string(i) + ": " + *err;
    }
    return std::nullopt;
}

Mission make_path_instance(int n) {
    if (n < 2) throw std::invalid_argument("path instance needs n >= 2");
    const double q = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<std::tuple<int, int, double>> edges;
    edges.reserve(n - 1);
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1, q);
    std::vector<double> p(n, 0.0);
    std::vector<double> w(n, 1.0);
    p[0] = 1.0;
    w[0] = 0.0;
    return Mission::from_edges(n, edges, std::move(p), std::move(w));
}

std::pair<Mission, double> make_hardness_instance(
    int n, const std::vector<std::pair<int, int>>& edges, double q) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("q must lie in (0,1)");
    std::vector<std::tuple<int, int, double>> weighted;
    weighted.reserve(edges.size());
    for (const auto& [i, j] : edges) weighted.emplace_back(i, j, q);
    std::vector<double> p(n, 1.0);
    std::vector<double> w(n, 1.0);
    w[0] = 0.0;
    Mission m = Mission::from_edges(n, weighted, std::move(p), std::move(w));
    const double r = (q - std::pow(q, n)) / (1.0 - q);
    return {std::move(m), r};
}

}  // namespace recon
