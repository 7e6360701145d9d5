#include "recon/mission_io.hpp"

#include <fstream>
#include <stdexcept>

namespace recon {

using nlohmann::json;

namespace {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return j;
}

void save_json_file(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

}  // namespace

json mission_to_json(const Mission& m) {
    const int n = m.vertex_count();
    json matrix = json::array();
    for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int j = 0; j < n; ++j) row.push_back(i == j ? m.p(i) : m.q(i, j));
        matrix.push_back(std::move(row));
    }
    return json{{"n", n}, {"matrix", std::move(matrix)}, {"w", m.w()}};
}

Mission mission_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("matrix") || !j.contains("w"))
        throw std::runtime_error("mission file needs fields n, matrix, w");
    const int n = j.at("n").get<int>();
    if (n < 1) throw std::runtime_error("mission file: n must be positive");
    const auto& matrix = j.at("matrix");
    if (!matrix.is_array() || matrix.size() != static_cast<std::size_t>(n))
        throw std::runtime_error("mission file: matrix must have n rows");
    std::vector<double> q(static_cast<std::size_t>(n) * n, 0.0);
    std::vector<double> p(n, 0.0);
    for (int i = 0; i < n; ++i) {
        const auto& row = matrix.at(i);
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            throw std::runtime_error("mission file: matrix row " + std::to_string(i) +
                                     " must have n entries");
        for (int k = 0; k < n; ++k) {
            const double v = row.at(k).get<double>();
            if (i == k)
                p[i] = v;
            else
                q[static_cast<std::size_t>(i) * n + k] = v;
        }
    }
    std::vector<double> w = j.at("w").get<std::vector<double>>();
    if (w.size() != static_cast<std::size_t>(n))
        throw std::runtime_error("mission file: w must have n entries");
    try {
        return Mission::from_matrix(n, q, std::move(p), std::move(w));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("mission file: ") + e.what());
    }
}

json plan_to_json(const Plan& plan) {
    json send = json::array();
    for (auto b : plan.send) send.push_back(static_cast<int>(b));
    return json{{"route", plan.route}, {"send", std::move(send)}};
}

Plan plan_from_json(const json& j) {
    if (!j.is_object() || !j.contains("route") || !j.contains("send"))
        throw std::runtime_error("plan needs fields route and send");
    Plan plan;
    plan.route = j.at("route").get<std::vector<int>>();
    for (const auto& b : j.at("send")) {
        const int v = b.get<int>();
        if (v != 0 && v != 1) throw std::runtime_error("plan send entries must be 0 or 1");
        plan.send.push_back(static_cast<std::uint8_t>(v));
    }
    return plan;
}

json multiplan_to_json(const MultiPlan& mp) {
    json j = json::array();
    for (const auto& plan : mp.plans) j.push_back(plan_to_json(plan));
    return j;
}

MultiPlan multiplan_from_json(const json& j) {
    MultiPlan mp;
    if (j.is_array()) {
        for (const auto& item : j) mp.plans.push_back(plan_from_json(item));
    } else {
        mp.plans.push_back(plan_from_json(j));
    }
    if (mp.plans.empty()) throw std::runtime_error("multiplan has no drones");
    return mp;
}

Mission load_mission(const std::string& path) { return mission_from_json(load_json_file(path)); }
void save_mission(const Mission& m, const std::string& path) { save_json_file(mission_to_json(m), path); }

Plan load_plan(const std::string& path) { return plan_from_json(load_json_file(path)); }
void save_plan(const Plan& plan, const std::string& path) { save_json_file(plan_to_json(plan), path); }

MultiPlan load_multiplan(const std::string& path) { return multiplan_from_json(load_json_file(path)); }
void save_multiplan(const MultiPlan& mp, const std::string& path) { save_json_file(multiplan_to_json(mp), path); }

}  // namespace recon
