#include "recon/evaluator.hpp"

#include <stdexcept>

namespace recon {

namespace {

void require_valid(const Mission& m, const Plan& plan) {
    if (auto err = validate_plan(m, plan)) throw std::invalid_argument("invalid plan: " + *err);
}

}  // namespace

double survival_probability(const Mission& m, const Plan& plan) {
    require_valid(m, plan);
    double surv = 1.0;
    if (plan.send[0]) surv *= m.p(plan.route[0]);
    for (std::size_t j = 1; j < plan.route.size(); ++j) {
        surv *= m.q(plan.route[j - 1], plan.route[j]);
        if (plan.send[j]) surv *= m.p(plan.route[j]);
    }
    return surv;
}

EvalBreakdown expected_value_single(const Mission& m, const Plan& plan) {
    require_valid(m, plan);
    const int n = m.vertex_count();

    EvalBreakdown out;
    out.per_vertex_delivery.assign(n, 0.0);

    std::vector<char> observed(n, 0);
    std::vector<int> batch;  // vertices gathered since the last transmission
    double batch_weight = 0.0;
    double surv = 1.0;

    observed[plan.route[0]] = 1;
    if (plan.send[0]) surv *= m.p(plan.route[0]);

    for (std::size_t j = 1; j < plan.route.size(); ++j) {
        const int v = plan.route[j];
        surv *= m.q(plan.route[j - 1], v);
        if (!observed[v]) {
            observed[v] = 1;
            if (m.w(v) > 0.0) {
                batch.push_back(v);
                batch_weight += m.w(v);
            }
        }
        if (plan.send[j]) {
            surv *= m.p(v);
            out.expected_value += batch_weight * surv;
            for (int u : batch) out.per_vertex_delivery[u] = surv;
            batch.clear();
            batch_weight = 0.0;
        }
    }
    out.survival = surv;
    return out;
}

std::vector<double> delivery_probabilities(const Mission& m, const Plan& plan) {
    require_valid(m, plan);
    const int n = m.vertex_count();
    const std::size_t k = plan.route.size();
    std::vector<double> out(n, 0.0);

    std::vector<std::size_t> first_seen(n, k);
    for (std::size_t j = 0; j < k; ++j) {
        const int v = plan.route[j];
        if (first_seen[v] == k) first_seen[v] = j;
    }

    for (int v = 0; v < n; ++v) {
        if (first_seen[v] == k) continue;  // never visited
        std::size_t s = first_seen[v];
        while (s < k && !plan.send[s]) ++s;
        if (s == k) continue;  // unreachable for valid plans (final send is 1)
        double prob = 1.0;
        for (std::size_t j = 1; j <= s; ++j) prob *= m.q(plan.route[j - 1], plan.route[j]);
        for (std::size_t j = 0; j <= s; ++j)
            if (plan.send[j]) prob *= m.p(plan.route[j]);
        out[v] = prob;
    }
    return out;
}

double expected_value_multi(const Mission& m, const MultiPlan& mp) {
    if (auto err = validate_multiplan(m, mp)) throw std::invalid_argument("invalid multiplan: " + *err);
    if (mp.plans.size() == 1) return expected_value_single(m, mp.plans[0]).expected_value;

    const int n = m.vertex_count();
    std::vector<double> miss_all(n, 1.0);  // prod_i (1 - P(D_iv))
    for (const auto& plan : mp.plans) {
        const auto breakdown = expected_value_single(m, plan);
        for (int v = 0; v < n; ++v) miss_all[v] *= 1.0 - breakdown.per_vertex_delivery[v];
    }
    double total = 0.0;
    for (int v = 0; v < n; ++v) total += m.w(v) * (1.0 - miss_all[v]);
    return total;
}

}  // namespace recon
