#include "recon/exact_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "recon/evaluator.hpp"

namespace recon {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Compresses the bits of `value` selected by `mask` into the low bits.
std::uint32_t extract_bits(std::uint32_t value, std::uint32_t mask) {
    std::uint32_t out = 0;
    int k = 0;
    while (mask) {
        const std::uint32_t low = mask & (~mask + 1);
        if (value & low) out |= 1u << k;
        ++k;
        mask &= mask - 1;
    }
    return out;
}

// Dense indexing of (observed, carried) pairs with carried a subset of
// observed: pairs for a fixed `observed` occupy a contiguous block of size
// 2^popcount(observed).
struct PairIndexer {
    int bits = 0;
    std::vector<std::uint32_t> offset;  // offset per observed mask
    std::uint32_t pair_count = 0;       // 3^bits

    explicit PairIndexer(int m) : bits(m) {
        offset.resize(std::size_t{1} << m);
        std::uint32_t acc = 0;
        for (std::uint32_t obs = 0; obs < offset.size(); ++obs) {
            offset[obs] = acc;
            acc += 1u << std::popcount(obs);
        }
        pair_count = acc;
    }

    std::uint32_t index(std::uint32_t obs, std::uint32_t car) const {
        return offset[obs] + extract_bits(car, obs);
    }
};

}  // namespace

std::uint64_t exact_memory_estimate(const Mission& m, int horizon) {
    int positive = 0;
    for (int v = 0; v < m.vertex_count(); ++v)
        if (v != 0 && m.w(v) > 0.0) ++positive;
    std::uint64_t pairs = 1;
    for (int i = 0; i < positive; ++i) pairs *= 3;
    const std::uint64_t states = pairs * static_cast<std::uint64_t>(m.vertex_count());
    // action table across all layers plus two value layers
    return states * (static_cast<std::uint64_t>(horizon) + 1) * sizeof(std::int32_t) +
           2 * states * sizeof(double);
}

ExactResult solve_exact(const Mission& m, int horizon, std::uint64_t max_bytes) {
    if (auto err = validate_mission(m)) throw std::invalid_argument("invalid mission: " + *err);
    const int n = m.vertex_count();
    if (horizon <= 0) horizon = n * n - 1;

    if (exact_memory_estimate(m, horizon) > max_bytes)
        throw CapacityError("exact solve needs about " +
                            std::to_string(exact_memory_estimate(m, horizon)) +
                            " bytes (limit " + std::to_string(max_bytes) + ")");

    // Observed/carried sets range over vertices with positive weight only.
    std::vector<int> tracked;  // bit position per vertex, -1 if untracked
    std::vector<int> bit_of(n, -1);
    for (int v = 0; v < n; ++v) {
        if (v != 0 && m.w(v) > 0.0) {
            bit_of[v] = static_cast<int>(tracked.size());
            tracked.push_back(v);
        }
    }
    const int mbits = static_cast<int>(tracked.size());
    const PairIndexer pairs(mbits);
    const std::size_t per_pos = pairs.pair_count;
    const std::size_t layer = static_cast<std::size_t>(n) * per_pos;

    std::vector<double> weight_of_mask(std::size_t{1} << mbits, 0.0);
    for (std::uint32_t mask = 1; mask < weight_of_mask.size(); ++mask) {
        const int b = std::countr_zero(mask);
        weight_of_mask[mask] = weight_of_mask[mask & (mask - 1)] + m.w(tracked[b]);
    }

    // Action per (t, pos, pair): -1 = terminate, otherwise neighbor*2 + send.
    std::vector<std::int32_t> action(static_cast<std::size_t>(horizon + 1) * layer, -1);
    std::vector<double> prev(layer), cur(layer);

    auto state = [&](int pos, std::uint32_t obs, std::uint32_t car) {
        return static_cast<std::size_t>(pos) * per_pos + pairs.index(obs, car);
    };

    // t = 0: the drone must already be at the base; terminating transmits
    // whatever it carries (base transmission succeeds with probability 1).
    for (int pos = 0; pos < n; ++pos) {
        for (std::uint32_t obs = 0; obs < (1u << mbits); ++obs) {
            for (std::uint32_t car = obs;; car = (car - 1) & obs) {
                prev[state(pos, obs, car)] = pos == 0 ? weight_of_mask[car] : kNegInf;
                if (car == 0) break;
            }
        }
    }

    for (int t = 1; t <= horizon; ++t) {
        std::int32_t* act = action.data() + static_cast<std::size_t>(t) * layer;
        for (int pos = 0; pos < n; ++pos) {
            for (std::uint32_t obs = 0; obs < (1u << mbits); ++obs) {
                for (std::uint32_t car = obs;; car = (car - 1) & obs) {
                    double best = pos == 0 ? weight_of_mask[car] : kNegInf;
                    std::int32_t best_act = -1;
                    for (int j : m.neighbors(pos)) {
                        const double qij = m.q(pos, j);
                        std::uint32_t obs2 = obs, car2 = car;
                        if (bit_of[j] >= 0 && !(obs & (1u << bit_of[j]))) {
                            obs2 |= 1u << bit_of[j];
                            car2 |= 1u << bit_of[j];
                        }
                        const double keep = prev[state(j, obs2, car2)];
                        if (const double v = qij * keep; v > best) {
                            best = v;
                            best_act = j * 2;
                        }
                        const double sent =
                            m.p(j) * (weight_of_mask[car2] + prev[state(j, obs2, 0)]);
                        if (const double v = qij * sent; v > best) {
                            best = v;
                            best_act = j * 2 + 1;
                        }
                    }
                    const std::size_t s = state(pos, obs, car);
                    cur[s] = best;
                    act[s] = best_act;
                    if (car == 0) break;
                }
            }
        }
        std::swap(prev, cur);
    }

    // Reconstruct from (horizon, base, empty, empty).
    ExactResult result;
    result.value = prev[state(0, 0, 0)];
    result.plan.route.push_back(0);
    result.plan.send.push_back(0);
    int t = horizon, pos = 0;
    std::uint32_t obs = 0, car = 0;
    while (t > 0) {
        const std::int32_t a = action[static_cast<std::size_t>(t) * layer + state(pos, obs, car)];
        if (a < 0) break;
        const int j = a / 2;
        const bool send = a % 2 != 0;
        if (bit_of[j] >= 0 && !(obs & (1u << bit_of[j]))) {
            obs |= 1u << bit_of[j];
            car |= 1u << bit_of[j];
        }
        if (send) car = 0;
        result.plan.route.push_back(j);
        result.plan.send.push_back(send ? 1 : 0);
        pos = j;
        --t;
    }
    result.plan.send.back() = 1;  // terminating transmission at the base
    return result;
}

ExactResult brute_force_enumerate(const Mission& m, int max_len) {
    if (auto err = validate_mission(m)) throw std::invalid_argument("invalid mission: " + *err);
    const int n = m.vertex_count();
    if (n > 6 || max_len > 26 || max_len < 0)
        throw std::invalid_argument("brute force limits exceeded (n <= 6, max_len <= 26)");

    ExactResult best;
    best.value = 0.0;
    best.plan.route = {0};
    best.plan.send = {1};

    double remaining = 0.0;  // total unobserved weight
    for (int v = 1; v < n; ++v) remaining += m.w(v);

    std::vector<int> route{0};
    std::vector<std::uint8_t> send{0};
    std::vector<char> observed(n, 0);
    observed[0] = 1;

    // Depth-first over (next move, send decision). `value` counts delivered
    // information so far, `carried` the gathered-but-unsent weight.
    auto dfs = [&](auto&& self, int pos, int depth, double surv, double carried,
                   double unobserved, double value) -> void {
        if (pos == 0 && value + surv * carried > best.value) {
            best.value = value + surv * carried;  // terminate: free base transmission
            best.plan.route = route;
            best.plan.send = send;
            best.plan.send.back() = 1;
        }
        if (depth == max_len) return;
        if (value + surv * (carried + unobserved) <= best.value) return;  // cannot improve
        for (int j : m.neighbors(pos)) {
            const double surv2 = surv * m.q(pos, j);
            double gain = 0.0;
            if (!observed[j] && m.w(j) > 0.0) {
                observed[j] = 1;
                gain = m.w(j);
            }
            route.push_back(j);
            // transmit at j (only useful with something on board)
            if (carried + gain > 0.0) {
                const double sent_surv = surv2 * m.p(j);
                send.push_back(1);
                self(self, j, depth + 1, sent_surv, 0.0, unobserved - gain,
                     value + sent_surv * (carried + gain));
                send.pop_back();
            }
            send.push_back(0);
            self(self, j, depth + 1, surv2, carried + gain, unobserved - gain, value);
            send.pop_back();
            route.pop_back();
            if (gain > 0.0) observed[j] = 0;
        }
    };
    dfs(dfs, 0, 0, 1.0, 0.0, remaining, 0.0);

    // Terminating transmits the carried weight at the base; recompute the
    // stored plan's value through the evaluator for an exact report.
    best.value = expected_value_single(m, best.plan).expected_value;
    return best;
}

}  // namespace recon
