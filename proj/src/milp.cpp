#include "recon/milp.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "recon/evaluator.hpp"

namespace recon {

namespace {

std::string fmt(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string nm(const char* base, int a, int t) {
    return std::string(base) + "_" + std::to_string(a) + "_" + std::to_string(t);
}

std::string nm(const char* base, int a, int b, int t) {
    return std::string(base) + "_" + std::to_string(a) + "_" + std::to_string(b) + "_" +
           std::to_string(t);
}

class Builder {
public:
    explicit Builder(MilpModel& model) : model_(model) {}

    int var(std::string name, VarKind kind, double lb, double ub) {
        const int id = static_cast<int>(model_.vars.size());
        model_.var_index.emplace(name, id);
        model_.vars.push_back({std::move(name), kind, lb, ub});
        return id;
    }

    void row(std::string name, std::vector<LinTerm> terms, char sense, double rhs) {
        model_.constraints.push_back({std::move(name), std::move(terms), sense, rhs});
    }

private:
    MilpModel& model_;
};

}  // namespace

int MilpModel::index_of(const std::string& name) const {
    const auto it = var_index.find(name);
    if (it == var_index.end()) throw std::out_of_range("unknown variable " + name);
    return it->second;
}

MilpModel build_milp(const Mission& m, int t_max, bool literal_carry_rule) {
    if (auto err = validate_mission(m)) throw std::invalid_argument("invalid mission: " + *err);
    if (t_max < 1) throw std::invalid_argument("t_max must be at least 1");

    MilpModel model;
    model.n = m.vertex_count();
    model.horizon = t_max;
    model.big_m = m.total_weight();
    model.literal_carry_rule = literal_carry_rule;
    const int n = model.n;
    const double M = model.big_m;

    // Directed arcs: the {0,0} idle loop plus both orientations of every
    // edge, sorted by (from, to).
    model.arcs.emplace_back(0, 0);
    model.arc_q.push_back(1.0);
    for (const auto& [i, j] : m.edges()) {
        model.arcs.emplace_back(i, j);
        model.arcs.emplace_back(j, i);
    }
    std::vector<std::size_t> order(model.arcs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return model.arcs[a] < model.arcs[b];
    });
    {
        std::vector<std::pair<int, int>> arcs;
        for (std::size_t i : order) arcs.push_back(model.arcs[i]);
        model.arcs = std::move(arcs);
    }
    model.arc_q.assign(model.arcs.size(), 1.0);
    for (std::size_t a = 0; a < model.arcs.size(); ++a) {
        const auto& [i, j] = model.arcs[a];
        model.arc_q[a] = i == j ? 1.0 : m.q(i, j);
    }
    const int A = static_cast<int>(model.arcs.size());

    std::vector<std::vector<int>> arcs_into(n), arcs_from(n);
    for (int a = 0; a < A; ++a) {
        arcs_from[model.arcs[a].first].push_back(a);
        arcs_into[model.arcs[a].second].push_back(a);
    }

    Builder b(model);

    // Variables, family by family, periods outermost within each family.
    auto grid = [&](int t_count, int idx_count) {
        return std::vector<std::vector<int>>(t_count, std::vector<int>(idx_count, -1));
    };
    model.x_var = grid(t_max, A);
    model.y_var = grid(t_max, n);
    model.z_var = grid(t_max, n);
    model.eps_var = grid(t_max, n);
    auto sM = std::vector<int>(t_max, -1);
    auto sS = std::vector<int>(t_max, -1);
    auto vM = grid(t_max, n);
    auto vO = grid(t_max, n);
    auto vS = grid(t_max, n);
    auto alpha = grid(t_max, A);
    auto beta = grid(t_max, n);
    auto gamma = grid(t_max, A);
    auto delta = grid(t_max, n);

    for (int t = 1; t <= t_max; ++t)
        for (int a = 0; a < A; ++a)
            model.x_var[t - 1][a] = b.var(nm("x", model.arcs[a].first, model.arcs[a].second, t),
                                          VarKind::Binary, 0.0, 1.0);
    for (int t = 1; t <= t_max; ++t)
        for (int i = 0; i < n; ++i)
            model.y_var[t - 1][i] = b.var(nm("y", i, t), VarKind::Binary, 0.0, 1.0);
    for (int t = 1; t <= t_max; ++t)
        for (int i = 0; i < n; ++i)
            model.z_var[t - 1][i] = b.var(nm("z", i, t), VarKind::Binary, 0.0, 1.0);
    for (int t = 1; t <= t_max; ++t)
        sM[t - 1] = b.var("sM_" + std::to_string(t), VarKind::Continuous, 0.0, 1.0);
    for (int t = 1; t <= t_max; ++t)
        sS[t - 1] = b.var("sS_" + std::to_string(t), VarKind::Continuous, 0.0, 1.0);
    for (int t = 1; t <= t_max; ++t)
        for (int i = 0; i < n; ++i)
            vM[t - 1][i] = b.var(nm("vM", i, t), VarKind::Continuous, 0.0, M);
    for (int t = 1; t <= t_max; ++t)
        for (int i = 0; i < n; ++i)
            vO[t - 1][i] = b.var(nm("vO", i, t), VarKind::Continuous, 0.0, M);
    for (int t = 1; t <= t_max; ++t)
        for (int i = 0; i < n; ++i)
            vS[t - 1][i] = b.var(nm("vS", i, t), VarKind::Continuous, 0.0, M);
    for (int t = 1; t <= t_max; ++t)
        for (int a = 0; a < A; ++a)
            alpha[t - 1][a] = b.var(nm("alpha", model.arcs[a].first, model.arcs[a].second, t),
                                    VarKind::Continuous, 0.0, 1.0);
    for (int t = 1; t <= t_max; ++t)
        for (int i = 0; i < n; ++i)
            beta[t - 1][i] = b.var(nm("beta", i, t), VarKind::Continuous, 0.0, 1.0);
    for (int t = 1; t <= t_max; ++t)
        for (int a = 0; a < A; ++a)
            gamma[t - 1][a] = b.var(nm("gamma", model.arcs[a].first, model.arcs[a].second, t),
                                    VarKind::Continuous, 0.0, M);
    for (int t = 1; t <= t_max; ++t)
        for (int i = 0; i < n; ++i)
            delta[t - 1][i] = b.var(nm("delta", i, t), VarKind::Continuous, 0.0, 1.0);
    for (int t = 1; t <= t_max; ++t)
        for (int i = 0; i < n; ++i)
            model.eps_var[t - 1][i] = b.var(nm("eps", i, t), VarKind::Continuous, 0.0, M);

    // Objective: expected value of every transmission.
    for (int t = 1; t <= t_max; ++t)
        for (int i = 0; i < n; ++i)
            if (m.p(i) != 0.0) model.objective.push_back({model.eps_var[t - 1][i], m.p(i)});

    // One traversal per period.
    for (int t = 1; t <= t_max; ++t) {
        std::vector<LinTerm> terms;
        for (int a = 0; a < A; ++a) terms.push_back({model.x_var[t - 1][a], 1.0});
        b.row("move_onehot_t" + std::to_string(t), std::move(terms), '=', 1.0);
    }

    // Leave the base in period 1, arrive back in the last period.
    {
        std::vector<LinTerm> terms;
        for (int a : arcs_from[0]) terms.push_back({model.x_var[0][a], 1.0});
        b.row("start", std::move(terms), '=', 1.0);
    }
    {
        std::vector<LinTerm> terms;
        for (int a : arcs_into[0]) terms.push_back({model.x_var[t_max - 1][a], 1.0});
        b.row("end", std::move(terms), '=', 1.0);
    }

    // Each period starts where the previous one ended.
    for (int t = 2; t <= t_max; ++t) {
        for (int j = 0; j < n; ++j) {
            std::vector<LinTerm> terms;
            for (int a : arcs_into[j]) terms.push_back({model.x_var[t - 2][a], 1.0});
            for (int a : arcs_from[j]) terms.push_back({model.x_var[t - 1][a], -1.0});
            b.row("flow_j" + std::to_string(j) + "_t" + std::to_string(t), std::move(terms), '=',
                  0.0);
        }
    }

    // Observe each vertex at most once, and only upon arriving there.
    for (int i = 0; i < n; ++i) {
        std::vector<LinTerm> terms;
        for (int t = 1; t <= t_max; ++t) terms.push_back({model.y_var[t - 1][i], 1.0});
        b.row("obs_once_i" + std::to_string(i), std::move(terms), '<', 1.0);
    }
    for (int t = 1; t <= t_max; ++t) {
        for (int i = 0; i < n; ++i) {
            std::vector<LinTerm> terms{{model.y_var[t - 1][i], 1.0}};
            for (int a : arcs_into[i]) terms.push_back({model.x_var[t - 1][a], -1.0});
            b.row(nm("obs_where_i", i, t), std::move(terms), '<', 0.0);
        }
    }

    // Transmit only upon arriving.
    for (int t = 1; t <= t_max; ++t) {
        for (int i = 0; i < n; ++i) {
            std::vector<LinTerm> terms{{model.z_var[t - 1][i], 1.0}};
            for (int a : arcs_into[i]) terms.push_back({model.x_var[t - 1][a], -1.0});
            b.row(nm("send_where_i", i, t), std::move(terms), '<', 0.0);
        }
    }

    // alpha = sS(t-1) * x: survival entering the move.
    for (int t = 1; t <= t_max; ++t) {
        for (int a = 0; a < A; ++a) {
            const auto [i, j] = model.arcs[a];
            const int al = alpha[t - 1][a];
            const int x = model.x_var[t - 1][a];
            const std::string tag =
                "_i" + std::to_string(i) + "_j" + std::to_string(j) + "_t" + std::to_string(t);
            if (t == 1) {  // sS_0 = 1
                b.row("alpha_ub1" + tag, {{al, 1.0}}, '<', 1.0);
                b.row("alpha_ub2" + tag, {{al, 1.0}, {x, -1.0}}, '<', 0.0);
                b.row("alpha_lb" + tag, {{al, 1.0}, {x, -1.0}}, '>', 0.0);
            } else {
                const int s = sS[t - 2];
                b.row("alpha_ub1" + tag, {{al, 1.0}, {s, -1.0}}, '<', 0.0);
                b.row("alpha_ub2" + tag, {{al, 1.0}, {x, -1.0}}, '<', 0.0);
                b.row("alpha_lb" + tag, {{al, 1.0}, {s, -1.0}, {x, -1.0}}, '>', -1.0);
            }
        }
    }

    // Survival after moving.
    for (int t = 1; t <= t_max; ++t) {
        std::vector<LinTerm> terms{{sM[t - 1], 1.0}};
        for (int a = 0; a < A; ++a) terms.push_back({alpha[t - 1][a], -model.arc_q[a]});
        b.row("sM_def_t" + std::to_string(t), std::move(terms), '=', 0.0);
    }

    // beta = sM * z, then survival after sending.
    for (int t = 1; t <= t_max; ++t) {
        for (int i = 0; i < n; ++i) {
            const int be = beta[t - 1][i];
            const int z = model.z_var[t - 1][i];
            const int s = sM[t - 1];
            const std::string tag = "_i" + std::to_string(i) + "_t" + std::to_string(t);
            b.row("beta_ub1" + tag, {{be, 1.0}, {s, -1.0}}, '<', 0.0);
            b.row("beta_ub2" + tag, {{be, 1.0}, {z, -1.0}}, '<', 0.0);
            b.row("beta_lb" + tag, {{be, 1.0}, {s, -1.0}, {z, -1.0}}, '>', -1.0);
        }
    }
    for (int t = 1; t <= t_max; ++t) {
        std::vector<LinTerm> terms{{sS[t - 1], 1.0}, {sM[t - 1], -1.0}};
        for (int i = 0; i < n; ++i)
            if (m.p(i) != 1.0) terms.push_back({beta[t - 1][i], 1.0 - m.p(i)});
        b.row("sS_def_t" + std::to_string(t), std::move(terms), '=', 0.0);
    }

    // gamma = x * vS(from, t-1): carried value crossing an arc.
    for (int t = 1; t <= t_max; ++t) {
        for (int a = 0; a < A; ++a) {
            const auto [j, i] = model.arcs[a];  // travel j -> i
            const int ga = gamma[t - 1][a];
            const int x = model.x_var[t - 1][a];
            const std::string tag =
                "_j" + std::to_string(j) + "_i" + std::to_string(i) + "_t" + std::to_string(t);
            if (t == 1) {  // vS_{j,0} = 0
                b.row("gamma_ub1" + tag, {{ga, 1.0}}, '<', 0.0);
                b.row("gamma_ub2" + tag, {{ga, 1.0}, {x, -M}}, '<', 0.0);
                b.row("gamma_lb" + tag, {{ga, 1.0}, {x, -M}}, '>', -M);
            } else {
                const int vs = vS[t - 2][j];
                b.row("gamma_ub1" + tag, {{ga, 1.0}, {vs, -1.0}}, '<', 0.0);
                b.row("gamma_ub2" + tag, {{ga, 1.0}, {x, -M}}, '<', 0.0);
                b.row("gamma_lb" + tag, {{ga, 1.0}, {vs, -1.0}, {x, -M}}, '>', -M);
            }
        }
    }

    // Carried value after moving.
    for (int t = 1; t <= t_max; ++t) {
        for (int i = 0; i < n; ++i) {
            std::vector<LinTerm> terms{{vM[t - 1][i], 1.0}};
            for (int a : arcs_into[i]) terms.push_back({gamma[t - 1][a], -model.arc_q[a]});
            b.row(nm("vM_def_i", i, t), std::move(terms), '=', 0.0);
        }
    }

    // delta = sM * y, then carried value after observing.
    for (int t = 1; t <= t_max; ++t) {
        for (int i = 0; i < n; ++i) {
            const int de = delta[t - 1][i];
            const int y = model.y_var[t - 1][i];
            const int s = sM[t - 1];
            const std::string tag = "_i" + std::to_string(i) + "_t" + std::to_string(t);
            b.row("delta_ub1" + tag, {{de, 1.0}, {s, -1.0}}, '<', 0.0);
            b.row("delta_ub2" + tag, {{de, 1.0}, {y, -1.0}}, '<', 0.0);
            b.row("delta_lb" + tag, {{de, 1.0}, {s, -1.0}, {y, -1.0}}, '>', -1.0);
        }
    }
    for (int t = 1; t <= t_max; ++t) {
        for (int i = 0; i < n; ++i) {
            std::vector<LinTerm> terms{{vO[t - 1][i], 1.0}, {vM[t - 1][i], -1.0}};
            if (m.w(i) != 0.0) terms.push_back({delta[t - 1][i], -m.w(i)});
            b.row(nm("vO_def_i", i, t), std::move(terms), '=', 0.0);
        }
    }

    // Carried value after sending: zeroed by a transmission, otherwise free
    // to keep the pre-send value. The literal variant caps by vM and gates
    // on y instead.
    for (int t = 1; t <= t_max; ++t) {
        for (int i = 0; i < n; ++i) {
            const int vs = vS[t - 1][i];
            const std::string tag = "_i" + std::to_string(i) + "_t" + std::to_string(t);
            if (literal_carry_rule) {
                b.row("vs_ub1" + tag, {{vs, 1.0}, {vM[t - 1][i], -1.0}}, '<', 0.0);
                b.row("vs_ub2" + tag, {{vs, 1.0}, {model.y_var[t - 1][i], M}}, '<', M);
            } else {
                b.row("vs_ub1" + tag, {{vs, 1.0}, {vO[t - 1][i], -1.0}}, '<', 0.0);
                b.row("vs_ub2" + tag, {{vs, 1.0}, {model.z_var[t - 1][i], M}}, '<', M);
            }
        }
    }

    // eps = vO * z: value of the transmission made this period.
    for (int t = 1; t <= t_max; ++t) {
        for (int i = 0; i < n; ++i) {
            const int ep = model.eps_var[t - 1][i];
            const int z = model.z_var[t - 1][i];
            const int vo = vO[t - 1][i];
            const std::string tag = "_i" + std::to_string(i) + "_t" + std::to_string(t);
            b.row("eps_ub1" + tag, {{ep, 1.0}, {vo, -1.0}}, '<', 0.0);
            b.row("eps_ub2" + tag, {{ep, 1.0}, {z, -M}}, '<', 0.0);
            b.row("eps_lb" + tag, {{ep, 1.0}, {vo, -1.0}, {z, -M}}, '>', -M);
        }
    }

    return model;
}

std::string export_lp(const MilpModel& model) {
    std::string out;
    out.reserve(1 << 20);

    auto append_terms = [&](const std::vector<LinTerm>& terms, std::size_t indent) {
        std::size_t line_len = indent;
        for (std::size_t k = 0; k < terms.size(); ++k) {
            std::string piece;
            const double c = terms[k].coeff;
            if (k == 0) {
                piece = fmt(c) + " " + model.vars[terms[k].var].name;
            } else if (c >= 0.0) {
                piece = " + " + fmt(c) + " " + model.vars[terms[k].var].name;
            } else {
                piece = " - " + fmt(-c) + " " + model.vars[terms[k].var].name;
            }
            if (line_len + piece.size() > 240) {
                out += "\n ";
                line_len = 1;
            }
            out += piece;
            line_len += piece.size();
        }
    };

    out += "Maximize\n obj: ";
    append_terms(model.objective, 7);
    out += "\nSubject To\n";
    for (const auto& c : model.constraints) {
        out += " " + c.name + ": ";
        append_terms(c.terms, c.name.size() + 3);
        out += c.sense == '<' ? " <= " : c.sense == '>' ? " >= " : " = ";
        out += fmt(c.rhs);
        out += "\n";
    }
    out += "Bounds\n";
    for (const auto& v : model.vars) {
        if (v.kind == VarKind::Binary) continue;
        out += " " + fmt(v.lb) + " <= " + v.name + " <= " + fmt(v.ub) + "\n";
    }
    out += "Binary\n";
    for (const auto& v : model.vars) {
        if (v.kind == VarKind::Binary) out += " " + v.name + "\n";
    }
    out += "End\n";
    return out;
}

Assignment parse_solution_text(const std::string& text) {
    Assignment a;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string name;
        double value = 0.0;
        if (!(fields >> name >> value))
            throw std::runtime_error("solution line " + std::to_string(lineno) +
                                     ": expected 'name value'");
        a[name] = value;
    }
    return a;
}

Assignment load_solution(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_solution_text(buf.str());
}

namespace {

double value_of(const Assignment& a, const std::string& name) {
    const auto it = a.find(name);
    return it == a.end() ? 0.0 : it->second;
}

}  // namespace

std::vector<std::string> check_assignment(const MilpModel& model, const Assignment& a,
                                          double tol) {
    std::vector<double> x(model.vars.size(), 0.0);
    for (std::size_t i = 0; i < model.vars.size(); ++i) x[i] = value_of(a, model.vars[i].name);

    std::vector<std::string> violations;
    for (std::size_t i = 0; i < model.vars.size(); ++i) {
        const auto& v = model.vars[i];
        if (x[i] < v.lb - tol || x[i] > v.ub + tol)
            violations.push_back("bound " + v.name + " = " + fmt(x[i]) + " outside [" +
                                 fmt(v.lb) + ", " + fmt(v.ub) + "]");
    }
    for (const auto& c : model.constraints) {
        double lhs = 0.0;
        for (const auto& t : c.terms) lhs += t.coeff * x[t.var];
        const bool ok = c.sense == '<'   ? lhs <= c.rhs + tol
                        : c.sense == '>' ? lhs >= c.rhs - tol
                                         : std::abs(lhs - c.rhs) <= tol;
        if (!ok)
            violations.push_back(c.name + ": lhs " + fmt(lhs) + " " + c.sense + " rhs " +
                                 fmt(c.rhs));
    }
    return violations;
}

double assignment_objective(const MilpModel& model, const Assignment& a) {
    double total = 0.0;
    for (const auto& t : model.objective) total += t.coeff * value_of(a, model.vars[t.var].name);
    return total;
}

Assignment assignment_from_plan(const Mission& m, const MilpModel& model, const Plan& plan) {
    if (auto err = validate_plan(m, plan)) throw std::invalid_argument("invalid plan: " + *err);
    const int crossings = static_cast<int>(plan.route.size()) - 1;
    if (crossings > model.horizon)
        throw std::invalid_argument("plan needs " + std::to_string(crossings) +
                                    " periods, model has " + std::to_string(model.horizon));
    const int n = model.n;
    const int T = model.horizon;

    Assignment a;
    std::vector<char> arrived(n, 0);
    double sS_prev = 1.0;
    std::vector<double> vS_prev(n, 0.0);

    for (int t = 1; t <= T; ++t) {
        const int from = t <= crossings ? plan.route[t - 1] : 0;
        const int to = t <= crossings ? plan.route[t] : 0;
        bool send = t <= crossings && plan.send[t] != 0;
        if (plan.route.size() == 1 && t == T) send = true;  // lone terminating transmission

        const double q_used = from == to ? 1.0 : m.q(from, to);
        const double sM_t = sS_prev * q_used;
        const bool observe = !arrived[to];
        arrived[to] = 1;

        double vO_to = q_used * vS_prev[from];
        if (observe) vO_to += m.w(to) * sM_t;

        for (int arc = 0; arc < static_cast<int>(model.arcs.size()); ++arc) {
            const auto [i, j] = model.arcs[arc];
            const bool used = i == from && j == to;
            a[nm("x", i, j, t)] = used ? 1.0 : 0.0;
            a[nm("alpha", i, j, t)] = used ? sS_prev : 0.0;
            a[nm("gamma", i, j, t)] = used ? vS_prev[i] : 0.0;
        }
        a["sM_" + std::to_string(t)] = sM_t;
        double sS_t = sM_t;
        if (send) sS_t = sM_t * m.p(to);
        a["sS_" + std::to_string(t)] = sS_t;

        std::vector<double> vS_now(n, 0.0);
        for (int i = 0; i < n; ++i) {
            const bool here = i == to;
            const double vM_i = here ? q_used * vS_prev[from] : 0.0;
            const double vO_i = here ? vO_to : 0.0;
            const bool y_i = here && observe;
            const bool z_i = here && send;
            a[nm("y", i, t)] = y_i ? 1.0 : 0.0;
            a[nm("z", i, t)] = z_i ? 1.0 : 0.0;
            a[nm("vM", i, t)] = vM_i;
            a[nm("vO", i, t)] = vO_i;
            a[nm("beta", i, t)] = z_i ? sM_t : 0.0;
            a[nm("delta", i, t)] = y_i ? sM_t : 0.0;
            a[nm("eps", i, t)] = z_i ? vO_i : 0.0;
            vS_now[i] = z_i ? 0.0 : vO_i;
            a[nm("vS", i, t)] = vS_now[i];
        }

        sS_prev = sS_t;
        vS_prev = std::move(vS_now);
    }
    return a;
}

ImportedSolution import_solution(const Mission& m, const MilpModel& model, const Assignment& a) {
    const int T = model.horizon;

    auto as_bit = [&](const std::string& name) {
        const double v = value_of(a, name);
        if (std::abs(v) <= 1e-6) return 0;
        if (std::abs(v - 1.0) <= 1e-6) return 1;
        throw MilpImportError("variable " + name + " = " + fmt(v) + " is not binary");
    };

    ImportedSolution out;
    out.plan.route = {0};
    out.plan.send = {0};
    int pos = 0;
    for (int t = 1; t <= T; ++t) {
        int used = -1;
        for (int arc = 0; arc < static_cast<int>(model.arcs.size()); ++arc) {
            if (as_bit(model.vars[model.x_var[t - 1][arc]].name) == 1) {
                if (used >= 0)
                    throw MilpImportError("period " + std::to_string(t) +
                                          ": more than one traversal selected");
                used = arc;
            }
        }
        if (used < 0)
            throw MilpImportError("period " + std::to_string(t) + ": no traversal selected");
        const auto [from, to] = model.arcs[used];
        if (from != pos)
            throw MilpImportError("period " + std::to_string(t) + ": traversal leaves vertex " +
                                  std::to_string(from) + " but the drone is at " +
                                  std::to_string(pos));
        const int zbit = as_bit(model.vars[model.z_var[t - 1][to]].name);
        if (from == 0 && to == 0) {
            if (zbit) out.plan.send.back() = 1;  // idle transmission at the base
        } else {
            out.plan.route.push_back(to);
            out.plan.send.push_back(static_cast<std::uint8_t>(zbit));
        }
        pos = to;
    }
    if (pos != 0) throw MilpImportError("route does not end at the base");
    out.plan.send.back() = 1;
    if (out.plan.route.size() > 1) out.plan.send.front() = 0;
    if (auto err = validate_plan(m, out.plan))
        throw MilpImportError("reconstructed plan invalid: " + *err);

    out.assignment_objective = assignment_objective(model, a);
    out.evaluated_objective = expected_value_single(m, out.plan).expected_value;
    if (std::abs(out.assignment_objective - out.evaluated_objective) > 1e-5)
        throw MilpImportError("objective mismatch: assignment " + fmt(out.assignment_objective) +
                              " vs evaluated " + fmt(out.evaluated_objective));
    return out;
}

}  // namespace recon
