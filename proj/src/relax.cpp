#include "covpack/relax.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <limits>

namespace covpack {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sat_slack(double rhs) {
    double a = rhs < 0 ? -rhs : rhs;
    return kSatTol * (a > 1.0 ? a : 1.0);
}

// All term shapes applicable to variable j, strictest first.
struct VarOptions {
    TermShape shapes[4];
    int count = 0;
};

VarOptions options_for(const CoveringInstance& inst, int j) {
    VarOptions o;
    bool fl = inst.is_integer(j);
    bool bd = inst.bounded(j);
    for (int f = fl ? 1 : 0; f >= 0; --f)
        for (int b = bd ? 1 : 0; b >= 0; --b)
            o.shapes[o.count++] = TermShape{f != 0, b != 0};
    return o;
}

// Minimum value v >= 0 such that shape(v) >= r, or infinity if the shape
// tops out below r (bound-capped).
double target_value(double r, double u, TermShape s) {
    if (s.use_floor) {
        double q = tol_ceil(r);
        if (q < 0.0) q = 0.0;
        if (s.use_bound && q > tol_floor(u)) return kInf;
        return q;
    }
    if (s.use_bound && r > u + sat_slack(u)) return kInf;
    return r;
}

bool row_is_fractional(const CoveringInstance& inst, int cons) {
    for (int j : inst.cons_vars(cons))
        if (inst.is_integer(j) || inst.bounded(j)) return false;
    return true;
}

}  // namespace

double term_value(double x, double u, TermShape shape) {
    double v = x;
    if (shape.use_bound && v > u) v = u;
    if (shape.use_floor) v = tol_floor(v);
    return v;
}

double constraint_lhs(const CoveringInstance& inst, int cons, const std::vector<double>& x) {
    auto vars = inst.cons_vars(cons);
    auto coefs = inst.cons_coefs(cons);
    double lhs = 0.0;
    for (size_t p = 0; p < vars.size(); ++p) {
        int j = vars[p];
        lhs += coefs[p] * term_value(x[j], inst.upper_bound(j),
                                     TermShape{inst.is_integer(j), inst.bounded(j)});
    }
    return lhs;
}

bool constraint_satisfied(const CoveringInstance& inst, int cons, const std::vector<double>& x) {
    return ge_tol(constraint_lhs(inst, cons, x), inst.demand(cons));
}

bool satisfiable_at_max(const CoveringInstance& inst, int cons) {
    auto vars = inst.cons_vars(cons);
    auto coefs = inst.cons_coefs(cons);
    double lhs = 0.0;
    for (size_t p = 0; p < vars.size(); ++p) {
        int j = vars[p];
        if (!inst.bounded(j)) return true;  // one unbounded variable suffices
        double cap = inst.is_integer(j) ? tol_floor(inst.upper_bound(j)) : inst.upper_bound(j);
        lhs += coefs[p] * cap;
    }
    return ge_tol(lhs, inst.demand(cons));
}

int phi(const CoveringInstance& inst, int cons, const std::vector<double>& x) {
    auto vars = inst.cons_vars(cons);
    auto coefs = inst.cons_coefs(cons);
    const double w = inst.demand(cons);
    const size_t k = vars.size();
    if (k == 0) return ge_tol(0.0, w) ? 0 : 1;

    // per-variable term values under each applicable shape
    std::vector<VarOptions> opts(k);
    std::vector<std::array<double, 4>> terms(k);
    long long total = 1;
    for (size_t p = 0; p < k; ++p) {
        int j = vars[p];
        opts[p] = options_for(inst, j);
        for (int s = 0; s < opts[p].count; ++s)
            terms[p][s] = coefs[p] * term_value(x[j], inst.upper_bound(j), opts[p].shapes[s]);
        total *= opts[p].count;
        if (total > 65536)
            throw std::logic_error("phi: more than 4^8 relaxed constraints");
    }

    std::vector<int> pick(k, 0);
    int unsat = 0;
    for (;;) {
        double lhs = 0.0;
        for (size_t p = 0; p < k; ++p) lhs += terms[p][pick[p]];
        if (!ge_tol(lhs, w)) ++unsat;
        size_t p = 0;
        while (p < k && ++pick[p] == opts[p].count) pick[p++] = 0;
        if (p == k) break;
    }
    return unsat;
}

Stepsize stepsize_cmip(const CoveringInstance& inst, int cons, const std::vector<double>& x) {
    auto vars = inst.cons_vars(cons);
    auto coefs = inst.cons_coefs(cons);
    const double w = inst.demand(cons);
    const size_t k = vars.size();

    Stepsize out;
    out.var_cost.assign(k, kInf);

    if (k == 0) throw InfeasibleError("stepsize: constraint has no variables");

    if (row_is_fractional(inst, cons)) {
        // the fractional-covering step value, in its canonical form
        double lhs = 0.0;
        for (size_t p = 0; p < k; ++p) lhs += coefs[p] * x[vars[p]];
        double residual = w - lhs;
        double best = kInf;
        for (size_t p = 0; p < k; ++p) {
            double ratio = inst.cost(vars[p]) / coefs[p];
            out.var_cost[p] = residual * ratio;
            if (out.var_cost[p] < best) {
                best = out.var_cost[p];
                out.var = vars[p];
            }
        }
        out.beta = best;
        if (!(out.beta > 0.0))
            throw InfeasibleError("stepsize: nonpositive step on fractional row");
        return out;
    }

    std::vector<VarOptions> opts(k);
    std::vector<std::array<double, 4>> terms(k);
    long long total = 1;
    for (size_t p = 0; p < k; ++p) {
        int j = vars[p];
        opts[p] = options_for(inst, j);
        for (int s = 0; s < opts[p].count; ++s)
            terms[p][s] = coefs[p] * term_value(x[j], inst.upper_bound(j), opts[p].shapes[s]);
        total *= opts[p].count;
        if (total > 65536)
            throw std::logic_error("stepsize: more than 4^8 relaxed constraints");
    }

    const double slack = sat_slack(w);
    std::vector<int> pick(k, 0);
    for (;;) {
        double lhs = 0.0;
        for (size_t p = 0; p < k; ++p) lhs += terms[p][pick[p]];
        if (!ge_tol(lhs, w)) {
            // cheapest single-variable raise satisfying this relaxed row
            for (size_t p = 0; p < k; ++p) {
                int j = vars[p];
                double need = w - slack - (lhs - terms[p][pick[p]]);
                double v = target_value(need / coefs[p], inst.upper_bound(j),
                                        opts[p].shapes[pick[p]]);
                if (v == kInf || v <= x[j]) continue;
                double cost = inst.cost(j) * (v - x[j]);
                if (cost < out.var_cost[p]) out.var_cost[p] = cost;
            }
        }
        size_t p = 0;
        while (p < k && ++pick[p] == opts[p].count) pick[p++] = 0;
        if (p == k) break;
    }

    double best = kInf;
    for (size_t p = 0; p < k; ++p) {
        if (out.var_cost[p] < best) {
            best = out.var_cost[p];
            out.var = vars[p];
        }
    }
    if (best == kInf)
        throw InfeasibleError("stepsize: constraint unsatisfiable under its upper bounds");
    out.beta = best;
    assert(out.beta > 0.0);
    return out;
}

void step(const CoveringInstance& inst, int cons, double beta, std::vector<double>& x) {
    auto vars = inst.cons_vars(cons);
    for (int j : vars) x[j] += beta / inst.cost(j);
}

double distance_oracle(const CoveringInstance& inst, int cons, const std::vector<double>& x) {
    auto vars = inst.cons_vars(cons);
    auto coefs = inst.cons_coefs(cons);
    const double w = inst.demand(cons);
    const size_t k = vars.size();
    if (k > 3) throw std::logic_error("distance_oracle: arity above oracle limit (3)");
    if (constraint_satisfied(inst, cons, x)) return 0.0;
    if (k == 0) return kInf;

    // Concrete candidate levels per variable. Integer variables enumerate
    // every useful integer; fractional variables contribute their current
    // value, their cap, and (as the single "free" coordinate) the exact
    // completion of the residual demand. Some optimum has at most one
    // fractional coordinate strictly between those levels, so this grid
    // plus one free coordinate is exhaustive.
    std::vector<std::vector<double>> cand(k);
    for (size_t p = 0; p < k; ++p) {
        int j = vars[p];
        cand[p].push_back(x[j]);
        if (inst.is_integer(j)) {
            double hi = tol_ceil(w / coefs[p]);
            if (inst.bounded(j)) hi = std::min(hi, tol_floor(inst.upper_bound(j)));
            double lo = tol_floor(x[j]) + 1.0;
            if (hi - lo > 1e6) throw std::logic_error("distance_oracle: integer range too wide");
            for (double q = lo; q <= hi; q += 1.0) cand[p].push_back(q);
        } else if (inst.bounded(j) && inst.upper_bound(j) > x[j]) {
            cand[p].push_back(inst.upper_bound(j));
        }
    }

    auto strict_term = [&](size_t p, double v) {
        int j = vars[p];
        return coefs[p] *
               term_value(v, inst.upper_bound(j), TermShape{inst.is_integer(j), inst.bounded(j)});
    };

    double best = kInf;
    std::vector<size_t> pick(k, 0);
    std::vector<double> val(k);
    // free = k means "no free coordinate"
    for (size_t free = 0; free <= k; ++free) {
        if (free < k && inst.is_integer(vars[free])) continue;
        pick.assign(k, 0);
        for (;;) {
            bool ok = true;
            double lhs = 0.0, cost = 0.0;
            for (size_t p = 0; p < k && ok; ++p) {
                if (p == free) continue;
                val[p] = cand[p][pick[p]];
                lhs += strict_term(p, val[p]);
                cost += inst.cost(vars[p]) * (val[p] - x[vars[p]]);
            }
            if (ok && free < k) {
                int j = vars[free];
                double r = (w - sat_slack(w) - lhs) / coefs[free];
                double v = std::max(x[j], r);
                if (inst.bounded(j) && v > inst.upper_bound(j) + sat_slack(inst.upper_bound(j)))
                    ok = false;
                else {
                    val[free] = v;
                    lhs += strict_term(free, v);
                    cost += inst.cost(j) * (v - x[j]);
                }
            }
            if (ok && ge_tol(lhs, w) && cost < best) best = cost;
            size_t p = 0;
            while (p < k && (p == free || ++pick[p] == cand[p].size())) {
                if (p != free) pick[p] = 0;
                ++p;
            }
            if (p == k) break;
        }
    }
    return best;
}

}  // namespace covpack
