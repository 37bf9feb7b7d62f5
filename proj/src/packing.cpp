#include "covpack/packing.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace covpack {

double PackingSolution::value(const PackingInstance& inst) const {
    double v = 0.0;
    for (int i = 0; i < inst.n_cons(); ++i) v += inst.demand(i) * y[i];
    return v;
}

double packing_slack(const PackingInstance& inst, int j, const PackingSolution& sol) {
    double s = inst.cost(j);
    auto cons = inst.var_cons(j);
    auto coefs = inst.var_coefs(j);
    for (size_t p = 0; p < cons.size(); ++p) s -= coefs[p] * sol.y[cons[p]];
    return s;
}

double raise_maximally(const PackingInstance& inst, int s, PackingSolution& sol) {
    auto vars = inst.cons_vars(s);
    auto coefs = inst.cons_coefs(s);
    if (vars.empty())
        throw std::invalid_argument("raise_maximally: variable appears in no packing constraint");
    double v = std::numeric_limits<double>::infinity();
    for (size_t p = 0; p < vars.size(); ++p)
        v = std::min(v, packing_slack(inst, vars[p], sol) / coefs[p]);
    if (v < 0.0) v = 0.0;
    sol.y[s] = v;
    sol.done[s] = 1;
    return v;
}

PackingSolution sequential_pack(const PackingInstance& inst, const StepPoset& poset,
                                std::span<const int> extension) {
    if (!poset.is_linear_extension(extension))
        throw std::invalid_argument("sequential_pack: order is not a linear extension");

    PackingSolution sol = PackingSolution::zeros(inst);

    // incremental slacks back the tightness/feasibility assertions only;
    // raise values come from the canonical packing_slack sums
    std::vector<double> slack(inst.costs().begin(), inst.costs().end());

    for (auto it = extension.rbegin(); it != extension.rend(); ++it) {
        int s = *it;
        double v = raise_maximally(inst, s, sol);
        auto vars = inst.cons_vars(s);
        auto coefs = inst.cons_coefs(s);
        double min_slack = std::numeric_limits<double>::infinity();
        for (size_t p = 0; p < vars.size(); ++p) {
            slack[vars[p]] -= coefs[p] * v;
            min_slack = std::min(min_slack, slack[vars[p]]);
            assert(slack[vars[p]] >= -1e-6 * std::max(1.0, inst.cost(vars[p])));
        }
        // after a maximal raise some packing constraint of s is tight
        assert(min_slack <= 1e-6 * std::max(1.0, inst.cost(vars[0])));
        (void)min_slack;
    }
    for (int i = 0; i < inst.n_cons(); ++i)
        if (!poset.was_stepped(i)) sol.done[i] = 1;  // y stays 0
    return sol;
}

PackingSolution pack_from_log(const PackingInstance& inst, const StepLog& log,
                              std::uint64_t seed) {
    StepPoset poset = StepPoset::build(log, inst);
    std::vector<int> ext = poset.linear_extension(seed);
    return sequential_pack(inst, poset, ext);
}

RatioReport verify_ratio(const CoveringInstance& inst, const Assignment& x,
                         const PackingSolution& y) {
    RatioReport r;
    r.x_feasible = true;
    for (int i = 0; i < inst.n_cons(); ++i) {
        if (!constraint_satisfied(inst, i, x.x)) {
            r.x_feasible = false;
            r.violated_cons = i;
            break;
        }
    }
    r.y_feasible = true;
    for (int i = 0; i < inst.n_cons() && r.y_feasible; ++i) {
        if (y.y[i] < -1e-9) {
            r.y_feasible = false;
            r.violated_pack = -2;  // negative dual value
        }
    }
    for (int j = 0; j < inst.n_vars() && r.y_feasible; ++j) {
        if (packing_slack(inst, j, y) < -1e-9 * std::max(1.0, inst.cost(j))) {
            r.y_feasible = false;
            r.violated_pack = j;
        }
    }
    r.cx = x.cost(inst);
    r.wy = y.value(inst);
    r.ratio = r.wy != 0.0 ? r.cx / r.wy : 0.0;
    r.ratio_ok = r.cx <= inst.rho() * r.wy + 1e-6;
    return r;
}

}  // namespace covpack
