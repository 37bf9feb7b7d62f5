#include "covpack/cover.hpp"

#include <cmath>
#include <stdexcept>

#include "covpack/rng.hpp"

namespace covpack {

void Assignment::round_down(const CoveringInstance& inst) {
    for (int j = 0; j < inst.n_vars(); ++j) {
        double v = x[j];
        if (inst.bounded(j)) v = std::min(v, inst.upper_bound(j));
        if (inst.is_integer(j)) v = tol_floor(v);
        x[j] = v;
    }
    rounded = true;
}

double Assignment::cost(const CoveringInstance& inst) const {
    double c = 0.0;
    for (int j = 0; j < inst.n_vars(); ++j) c += inst.cost(j) * x[j];
    return c;
}

bool all_satisfied(const CoveringInstance& inst, const std::vector<double>& x) {
    for (int i = 0; i < inst.n_cons(); ++i)
        if (!constraint_satisfied(inst, i, x)) return false;
    return true;
}

namespace {

void check_feasible(const CoveringInstance& inst) {
    for (int i = 0; i < inst.n_cons(); ++i)
        if (!satisfiable_at_max(inst, i))
            throw InfeasibleError("constraint " + std::to_string(i) +
                                  " cannot be met at its bound-capped maximum");
}

void do_step(const CoveringInstance& inst, int cons, std::vector<double>& x, StepLog& log,
             std::uint32_t t, const StepObserver& observer) {
    int before = observer ? phi(inst, cons, x) : 0;
    Stepsize s = stepsize_cmip(inst, cons, x);
    step(inst, cons, s.beta, x);
    StepRecord rec{cons, s.beta, Timestamp{t, 0}};
    log.records.push_back(rec);
    if (observer) observer(rec, before, phi(inst, cons, x));
}

}  // namespace

CoverResult sequential_cover(const CoveringInstance& inst, OrderPolicy policy,
                             std::uint64_t seed, const StepObserver& observer) {
    check_feasible(inst);
    CoverResult res;
    res.pre_round = Assignment::zeros(inst);
    std::vector<double>& x = res.pre_round.x;
    std::uint32_t t = 0;

    // steps never unsatisfy anything (x only rises), so each constraint is
    // finished once satisfied and never revisited
    const long long step_guard =
        16 + static_cast<long long>(inst.n_cons()) * (1LL << std::min(2 * inst.rho(), 30));

    if (policy == OrderPolicy::InputOrder) {
        for (int i = 0; i < inst.n_cons(); ++i) {
            while (!constraint_satisfied(inst, i, x)) {
                do_step(inst, i, x, res.log, ++t, observer);
                if (static_cast<long long>(t) > step_guard)
                    throw std::logic_error("sequential_cover: step budget exceeded");
            }
        }
    } else {
        RngStream rng(seed);
        std::vector<int> unsat;
        for (int i = 0; i < inst.n_cons(); ++i)
            if (!constraint_satisfied(inst, i, x)) unsat.push_back(i);
        while (!unsat.empty()) {
            size_t pick = rng.uniform_int(static_cast<std::uint64_t>(unsat.size()));
            int i = unsat[pick];
            if (constraint_satisfied(inst, i, x)) {
                unsat[pick] = unsat.back();
                unsat.pop_back();
                continue;
            }
            do_step(inst, i, x, res.log, ++t, observer);
            if (static_cast<long long>(t) > step_guard)
                throw std::logic_error("sequential_cover: step budget exceeded");
        }
    }

    res.solution = res.pre_round;
    res.solution.round_down(inst);
    return res;
}

CoverResult replay_cover(const CoveringInstance& inst, const StepLog& log,
                         const StepObserver& observer) {
    CoverResult res;
    res.pre_round = Assignment::zeros(inst);
    std::vector<double>& x = res.pre_round.x;
    for (const StepRecord& rec : log.records) {
        if (rec.cons < 0 || rec.cons >= inst.n_cons())
            throw std::out_of_range("replay_cover: constraint index out of range");
        int before = observer ? phi(inst, rec.cons, x) : 0;
        step(inst, rec.cons, rec.beta, x);
        res.log.records.push_back(rec);
        if (observer) observer(rec, before, phi(inst, rec.cons, x));
    }
    res.solution = res.pre_round;
    res.solution.round_down(inst);
    return res;
}

}  // namespace covpack
