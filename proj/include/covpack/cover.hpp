#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "covpack/instance.hpp"
#include "covpack/relax.hpp"

namespace covpack {

/**
 * When a covering step happened. Sequential runs use (step number, 0);
 * distributed runs use (round, index within the star or component).
 * (0, 0) is reserved for "no step". Comparison is lexicographic.
 */
struct Timestamp {
    std::uint32_t round = 0;
    std::uint32_t sub = 0;

    friend bool operator<(Timestamp a, Timestamp b) {
        return a.round != b.round ? a.round < b.round : a.sub < b.sub;
    }
    friend bool operator==(Timestamp a, Timestamp b) {
        return a.round == b.round && a.sub == b.sub;
    }
    bool none() const { return round == 0 && sub == 0; }
};

struct StepRecord {
    int cons = -1;
    double beta = 0.0;
    Timestamp ts;
};

// Ordered record of the covering steps of one run.
struct StepLog {
    std::vector<StepRecord> records;

    void add(int cons, double beta, Timestamp ts) { records.push_back({cons, beta, ts}); }
    size_t size() const { return records.size(); }
    bool empty() const { return records.empty(); }
};

/**
 * Covering vector. Coordinates only ever increase while solving; round_down
 * caps each coordinate at its upper bound and floors the integer ones, which
 * is the final output transformation.
 */
struct Assignment {
    std::vector<double> x;
    bool rounded = false;

    static Assignment zeros(const CoveringInstance& inst) {
        return Assignment{std::vector<double>(inst.n_vars(), 0.0), false};
    }
    void round_down(const CoveringInstance& inst);
    double cost(const CoveringInstance& inst) const;
};

bool all_satisfied(const CoveringInstance& inst, const std::vector<double>& x);

enum class OrderPolicy {
    InputOrder,  // satisfy constraints in index order
    Random,      // uniform among unsatisfied constraints, seeded
};

struct CoverResult {
    Assignment pre_round;  // x before the final rounding
    Assignment solution;   // rounded
    StepLog log;
};

/**
 * The centralized rho-approximation: repeatedly pick an unsatisfied
 * constraint (per the policy) and do step(x, S) with beta = stepsize(x, S),
 * then round down. Each constraint needs at most 4^arity steps. Rejects
 * infeasible instances (some constraint unsatisfiable at the bound-capped
 * maxima) up front by throwing InfeasibleError.
 *
 * The observer, when given, sees (record, phi before the step, phi after).
 */
using StepObserver = std::function<void(const StepRecord&, int phi_before, int phi_after)>;

CoverResult sequential_cover(const CoveringInstance& inst, OrderPolicy policy,
                             std::uint64_t seed, const StepObserver& observer = nullptr);

/**
 * Externally driven replay: apply the recorded (constraint, beta) steps in
 * log order. Reproduces the recorded run's pre-rounding x exactly, because
 * step() performs the identical arithmetic in the identical order.
 */
CoverResult replay_cover(const CoveringInstance& inst, const StepLog& log,
                         const StepObserver& observer = nullptr);

}  // namespace covpack
