#pragma once

#include <span>
#include <vector>

#include "covpack/cover.hpp"
#include "covpack/instance.hpp"
#include "covpack/poset.hpp"

namespace covpack {

// Dual vector: one packing variable per covering constraint.
struct PackingSolution {
    std::vector<double> y;
    std::vector<char> done;

    static PackingSolution zeros(const PackingInstance& inst) {
        return {std::vector<double>(inst.n_cons(), 0.0),
                std::vector<char>(inst.n_cons(), 0)};
    }
    double value(const PackingInstance& inst) const;  // w . y
};

/**
 * Residual capacity of packing constraint (covering variable) j given the
 * packing variables set so far, summed in ascending constraint order. Every
 * caller computes slacks through this one canonical-order sum, which is what
 * makes the packing value independent of the processing order bit for bit.
 */
double packing_slack(const PackingInstance& inst, int j, const PackingSolution& sol);

/**
 * Raise y_s maximally subject to A^T y <= c:
 *
 *   y_s = min over j in vars(C_s) of slack_j / A_sj   (clamped at 0).
 *
 * Throws std::invalid_argument when the variable appears in no packing
 * constraint (the raise would be unbounded; validate() rejects such rows).
 */
double raise_maximally(const PackingInstance& inst, int s, PackingSolution& sol);

/**
 * Tail-recursive packing extraction: process a linear extension of the step
 * poset in reverse, raising each stepped constraint's packing variable
 * maximally at its turn; never-stepped constraints get y = 0. The result is
 * the same for every linear extension, exactly.
 */
PackingSolution sequential_pack(const PackingInstance& inst, const StepPoset& poset,
                                std::span<const int> extension);

// convenience: cover log -> poset -> pack with a seeded random extension
PackingSolution pack_from_log(const PackingInstance& inst, const StepLog& log,
                              std::uint64_t seed = 0);

struct RatioReport {
    double cx = 0.0;
    double wy = 0.0;
    double ratio = 0.0;     // cx / wy, 0 when wy == 0
    bool x_feasible = false;
    bool y_feasible = false;
    bool ratio_ok = false;  // cx <= rho * wy + 1e-6
    int violated_cons = -1; // first unsatisfied covering constraint, if any
    int violated_pack = -1; // first violated packing constraint, if any
    bool ok() const { return x_feasible && y_feasible && ratio_ok; }
};

/**
 * The primal-dual certificate: checks that x covers, that y packs, and that
 * c.x <= rho * w.y + 1e-6. Together with weak duality (w.y <= OPT <= c.x)
 * this certifies a rho-approximation with no external solver.
 */
RatioReport verify_ratio(const CoveringInstance& inst, const Assignment& x,
                         const PackingSolution& y);

}  // namespace covpack
