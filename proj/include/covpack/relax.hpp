#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "covpack/instance.hpp"

namespace covpack {

// A constraint counts as satisfied when lhs >= rhs - 1e-9 * max(1, |rhs|).
// Keeps the small-rational examples exact while preventing representation
// error from stalling the step loop.
inline constexpr double kSatTol = 1e-9;

inline bool ge_tol(double lhs, double rhs) {
    double a = rhs < 0 ? -rhs : rhs;
    return lhs >= rhs - kSatTol * (a > 1.0 ? a : 1.0);
}

// floor with a tolerance matching ge_tol, so 1.9999999999 counts as 2
inline double tol_floor(double v) {
    double a = v < 0 ? -v : v;
    return std::floor(v + kSatTol * (a > 1.0 ? a : 1.0));
}

inline double tol_ceil(double v) {
    double a = v < 0 ? -v : v;
    return std::ceil(v - kSatTol * (a > 1.0 ? a : 1.0));
}

/**
 * The term a variable contributes to a constraint, under an optional floor
 * (integrality) and an optional cap (upper bound). A relaxed constraint
 * drops any subset of the two, so a variable offers up to four term shapes:
 *
 *   x,   min(x, u),   floor(x),   floor(min(x, u)).
 *
 * The unrelaxed constraint applies everything that is applicable.
 */
struct TermShape {
    bool use_floor = false;
    bool use_bound = false;
};

double term_value(double x, double u, TermShape shape);

/**
 * lhs of constraint `c` at assignment x under the unrelaxed (strictest)
 * interpretation given the instance's integrality set and bounds.
 */
double constraint_lhs(const CoveringInstance& inst, int cons, const std::vector<double>& x);

bool constraint_satisfied(const CoveringInstance& inst, int cons, const std::vector<double>& x);

// true iff the constraint can be met at the bound-capped, floored maxima
bool satisfiable_at_max(const CoveringInstance& inst, int cons);

/**
 * Potential of one constraint: the number of its relaxed constraints (at
 * most 4^arity) not satisfied by x. Zero exactly when the constraint itself
 * is satisfied. Direct enumeration; arity is capped at 8 (65536 relaxed
 * rows) which covers every instance family shipped here.
 */
int phi(const CoveringInstance& inst, int cons, const std::vector<double>& x);

inline bool hit(int phi_before, int phi_after) { return phi_after < phi_before; }

/**
 * Result of a stepsize computation: the minimum cost beta to raise just one
 * variable enough to reduce phi, plus which variable attains it (lowest
 * index on ties) and each variable's own single-raise cost (infinity when a
 * variable cannot reduce phi on its own). A variable "can hit" the
 * constraint when its cost equals beta.
 */
struct Stepsize {
    double beta = 0.0;
    int var = -1;                     // argmin, lowest index on ties
    std::vector<double> var_cost;     // parallel to cons_vars(cons)
    bool can_hit(size_t pos) const { return var_cost[pos] <= beta; }
};

/**
 * The stepsize for mixed-integer covering rows. Purely fractional rows
 * (no floors, no bounds anywhere in the row) short-circuit to
 *
 *   beta = (w - Ax) * min_j c_j / A_ij
 *
 * evaluated in exactly that form, so the fractional-covering step value is
 * reproduced bit for bit wherever it appears. Throws InfeasibleError when
 * no single raise can reduce phi (the row cannot be met under its bounds).
 */
Stepsize stepsize_cmip(const CoveringInstance& inst, int cons, const std::vector<double>& x);

/**
 * step: raise x_j by beta / c_j for every variable of the constraint.
 * The cost c.x increases by at most arity * beta.
 */
void step(const CoveringInstance& inst, int cons, double beta, std::vector<double>& x);

/**
 * Exact minimum cost of augmenting x to satisfy the (unrelaxed) constraint:
 * min { c(x') - c(x) : x' in S, x' >= x }, by enumeration of candidate
 * augmentations at critical values. Independent of phi / stepsize_cmip; it
 * exists to check them. Arity is limited to 3. Returns infinity when the
 * constraint cannot be satisfied above x.
 */
double distance_oracle(const CoveringInstance& inst, int cons, const std::vector<double>& x);

struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace covpack
