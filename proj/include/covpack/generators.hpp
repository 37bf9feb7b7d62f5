#pragma once

#include <cstdint>

#include "covpack/instance.hpp"

namespace covpack {

/**
 * Weighted vertex cover on an Erdos-Renyi graph G(n, edge_prob).
 *
 * One constraint x_u + x_v >= 1 per edge, every variable integer, no upper
 * bounds, vertex costs uniform in [cost_lo, cost_hi]. Rounding any
 * 2-approximate real solution down stays 2-approximate, so this encoding
 * makes vertex cover a special case of the two-variable mixed-integer
 * machinery. Same seed, same instance, bit for bit.
 */
CoveringInstance gen_wvc(int n, double edge_prob, double cost_lo, double cost_hi,
                         std::uint64_t seed);

struct Cmip2Options {
    double coef_lo = 0.5, coef_hi = 3.0;
    double cost_lo = 1.0, cost_hi = 10.0;
    double demand_lo = 1.0, demand_hi = 12.0;
    double p_single = 0.15;   // fraction of one-variable constraints
    double p_integer = 0.5;   // per-variable integrality probability
    double p_bounded = 0.5;   // per-variable upper-bound probability
    int ub_lo = 1, ub_hi = 6; // integral upper bounds when present
    bool fractional = false;  // no integrality, no bounds (pure LP rows)
};

/**
 * Random covering mixed integer program with at most two variables per
 * constraint. Infeasible rows (demand above the bound-capped maximum) are
 * repaired by dropping the largest-coefficient variable's upper bound, so
 * the result is always feasible.
 */
CoveringInstance gen_cmip2(int n_vars, int n_cons, std::uint64_t seed,
                           const Cmip2Options& opt = {});

/**
 * Random hypergraph b-matching instance: n_edges hyperedges over n_vertices
 * vertices, each hyperedge spanning between 2 and max_degree distinct
 * vertices, 0/1 coefficients, integer vertex capacities in [cap_lo, cap_hi]
 * and integer edge weights in [weight_lo, weight_hi].
 *
 * Returned in the shared covering/packing representation: hyperedges are
 * covering constraints (packing variables), vertices are covering variables
 * (packing constraints). The covering side is purely fractional.
 *
 * Throws std::invalid_argument on infeasible parameters (max_degree < 2 or
 * max_degree > n_vertices).
 */
PackingInstance gen_hypergraph_bmatching(int n_vertices, int n_edges, int max_degree,
                                         int cap_lo, int cap_hi, std::uint64_t seed,
                                         int weight_lo = 1, int weight_hi = 10);

}  // namespace covpack
