#include "covpack/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "covpack/rng.hpp"

namespace covpack {

CoveringInstance gen_wvc(int n, double edge_prob, double cost_lo, double cost_hi,
                         std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_wvc: n must be >= 1");
    RngStream rng(seed);
    std::vector<double> costs(n);
    for (int v = 0; v < n; ++v) costs[v] = rng.uniform(cost_lo, cost_hi);

    std::vector<Entry> entries;
    std::vector<double> demands;
    int m = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.uniform01() < edge_prob) {
                entries.push_back({m, u, 1.0});
                entries.push_back({m, v, 1.0});
                demands.push_back(1.0);
                ++m;
            }
        }
    }
    std::vector<int> integers(n);
    std::iota(integers.begin(), integers.end(), 0);
    return CoveringInstance(n, m, std::move(entries), std::move(demands), std::move(costs),
                            std::vector<double>(n, kUnbounded), std::move(integers));
}

CoveringInstance gen_cmip2(int n_vars, int n_cons, std::uint64_t seed,
                           const Cmip2Options& opt) {
    if (n_vars < 1 || n_cons < 0)
        throw std::invalid_argument("gen_cmip2: need n_vars >= 1, n_cons >= 0");
    RngStream rng(seed);

    std::vector<double> costs(n_vars), ub(n_vars, kUnbounded);
    std::vector<int> integers;
    for (int j = 0; j < n_vars; ++j) {
        costs[j] = rng.uniform(opt.cost_lo, opt.cost_hi);
        if (!opt.fractional) {
            if (rng.uniform01() < opt.p_integer) integers.push_back(j);
            if (rng.uniform01() < opt.p_bounded)
                ub[j] = static_cast<double>(rng.uniform_int(opt.ub_lo, opt.ub_hi));
        }
    }
    std::vector<char> is_int(n_vars, 0);
    for (int j : integers) is_int[j] = 1;

    std::vector<Entry> entries;
    std::vector<double> demands(n_cons);
    for (int i = 0; i < n_cons; ++i) {
        int a = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n_vars)));
        bool single = n_vars == 1 || rng.uniform01() < opt.p_single;
        int b = a;
        if (!single) {
            while (b == a)
                b = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n_vars)));
        }
        entries.push_back({i, a, rng.uniform(opt.coef_lo, opt.coef_hi)});
        if (!single) entries.push_back({i, b, rng.uniform(opt.coef_lo, opt.coef_hi)});
        demands[i] = rng.uniform(opt.demand_lo, opt.demand_hi);
    }

    // feasibility repair: demand must be reachable at the capped maxima
    for (int i = 0; i < n_cons; ++i) {
        double cap = 0.0;
        const Entry* widest = nullptr;
        for (Entry& e : entries) {
            if (e.cons != i) continue;
            double lim = ub[e.var];
            if (is_int[e.var] && lim != kUnbounded) lim = std::floor(lim);
            cap += lim == kUnbounded ? kUnbounded : e.coef * lim;
            if (!widest || e.coef > widest->coef) widest = &e;
        }
        if (cap < demands[i] * 1.05 && widest) ub[widest->var] = kUnbounded;
    }

    return CoveringInstance(n_vars, n_cons, std::move(entries), std::move(demands),
                            std::move(costs), std::move(ub), std::move(integers));
}

PackingInstance gen_hypergraph_bmatching(int n_vertices, int n_edges, int max_degree,
                                         int cap_lo, int cap_hi, std::uint64_t seed,
                                         int weight_lo, int weight_hi) {
    if (n_vertices < 1 || n_edges < 0)
        throw std::invalid_argument("gen_hypergraph_bmatching: bad sizes");
    if (max_degree < 2 || max_degree > n_vertices)
        throw std::invalid_argument(
            "gen_hypergraph_bmatching: infeasible parameter combination (need 2 <= "
            "max_degree <= n_vertices)");
    RngStream rng(seed);

    std::vector<double> caps(n_vertices);
    for (int v = 0; v < n_vertices; ++v)
        caps[v] = static_cast<double>(rng.uniform_int(cap_lo, cap_hi));

    std::vector<Entry> entries;
    std::vector<double> weights(n_edges);
    std::vector<int> pick;
    for (int e = 0; e < n_edges; ++e) {
        int size = static_cast<int>(rng.uniform_int(2LL, static_cast<long long>(max_degree)));
        pick.clear();
        while (static_cast<int>(pick.size()) < size) {
            int v = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n_vertices)));
            if (std::find(pick.begin(), pick.end(), v) == pick.end()) pick.push_back(v);
        }
        std::sort(pick.begin(), pick.end());
        for (int v : pick) entries.push_back({e, v, 1.0});
        weights[e] = static_cast<double>(rng.uniform_int(weight_lo, weight_hi));
    }

    return PackingInstance(n_vertices, n_edges, std::move(entries), std::move(weights),
                           std::move(caps), std::vector<double>(n_vertices, kUnbounded), {});
}

}  // namespace covpack
