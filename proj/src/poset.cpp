#include "covpack/poset.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "covpack/rng.hpp"

namespace covpack {

StepPoset StepPoset::build(const StepLog& log, const CoveringInstance& inst) {
    StepPoset p;
    p.inst_ = &inst;
    p.ts_.assign(inst.n_cons(), Timestamp{});
    for (const StepRecord& r : log.records) {
        if (r.cons < 0 || r.cons >= inst.n_cons())
            throw std::invalid_argument("poset: constraint index out of range");
        if (r.ts.none()) throw std::invalid_argument("poset: (0,0) timestamp on a step");
        p.ts_[r.cons] = r.ts;  // last step wins
    }
    for (int i = 0; i < inst.n_cons(); ++i)
        if (!p.ts_[i].none()) p.stepped_.push_back(i);

    // adjacency among stepped constraints via shared variables
    p.adj_.assign(inst.n_cons(), {});
    for (int i : p.stepped_) {
        for (int j : inst.cons_vars(i)) {
            for (int i2 : inst.var_cons(j)) {
                if (i2 == i || p.ts_[i2].none()) continue;
                if (p.ts_[i2] == p.ts_[i])
                    throw std::invalid_argument(
                        "poset: duplicate timestamp on variable-sharing constraints " +
                        std::to_string(i) + " and " + std::to_string(i2));
                p.adj_[i].push_back(i2);
            }
        }
        std::sort(p.adj_[i].begin(), p.adj_[i].end());
        p.adj_[i].erase(std::unique(p.adj_[i].begin(), p.adj_[i].end()), p.adj_[i].end());
    }
    return p;
}

bool StepPoset::precedes(int a, int b) const {
    if (ts_[a].none() || ts_[b].none() || !(ts_[a] < ts_[b])) return false;
    auto& n = adj_[a];
    return std::binary_search(n.begin(), n.end(), b);
}

std::vector<int> StepPoset::linear_extension(std::uint64_t seed) const {
    RngStream rng(seed);
    // Kahn's algorithm with random choice among the available constraints
    std::unordered_map<int, int> indeg;
    for (int i : stepped_) {
        int d = 0;
        for (int i2 : adj_[i])
            if (ts_[i2] < ts_[i]) ++d;
        indeg[i] = d;
    }
    std::vector<int> avail;
    for (int i : stepped_)
        if (indeg[i] == 0) avail.push_back(i);
    std::vector<int> order;
    order.reserve(stepped_.size());
    while (!avail.empty()) {
        size_t k = rng.uniform_int(static_cast<std::uint64_t>(avail.size()));
        int i = avail[k];
        avail[k] = avail.back();
        avail.pop_back();
        order.push_back(i);
        for (int i2 : adj_[i]) {
            if (ts_[i] < ts_[i2] && --indeg[i2] == 0) avail.push_back(i2);
        }
    }
    if (order.size() != stepped_.size())
        throw std::logic_error("poset: cycle detected (timestamps inconsistent)");
    return order;
}

bool StepPoset::is_linear_extension(std::span<const int> order) const {
    if (order.size() != stepped_.size()) return false;
    std::vector<int> pos(inst_->n_cons(), -1);
    for (size_t k = 0; k < order.size(); ++k) {
        int i = order[k];
        if (i < 0 || i >= inst_->n_cons() || ts_[i].none() || pos[i] >= 0) return false;
        pos[i] = static_cast<int>(k);
    }
    for (int i : stepped_)
        for (int i2 : adj_[i])
            if (ts_[i] < ts_[i2] && pos[i] > pos[i2]) return false;
    return true;
}

}  // namespace covpack
