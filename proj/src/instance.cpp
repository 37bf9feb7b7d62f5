#include "covpack/instance.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace covpack {

CoveringInstance::CoveringInstance(int n_vars, int n_cons, std::vector<Entry> entries,
                                   std::vector<double> demands, std::vector<double> costs,
                                   std::vector<double> upper_bounds,
                                   std::vector<int> integer_vars)
    : n_vars_(n_vars),
      n_cons_(n_cons),
      entries_(std::move(entries)),
      demands_(std::move(demands)),
      costs_(std::move(costs)),
      upper_bounds_(std::move(upper_bounds)),
      integer_vars_(std::move(integer_vars)) {
    if (n_vars_ < 0 || n_cons_ < 0)
        throw std::invalid_argument("instance: negative dimension");
    if (static_cast<int>(demands_.size()) != n_cons_)
        throw std::invalid_argument("instance: demands length != n_cons");
    if (static_cast<int>(costs_.size()) != n_vars_)
        throw std::invalid_argument("instance: costs length != n_vars");
    if (static_cast<int>(upper_bounds_.size()) != n_vars_)
        throw std::invalid_argument("instance: upper_bounds length != n_vars");
    for (const Entry& e : entries_) {
        if (e.cons < 0 || e.cons >= n_cons_ || e.var < 0 || e.var >= n_vars_)
            throw std::invalid_argument("instance: entry index out of range");
    }
    integer_flag_.assign(n_vars_, 0);
    for (int j : integer_vars_) {
        if (j < 0 || j >= n_vars_)
            throw std::invalid_argument("instance: integer var index out of range");
        integer_flag_[j] = 1;
    }
    std::sort(integer_vars_.begin(), integer_vars_.end());
    integer_vars_.erase(std::unique(integer_vars_.begin(), integer_vars_.end()),
                        integer_vars_.end());

    // row CSR (constraint -> vars), stable so per-constraint order follows input
    row_ptr_.assign(n_cons_ + 1, 0);
    for (const Entry& e : entries_) ++row_ptr_[e.cons + 1];
    for (int i = 0; i < n_cons_; ++i) row_ptr_[i + 1] += row_ptr_[i];
    row_var_.resize(entries_.size());
    row_coef_.resize(entries_.size());
    {
        std::vector<int> fill(row_ptr_.begin(), row_ptr_.end() - 1);
        for (const Entry& e : entries_) {
            int p = fill[e.cons]++;
            row_var_[p] = e.var;
            row_coef_[p] = e.coef;
        }
    }

    // column CSR (variable -> constraints), ascending constraint index
    col_ptr_.assign(n_vars_ + 1, 0);
    for (const Entry& e : entries_) ++col_ptr_[e.var + 1];
    for (int j = 0; j < n_vars_; ++j) col_ptr_[j + 1] += col_ptr_[j];
    col_cons_.resize(entries_.size());
    col_coef_.resize(entries_.size());
    {
        std::vector<int> fill(col_ptr_.begin(), col_ptr_.end() - 1);
        for (int i = 0; i < n_cons_; ++i) {
            for (int p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
                int q = fill[row_var_[p]]++;
                col_cons_[q] = i;
                col_coef_[q] = row_coef_[p];
            }
        }
    }

    for (int i = 0; i < n_cons_; ++i)
        rho_ = std::max(rho_, row_ptr_[i + 1] - row_ptr_[i]);
    for (int j = 0; j < n_vars_; ++j)
        delta_ = std::max(delta_, col_ptr_[j + 1] - col_ptr_[j]);
}

std::span<const int> CoveringInstance::cons_vars(int i) const {
    return {row_var_.data() + row_ptr_[i], static_cast<size_t>(row_ptr_[i + 1] - row_ptr_[i])};
}

std::span<const double> CoveringInstance::cons_coefs(int i) const {
    return {row_coef_.data() + row_ptr_[i], static_cast<size_t>(row_ptr_[i + 1] - row_ptr_[i])};
}

std::span<const int> CoveringInstance::var_cons(int j) const {
    return {col_cons_.data() + col_ptr_[j], static_cast<size_t>(col_ptr_[j + 1] - col_ptr_[j])};
}

std::span<const double> CoveringInstance::var_coefs(int j) const {
    return {col_coef_.data() + col_ptr_[j], static_cast<size_t>(col_ptr_[j + 1] - col_ptr_[j])};
}

std::vector<std::string> validate(const CoveringInstance& inst) {
    std::vector<std::string> errors;
    for (int j = 0; j < inst.n_vars(); ++j) {
        if (!(inst.cost(j) > 0.0))
            errors.push_back("nonpositive cost c_" + std::to_string(j));
        if (!(inst.upper_bound(j) > 0.0))
            errors.push_back("nonpositive upper bound u_" + std::to_string(j));
    }
    for (int i = 0; i < inst.n_cons(); ++i) {
        if (inst.demand(i) < 0.0)
            errors.push_back("negative demand w_" + std::to_string(i));
        if (inst.cons_arity(i) == 0 && inst.demand(i) > 0.0)
            errors.push_back("constraint " + std::to_string(i) +
                             " has positive demand but no variables");
    }
    for (const Entry& e : inst.entries()) {
        if (!(e.coef > 0.0))
            errors.push_back("nonpositive coefficient A_(" + std::to_string(e.cons) + "," +
                             std::to_string(e.var) + ")");
    }
    std::set<std::pair<int, int>> seen;
    for (const Entry& e : inst.entries()) {
        if (!seen.insert({e.cons, e.var}).second)
            errors.push_back("duplicate entry (" + std::to_string(e.cons) + "," +
                             std::to_string(e.var) + ")");
    }
    return errors;
}

}  // namespace covpack
