#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

namespace covpack {

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

// One nonzero of the constraint matrix A (A_ij > 0).
struct Entry {
    int cons = 0;
    int var = 0;
    double coef = 0.0;
};

/**
 * Sparse covering program
 *
 *     minimize c.x  subject to  Ax >= w,  x <= u,  x_j integer for j in I,
 *
 * stored as triplets plus row (constraint) and column (variable) adjacency
 * indexes built at construction. Read column-wise, the same data is the
 * packing dual: maximize w.y subject to A^T y <= c, y >= 0.
 *
 * An upper bound of kUnbounded (infinity) means "no bound"; the relaxation
 * machinery branches on bounded(). Immutable after construction.
 */
class CoveringInstance {
public:
    CoveringInstance() = default;

    CoveringInstance(int n_vars, int n_cons, std::vector<Entry> entries,
                     std::vector<double> demands, std::vector<double> costs,
                     std::vector<double> upper_bounds, std::vector<int> integer_vars);

    int n_vars() const { return n_vars_; }
    int n_cons() const { return n_cons_; }
    const std::vector<Entry>& entries() const { return entries_; }
    const std::vector<double>& demands() const { return demands_; }
    const std::vector<double>& costs() const { return costs_; }
    const std::vector<double>& upper_bounds() const { return upper_bounds_; }
    const std::vector<int>& integer_vars() const { return integer_vars_; }

    double demand(int i) const { return demands_[i]; }
    double cost(int j) const { return costs_[j]; }
    double upper_bound(int j) const { return upper_bounds_[j]; }
    bool bounded(int j) const { return upper_bounds_[j] != kUnbounded; }
    bool is_integer(int j) const { return integer_flag_[j] != 0; }

    // variables and coefficients of constraint i, in insertion order
    std::span<const int> cons_vars(int i) const;
    std::span<const double> cons_coefs(int i) const;
    // constraints containing variable j, ascending
    std::span<const int> var_cons(int j) const;
    // coefficient of variable j within constraint i (parallel to var_cons)
    std::span<const double> var_coefs(int j) const;

    int cons_arity(int i) const { return static_cast<int>(cons_vars(i).size()); }

    // max variables per constraint; the approximation ratio
    int rho() const { return rho_; }
    // max constraints per variable
    int delta() const { return delta_; }

private:
    int n_vars_ = 0;
    int n_cons_ = 0;
    std::vector<Entry> entries_;
    std::vector<double> demands_;
    std::vector<double> costs_;
    std::vector<double> upper_bounds_;
    std::vector<int> integer_vars_;
    std::vector<char> integer_flag_;

    // CSR by constraint and by variable
    std::vector<int> row_ptr_, row_var_;
    std::vector<double> row_coef_;
    std::vector<int> col_ptr_, col_cons_;
    std::vector<double> col_coef_;
    int rho_ = 0;
    int delta_ = 0;
};

// The packing side shares the covering description (transposed view).
using PackingInstance = CoveringInstance;

// Lightweight view of one covering constraint.
struct ConstraintView {
    int index = -1;
    std::span<const int> vars;
    std::span<const double> coefs;
    double demand = 0.0;
};

inline ConstraintView constraint(const CoveringInstance& inst, int i) {
    return ConstraintView{i, inst.cons_vars(i), inst.cons_coefs(i), inst.demand(i)};
}

/**
 * Checks the type invariants; returns human-readable problems, empty if ok.
 * Covers: nonpositive costs, nonpositive coefficients, duplicate (i,j)
 * entries, negative demands, nonpositive upper bounds, and constraints with
 * positive demand but no variables (those would make the packing raise
 * unbounded, so they are rejected here).
 */
std::vector<std::string> validate(const CoveringInstance& inst);

}  // namespace covpack
