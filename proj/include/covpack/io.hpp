#pragma once

#include <iosfwd>
#include <string>

#include "covpack/cover.hpp"
#include "covpack/instance.hpp"
#include "covpack/packing.hpp"

namespace covpack {

/**
 * Instance interchange format (UTF-8 JSON):
 *
 *   {"n_vars": int, "n_cons": int, "entries": [[i, j, a_ij], ...],
 *    "demands": [...], "costs": [...], "upper_bounds": [number | null],
 *    "integer_vars": [int, ...]}
 *
 * with null meaning "no upper bound". read_instance throws
 * std::runtime_error on malformed documents or invariant violations;
 * read(write(x)) == x for every valid instance.
 */
std::string write_instance(const CoveringInstance& inst);
CoveringInstance read_instance(const std::string& text);
CoveringInstance read_instance_file(const std::string& path);

// Step logs as JSON lines, one {"t": int, "cons": int, "beta": float} per step.
std::string write_steplog(const StepLog& log);
StepLog read_steplog(const std::string& text);

// Packing solution with objective values, single JSON document.
std::string write_packing(const PackingInstance& inst, const PackingSolution& sol);

}  // namespace covpack
