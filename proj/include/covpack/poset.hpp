#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "covpack/cover.hpp"
#include "covpack/instance.hpp"

namespace covpack {

/**
 * Partial order over the covering constraints a run did steps for:
 * i' precedes i when the two constraints share a variable and i' was
 * stepped at an earlier timestamp (transitively closed). Constraints that
 * were never stepped are excluded. Incomparable stepped constraints share
 * no variable, which is what makes the packing extraction order-free.
 */
class StepPoset {
public:
    /**
     * Builds the poset from a step log. A constraint that appears several
     * times keeps its last timestamp. Throws std::invalid_argument when two
     * variable-sharing constraints carry equal timestamps (the order would
     * be ambiguous).
     */
    static StepPoset build(const StepLog& log, const CoveringInstance& inst);

    const std::vector<int>& stepped() const { return stepped_; }
    bool was_stepped(int cons) const { return !ts_[cons].none(); }
    Timestamp timestamp(int cons) const { return ts_[cons]; }

    // direct relation: share a variable and a < b in time
    bool precedes(int a, int b) const;

    // random topological order of the stepped constraints (any such order
    // is a linear extension of the transitive closure)
    std::vector<int> linear_extension(std::uint64_t seed) const;

    bool is_linear_extension(std::span<const int> order) const;

    const CoveringInstance& instance() const { return *inst_; }

private:
    const CoveringInstance* inst_ = nullptr;
    std::vector<Timestamp> ts_;       // per constraint; (0,0) = never stepped
    std::vector<int> stepped_;        // ascending constraint ids
    std::vector<std::vector<int>> adj_;  // stepped constraint -> stepped constraints sharing a var
};

}  // namespace covpack
