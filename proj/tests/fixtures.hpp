#pragma once

#include "covpack/instance.hpp"

namespace covpack::fixtures {

// minimize x1 + x2 s.t. 0.5 x1 + 3 x2 >= 5, x2 <= 1, both integer.
// Worked mixed-integer row: potentials run 8 -> 6 -> 4 -> 0 with step
// sizes 5/3, 1/3, 2 and rounded optimum (4, 1) of cost 5.
inline CoveringInstance mixed_row_example() {
    return CoveringInstance(2, 1, {{0, 0, 0.5}, {0, 1, 3.0}}, {5.0}, {1.0, 1.0},
                            {kUnbounded, 1.0}, {0, 1});
}

// minimize x1 + x2 + x3 s.t. x1 + x2 >= 1, x1 + x3 >= 5 (cost 10, dual 5).
// Optionally swaps the two constraints.
inline CoveringInstance overlap_pair_big(bool swapped = false) {
    std::vector<Entry> e;
    if (!swapped)
        e = {{0, 0, 1.0}, {0, 1, 1.0}, {1, 0, 1.0}, {1, 2, 1.0}};
    else
        e = {{0, 0, 1.0}, {0, 2, 1.0}, {1, 0, 1.0}, {1, 1, 1.0}};
    std::vector<double> w = swapped ? std::vector<double>{5.0, 1.0} : std::vector<double>{1.0, 5.0};
    return CoveringInstance(3, 2, std::move(e), std::move(w), {1.0, 1.0, 1.0},
                            {kUnbounded, kUnbounded, kUnbounded}, {});
}

// same shape, second demand 0 (cost 2, dual 1, opposite dual support)
inline CoveringInstance overlap_pair_zero(bool swapped = false) {
    std::vector<Entry> e;
    if (!swapped)
        e = {{0, 0, 1.0}, {0, 1, 1.0}, {1, 0, 1.0}, {1, 2, 1.0}};
    else
        e = {{0, 0, 1.0}, {0, 2, 1.0}, {1, 0, 1.0}, {1, 1, 1.0}};
    std::vector<double> w = swapped ? std::vector<double>{0.0, 1.0} : std::vector<double>{1.0, 0.0};
    return CoveringInstance(3, 2, std::move(e), std::move(w), {1.0, 1.0, 1.0},
                            {kUnbounded, kUnbounded, kUnbounded}, {});
}

// one vertex-cover edge with costs (3, 5)
inline CoveringInstance single_edge_vc() {
    return CoveringInstance(2, 1, {{0, 0, 1.0}, {0, 1, 1.0}}, {1.0}, {3.0, 5.0},
                            {kUnbounded, kUnbounded}, {0, 1});
}

}  // namespace covpack::fixtures
