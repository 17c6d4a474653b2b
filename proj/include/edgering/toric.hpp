#pragma once

#include <vector>

#include "edgering/budgets.hpp"
#include "edgering/graph.hpp"
#include "edgering/semigroup.hpp"

namespace edgering {

// The binomial f_C of an even cycle: the product of the variables at odd
// traversal positions minus the product at even positions. Indices are
// 1-based edge positions, sorted ascending within each side.
struct CycleBinomial {
    std::vector<int> plus;
    std::vector<int> minus;
    int degree = 0;
};

CycleBinomial cycle_binomial(const SimpleGraph& g, const Cycle& c);

// One binomial per even cycle, in canonical cycle order (shortest first), so
// minimum-degree generators lead. The toric ideal of a bipartite graph is
// generated by exactly these.
std::vector<CycleBinomial> ideal_generators(const SimpleGraph& g,
                                            const Budgets& budgets = Budgets{});

}  // namespace edgering
