#pragma once

#include <vector>

#include "edgering/numeric.hpp"

namespace edgering {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat objective;              // set when Optimal
    std::vector<Rat> solution;  // primal point, set when Optimal
};

// Maximizes cost.x subject to A x = rhs and x >= 0, in exact rational
// arithmetic. Two-phase primal simplex with Bland's rule, so the method
// terminates on every input. Row count and column count are expected to be
// small (tens); no effort is spent on sparsity.
LpResult simplex_maximize(const std::vector<std::vector<Rat>>& a,
                          const std::vector<Rat>& rhs,
                          const std::vector<Rat>& cost);

}  // namespace edgering
