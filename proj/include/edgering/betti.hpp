#pragma once

#include <map>
#include <utility>

#include "edgering/budgets.hpp"
#include "edgering/graph.hpp"
#include "edgering/homology.hpp"
#include "edgering/polytope.hpp"

namespace edgering {

// A semigroup element b with total_degree = (sum of coordinates) / 2, the
// number of edge vectors in any decomposition of b.
struct Multidegree {
    LatticeVector b;
    int total_degree = 0;
};

// Validates nonnegativity, parity and semigroup membership.
Multidegree make_multidegree(const SimpleGraph& g, const LatticeVector& b);

// Squarefree divisor complex of b: ground element i stands for edge i+1, and
// F is a face iff b - sum_{i in F} rho(e_{i+1}) stays in the semigroup.
struct DivisorComplex {
    LatticeVector b;
    FaceComplex complex;
};

DivisorComplex divisor_complex(const SimpleGraph& g, const Multidegree& deg,
                               const Budgets& budgets = Budgets{});

// Graded Betti numbers of the edge ring over the edge-variable polynomial
// ring. beta_{0,0} = 1 is implicit; entries holds the nonzero beta_{i,j}
// with i >= 1 and j <= j_window. Entries beyond the window are unknown;
// complete marks windows that provably contain every nonzero entry.
struct BettiTable {
    std::map<std::pair<int, int>, Int> entries;
    int i_window = 0;
    int j_window = 0;
    bool complete = false;
};

// beta_{i,j} = sum over degree-j semigroup elements b of dim H~_{i-1} of the
// divisor complex of b.
BettiTable betti_table(const SimpleGraph& g, int j_max,
                       const Budgets& budgets = Budgets{});

struct RegularityInfo {
    int reg_lower = 0;                  // max j - i over nonzero entries, i >= 1
    bool is_q_linear_in_window = true;  // all nonzero entries sit at j = q+i-1
};

// Both values are definitive when the table is complete; otherwise reg_lower
// is a lower bound and the linearity verdict covers the window only.
RegularityInfo regularity_and_linearity(const BettiTable& t, int q);

}  // namespace edgering
