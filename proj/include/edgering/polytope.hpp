#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "edgering/budgets.hpp"
#include "edgering/graph.hpp"
#include "edgering/numeric.hpp"

namespace edgering {

// Integer point of Z^N; coords[v-1] is the coordinate of vertex v.
using LatticeVector = std::vector<int>;

// 0/1 incidence vector of an edge: ones exactly at the two endpoints.
LatticeVector rho(std::pair<int, int> edge, int n_vertices);

// Convex hull of the rho vectors of all edges, in vertex order = edge order.
struct EdgePolytope {
    SimpleGraph graph;
    std::vector<LatticeVector> vertices;

    int ambient_dim() const { return graph.n_vertices; }
};

EdgePolytope edge_polytope(const SimpleGraph& g);

// Affine dimension, as the exact rank of {v_i - v_1}. Always equals
// N - (number of bipartite components) - 1.
int polytope_dimension(const EdgePolytope& p);

enum class Position { Outside, Boundary, Interior };

struct MembershipCertificate {
    Position status = Position::Outside;
    int dilation = 0;
    // Optimal value of the max-min barycentric weight LP; positive exactly on
    // the relative interior, zero on the boundary.
    Rat barycentric_margin;
    // Exact weights with sum = dilation reproducing the queried point; present
    // unless the point is outside.
    std::optional<std::vector<Rat>> weights;
};

// Decides the position of b relative to r*P by maximizing t subject to
// lambda_i >= t, sum lambda_i = r, sum lambda_i v_i = b, in exact rationals.
MembershipCertificate membership(const EdgePolytope& p, const LatticeVector& b,
                                 int r);

// All integer points of t*P, lex sorted. Bipartite graphs use the graded
// semigroup enumeration; otherwise a candidate sweep with one membership LP
// per candidate is used (and requires few enough vertices).
std::vector<LatticeVector> lattice_points(const EdgePolytope& p, int t,
                                          const Budgets& budgets = Budgets{});

// The candidate-sweep route on its own. Deliberately independent of the
// semigroup machinery so the two enumerations can cross-check each other.
std::vector<LatticeVector> lattice_points_by_lp(const EdgePolytope& p, int t,
                                                const Budgets& budgets = Budgets{});

struct HStarProfile {
    int dim = 0;
    std::vector<Int> counts;  // L(0..dim)
    std::vector<Int> hstar;   // h*_0..h*_dim, trailing zeros retained
    int degree = 0;
    int codegree = 0;
    Int normalized_volume;
};

// Ehrhart data from exact counts at t = 0..dim:
//   h*_k = sum_{i=0..k} (-1)^i C(dim+1, i) L(k-i),
// degree = top nonzero index, codegree = dim + 1 - degree, volume = h*(1).
HStarProfile hstar_profile(const EdgePolytope& p,
                           const Budgets& budgets = Budgets{});

// Least r >= 1 with an interior lattice point in r*P, found by direct search;
// agrees with dim + 1 - degree by Ehrhart duality. Only vectors positive on
// every non-isolated vertex can be interior, which prunes the search to the
// per-side deficit compositions.
int codegree_by_search(const EdgePolytope& p, const Budgets& budgets = Budgets{});

}  // namespace edgering
