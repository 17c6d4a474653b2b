#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "edgering/budgets.hpp"
#include "edgering/graph.hpp"
#include "edgering/numeric.hpp"
#include "edgering/polytope.hpp"

namespace edgering {

// One connected component carrying at least one edge, with local 0-based
// coordinates for its vertices.
struct ComponentBasis {
    std::vector<int> vertices;           // global vertex ids, ascending
    std::vector<int> left, right;        // local indices per side
    std::vector<std::vector<int>> gens;  // local rho vector per component edge
    std::vector<int> edge_ids;           // 1-based global edge indices
};

// Requires a bipartite graph; components without edges are dropped.
std::vector<ComponentBasis> component_bases(const SimpleGraph& g);

// The degree-graded affine semigroup generated by the rho vectors, tabulated
// per component up to a degree bound: level t+1 is level t plus one
// generator. Grading: an element of degree t is a sum of exactly t
// generators, equivalently both side sums equal t within each component.
class SemigroupTable {
public:
    SemigroupTable(const SimpleGraph& g, int t_max, const Budgets& budgets);

    int t_max() const { return t_max_; }

    // Membership of a global vector at any degree <= t_max.
    bool contains(const LatticeVector& b) const;

    // Degree-t elements in global coordinates, lex sorted.
    std::vector<LatticeVector> points(int t) const;

    // Counts per degree 0..t_max (product over components via convolution).
    std::vector<Int> counts() const;

private:
    struct ComponentLevels {
        ComponentBasis basis;
        std::vector<std::vector<std::string>> level_keys;  // packed local vectors
        std::vector<std::unordered_set<std::string>> level_sets;
    };

    int n_vertices_;
    int t_max_;
    std::vector<ComponentLevels> comps_;
    std::vector<char> isolated_;  // vertex -> not covered by any edge

    friend class SemigroupPointWalker;
};

// Lexicographically least multiset of edge indices whose rho vectors sum to
// b, or nullopt when b is not in the semigroup. Flow-based feasibility with a
// greedy multiplicity maximization per edge index.
std::optional<std::vector<int>> semigroup_member(const SimpleGraph& g,
                                                 const LatticeVector& b);

// Integral feasibility of the degree system: a multiset of edges using each
// vertex v exactly b[v] times. Bipartite graphs only (max-flow certificate).
bool degree_system_feasible(const SimpleGraph& g, const LatticeVector& b);

}  // namespace edgering
