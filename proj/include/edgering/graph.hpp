#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgering/budgets.hpp"

namespace edgering {

// Finite simple graph on vertices 1..n_vertices. Edge order is significant:
// edge i of the list is the variable x_i of the edge ring and the vertex
// rho(e_i) of the edge polytope. Endpoints are stored with u < v.
struct SimpleGraph {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> edges;

    int n_edges() const { return static_cast<int>(edges.size()); }
};

// Validates and normalizes an edge list. Rejects loops, duplicate edges and
// out-of-range endpoints; preserves the given edge order.
SimpleGraph graph_from_edges(int n_vertices,
                             const std::vector<std::pair<int, int>>& pairs);

struct StructureInfo {
    int components = 0;
    // Components containing no odd cycle; isolated vertices count.
    int bipartite_components = 0;
    bool bipartite = false;
    // |E| - |V| + components, the dimension of the cycle space.
    int cycle_rank = 0;
    // Indexed by vertex (entry 0 unused). side_of is 0/1 inside bipartite
    // components, with the smallest vertex of each component on side 0, and
    // -1 throughout non-bipartite components.
    std::vector<int> component_of;
    std::vector<int> side_of;
};

StructureInfo analyze_structure(const SimpleGraph& g);

// A simple cycle in canonical form: the least vertex comes first and its
// smaller neighbor second, which fixes rotation and reflection.
struct Cycle {
    std::vector<int> vertices;
    std::vector<int> edge_indices;  // 1-based positions in g.edges, in traversal order

    int length() const { return static_cast<int>(vertices.size()); }
};

// All even cycles of length <= max_length (max_length = 0 means no bound),
// each exactly once, sorted by length and then by vertex sequence.
std::vector<Cycle> enumerate_even_cycles(const SimpleGraph& g,
                                         int max_length = 0,
                                         const Budgets& budgets = Budgets{});

// Length of a shortest even cycle, or nullopt if none exists. Equals the
// girth on bipartite graphs.
std::optional<int> even_girth(const SimpleGraph& g,
                              const Budgets& budgets = Budgets{});

enum class FamilyKind { DisjointPair, OneCommonVertex, EvenEar, OddEar };

struct FamilySpec {
    FamilyKind kind = FamilyKind::DisjointPair;
    int q = 0;
    int k = 0;  // used by EvenEar / OddEar only
    int m = 0;
};

// The four witness families:
//   DisjointPair(q):    two disjoint 2q-cycles, 4q vertices, 4q edges.
//   OneCommonVertex(q): two 2q-cycles glued at vertex 1, 4q-1 vertices, 4q edges.
//   EvenEar(q,k,m):     2q-cycle on 1..2q plus the even ear
//                       1, 2q+1, ..., 2q+2m-1, 2k+1 of length 2m.
//   OddEar(q,k,m):      2q-cycle plus the odd ear 1, 2q+1, ..., 2q+2m-2, 2k
//                       of length 2m-1.
// Requires q >= 3; ears require 1 <= k <= m and k+m >= q (even) resp.
// k+m-1 >= q (odd), which pins the even girth at exactly 2q.
SimpleGraph build_family(const FamilySpec& spec);

// Text format: a header line "p <N> <M>", then M lines "<u> <v>" with
// 1 <= u < v <= N. Lines starting with '#' are comments; blank lines are
// ignored.
SimpleGraph parse_graph_text(const std::string& text);
SimpleGraph read_graph_file(const std::string& path);
std::string graph_to_text(const SimpleGraph& g);

// 1-based index of edge {u,v}, or 0 when absent.
int edge_index(const SimpleGraph& g, int u, int v);

// Neighbor lists indexed by vertex (entry 0 unused).
std::vector<std::vector<int>> adjacency_lists(const SimpleGraph& g);

const char* family_kind_name(FamilyKind kind);

}  // namespace edgering
