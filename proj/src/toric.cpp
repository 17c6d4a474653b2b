#include "edgering/toric.hpp"

#include <algorithm>

#include "edgering/errors.hpp"
#include "edgering/polytope.hpp"

namespace edgering {

CycleBinomial cycle_binomial(const SimpleGraph& g, const Cycle& c) {
    const int len = c.length();
    if (len < 3 || len % 2 != 0) {
        throw input_error("OddCycle", "cycle of length " + std::to_string(len) +
                                          " carries no binomial");
    }
    CycleBinomial f;
    f.degree = len / 2;
    for (int pos = 0; pos < len; ++pos) {
        int u = c.vertices[pos];
        int v = c.vertices[(pos + 1) % len];
        int e = edge_index(g, u, v);
        if (e == 0) {
            throw input_error("InvalidCycle",
                              "vertices " + std::to_string(u) + "," +
                                  std::to_string(v) +
                                  " are not adjacent in the host graph");
        }
        (pos % 2 == 0 ? f.plus : f.minus).push_back(e);
    }
    std::sort(f.plus.begin(), f.plus.end());
    std::sort(f.minus.begin(), f.minus.end());

    // Both monomials have the same image degree: the cycle alternates, so
    // each vertex is hit once from an odd and once from an even position.
    LatticeVector lhs(g.n_vertices, 0), rhs(g.n_vertices, 0);
    for (int e : f.plus) {
        ++lhs[g.edges[e - 1].first - 1];
        ++lhs[g.edges[e - 1].second - 1];
    }
    for (int e : f.minus) {
        ++rhs[g.edges[e - 1].first - 1];
        ++rhs[g.edges[e - 1].second - 1];
    }
    if (lhs != rhs) {
        throw anomaly_error("AssertionFailure",
                            "cycle binomial is not multigraded-homogeneous");
    }
    return f;
}

std::vector<CycleBinomial> ideal_generators(const SimpleGraph& g,
                                            const Budgets& budgets) {
    if (!analyze_structure(g).bipartite) {
        throw input_error("NonBipartite",
                          "even-cycle binomials generate the toric ideal of "
                          "bipartite graphs only");
    }
    std::vector<CycleBinomial> gens;
    for (const Cycle& c : enumerate_even_cycles(g, 0, budgets)) {
        gens.push_back(cycle_binomial(g, c));
    }
    return gens;
}

}  // namespace edgering
