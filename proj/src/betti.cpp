#include "edgering/betti.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "edgering/errors.hpp"
#include "edgering/semigroup.hpp"
#include "edgering/toric.hpp"

namespace edgering {

Multidegree make_multidegree(const SimpleGraph& g, const LatticeVector& b) {
    if (static_cast<int>(b.size()) != g.n_vertices) {
        throw input_error("DimensionMismatch",
                          "vector length does not match vertex count");
    }
    long total = 0;
    for (int x : b) {
        if (x < 0) {
            throw input_error("NotInSemigroup",
                              "multidegrees are nonnegative vectors");
        }
        total += x;
    }
    if (total % 2 != 0) {
        throw input_error("NotInSemigroup",
                          "odd coordinate sum cannot be a sum of edge vectors");
    }
    Multidegree deg;
    deg.b = b;
    deg.total_degree = static_cast<int>(total / 2);
    if (!semigroup_member(g, b)) {
        throw input_error("NotInSemigroup",
                          "vector is not a sum of edge vectors");
    }
    return deg;
}

namespace {

void check_edge_cap(const SimpleGraph& g, const Budgets& budgets) {
    if (g.n_edges() > budgets.max_betti_edges) {
        throw budget_error("SubsetBudgetExceeded",
                           std::to_string(g.n_edges()) +
                               " edges exceed the divisor-complex cap of " +
                               std::to_string(budgets.max_betti_edges));
    }
}

// Faces found by extending each face only with edges above its highest
// member; downward closure guarantees every face is reached through its
// sorted prefix chain.
FaceComplex divisor_faces(const SimpleGraph& g, const SemigroupTable& table,
                          const LatticeVector& b) {
    const int n = g.n_edges();
    FaceComplex k;
    k.ground_size = n;

    struct Node {
        std::uint32_t mask;
        LatticeVector residual;
    };
    std::vector<Node> frontier{{0u, b}};
    k.faces.push_back(0u);
    while (!frontier.empty()) {
        std::vector<Node> next;
        for (const auto& node : frontier) {
            int lowest = node.mask
                             ? 32 - std::countl_zero(node.mask)
                             : 0;
            for (int j = lowest; j < n; ++j) {
                auto [u, v] = g.edges[j];
                if (node.residual[u - 1] < 1 || node.residual[v - 1] < 1) {
                    continue;
                }
                LatticeVector residual = node.residual;
                --residual[u - 1];
                --residual[v - 1];
                if (!table.contains(residual)) continue;
                std::uint32_t mask = node.mask | (1u << j);
                k.faces.push_back(mask);
                next.push_back({mask, std::move(residual)});
            }
        }
        frontier = std::move(next);
    }
    std::sort(k.faces.begin(), k.faces.end());
    return k;
}

}  // namespace

DivisorComplex divisor_complex(const SimpleGraph& g, const Multidegree& deg,
                               const Budgets& budgets) {
    check_edge_cap(g, budgets);
    SemigroupTable table(g, deg.total_degree, budgets);
    if (!table.contains(deg.b)) {
        throw input_error("NotInSemigroup",
                          "vector is not a sum of edge vectors");
    }
    DivisorComplex dc;
    dc.b = deg.b;
    dc.complex = divisor_faces(g, table, deg.b);

    // Downward closure holds by construction of the semigroup; verify anyway.
    std::vector<std::uint32_t> faces = dc.complex.faces;
    for (std::uint32_t f : faces) {
        for (std::uint32_t rest = f; rest; rest &= rest - 1) {
            std::uint32_t sub = f ^ (rest & (~rest + 1));
            if (!std::binary_search(faces.begin(), faces.end(), sub)) {
                throw anomaly_error("AssertionFailure",
                                    "divisor complex is not downward closed");
            }
        }
    }
    return dc;
}

BettiTable betti_table(const SimpleGraph& g, int j_max,
                       const Budgets& budgets) {
    if (j_max < 0) {
        throw input_error("DimensionMismatch", "j_max must be nonnegative");
    }
    check_edge_cap(g, budgets);
    const int n = g.n_edges();

    int max_gen_degree = 0;
    for (const auto& gen : ideal_generators(g, budgets)) {
        max_gen_degree = std::max(max_gen_degree, gen.degree);
    }

    BettiTable table;
    table.i_window = n;
    table.j_window = j_max;
    // With no generators the ideal is zero and the table is trivially whole;
    // otherwise stop once the window passes projective dimension (<= n) plus
    // the top generator degree, a coarse but safe desk-scale bound.
    table.complete = max_gen_degree == 0 || j_max >= n + max_gen_degree;

    SemigroupTable semigroup(g, j_max, budgets);
    for (int j = 1; j <= j_max; ++j) {
        for (const auto& b : semigroup.points(j)) {
            FaceComplex k = divisor_faces(g, semigroup, b);
            if (k.faces.size() < 2) {
                throw anomaly_error("AssertionFailure",
                                    "positive-degree multidegree with no "
                                    "divisor");
            }
            if (is_cone(k)) continue;
            int max_card = 0;
            for (std::uint32_t f : k.faces) {
                max_card = std::max(max_card, std::popcount(f));
            }
            auto dims = reduced_homology_dims(k, max_card - 1);
            for (int i = 1; i <= max_card; ++i) {
                if (dims[i] != 0) {
                    table.entries[{i, j}] += dims[i];
                }
            }
        }
    }
    return table;
}

RegularityInfo regularity_and_linearity(const BettiTable& t, int q) {
    RegularityInfo info;
    for (const auto& [key, beta] : t.entries) {
        auto [i, j] = key;
        if (i < 1 || beta == 0) continue;
        info.reg_lower = std::max(info.reg_lower, j - i);
        if (j != q + i - 1) info.is_q_linear_in_window = false;
    }
    return info;
}

}  // namespace edgering
