#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <random>

#include "edgering/errors.hpp"
#include "edgering/graph.hpp"
#include "oracles.hpp"

using namespace edgering;

namespace {

SimpleGraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n);
    return graph_from_edges(n, edges);
}

SimpleGraph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= a; ++i) {
        for (int j = 1; j <= b; ++j) edges.emplace_back(i, a + j);
    }
    return graph_from_edges(a + b, edges);
}

std::string error_code(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

}  // namespace

TEST_CASE("graph_from_edges normalizes and validates") {
    SimpleGraph g = graph_from_edges(3, {{2, 1}, {3, 2}});
    CHECK(g.edges[0] == std::pair<int, int>{1, 2});
    CHECK(g.edges[1] == std::pair<int, int>{2, 3});
    CHECK(g.n_edges() == 2);

    CHECK(error_code([] { graph_from_edges(3, {{1, 1}}); }) == "LoopEdge");
    CHECK(error_code([] { graph_from_edges(3, {{1, 2}, {2, 1}}); }) ==
          "DuplicateEdge");
    CHECK(error_code([] { graph_from_edges(3, {{1, 4}}); }) ==
          "VertexOutOfRange");
    CHECK(error_code([] { graph_from_edges(3, {{0, 2}}); }) ==
          "VertexOutOfRange");
}

TEST_CASE("text format round trip and parse errors") {
    SimpleGraph c6 = cycle_graph(6);
    SimpleGraph back = parse_graph_text(graph_to_text(c6));
    CHECK(back.n_vertices == 6);
    CHECK(back.edges == c6.edges);

    SimpleGraph commented = parse_graph_text(
        "# a path\n\np 3 2\n1 2\n\n# middle comment\n2 3\n");
    CHECK(commented.n_edges() == 2);

    CHECK(error_code([] { parse_graph_text("1 2\n"); }) == "ParseError");
    CHECK(error_code([] { parse_graph_text("p 3 1\n1 x\n"); }) == "ParseError");
    CHECK(error_code([] { parse_graph_text("p 3 2\n1 2\n"); }) == "ParseError");
    CHECK(error_code([] { parse_graph_text("p 3 1\n1 2\n2 3\n"); }) ==
          "ParseError");
    CHECK(error_code([] { parse_graph_text("p 3 1\n1 2 3\n"); }) ==
          "ParseError");
    // Loops cannot be written at all: edges must satisfy u < v.
    CHECK(error_code([] { parse_graph_text("p 2 1\n1 1\n"); }) == "ParseError");
    CHECK(error_code([] { parse_graph_text("p 2 1\n2 1\n"); }) == "ParseError");
    CHECK(error_code([] { read_graph_file("/nonexistent/file.txt"); }) ==
          "ParseError");
}

TEST_CASE("structure analysis") {
    StructureInfo c6 = analyze_structure(cycle_graph(6));
    CHECK(c6.components == 1);
    CHECK(c6.bipartite);
    CHECK(c6.bipartite_components == 1);
    CHECK(c6.cycle_rank == 1);
    CHECK(c6.side_of[1] == 0);
    CHECK(c6.side_of[2] == 1);
    CHECK(c6.side_of[6] == 1);

    StructureInfo c5 = analyze_structure(cycle_graph(5));
    CHECK_FALSE(c5.bipartite);
    CHECK(c5.bipartite_components == 0);
    CHECK(c5.side_of[3] == -1);

    // One 4-cycle, one triangle, one isolated vertex.
    SimpleGraph mixed = graph_from_edges(
        8, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {5, 6}, {6, 7}, {5, 7}});
    StructureInfo info = analyze_structure(mixed);
    CHECK(info.components == 3);
    CHECK(info.bipartite_components == 2);  // the 4-cycle and the isolated vertex
    CHECK_FALSE(info.bipartite);
    CHECK(info.cycle_rank == 2);
    CHECK(info.component_of[5] == info.component_of[7]);
    CHECK(info.component_of[1] != info.component_of[8]);

    StructureInfo star = analyze_structure(
        graph_from_edges(4, {{1, 2}, {1, 3}, {1, 4}}));
    CHECK(star.cycle_rank == 0);
    CHECK(star.bipartite);
}

TEST_CASE("even cycle enumeration matches brute force") {
    std::vector<SimpleGraph> corpus = {
        cycle_graph(4),
        cycle_graph(6),
        complete_bipartite(2, 3),
        complete_bipartite(3, 3),
        graph_from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}),
        build_family({FamilyKind::OneCommonVertex, 3, 0, 0}),
    };
    std::mt19937 rng(911);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 5 + trial % 3;
        std::vector<std::pair<int, int>> edges;
        for (int u = 1; u <= n; ++u) {
            for (int v = u + 1; v <= n; ++v) {
                if (rng() % 3 == 0) edges.emplace_back(u, v);
            }
        }
        corpus.push_back(graph_from_edges(n, edges));
    }

    for (const auto& g : corpus) {
        auto brute = oracles::all_cycles(g);
        std::erase_if(brute,
                      [](const std::vector<int>& c) { return c.size() % 2; });
        std::sort(brute.begin(), brute.end(),
                  [](const auto& a, const auto& b) {
                      return std::make_pair(a.size(), a) <
                             std::make_pair(b.size(), b);
                  });

        auto got = enumerate_even_cycles(g);
        REQUIRE(got.size() == brute.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].vertices == brute[i]);
            // Edge indices trace the vertex sequence.
            const auto& c = got[i];
            for (int j = 0; j < c.length(); ++j) {
                int u = c.vertices[j], v = c.vertices[(j + 1) % c.length()];
                CHECK(c.edge_indices[j] == edge_index(g, std::min(u, v),
                                                      std::max(u, v)));
            }
        }

        // max_length filters exactly.
        for (int cap = 4; cap <= 6; cap += 2) {
            auto capped = enumerate_even_cycles(g, cap);
            std::size_t expect = 0;
            for (const auto& c : brute) {
                if (static_cast<int>(c.size()) <= cap) ++expect;
            }
            CHECK(capped.size() == expect);
        }
    }
}

TEST_CASE("even girth") {
    CHECK(even_girth(cycle_graph(6)) == 6);
    CHECK(even_girth(cycle_graph(4)) == 4);
    CHECK(even_girth(complete_bipartite(2, 3)) == 4);
    CHECK_FALSE(even_girth(cycle_graph(5)).has_value());
    CHECK_FALSE(
        even_girth(graph_from_edges(3, {{1, 2}, {2, 3}})).has_value());
    // Non-bipartite with an even cycle: K4.
    SimpleGraph k4 = graph_from_edges(
        4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(even_girth(k4) == 4);
}

TEST_CASE("cycle budget") {
    Budgets tight;
    tight.max_cycles = 2;
    bool budget_hit = false;
    try {
        enumerate_even_cycles(complete_bipartite(3, 3), 0, tight);
    } catch (const Error& e) {
        budget_hit = e.code() == "CycleBudgetExceeded" &&
                     e.kind() == ErrorKind::Budget;
    }
    CHECK(budget_hit);
}

TEST_CASE("families have the advertised shape") {
    SimpleGraph dp = build_family({FamilyKind::DisjointPair, 3, 0, 0});
    CHECK(dp.n_vertices == 12);
    CHECK(dp.n_edges() == 12);
    CHECK(analyze_structure(dp).components == 2);
    CHECK(even_girth(dp) == 6);

    SimpleGraph oc = build_family({FamilyKind::OneCommonVertex, 3, 0, 0});
    CHECK(oc.n_vertices == 11);
    CHECK(oc.n_edges() == 12);
    CHECK(analyze_structure(oc).components == 1);
    CHECK(analyze_structure(oc).cycle_rank == 2);
    CHECK(even_girth(oc) == 6);

    SimpleGraph ee = build_family({FamilyKind::EvenEar, 3, 1, 2});
    CHECK(ee.n_vertices == 9);
    CHECK(ee.n_edges() == 10);
    CHECK(even_girth(ee) == 6);

    SimpleGraph oe = build_family({FamilyKind::OddEar, 3, 2, 2});
    CHECK(oe.n_vertices == 8);
    CHECK(oe.n_edges() == 9);
    CHECK(even_girth(oe) == 6);

    // The parameter constraints pin the even girth at exactly 2q.
    for (int q = 3; q <= 4; ++q) {
        for (int k = 1; k <= q + 1; ++k) {
            for (int m = k; k + m <= q + 2; ++m) {
                if (k + m >= q && k <= q - 1) {
                    SimpleGraph e = build_family({FamilyKind::EvenEar, q, k, m});
                    CHECK(even_girth(e) == 2 * q);
                    CHECK(analyze_structure(e).cycle_rank == 2);
                }
                if (k + m - 1 >= q && k <= q) {
                    SimpleGraph o = build_family({FamilyKind::OddEar, q, k, m});
                    CHECK(even_girth(o) == 2 * q);
                    CHECK(analyze_structure(o).cycle_rank == 2);
                }
            }
        }
    }
}

TEST_CASE("family parameter validation") {
    auto code = [](FamilySpec s) {
        try {
            build_family(s);
        } catch (const Error& e) {
            return e.code();
        }
        return std::string{};
    };
    CHECK(code({FamilyKind::DisjointPair, 2, 0, 0}) ==
          "InvalidFamilyParameters");
    CHECK(code({FamilyKind::EvenEar, 3, 0, 2}) == "InvalidFamilyParameters");
    CHECK(code({FamilyKind::EvenEar, 3, 2, 1}) == "InvalidFamilyParameters");
    CHECK(code({FamilyKind::EvenEar, 3, 1, 1}) == "InvalidFamilyParameters");
    CHECK(code({FamilyKind::EvenEar, 3, 3, 3}) == "InvalidFamilyParameters");
    CHECK(code({FamilyKind::OddEar, 3, 1, 2}) == "InvalidFamilyParameters");
    CHECK(code({FamilyKind::OddEar, 4, 5, 5}) == "InvalidFamilyParameters");
    CHECK(code({FamilyKind::OddEar, 3, 2, 2}).empty());
}

TEST_CASE("edge_index and adjacency") {
    SimpleGraph g = complete_bipartite(2, 3);
    CHECK(edge_index(g, 1, 3) == 1);
    CHECK(edge_index(g, 2, 5) == 6);
    CHECK(edge_index(g, 1, 2) == 0);
    auto adj = adjacency_lists(g);
    CHECK(adj[1] == std::vector<int>{3, 4, 5});
    CHECK(adj[4] == std::vector<int>{1, 2});
}
