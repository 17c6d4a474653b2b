#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>

#include "edgering/errors.hpp"
#include "edgering/graph.hpp"
#include "edgering/polytope.hpp"
#include "edgering/toric.hpp"

using namespace edgering;

namespace {

SimpleGraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n, 1);
    return graph_from_edges(n, edges);
}

SimpleGraph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= a; ++i) {
        for (int j = 1; j <= b; ++j) edges.emplace_back(i, a + j);
    }
    return graph_from_edges(a + b, edges);
}

std::string error_code(const std::function<void()>& body) {
    try {
        body();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

// Sum of vertex images of the edges named by 1-based indices.
LatticeVector monomial_image(const SimpleGraph& g, const std::vector<int>& mono) {
    LatticeVector image(g.n_vertices, 0);
    for (int e : mono) {
        image[g.edges[e - 1].first - 1] += 1;
        image[g.edges[e - 1].second - 1] += 1;
    }
    return image;
}

}  // namespace

TEST_CASE("four-cycle binomial splits the edge set by parity") {
    SimpleGraph g = cycle_graph(4);
    auto gens = ideal_generators(g);
    REQUIRE(gens.size() == 1);
    const auto& f = gens[0];
    CHECK(f.degree == 2);
    // Orientation of the traversal may swap the sides.
    std::set<std::vector<int>> sides = {f.plus, f.minus};
    std::set<std::vector<int>> expected = {{1, 3}, {2, 4}};
    CHECK(sides == expected);
}

TEST_CASE("cycle binomials are multigraded-homogeneous") {
    std::vector<SimpleGraph> corpus = {
        cycle_graph(4),
        cycle_graph(6),
        cycle_graph(8),
        complete_bipartite(2, 3),
        complete_bipartite(3, 3),
        build_family({FamilyKind::EvenEar, 3, 1, 2}),
    };
    for (const auto& g : corpus) {
        for (const auto& f : ideal_generators(g)) {
            CHECK(static_cast<int>(f.plus.size()) == f.degree);
            CHECK(static_cast<int>(f.minus.size()) == f.degree);
            // The two monomials share no edge variable.
            std::vector<int> overlap;
            std::set_intersection(f.plus.begin(), f.plus.end(),
                                  f.minus.begin(), f.minus.end(),
                                  std::back_inserter(overlap));
            CHECK(overlap.empty());
            CHECK(monomial_image(g, f.plus) == monomial_image(g, f.minus));
        }
    }
}

TEST_CASE("odd and broken cycles are rejected") {
    SimpleGraph c5 = cycle_graph(5);
    Cycle odd;
    odd.vertices = {1, 2, 3, 4, 5};
    CHECK(error_code([&] { cycle_binomial(c5, odd); }) == "OddCycle");

    SimpleGraph path = graph_from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
    Cycle broken;
    broken.vertices = {1, 2, 3, 4};  // edge 4-1 is absent
    CHECK(error_code([&] { cycle_binomial(path, broken); }) == "InvalidCycle");
}

TEST_CASE("generator inventories for small graphs") {
    auto degrees = [](const std::vector<CycleBinomial>& gens) {
        std::vector<int> ds;
        for (const auto& f : gens) ds.push_back(f.degree);
        return ds;
    };

    // Hexagon: a single cubic.
    CHECK(degrees(ideal_generators(cycle_graph(6))) == std::vector<int>{3});

    // Trees and forests: principal-free, no cycles at all.
    SimpleGraph star = graph_from_edges(4, {{1, 2}, {1, 3}, {1, 4}});
    CHECK(ideal_generators(star).empty());

    // K_{2,3}: the three quadrics from its three 4-cycles.
    CHECK(degrees(ideal_generators(complete_bipartite(2, 3))) ==
          std::vector<int>{2, 2, 2});

    // K_{3,3}: nine 4-cycles, then six 6-cycles, shortest first.
    std::vector<int> k33 = degrees(ideal_generators(complete_bipartite(3, 3)));
    CHECK(k33 == std::vector<int>{2, 2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3});

    // Two disjoint hexagons: one cubic each.
    CHECK(degrees(ideal_generators(build_family({FamilyKind::DisjointPair, 3}))) ==
          std::vector<int>{3, 3});
}

TEST_CASE("minimum generator degree is half the even girth") {
    std::vector<SimpleGraph> corpus = {
        cycle_graph(4),
        cycle_graph(6),
        cycle_graph(8),
        complete_bipartite(2, 3),
        complete_bipartite(3, 3),
        build_family({FamilyKind::OneCommonVertex, 3}),
        build_family({FamilyKind::EvenEar, 3, 1, 2}),
        build_family({FamilyKind::OddEar, 3, 2, 2}),
    };
    for (const auto& g : corpus) {
        auto gens = ideal_generators(g);
        auto girth = even_girth(g);
        REQUIRE(girth.has_value());
        REQUIRE_FALSE(gens.empty());
        int min_deg = gens.front().degree;
        for (const auto& f : gens) min_deg = std::min(min_deg, f.degree);
        CHECK(min_deg == *girth / 2);
        // Canonical order puts a shortest cycle first.
        CHECK(gens.front().degree == min_deg);
    }
}

TEST_CASE("non-bipartite graphs are rejected") {
    CHECK(error_code([&] { ideal_generators(cycle_graph(5)); }) ==
          "NonBipartite");
    SimpleGraph k4 = graph_from_edges(
        4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(error_code([&] { ideal_generators(k4); }) == "NonBipartite");
}

TEST_CASE("cycle budget propagates") {
    Budgets tight;
    tight.max_cycles = 2;
    bool threw = false;
    try {
        ideal_generators(complete_bipartite(3, 3), tight);
    } catch (const Error& e) {
        threw = e.kind() == ErrorKind::Budget &&
                e.code() == "CycleBudgetExceeded";
    }
    CHECK(threw);
}
