#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "edgering/simplex.hpp"

using namespace edgering;

namespace {

bool satisfies(const std::vector<std::vector<Rat>>& a,
               const std::vector<Rat>& rhs, const std::vector<Rat>& x) {
    for (std::size_t r = 0; r < a.size(); ++r) {
        Rat acc = 0;
        for (std::size_t c = 0; c < x.size(); ++c) acc += a[r][c] * x[c];
        if (acc != rhs[r]) return false;
    }
    for (const Rat& v : x) {
        if (v < 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("bounded optimum") {
    // max x + 2y  s.t.  x + y = 1
    LpResult r = simplex_maximize({{1, 1}}, {1}, {1, 2});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == 2);
    CHECK(satisfies({{1, 1}}, {1}, r.solution));
}

TEST_CASE("exact rational objective") {
    // max x  s.t.  3x = 1
    LpResult r = simplex_maximize({{3}}, {1}, {1});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == Rat(1, 3));
}

TEST_CASE("infeasible programs") {
    LpResult neg = simplex_maximize({{1}}, {-1}, {1});
    CHECK(neg.status == LpStatus::Infeasible);

    // x + y = 1 and x + y = 2 simultaneously.
    LpResult split = simplex_maximize({{1, 1}, {1, 1}}, {1, 2}, {0, 0});
    CHECK(split.status == LpStatus::Infeasible);
}

TEST_CASE("unbounded program") {
    // max x  s.t.  x - y = 0
    LpResult r = simplex_maximize({{1, -1}}, {0}, {1, 0});
    CHECK(r.status == LpStatus::Unbounded);
}

TEST_CASE("redundant rows are harmless") {
    LpResult r = simplex_maximize({{1, 1}, {2, 2}}, {1, 2}, {1, 0});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == 1);
}

TEST_CASE("degenerate vertices terminate (Bland)") {
    // A degenerate system: several basic feasible solutions coincide.
    std::vector<std::vector<Rat>> a = {
        {1, 1, 1, 0, 0}, {1, 0, 0, 1, 0}, {0, 1, 0, 0, 1}};
    std::vector<Rat> rhs = {1, 1, 0};
    std::vector<Rat> cost = {0, 1, 0, 0, 0};
    LpResult r = simplex_maximize(a, rhs, cost);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == 0);
    CHECK(satisfies(a, rhs, r.solution));
}

TEST_CASE("zero dilation point") {
    // Only the zero combination exists: max t with all weights = 0.
    LpResult r = simplex_maximize({{1, 1}}, {0}, {1, 1});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == 0);
}

TEST_CASE("negative rhs rows are normalized internally") {
    // -x - y = -1 is the same constraint as x + y = 1.
    LpResult r = simplex_maximize({{-1, -1}}, {-1}, {1, 0});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.objective == 1);
}
