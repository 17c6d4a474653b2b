#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "edgering/numeric.hpp"
#include "oracles.hpp"

using namespace edgering;

TEST_CASE("binomial basics") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 10) == 1);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(7, -1) == 0);
    CHECK(binomial(7, 8) == 0);
    CHECK(binomial(52, 26) == Int("495918532948104"));
}

TEST_CASE("binomial satisfies the Pascal identity") {
    for (long n = 1; n <= 30; ++n) {
        for (long k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}

TEST_CASE("rank on fixed matrices") {
    CHECK(integer_rank({{1, 0}, {0, 1}}) == 2);
    CHECK(integer_rank({{0, 0}, {0, 0}}) == 0);
    CHECK(integer_rank({{2, 4}, {1, 2}}) == 1);
    CHECK(integer_rank({{1, 2}, {3, 4}}) == 2);
    CHECK(integer_rank({{1, 0, 1}, {0, 1, 1}}) == 2);
    CHECK(integer_rank({{1}, {2}, {3}}) == 1);
    CHECK(integer_rank({{3, 1, 4}, {1, 5, 9}, {2, 6, 5}, {3, 5, 8}}) == 3);
}

TEST_CASE("rank agrees with rational elimination on random matrices") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> entry(-5, 5);
    std::uniform_int_distribution<int> size(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        int rows = size(rng), cols = size(rng);
        std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols));
        std::vector<std::vector<Rat>> q(rows, std::vector<Rat>(cols));
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                int val = entry(rng);
                m[r][c] = val;
                q[r][c] = val;
            }
        }
        CHECK(integer_rank(m) == oracles::rational_rank(q));
    }
}

TEST_CASE("rank_destructive matches integer_rank") {
    std::vector<std::vector<Int>> m = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    auto copy = m;
    CHECK(integer_rank(m) == 2);
    CHECK(rank_destructive(copy) == 2);
}
