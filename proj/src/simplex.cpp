#include "edgering/simplex.hpp"

#include <cassert>

namespace edgering {

namespace {

struct Tableau {
    int rows;
    int cols;  // structural columns; column `cols` of each row is the rhs
    std::vector<std::vector<Rat>> t;
    std::vector<int> basis;

    void pivot(int row, int col) {
        auto& pr = t[row];
        Rat inv = pr[col];
        for (auto& x : pr) x /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == row || t[i][col] == 0) continue;
            Rat f = t[i][col];
            for (int j = 0; j <= cols; ++j) t[i][j] -= f * pr[j];
        }
        basis[row] = col;
    }

    // One Bland step maximizing cost over columns [0, limit): the entering
    // column is the lowest-index one with positive reduced cost, the leaving
    // row breaks ratio ties by lowest basis index. Returns +1 after a pivot,
    // 0 at optimality, -1 when unbounded.
    int step(const std::vector<Rat>& cost, int limit) {
        for (int j = 0; j < limit; ++j) {
            Rat reduced = cost[j];
            for (int i = 0; i < rows; ++i) {
                if (t[i][j] != 0) reduced -= cost[basis[i]] * t[i][j];
            }
            if (reduced <= 0) continue;
            int row = -1;
            for (int i = 0; i < rows; ++i) {
                if (t[i][j] <= 0) continue;
                if (row < 0) {
                    row = i;
                    continue;
                }
                Rat lhs = t[i][cols] * t[row][j];
                Rat rhs = t[row][cols] * t[i][j];
                if (lhs < rhs || (lhs == rhs && basis[i] < basis[row])) {
                    row = i;
                }
            }
            if (row < 0) return -1;
            pivot(row, j);
            return +1;
        }
        return 0;
    }
};

}  // namespace

LpResult simplex_maximize(const std::vector<std::vector<Rat>>& a,
                          const std::vector<Rat>& rhs,
                          const std::vector<Rat>& cost) {
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(cost.size());

    Tableau tab;
    tab.rows = m;
    tab.cols = n + m;  // structural + one artificial per row
    tab.t.assign(m, std::vector<Rat>(tab.cols + 1, Rat(0)));
    tab.basis.resize(m);
    for (int i = 0; i < m; ++i) {
        assert(static_cast<int>(a[i].size()) == n);
        bool flip = rhs[i] < 0;
        for (int j = 0; j < n; ++j) tab.t[i][j] = flip ? -a[i][j] : a[i][j];
        tab.t[i][tab.cols] = flip ? -rhs[i] : rhs[i];
        tab.t[i][n + i] = 1;
        tab.basis[i] = n + i;
    }

    // Phase 1: drive the artificial variables to zero.
    std::vector<Rat> phase1(tab.cols, Rat(0));
    for (int j = n; j < tab.cols; ++j) phase1[j] = -1;
    while (tab.step(phase1, tab.cols) > 0) {
    }
    Rat infeas(0);
    for (int i = 0; i < tab.rows; ++i) {
        if (tab.basis[i] >= n) infeas += tab.t[i][tab.cols];
    }
    if (infeas != 0) return {LpStatus::Infeasible, Rat(0), {}};

    // Remove artificials from the basis; rows that cannot be repaired are
    // redundant (identically zero over the structural columns) and dropped.
    for (int i = tab.rows - 1; i >= 0; --i) {
        if (tab.basis[i] < n) continue;
        int col = -1;
        for (int j = 0; j < n; ++j) {
            if (tab.t[i][j] != 0) {
                col = j;
                break;
            }
        }
        if (col >= 0) {
            tab.pivot(i, col);
        } else {
            tab.t.erase(tab.t.begin() + i);
            tab.basis.erase(tab.basis.begin() + i);
            --tab.rows;
        }
    }
    for (auto& row : tab.t) {
        row[n] = row[tab.cols];  // move rhs next to the structural columns
        row.resize(n + 1);
    }
    tab.cols = n;

    // Phase 2: the actual objective.
    int state;
    while ((state = tab.step(cost, n)) > 0) {
    }
    if (state < 0) return {LpStatus::Unbounded, Rat(0), {}};

    LpResult res;
    res.status = LpStatus::Optimal;
    res.solution.assign(n, Rat(0));
    for (int i = 0; i < tab.rows; ++i) {
        res.solution[tab.basis[i]] = tab.t[i][n];
    }
    res.objective = 0;
    for (int j = 0; j < n; ++j) {
        if (res.solution[j] != 0) res.objective += cost[j] * res.solution[j];
    }
    return res;
}

}  // namespace edgering
