#include "edgering/polytope.hpp"

#include <algorithm>
#include <functional>

#include "edgering/errors.hpp"
#include "edgering/semigroup.hpp"
#include "edgering/simplex.hpp"

namespace edgering {

namespace {

constexpr int kGenericVertexCap = 12;

void require_nonempty(const EdgePolytope& p) {
    if (p.vertices.empty()) {
        throw input_error("EmptyPolytope",
                          "the graph has no edges, so the polytope is empty");
    }
}

bool graph_is_bipartite(const SimpleGraph& g) {
    return analyze_structure(g).bipartite;
}

}  // namespace

LatticeVector rho(std::pair<int, int> edge, int n_vertices) {
    auto [u, v] = edge;
    if (u < 1 || u > n_vertices || v < 1 || v > n_vertices) {
        throw input_error("VertexOutOfRange",
                          "edge endpoint outside 1.." +
                              std::to_string(n_vertices));
    }
    if (u == v) {
        throw input_error("LoopEdge", "rho of a loop at vertex " +
                                          std::to_string(u));
    }
    LatticeVector x(n_vertices, 0);
    x[u - 1] = 1;
    x[v - 1] = 1;
    return x;
}

EdgePolytope edge_polytope(const SimpleGraph& g) {
    EdgePolytope p;
    p.graph = g;
    p.vertices.reserve(g.edges.size());
    for (auto e : g.edges) p.vertices.push_back(rho(e, g.n_vertices));
    return p;
}

int polytope_dimension(const EdgePolytope& p) {
    require_nonempty(p);
    const int n = static_cast<int>(p.vertices.size());
    std::vector<std::vector<Int>> diff;
    diff.reserve(n - 1);
    for (int i = 1; i < n; ++i) {
        std::vector<Int> row(p.ambient_dim());
        for (int v = 0; v < p.ambient_dim(); ++v) {
            row[v] = p.vertices[i][v] - p.vertices[0][v];
        }
        diff.push_back(std::move(row));
    }
    return rank_destructive(diff);
}

MembershipCertificate membership(const EdgePolytope& p, const LatticeVector& b,
                                 int r) {
    require_nonempty(p);
    const int n_coords = p.ambient_dim();
    const int n = static_cast<int>(p.vertices.size());
    if (static_cast<int>(b.size()) != n_coords) {
        throw input_error("DimensionMismatch",
                          "point length " + std::to_string(b.size()) +
                              " does not match " + std::to_string(n_coords) +
                              " coordinates");
    }
    if (r < 0) {
        throw input_error("DimensionMismatch", "dilation must be nonnegative");
    }

    // Variables: mu_1..mu_n >= 0 and t = tp - tm, with lambda_i = mu_i + t.
    // Rows: sum_i lambda_i v_i = b  and  sum_i lambda_i = r.
    const int cols = n + 2;
    std::vector<std::vector<Rat>> a(n_coords + 1, std::vector<Rat>(cols, Rat(0)));
    std::vector<Rat> rhs(n_coords + 1);
    for (int v = 0; v < n_coords; ++v) {
        int deg = 0;
        for (int i = 0; i < n; ++i) {
            if (p.vertices[i][v]) {
                a[v][i] = 1;
                ++deg;
            }
        }
        a[v][n] = deg;
        a[v][n + 1] = -deg;
        rhs[v] = b[v];
    }
    for (int i = 0; i < n; ++i) a[n_coords][i] = 1;
    a[n_coords][n] = n;
    a[n_coords][n + 1] = -n;
    rhs[n_coords] = r;

    std::vector<Rat> cost(cols, Rat(0));
    cost[n] = 1;
    cost[n + 1] = -1;

    LpResult lp = simplex_maximize(a, rhs, cost);
    MembershipCertificate cert;
    cert.dilation = r;
    if (lp.status == LpStatus::Unbounded) {
        throw anomaly_error("AssertionFailure",
                            "bounded membership program reported unbounded");
    }
    if (lp.status == LpStatus::Infeasible) {
        cert.status = Position::Outside;
        cert.barycentric_margin = 0;
        return cert;
    }
    cert.barycentric_margin = lp.objective;
    if (lp.objective < 0) {
        cert.status = Position::Outside;
        return cert;
    }
    cert.status = lp.objective > 0 ? Position::Interior : Position::Boundary;
    std::vector<Rat> weights(n);
    for (int i = 0; i < n; ++i) weights[i] = lp.solution[i] + lp.objective;
    cert.weights = std::move(weights);
    return cert;
}

std::vector<LatticeVector> lattice_points(const EdgePolytope& p, int t,
                                          const Budgets& budgets) {
    require_nonempty(p);
    if (t < 0) {
        throw input_error("DimensionMismatch", "dilation must be nonnegative");
    }
    if (t == 0) return {LatticeVector(p.ambient_dim(), 0)};
    if (graph_is_bipartite(p.graph)) {
        SemigroupTable table(p.graph, t, budgets);
        return table.points(t);
    }
    return lattice_points_by_lp(p, t, budgets);
}

std::vector<LatticeVector> lattice_points_by_lp(const EdgePolytope& p, int t,
                                                const Budgets& budgets) {
    require_nonempty(p);
    if (t < 0) {
        throw input_error("DimensionMismatch", "dilation must be nonnegative");
    }
    const int n_coords = p.ambient_dim();
    if (n_coords > kGenericVertexCap) {
        throw budget_error("EnumerationBudgetExceeded",
                           "candidate sweep capped at " +
                               std::to_string(kGenericVertexCap) +
                               " vertices");
    }
    if (t == 0) return {LatticeVector(n_coords, 0)};

    std::vector<LatticeVector> out;
    LatticeVector cand(n_coords, 0);
    std::uint64_t tried = 0;
    // Coordinates of a point of t*P never exceed t, and their sum is 2t.
    std::function<void(int, int)> sweep = [&](int at, int remaining) {
        if (at == n_coords) {
            if (remaining != 0) return;
            if (++tried > budgets.max_points) {
                throw budget_error("EnumerationBudgetExceeded",
                                   "candidate sweep exceeds " +
                                       std::to_string(budgets.max_points) +
                                       " candidates");
            }
            if (membership(p, cand, t).status != Position::Outside) {
                out.push_back(cand);
            }
            return;
        }
        int spare = (n_coords - at - 1) * t;
        for (int val = std::max(0, remaining - spare);
             val <= std::min(t, remaining); ++val) {
            cand[at] = val;
            sweep(at + 1, remaining - val);
        }
        cand[at] = 0;
    };
    sweep(0, 2 * t);
    return out;
}

HStarProfile hstar_profile(const EdgePolytope& p, const Budgets& budgets) {
    require_nonempty(p);
    HStarProfile prof;
    prof.dim = polytope_dimension(p);
    const int d = prof.dim;

    if (graph_is_bipartite(p.graph)) {
        SemigroupTable table(p.graph, d, budgets);
        prof.counts = table.counts();
    } else {
        prof.counts.reserve(d + 1);
        for (int t = 0; t <= d; ++t) {
            prof.counts.push_back(
                static_cast<long>(lattice_points_by_lp(p, t, budgets).size()));
        }
    }

    prof.hstar.assign(d + 1, Int(0));
    for (int k = 0; k <= d; ++k) {
        Int acc = 0;
        for (int i = 0; i <= k; ++i) {
            Int term = binomial(d + 1, i) * prof.counts[k - i];
            if (i % 2) {
                acc -= term;
            } else {
                acc += term;
            }
        }
        prof.hstar[k] = acc;
    }
    if (prof.counts[0] != 1 || prof.hstar[0] != 1) {
        throw anomaly_error("AssertionFailure", "h* transform lost h*_0 = 1");
    }
    prof.degree = 0;
    prof.normalized_volume = 0;
    for (int k = 0; k <= d; ++k) {
        if (prof.hstar[k] < 0) {
            throw anomaly_error("AssertionFailure",
                                "negative h* coefficient at index " +
                                    std::to_string(k));
        }
        if (prof.hstar[k] != 0) prof.degree = k;
        prof.normalized_volume += prof.hstar[k];
    }
    prof.codegree = d + 1 - prof.degree;
    return prof;
}

namespace {

// Enumerates vectors >= 1 on a vertex block with a prescribed block sum, by
// distributing the deficit beyond the mandatory ones.
void spread_deficit(const std::vector<int>& verts, int deficit, std::size_t at,
                    LatticeVector& b, const std::function<void()>& done) {
    if (at + 1 == verts.size()) {
        b[verts[at] - 1] = 1 + deficit;
        done();
        b[verts[at] - 1] = 0;
        return;
    }
    for (int take = 0; take <= deficit; ++take) {
        b[verts[at] - 1] = 1 + take;
        spread_deficit(verts, deficit - take, at + 1, b, done);
    }
    b[verts[at] - 1] = 0;
}

}  // namespace

int codegree_by_search(const EdgePolytope& p, const Budgets& budgets) {
    require_nonempty(p);
    const int d = polytope_dimension(p);
    const SimpleGraph& g = p.graph;

    if (!graph_is_bipartite(g)) {
        if (g.n_vertices > kGenericVertexCap) {
            throw budget_error("EnumerationBudgetExceeded",
                               "candidate sweep capped at " +
                                   std::to_string(kGenericVertexCap) +
                                   " vertices");
        }
        std::vector<char> covered(g.n_vertices + 1, 0);
        for (auto [u, v] : g.edges) covered[u] = covered[v] = 1;
        for (int r = 1; r <= d + 1; ++r) {
            bool found = false;
            LatticeVector cand(g.n_vertices, 0);
            std::function<void(int, int)> sweep = [&](int at, int remaining) {
                if (found) return;
                if (at == g.n_vertices) {
                    if (remaining == 0 &&
                        membership(p, cand, r).status == Position::Interior) {
                        found = true;
                    }
                    return;
                }
                if (!covered[at + 1]) {
                    cand[at] = 0;
                    sweep(at + 1, remaining);
                    return;
                }
                for (int val = 1; val <= std::min(r, remaining); ++val) {
                    cand[at] = val;
                    sweep(at + 1, remaining - val);
                }
                cand[at] = 0;
            };
            sweep(0, 2 * r);
            if (found) return r;
        }
        throw anomaly_error("AssertionFailure",
                            "no interior point up to dilation dim + 1");
    }

    auto bases = component_bases(g);
    const int n_comps = static_cast<int>(bases.size());
    std::vector<int> r_min(n_comps);
    for (int c = 0; c < n_comps; ++c) {
        r_min[c] = static_cast<int>(
            std::max(bases[c].left.size(), bases[c].right.size()));
    }

    std::uint64_t tried = 0;
    for (int r = 1; r <= d + 1; ++r) {
        bool found = false;
        LatticeVector cand(g.n_vertices, 0);

        // Per component, side sums must both equal the component's share r_c,
        // with every coordinate >= 1; only deficit placements remain free.
        std::function<void(int, int)> per_comp = [&](int c, int remaining) {
            if (found) return;
            if (c == n_comps) {
                if (remaining != 0) return;
                if (++tried > budgets.max_points) {
                    throw budget_error("EnumerationBudgetExceeded",
                                       "interior search exceeds " +
                                           std::to_string(budgets.max_points) +
                                           " candidates");
                }
                if (degree_system_feasible(g, cand) &&
                    membership(p, cand, r).status == Position::Interior) {
                    found = true;
                }
                return;
            }
            int tail_min = 0;
            for (int c2 = c + 1; c2 < n_comps; ++c2) tail_min += r_min[c2];
            const auto& basis = bases[c];
            std::vector<int> left_verts, right_verts;
            for (int i : basis.left) left_verts.push_back(basis.vertices[i]);
            for (int i : basis.right) right_verts.push_back(basis.vertices[i]);
            for (int rc = r_min[c]; rc <= remaining - tail_min; ++rc) {
                spread_deficit(
                    left_verts, rc - static_cast<int>(left_verts.size()), 0,
                    cand, [&] {
                        spread_deficit(
                            right_verts,
                            rc - static_cast<int>(right_verts.size()), 0, cand,
                            [&] { per_comp(c + 1, remaining - rc); });
                    });
                if (found) return;
            }
        };
        per_comp(0, r);
        if (found) return r;
    }
    throw anomaly_error("AssertionFailure",
                        "no interior point up to dilation dim + 1");
}

}  // namespace edgering
