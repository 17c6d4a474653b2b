#include "edgering/classify.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "edgering/errors.hpp"
#include "edgering/polytope.hpp"
#include "edgering/toric.hpp"

namespace edgering {

const char* witness_kind_name(WitnessKind kind) {
    switch (kind) {
        case WitnessKind::DisjointCycles: return "DisjointCycles";
        case WitnessKind::OneCommonVertex: return "OneCommonVertex";
        case WitnessKind::EvenEar: return "EvenEar";
        case WitnessKind::OddEar: return "OddEar";
    }
    return "?";
}

namespace {

SimpleGraph subgraph_from_edges(const SimpleGraph& host,
                                const std::vector<std::pair<int, int>>& edges) {
    return graph_from_edges(host.n_vertices, edges);
}

std::vector<std::pair<int, int>> cycle_edges(const Cycle& c) {
    std::vector<std::pair<int, int>> edges;
    const int len = c.length();
    for (int i = 0; i < len; ++i) {
        edges.emplace_back(c.vertices[i], c.vertices[(i + 1) % len]);
    }
    return edges;
}

int common_vertex_count(const Cycle& a, const Cycle& b) {
    int common = 0;
    for (int u : a.vertices) {
        if (std::find(b.vertices.begin(), b.vertices.end(), u) !=
            b.vertices.end()) {
            ++common;
        }
    }
    return common;
}

struct Ear {
    std::vector<int> path;  // w1, interior..., w2 with interior off the cycle
    int length() const { return static_cast<int>(path.size()) - 1; }
};

// Shortest path leaving the cycle at one vertex and returning at another,
// with every interior vertex off the cycle. Ties: smaller endpoint pair,
// then the breadth-first path found with ascending neighbor expansion.
std::optional<Ear> shortest_ear(const SimpleGraph& g, const Cycle& c1) {
    auto adj = adjacency_lists(g);
    std::vector<char> on_cycle(g.n_vertices + 1, 0);
    for (int v : c1.vertices) on_cycle[v] = 1;
    std::vector<int> anchors = c1.vertices;
    std::sort(anchors.begin(), anchors.end());

    std::optional<Ear> best;
    auto better = [&](const Ear& cand) {
        if (!best) return true;
        if (cand.length() != best->length()) {
            return cand.length() < best->length();
        }
        auto key = [](const Ear& e) {
            return std::make_pair(std::min(e.path.front(), e.path.back()),
                                  std::max(e.path.front(), e.path.back()));
        };
        return key(cand) < key(best.value());
    };

    std::vector<int> dist(g.n_vertices + 1), parent(g.n_vertices + 1);
    for (int w1 : anchors) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> queue;
        dist[w1] = 0;
        for (int w : adj[w1]) {
            if (on_cycle[w]) continue;  // chords cannot exist under the girth
            if (dist[w] < 0) {
                dist[w] = 1;
                parent[w] = w1;
                queue.push_back(w);
            }
        }
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int w : adj[x]) {
                if (on_cycle[w]) {
                    if (w == w1) continue;
                    Ear cand;
                    for (int y = x; y != w1; y = parent[y]) {
                        cand.path.push_back(y);
                    }
                    cand.path.push_back(w1);
                    std::reverse(cand.path.begin(), cand.path.end());
                    cand.path.push_back(w);
                    if (cand.path.front() > cand.path.back()) {
                        std::reverse(cand.path.begin(), cand.path.end());
                    }
                    if (better(cand)) best = cand;
                } else if (dist[w] < 0) {
                    dist[w] = dist[x] + 1;
                    parent[w] = x;
                    queue.push_back(w);
                }
            }
        }
    }
    return best;
}

}  // namespace

Witness extract_witness(const SimpleGraph& g, int q, const Budgets& budgets) {
    StructureInfo info = analyze_structure(g);
    if (info.cycle_rank < 2) {
        throw input_error("NoSecondCycle",
                          "witness extraction needs cycle rank >= 2");
    }
    auto shortest = enumerate_even_cycles(g, 2 * q, budgets);
    std::erase_if(shortest, [&](const Cycle& c) { return c.length() != 2 * q; });
    if (shortest.empty()) {
        throw input_error("NoSecondCycle",
                          "no cycle of length 2q = " + std::to_string(2 * q));
    }

    Witness w;
    w.q = q;
    if (shortest.size() >= 2) {
        const Cycle *da = nullptr, *db = nullptr, *oa = nullptr, *ob = nullptr;
        for (std::size_t i = 0; i < shortest.size() && !da; ++i) {
            for (std::size_t j = i + 1; j < shortest.size(); ++j) {
                int common = common_vertex_count(shortest[i], shortest[j]);
                if (common == 0 && !da) {
                    da = &shortest[i];
                    db = &shortest[j];
                    break;
                }
                if (common == 1 && !oa) {
                    oa = &shortest[i];
                    ob = &shortest[j];
                }
            }
        }
        if (da) {
            w.kind = WitnessKind::DisjointCycles;
            w.cycles = {*da, *db};
            auto edges = cycle_edges(*da);
            auto more = cycle_edges(*db);
            edges.insert(edges.end(), more.begin(), more.end());
            w.subgraph = subgraph_from_edges(g, edges);
            return w;
        }
        if (oa) {
            w.kind = WitnessKind::OneCommonVertex;
            w.cycles = {*oa, *ob};
            auto edges = cycle_edges(*oa);
            auto more = cycle_edges(*ob);
            edges.insert(edges.end(), more.begin(), more.end());
            w.subgraph = subgraph_from_edges(g, edges);
            return w;
        }
    }

    // Every pair of shortest even cycles meets in two or more vertices (or
    // there is a single one): attach the shortest ear to the first cycle.
    const Cycle& c1 = shortest.front();
    auto ear = shortest_ear(g, c1);
    if (!ear) {
        throw anomaly_error("AssertionFailure",
                            "cycle rank >= 2 but no ear was found");
    }
    const int len = ear->length();
    int pos1 = -1, pos2 = -1;
    for (int i = 0; i < c1.length(); ++i) {
        if (c1.vertices[i] == ear->path.front()) pos1 = i;
        if (c1.vertices[i] == ear->path.back()) pos2 = i;
    }
    int around = std::abs(pos1 - pos2);
    int s1 = std::min(around, 2 * q - around);

    if (len % 2 == 0) {
        w.kind = WitnessKind::EvenEar;
        w.m = len / 2;
        w.k = s1 / 2;
    } else {
        w.kind = WitnessKind::OddEar;
        w.m = (len + 1) / 2;
        w.k = (s1 + 1) / 2;
    }
    // The girth hypothesis forces the family constraints; a violation here
    // means the input or the search is broken.
    bool params_ok = w.k >= 1 && w.k <= w.m &&
                     (len % 2 == 0 ? w.k + w.m >= q : w.k + w.m - 1 >= q);
    if (!params_ok) {
        throw anomaly_error("AssertionFailure",
                            "ear parameters (q,k,m) = (" + std::to_string(q) +
                                "," + std::to_string(w.k) + "," +
                                std::to_string(w.m) +
                                ") violate the family hypotheses");
    }
    w.cycles = {c1};
    w.ear_path = ear->path;
    auto edges = cycle_edges(c1);
    for (std::size_t i = 0; i + 1 < ear->path.size(); ++i) {
        edges.emplace_back(ear->path[i], ear->path[i + 1]);
    }
    w.subgraph = subgraph_from_edges(g, edges);
    return w;
}

ClassificationReport classify(const SimpleGraph& g, bool verify,
                              const Budgets& budgets) {
    StructureInfo info = analyze_structure(g);
    if (info.components != 1) {
        throw input_error("NotConnected",
                          "classification requires a connected graph");
    }
    if (!info.bipartite) {
        throw input_error("NonBipartite",
                          "classification requires a bipartite graph");
    }

    ClassificationReport rep;
    rep.cycle_rank = info.cycle_rank;

    if (info.cycle_rank == 0) {
        rep.forest = true;
        rep.predicted_linear = true;  // zero ideal, vacuously linear
        rep.is_hypersurface = false;
        if (g.n_edges() > 0) {
            auto prof = hstar_profile(edge_polytope(g), budgets);
            rep.deg = prof.degree;
            rep.codeg = prof.codegree;
        }
        if (verify) {
            rep.betti = betti_table(g, 0, budgets);
            rep.verified_linear = true;
            rep.verified_complete = rep.betti->complete;
            rep.reg_lower = 0;
        }
        return rep;
    }

    rep.q = *even_girth(g, budgets) / 2;
    rep.theorem_applies = *rep.q >= 3;
    rep.predicted_linear = info.cycle_rank == 1;

    auto prof = hstar_profile(edge_polytope(g), budgets);
    rep.deg = prof.degree;
    rep.codeg = prof.codegree;

    if (rep.theorem_applies && !rep.predicted_linear) {
        rep.witness = extract_witness(g, *rep.q, budgets);
    }

    if (!verify) {
        rep.is_hypersurface = info.cycle_rank == 1;
        return rep;
    }

    int max_gen_degree = 0;
    for (const auto& gen : ideal_generators(g, budgets)) {
        max_gen_degree = std::max(max_gen_degree, gen.degree);
    }
    BettiTable table = betti_table(g, g.n_edges() + max_gen_degree, budgets);
    RegularityInfo reg = regularity_and_linearity(table, *rep.q);
    rep.verified_linear = reg.is_q_linear_in_window;
    rep.verified_complete = table.complete;
    rep.reg_lower = reg.reg_lower;

    Int beta1 = 0;
    for (const auto& [key, beta] : table.entries) {
        if (key.first == 1) beta1 += beta;
    }
    rep.is_hypersurface = beta1 == 1;

    if (table.complete) {
        if (rep.theorem_applies &&
            *rep.verified_linear != rep.predicted_linear) {
            rep.anomalies.push_back(
                "verified linearity disagrees with the one-cycle prediction");
        }
        if ((beta1 == 1) != (info.cycle_rank == 1)) {
            rep.anomalies.push_back(
                "principality disagrees with cycle rank");
        }
        if (*rep.deg > reg.reg_lower) {
            rep.anomalies.push_back(
                "regularity fell below the polytope degree");
        }
    }
    rep.betti = std::move(table);
    return rep;
}

namespace {

std::uint32_t remap_columns(std::uint32_t row, const std::vector<int>& perm) {
    std::uint32_t out = 0;
    for (std::size_t j = 0; j < perm.size(); ++j) {
        if (row >> perm[j] & 1u) out |= 1u << j;
    }
    return out;
}

std::string canonical_key(const std::vector<std::uint32_t>& rows, int cols) {
    std::vector<int> perm(cols);
    for (int j = 0; j < cols; ++j) perm[j] = j;
    std::string best;
    std::vector<std::uint32_t> image(rows.size());
    do {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            image[i] = remap_columns(rows[i], perm);
        }
        std::sort(image.begin(), image.end());
        std::string key;
        key.reserve(rows.size() * 2);
        for (std::uint32_t r : image) {
            key.push_back(static_cast<char>(r & 0xff));
            key.push_back(static_cast<char>(r >> 8 & 0xff));
        }
        if (best.empty() || key < best) best = std::move(key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool biadjacency_connected(const std::vector<std::uint32_t>& rows, int a,
                           int b) {
    // Nodes 0..a-1 are rows, a..a+b-1 columns.
    std::vector<char> seen(a + b, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x < a) {
            for (int j = 0; j < b; ++j) {
                if ((rows[x] >> j & 1u) && !seen[a + j]) {
                    seen[a + j] = 1;
                    ++reached;
                    queue.push_back(a + j);
                }
            }
        } else {
            int j = x - a;
            for (int i = 0; i < a; ++i) {
                if ((rows[i] >> j & 1u) && !seen[i]) {
                    seen[i] = 1;
                    ++reached;
                    queue.push_back(i);
                }
            }
        }
    }
    return reached == a + b;
}

}  // namespace

std::vector<SimpleGraph> connected_bipartite_graphs(int n) {
    if (n < 1) {
        throw input_error("VertexOutOfRange", "vertex count must be positive");
    }
    std::vector<SimpleGraph> out;
    if (n == 1) {
        out.push_back(graph_from_edges(1, {}));
        return out;
    }
    for (int a = 1; 2 * a <= n; ++a) {
        const int b = n - a;
        std::unordered_set<std::string> seen;
        const std::uint64_t top = std::uint64_t(1) << (a * b);
        std::vector<std::uint32_t> rows(a);
        for (std::uint64_t mask = 0; mask < top; ++mask) {
            std::uint32_t cover = 0;
            bool rows_ok = true;
            for (int i = 0; i < a; ++i) {
                rows[i] = static_cast<std::uint32_t>(mask >> (i * b)) &
                          ((1u << b) - 1u);
                if (!rows[i]) {
                    rows_ok = false;
                    break;
                }
                cover |= rows[i];
            }
            if (!rows_ok || cover != (1u << b) - 1u) continue;
            if (!biadjacency_connected(rows, a, b)) continue;

            std::string key = canonical_key(rows, b);
            if (a == b) {
                std::vector<std::uint32_t> t(b, 0);
                for (int i = 0; i < a; ++i) {
                    for (int j = 0; j < b; ++j) {
                        if (rows[i] >> j & 1u) t[j] |= 1u << i;
                    }
                }
                key = std::min(key, canonical_key(t, a));
            }
            if (!seen.insert(key).second) continue;

            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < a; ++i) {
                for (int j = 0; j < b; ++j) {
                    if (rows[i] >> j & 1u) edges.emplace_back(i + 1, a + j + 1);
                }
            }
            out.push_back(graph_from_edges(n, edges));
        }
    }
    return out;
}

ScanReport scan(int n_max, int verify_budget, const Budgets& budgets) {
    if (n_max < 1) {
        throw input_error("VertexOutOfRange", "n_max must be positive");
    }
    if (n_max > budgets.max_scan_vertices) {
        throw budget_error("ScanBudgetExceeded",
                           "scan capped at " +
                               std::to_string(budgets.max_scan_vertices) +
                               " vertices, requested " + std::to_string(n_max));
    }
    ScanReport report;
    report.n_max = n_max;
    report.verify_budget = verify_budget;
    for (int n = 1; n <= n_max; ++n) {
        for (const SimpleGraph& g : connected_bipartite_graphs(n)) {
            ++report.total_graphs;
            StructureInfo info = analyze_structure(g);
            if (info.cycle_rank == 0) {
                ++report.forests;
                continue;
            }
            int q = *even_girth(g, budgets) / 2;
            if (q < 3) {
                ++report.girth4;
                continue;
            }
            ++report.girth6_plus;
            bool verify = g.n_edges() <= verify_budget;
            ClassificationReport rep = classify(g, verify, budgets);
            if (rep.is_hypersurface) ++report.hypersurfaces;
            if (info.cycle_rank == 1) ++report.rank1;
            for (const auto& a : rep.anomalies) {
                report.anomalies.push_back(a + "\n" + graph_to_text(g));
            }
            if (!verify || !rep.verified_complete.value_or(false)) {
                if (info.cycle_rank == 1) ++report.rank1_unverified;
                continue;
            }
            ++report.verified;
            bool linear = rep.verified_linear.value();
            if (linear) {
                ++report.verified_linear;
                if (!rep.is_hypersurface) {
                    report.counterexamples.push_back(graph_to_text(g));
                }
            }
            if (info.cycle_rank == 1) {
                if (linear) {
                    ++report.rank1_verified_linear;
                } else {
                    report.anomalies.push_back(
                        "one-cycle graph failed q-linear verification\n" +
                        graph_to_text(g));
                }
            }
        }
    }
    return report;
}

}  // namespace edgering
