#include "edgering/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>

#include "edgering/errors.hpp"

namespace edgering {

SimpleGraph graph_from_edges(int n_vertices,
                             const std::vector<std::pair<int, int>>& pairs) {
    if (n_vertices < 1) {
        throw input_error("VertexOutOfRange",
                          "vertex count must be positive, got " +
                              std::to_string(n_vertices));
    }
    SimpleGraph g;
    g.n_vertices = n_vertices;
    g.edges.reserve(pairs.size());
    std::map<std::pair<int, int>, int> seen;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [u, v] = pairs[i];
        if (u < 1 || u > n_vertices || v < 1 || v > n_vertices) {
            throw input_error("VertexOutOfRange",
                              "edge " + std::to_string(i + 1) + " = {" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  "} leaves 1.." + std::to_string(n_vertices));
        }
        if (u == v) {
            throw input_error("LoopEdge", "edge " + std::to_string(i + 1) +
                                              " is a loop at vertex " +
                                              std::to_string(u));
        }
        if (u > v) std::swap(u, v);
        auto [it, fresh] = seen.emplace(std::make_pair(u, v),
                                        static_cast<int>(i) + 1);
        if (!fresh) {
            throw input_error(
                "DuplicateEdge",
                "edge " + std::to_string(i + 1) + " repeats edge " +
                    std::to_string(it->second) + " = {" + std::to_string(u) +
                    "," + std::to_string(v) + "}");
        }
        g.edges.emplace_back(u, v);
    }
    return g;
}

std::vector<std::vector<int>> adjacency_lists(const SimpleGraph& g) {
    std::vector<std::vector<int>> adj(g.n_vertices + 1);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

int edge_index(const SimpleGraph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (g.edges[i].first == u && g.edges[i].second == v) {
            return static_cast<int>(i) + 1;
        }
    }
    return 0;
}

StructureInfo analyze_structure(const SimpleGraph& g) {
    StructureInfo info;
    info.component_of.assign(g.n_vertices + 1, -1);
    info.side_of.assign(g.n_vertices + 1, -1);
    auto adj = adjacency_lists(g);

    for (int s = 1; s <= g.n_vertices; ++s) {
        if (info.component_of[s] >= 0) continue;
        int comp = info.components++;
        bool odd_cycle = false;
        std::deque<int> queue{s};
        info.component_of[s] = comp;
        info.side_of[s] = 0;
        std::vector<int> members{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adj[u]) {
                if (info.component_of[w] < 0) {
                    info.component_of[w] = comp;
                    info.side_of[w] = 1 - info.side_of[u];
                    members.push_back(w);
                    queue.push_back(w);
                } else if (info.side_of[w] == info.side_of[u]) {
                    odd_cycle = true;
                }
            }
        }
        if (odd_cycle) {
            for (int w : members) info.side_of[w] = -1;
        } else {
            ++info.bipartite_components;
        }
    }
    info.bipartite = info.bipartite_components == info.components;
    info.cycle_rank = g.n_edges() - g.n_vertices + info.components;
    return info;
}

namespace {

struct CycleSearch {
    const std::vector<std::vector<int>>& adj;
    const SimpleGraph& g;
    int max_length;
    std::uint64_t cycle_cap;
    std::uint64_t step_cap;
    std::uint64_t steps = 0;
    std::vector<char> on_path;
    std::vector<int> path;
    std::vector<Cycle> out;

    void emit() {
        Cycle c;
        c.vertices = path;
        c.edge_indices.reserve(path.size());
        for (std::size_t i = 0; i < path.size(); ++i) {
            int u = path[i];
            int v = path[(i + 1) % path.size()];
            c.edge_indices.push_back(edge_index(g, u, v));
        }
        out.push_back(std::move(c));
        if (out.size() > cycle_cap) {
            throw budget_error("CycleBudgetExceeded",
                               "more than " + std::to_string(cycle_cap) +
                                   " even cycles");
        }
    }

    // Extends a path rooted at its minimal vertex path[0]; every later vertex
    // is larger, so each cycle is found once from its least vertex. The
    // closing test path[1] < path.back() kills the reflected copy.
    void extend() {
        if (++steps > step_cap) {
            throw budget_error("CycleBudgetExceeded",
                               "cycle search exceeded its step budget");
        }
        int u = path.back();
        int root = path[0];
        for (int w : adj[u]) {
            if (w == root && path.size() >= 3 && path[1] < u) {
                if (path.size() % 2 == 0) emit();
                continue;
            }
            if (w <= root || on_path[w]) continue;
            if (max_length > 0 &&
                static_cast<int>(path.size()) + 1 > max_length) {
                continue;
            }
            on_path[w] = 1;
            path.push_back(w);
            extend();
            path.pop_back();
            on_path[w] = 0;
        }
    }
};

}  // namespace

std::vector<Cycle> enumerate_even_cycles(const SimpleGraph& g, int max_length,
                                         const Budgets& budgets) {
    if (max_length != 0 && (max_length < 4 || max_length % 2 != 0)) {
        throw input_error("VertexOutOfRange",
                          "max cycle length must be 0 or an even number >= 4");
    }
    auto adj = adjacency_lists(g);
    CycleSearch search{adj,
                       g,
                       max_length,
                       budgets.max_cycles,
                       budgets.max_cycles * 256 + 1024,
                       0,
                       std::vector<char>(g.n_vertices + 1, 0),
                       {},
                       {}};
    for (int s = 1; s <= g.n_vertices; ++s) {
        search.path.assign(1, s);
        search.on_path.assign(g.n_vertices + 1, 0);
        search.on_path[s] = 1;
        search.extend();
    }
    std::sort(search.out.begin(), search.out.end(),
              [](const Cycle& a, const Cycle& b) {
                  if (a.length() != b.length()) return a.length() < b.length();
                  return a.vertices < b.vertices;
              });
    return search.out;
}

namespace {

// Girth via one breadth-first search per edge: remove {u,v}, measure
// dist(u,v), add the edge back. An edge lying on a shortest cycle reports
// girth - 1.
std::optional<int> girth_by_bfs(const SimpleGraph& g) {
    auto adj = adjacency_lists(g);
    std::optional<int> best;
    std::vector<int> dist(g.n_vertices + 1);
    for (auto [eu, ev] : g.edges) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[eu] = 0;
        std::deque<int> queue{eu};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            if (x == ev) break;
            for (int w : adj[x]) {
                if ((x == eu && w == ev) || (x == ev && w == eu)) continue;
                if (dist[w] < 0) {
                    dist[w] = dist[x] + 1;
                    queue.push_back(w);
                }
            }
        }
        if (dist[ev] >= 0 && (!best || dist[ev] + 1 < *best)) {
            best = dist[ev] + 1;
        }
    }
    return best;
}

}  // namespace

std::optional<int> even_girth(const SimpleGraph& g, const Budgets& budgets) {
    StructureInfo info = analyze_structure(g);
    if (info.bipartite) return girth_by_bfs(g);
    // General case: grow the length bound until an even cycle appears.
    int bound = g.n_vertices - g.n_vertices % 2;
    for (int len = 4; len <= bound; len += 2) {
        auto cycles = enumerate_even_cycles(g, len, budgets);
        if (!cycles.empty()) return cycles.front().length();
    }
    return std::nullopt;
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw input_error("InvalidFamilyParameters", what);
}

}  // namespace

SimpleGraph build_family(const FamilySpec& spec) {
    int q = spec.q, k = spec.k, m = spec.m;
    require(q >= 3, "q >= 3 required, got q = " + std::to_string(q));
    std::vector<std::pair<int, int>> edges;
    switch (spec.kind) {
        case FamilyKind::DisjointPair: {
            for (int i = 1; i < 2 * q; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(1, 2 * q);
            for (int i = 2 * q + 1; i < 4 * q; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(2 * q + 1, 4 * q);
            return graph_from_edges(4 * q, edges);
        }
        case FamilyKind::OneCommonVertex: {
            for (int i = 1; i < 2 * q; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(1, 2 * q);
            edges.emplace_back(1, 2 * q + 1);
            for (int i = 2 * q + 2; i <= 4 * q - 1; ++i) {
                edges.emplace_back(i - 1, i);
            }
            edges.emplace_back(1, 4 * q - 1);
            return graph_from_edges(4 * q - 1, edges);
        }
        case FamilyKind::EvenEar: {
            require(k >= 1, "k >= 1 required, got k = " + std::to_string(k));
            require(k <= m, "k <= m required, got k = " + std::to_string(k) +
                                ", m = " + std::to_string(m));
            require(k + m >= q, "k + m >= q required, got k + m = " +
                                    std::to_string(k + m));
            require(k <= q - 1, "k <= q - 1 required, got k = " +
                                    std::to_string(k));
            for (int i = 1; i < 2 * q; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(1, 2 * q);
            edges.emplace_back(1, 2 * q + 1);
            for (int j = 2; j <= 2 * m - 1; ++j) {
                edges.emplace_back(2 * q + j - 1, 2 * q + j);
            }
            edges.emplace_back(2 * k + 1, 2 * q + 2 * m - 1);
            return graph_from_edges(2 * q + 2 * m - 1, edges);
        }
        case FamilyKind::OddEar: {
            require(k >= 1, "k >= 1 required, got k = " + std::to_string(k));
            require(k <= m, "k <= m required, got k = " + std::to_string(k) +
                                ", m = " + std::to_string(m));
            require(k + m - 1 >= q, "k + m - 1 >= q required, got k + m - 1 = " +
                                        std::to_string(k + m - 1));
            require(k <= q, "k <= q required, got k = " + std::to_string(k));
            for (int i = 1; i < 2 * q; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(1, 2 * q);
            edges.emplace_back(1, 2 * q + 1);
            for (int j = 2; j <= 2 * m - 2; ++j) {
                edges.emplace_back(2 * q + j - 1, 2 * q + j);
            }
            edges.emplace_back(2 * k, 2 * q + 2 * m - 2);
            return graph_from_edges(2 * q + 2 * m - 2, edges);
        }
    }
    throw input_error("InvalidFamilyParameters", "unknown family kind");
}

const char* family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::DisjointPair: return "DisjointPair";
        case FamilyKind::OneCommonVertex: return "OneCommonVertex";
        case FamilyKind::EvenEar: return "EvenEar";
        case FamilyKind::OddEar: return "OddEar";
    }
    return "?";
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw input_error("ParseError",
                      "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

SimpleGraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_lines;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream tok(line);
        if (n < 0) {
            std::string tag;
            tok >> tag;
            if (tag != "p" || !(tok >> n >> m) || n < 1 || m < 0) {
                parse_fail(line_no, "expected header \"p <N> <M>\"");
            }
            std::string rest;
            if (tok >> rest) parse_fail(line_no, "trailing token \"" + rest + "\"");
            continue;
        }
        int u, v;
        if (!(tok >> u >> v)) parse_fail(line_no, "expected \"<u> <v>\"");
        std::string rest;
        if (tok >> rest) parse_fail(line_no, "trailing token \"" + rest + "\"");
        if (static_cast<int>(edges.size()) == m) {
            parse_fail(line_no, "more than the declared " + std::to_string(m) +
                                    " edges");
        }
        if (!(1 <= u && u < v && v <= n)) {
            parse_fail(line_no, "edge must satisfy 1 <= u < v <= " +
                                    std::to_string(n));
        }
        edges.emplace_back(u, v);
        edge_lines.push_back(line_no);
    }
    if (n < 0) parse_fail(line_no + 1, "missing header \"p <N> <M>\"");
    if (static_cast<int>(edges.size()) != m) {
        parse_fail(line_no + 1, "declared " + std::to_string(m) +
                                    " edges, found " +
                                    std::to_string(edges.size()));
    }
    try {
        return graph_from_edges(n, edges);
    } catch (const Error& e) {
        // Re-key duplicate reports to the offending line.
        for (std::size_t i = 0; i < edges.size(); ++i) {
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                if (edges[i] == edges[j]) {
                    parse_fail(edge_lines[j], "duplicate edge");
                }
            }
        }
        throw;
    }
}

SimpleGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw input_error("ParseError", "cannot open \"" + path + "\"");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_text(buf.str());
}

std::string graph_to_text(const SimpleGraph& g) {
    std::ostringstream out;
    out << "p " << g.n_vertices << ' ' << g.n_edges() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace edgering
