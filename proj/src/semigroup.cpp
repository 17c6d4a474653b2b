#include "edgering/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

#include "edgering/errors.hpp"

namespace edgering {

std::vector<ComponentBasis> component_bases(const SimpleGraph& g) {
    StructureInfo info = analyze_structure(g);
    if (!info.bipartite) {
        throw input_error("NonBipartite",
                          "semigroup machinery requires a bipartite graph");
    }
    std::vector<ComponentBasis> out(info.components);
    std::vector<int> local(g.n_vertices + 1, -1);
    for (int v = 1; v <= g.n_vertices; ++v) {
        auto& cb = out[info.component_of[v]];
        local[v] = static_cast<int>(cb.vertices.size());
        cb.vertices.push_back(v);
        (info.side_of[v] == 0 ? cb.left : cb.right).push_back(local[v]);
    }
    for (int i = 0; i < g.n_edges(); ++i) {
        auto [u, v] = g.edges[i];
        auto& cb = out[info.component_of[u]];
        std::vector<int> gen(cb.vertices.size(), 0);
        gen[local[u]] = 1;
        gen[local[v]] = 1;
        cb.gens.push_back(std::move(gen));
        cb.edge_ids.push_back(i + 1);
    }
    std::erase_if(out, [](const ComponentBasis& cb) { return cb.gens.empty(); });
    return out;
}

namespace {

std::string pack(const std::vector<int>& v) {
    std::string key(v.size(), '\0');
    for (std::size_t i = 0; i < v.size(); ++i) {
        key[i] = static_cast<char>(static_cast<unsigned char>(v[i]));
    }
    return key;
}

std::vector<int> unpack(const std::string& key) {
    std::vector<int> v(key.size());
    for (std::size_t i = 0; i < key.size(); ++i) {
        v[i] = static_cast<unsigned char>(key[i]);
    }
    return v;
}

}  // namespace

SemigroupTable::SemigroupTable(const SimpleGraph& g, int t_max,
                               const Budgets& budgets)
    : n_vertices_(g.n_vertices), t_max_(t_max) {
    if (t_max < 0 || t_max > 255) {
        throw input_error("EnumerationBudgetExceeded",
                          "degree bound must lie in 0..255, got " +
                              std::to_string(t_max));
    }
    isolated_.assign(g.n_vertices + 1, 1);
    for (auto [u, v] : g.edges) isolated_[u] = isolated_[v] = 0;

    std::uint64_t produced = 0;
    for (auto& basis : component_bases(g)) {
        ComponentLevels cl;
        cl.basis = std::move(basis);
        cl.level_keys.resize(t_max + 1);
        cl.level_sets.resize(t_max + 1);
        std::string zero(cl.basis.vertices.size(), '\0');
        cl.level_keys[0].push_back(zero);
        cl.level_sets[0].insert(zero);
        for (int t = 0; t < t_max; ++t) {
            for (const auto& key : cl.level_keys[t]) {
                auto point = unpack(key);
                for (const auto& gen : cl.basis.gens) {
                    if (++produced > budgets.max_points) {
                        throw budget_error(
                            "EnumerationBudgetExceeded",
                            "semigroup table exceeds " +
                                std::to_string(budgets.max_points) +
                                " generated points");
                    }
                    auto next = point;
                    for (std::size_t i = 0; i < next.size(); ++i) {
                        next[i] += gen[i];
                    }
                    auto next_key = pack(next);
                    if (cl.level_sets[t + 1].insert(next_key).second) {
                        cl.level_keys[t + 1].push_back(std::move(next_key));
                    }
                }
            }
        }
        comps_.push_back(std::move(cl));
    }
}

bool SemigroupTable::contains(const LatticeVector& b) const {
    if (static_cast<int>(b.size()) != n_vertices_) {
        throw input_error("DimensionMismatch",
                          "vector length " + std::to_string(b.size()) +
                              " does not match " +
                              std::to_string(n_vertices_) + " vertices");
    }
    for (int v = 1; v <= n_vertices_; ++v) {
        if (b[v - 1] < 0) return false;
        if (isolated_[v] && b[v - 1] != 0) return false;
    }
    for (const auto& cl : comps_) {
        int left_sum = 0, right_sum = 0;
        for (int i : cl.basis.left) left_sum += b[cl.basis.vertices[i] - 1];
        for (int i : cl.basis.right) right_sum += b[cl.basis.vertices[i] - 1];
        if (left_sum != right_sum) return false;
        if (left_sum > t_max_) {
            throw std::logic_error("semigroup table queried beyond its bound");
        }
        std::vector<int> local(cl.basis.vertices.size());
        for (std::size_t i = 0; i < local.size(); ++i) {
            local[i] = b[cl.basis.vertices[i] - 1];
        }
        if (!cl.level_sets[left_sum].count(pack(local))) return false;
    }
    return true;
}

namespace {

void merge_components(
    const std::vector<const std::vector<std::vector<std::string>>*>& levels,
    const std::vector<const std::vector<int>*>& vertex_maps, std::size_t at,
    int remaining, LatticeVector& scratch, std::vector<LatticeVector>& out) {
    if (at == levels.size()) {
        if (remaining == 0) out.push_back(scratch);
        return;
    }
    bool last = at + 1 == levels.size();
    const auto& keys_by_degree = *levels[at];
    const auto& verts = *vertex_maps[at];
    int lo = last ? remaining : 0;
    if (lo >= static_cast<int>(keys_by_degree.size())) return;
    for (int d = lo; d <= remaining && d < static_cast<int>(keys_by_degree.size());
         ++d) {
        for (const auto& key : keys_by_degree[d]) {
            for (std::size_t i = 0; i < verts.size(); ++i) {
                scratch[verts[i] - 1] = static_cast<unsigned char>(key[i]);
            }
            merge_components(levels, vertex_maps, at + 1, remaining - d,
                             scratch, out);
        }
    }
    for (std::size_t i = 0; i < verts.size(); ++i) scratch[verts[i] - 1] = 0;
}

}  // namespace

std::vector<LatticeVector> SemigroupTable::points(int t) const {
    if (t < 0 || t > t_max_) {
        throw std::logic_error("semigroup table queried beyond its bound");
    }
    std::vector<LatticeVector> out;
    if (comps_.empty()) {
        if (t == 0) out.emplace_back(n_vertices_, 0);
        return out;
    }
    std::vector<const std::vector<std::vector<std::string>>*> levels;
    std::vector<const std::vector<int>*> vertex_maps;
    for (const auto& cl : comps_) {
        levels.push_back(&cl.level_keys);
        vertex_maps.push_back(&cl.basis.vertices);
    }
    LatticeVector scratch(n_vertices_, 0);
    merge_components(levels, vertex_maps, 0, t, scratch, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> SemigroupTable::counts() const {
    std::vector<Int> acc(t_max_ + 1, 0);
    acc[0] = 1;
    for (const auto& cl : comps_) {
        std::vector<Int> next(t_max_ + 1, 0);
        for (int a = 0; a <= t_max_; ++a) {
            if (acc[a] == 0) continue;
            for (int d = 0; a + d <= t_max_; ++d) {
                std::size_t sz = cl.level_keys[d].size();
                if (sz) next[a + d] += acc[a] * static_cast<unsigned long>(sz);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

namespace {

// Max flow on a dense capacity matrix (tiny networks only).
long long max_flow(std::vector<std::vector<long long>>& cap, int s, int t) {
    const int n = static_cast<int>(cap.size());
    long long total = 0;
    std::vector<int> prev(n);
    for (;;) {
        std::fill(prev.begin(), prev.end(), -1);
        prev[s] = s;
        std::deque<int> queue{s};
        while (!queue.empty() && prev[t] < 0) {
            int x = queue.front();
            queue.pop_front();
            for (int y = 0; y < n; ++y) {
                if (prev[y] < 0 && cap[x][y] > 0) {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if (prev[t] < 0) return total;
        long long push = -1;
        for (int y = t; y != s; y = prev[y]) {
            long long c = cap[prev[y]][y];
            push = push < 0 ? c : std::min(push, c);
        }
        for (int y = t; y != s; y = prev[y]) {
            cap[prev[y]][y] -= push;
            cap[y][prev[y]] += push;
        }
        total += push;
    }
}

struct DegreeSystem {
    const SimpleGraph& g;
    StructureInfo info;

    explicit DegreeSystem(const SimpleGraph& graph)
        : g(graph), info(analyze_structure(graph)) {
        if (!info.bipartite) {
            throw input_error("NonBipartite",
                              "degree systems require a bipartite graph");
        }
    }

    bool feasible(const LatticeVector& b) const {
        long long side_sum[2] = {0, 0};
        std::vector<char> covered(g.n_vertices + 1, 0);
        for (auto [u, v] : g.edges) covered[u] = covered[v] = 1;
        for (int v = 1; v <= g.n_vertices; ++v) {
            if (b[v - 1] < 0) return false;
            if (!covered[v]) {
                if (b[v - 1] != 0) return false;
                continue;
            }
            side_sum[info.side_of[v]] += b[v - 1];
        }
        if (side_sum[0] != side_sum[1]) return false;
        if (side_sum[0] == 0) return true;

        const int source = 0, sink = g.n_vertices + 1;
        std::vector<std::vector<long long>> cap(
            g.n_vertices + 2, std::vector<long long>(g.n_vertices + 2, 0));
        for (int v = 1; v <= g.n_vertices; ++v) {
            if (!covered[v]) continue;
            if (info.side_of[v] == 0) {
                cap[source][v] = b[v - 1];
            } else {
                cap[v][sink] = b[v - 1];
            }
        }
        for (auto [u, v] : g.edges) {
            int from = info.side_of[u] == 0 ? u : v;
            int to = info.side_of[u] == 0 ? v : u;
            cap[from][to] = side_sum[0];
        }
        return max_flow(cap, source, sink) == side_sum[0];
    }
};

}  // namespace

bool degree_system_feasible(const SimpleGraph& g, const LatticeVector& b) {
    if (static_cast<int>(b.size()) != g.n_vertices) {
        throw input_error("DimensionMismatch",
                          "vector length does not match vertex count");
    }
    return DegreeSystem(g).feasible(b);
}

std::optional<std::vector<int>> semigroup_member(const SimpleGraph& g,
                                                 const LatticeVector& b) {
    if (static_cast<int>(b.size()) != g.n_vertices) {
        throw input_error("DimensionMismatch",
                          "vector length does not match vertex count");
    }
    DegreeSystem sys(g);
    if (!sys.feasible(b)) return std::nullopt;

    // Greedy: maximize the multiplicity of edge 1, then edge 2, ...; each
    // step keeps the residual feasible, and a residual that admits only
    // decompositions avoiding all processed edges must be zero at the end.
    LatticeVector rest = b;
    std::vector<int> multiset;
    for (int i = 0; i < g.n_edges(); ++i) {
        auto [u, v] = g.edges[i];
        while (rest[u - 1] > 0 && rest[v - 1] > 0) {
            LatticeVector next = rest;
            --next[u - 1];
            --next[v - 1];
            if (!sys.feasible(next)) break;
            rest = std::move(next);
            multiset.push_back(i + 1);
        }
    }
    for (int v = 1; v <= g.n_vertices; ++v) {
        if (rest[v - 1] != 0) {
            throw anomaly_error("AssertionFailure",
                                "greedy decomposition left a nonzero residual");
        }
    }
    return multiset;
}

}  // namespace edgering
