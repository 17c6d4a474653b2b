#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgering/betti.hpp"
#include "edgering/budgets.hpp"
#include "edgering/graph.hpp"

namespace edgering {

enum class WitnessKind { DisjointCycles, OneCommonVertex, EvenEar, OddEar };

const char* witness_kind_name(WitnessKind kind);

// A subgraph certifying deg(P) >= q for the host graph: either two shortest
// even cycles in special position, or a shortest even cycle plus an ear.
// Vertex labels are the host's. The (q,k,m) parameters satisfy the
// hypotheses of the matching family's degree bound.
struct Witness {
    WitnessKind kind = WitnessKind::DisjointCycles;
    SimpleGraph subgraph;
    std::vector<Cycle> cycles;  // one cycle for ear kinds, two otherwise
    std::vector<int> ear_path;  // vertex sequence, empty for cycle-pair kinds
    int q = 0;
    int k = 0;
    int m = 0;
};

Witness extract_witness(const SimpleGraph& g, int q,
                        const Budgets& budgets = Budgets{});

struct ClassificationReport {
    bool forest = false;
    std::optional<int> q;        // even_girth / 2
    bool theorem_applies = false;  // q >= 3
    int cycle_rank = 0;
    // Combinatorial prediction: for q >= 3, linear iff the ideal is
    // principal, i.e. exactly one cycle. Vacuously true on forests.
    bool predicted_linear = false;
    std::optional<bool> verified_linear;    // from the Betti window
    std::optional<bool> verified_complete;  // window covers all entries
    std::optional<int> reg_lower;
    bool is_hypersurface = false;
    std::optional<int> deg;
    std::optional<int> codeg;
    std::optional<Witness> witness;  // present when predicted non-linear, q >= 3
    std::optional<BettiTable> betti;
    // A populated list means prediction and verification disagree somewhere;
    // reported rather than thrown.
    std::vector<std::string> anomalies;
};

// Requires a connected bipartite graph. Forests short-circuit; otherwise the
// report carries the girth-based prediction, exact polytope degree data, the
// witness for predicted-nonlinear inputs and, when verify is set, the Betti
// verification over a provably complete window.
ClassificationReport classify(const SimpleGraph& g, bool verify,
                              const Budgets& budgets = Budgets{});

// All connected bipartite graphs on exactly n labeled-irrelevant vertices,
// one per isomorphism class. Deterministic order and labeling: left side
// 1..a, right side a+1..n, classes keyed by the minimal biadjacency form.
std::vector<SimpleGraph> connected_bipartite_graphs(int n);

struct ScanReport {
    int n_max = 0;
    int verify_budget = 0;
    std::uint64_t total_graphs = 0;
    std::uint64_t forests = 0;
    std::uint64_t girth4 = 0;       // q = 2, outside the theorem
    std::uint64_t girth6_plus = 0;  // q >= 3
    std::uint64_t verified = 0;     // q >= 3 with a complete Betti table
    std::uint64_t verified_linear = 0;
    std::uint64_t hypersurfaces = 0;  // among q >= 3
    std::uint64_t rank1 = 0;          // cycle rank 1 among q >= 3
    std::uint64_t rank1_verified_linear = 0;
    std::uint64_t rank1_unverified = 0;
    // Graphs (text format) with a verified q-linear resolution, q >= 3, that
    // are not hypersurfaces. Empty is the expected outcome.
    std::vector<std::string> counterexamples;
    std::vector<std::string> anomalies;
};

// Exhaustive check over all connected bipartite graphs with at most n_max
// vertices: every verified q-linear resolution (q >= 3) must belong to a
// hypersurface. Graphs with more than verify_budget edges skip verification.
ScanReport scan(int n_max, int verify_budget,
                const Budgets& budgets = Budgets{});

}  // namespace edgering
