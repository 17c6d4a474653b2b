#pragma once

#include <cstdint>

namespace edgering {

// Hard caps for the exhaustive parts of the toolkit. Exceeding a cap raises
// a Budget error rather than silently truncating results.
struct Budgets {
    // Maximum number of even cycles enumerated per graph.
    std::uint64_t max_cycles = 1'000'000;
    // Maximum number of candidate lattice vectors touched while counting
    // points, searching for interior points, or building semigroup tables.
    std::uint64_t max_points = 10'000'000;
    // Largest edge count admitted by the Betti number engine (the divisor
    // complexes have up to 2^edges faces).
    int max_betti_edges = 14;
    // Largest vertex count admitted by the exhaustive graph scan.
    int max_scan_vertices = 9;
};

}  // namespace edgering
