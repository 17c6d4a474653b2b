#pragma once

#include <vector>

#include "edgering/graph.hpp"
#include "edgering/numeric.hpp"
#include "edgering/polytope.hpp"

namespace edgering {

// A hand-constructed point in the relative interior of a dilate of the
// family's edge polytope, together with explicit positive vertex weights
// proving the containment. With dim + 1 - dilation >= q this pins the
// Ehrhart degree of the family member from below.
struct FamilyCertificate {
    FamilySpec spec;
    SimpleGraph graph;
    LatticeVector point;            // the interior lattice point
    int dilation = 0;               // dilate in which the point is interior
    std::vector<Rat> weights;       // weights[i] on rho(edge i); all > 0
};

FamilyCertificate family_certificate(const FamilySpec& spec);

}  // namespace edgering
