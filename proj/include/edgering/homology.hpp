#pragma once

#include <cstdint>
#include <vector>

#include "edgering/numeric.hpp"

namespace edgering {

// Abstract simplicial complex on ground set {0, ..., ground_size-1}; faces
// are bitmasks and include the empty face whenever the complex is nonvoid.
// The face list is kept sorted and duplicate-free.
struct FaceComplex {
    int ground_size = 0;
    std::vector<std::uint32_t> faces;
};

// True when some ground element extends every face, i.e. the complex is a
// cone (hence contractible, so all reduced homology vanishes).
bool is_cone(const FaceComplex& k);

// Reduced Euler characteristic: sum over all faces, the empty one included,
// of (-1)^(|F|-1). Equals the alternating sum of reduced homology dimensions.
Int reduced_euler_characteristic(const FaceComplex& k);

// Rational reduced homology dimensions, returned as a list indexed by
// homological degree shifted by one: entry 0 is dim H~_{-1}, entry i+1 is
// dim H~_i, up to max_i. Boundary ranks are computed exactly over the
// integers, which yields rational Betti numbers.
std::vector<int> reduced_homology_dims(const FaceComplex& k, int max_i);

}  // namespace edgering
