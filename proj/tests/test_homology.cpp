#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>

#include "edgering/errors.hpp"
#include "edgering/homology.hpp"

using namespace edgering;

namespace {

// Closes a generating set of faces downward and sorts, so tests can state
// complexes by their facets only.
FaceComplex make_complex(int ground, std::vector<std::uint32_t> facets) {
    FaceComplex k;
    k.ground_size = ground;
    std::vector<std::uint32_t> faces;
    for (std::uint32_t f : facets) {
        for (std::uint32_t sub = f;; sub = (sub - 1) & f) {
            faces.push_back(sub);
            if (sub == 0) break;
        }
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    k.faces = std::move(faces);
    return k;
}

int total_homology_rank(const std::vector<int>& dims) {
    int acc = 0;
    for (int d : dims) acc += d;
    return acc;
}

}  // namespace

TEST_CASE("hollow triangle is a circle") {
    FaceComplex k = make_complex(3, {0b011, 0b101, 0b110});
    auto dims = reduced_homology_dims(k, 2);
    CHECK(dims[0] == 0);  // H~_{-1}
    CHECK(dims[1] == 0);  // H~_0
    CHECK(dims[2] == 1);  // H~_1
    CHECK_FALSE(is_cone(k));
    CHECK(reduced_euler_characteristic(k) == -1);
}

TEST_CASE("full simplices are contractible and cones") {
    for (int n = 1; n <= 4; ++n) {
        FaceComplex k = make_complex(n, {(1u << n) - 1});
        CHECK(is_cone(k));
        auto dims = reduced_homology_dims(k, n);
        CHECK(total_homology_rank(dims) == 0);
        CHECK(reduced_euler_characteristic(k) == 0);
    }
}

TEST_CASE("two isolated points") {
    FaceComplex k = make_complex(2, {0b01, 0b10});
    auto dims = reduced_homology_dims(k, 1);
    CHECK(dims[0] == 0);
    CHECK(dims[1] == 1);  // H~_0 counts components minus one
    CHECK_FALSE(is_cone(k));
    CHECK(reduced_euler_characteristic(k) == 1);
}

TEST_CASE("hollow square is a circle") {
    FaceComplex k = make_complex(4, {0b0011, 0b0110, 0b1100, 0b1001});
    auto dims = reduced_homology_dims(k, 2);
    CHECK(dims[1] == 0);
    CHECK(dims[2] == 1);
}

TEST_CASE("two disjoint segments") {
    FaceComplex k = make_complex(4, {0b0011, 0b1100});
    auto dims = reduced_homology_dims(k, 2);
    CHECK(dims[1] == 1);
    CHECK(dims[2] == 0);
}

TEST_CASE("hollow tetrahedron is a 2-sphere") {
    FaceComplex k = make_complex(4, {0b0111, 0b1011, 0b1101, 0b1110});
    auto dims = reduced_homology_dims(k, 3);
    CHECK(dims[1] == 0);
    CHECK(dims[2] == 0);
    CHECK(dims[3] == 1);
    CHECK(reduced_euler_characteristic(k) == 1);
}

TEST_CASE("empty-face-only complex") {
    FaceComplex k;
    k.ground_size = 3;
    k.faces = {0};
    auto dims = reduced_homology_dims(k, 1);
    CHECK(dims[0] == 1);  // H~_{-1} of the empty complex
    CHECK(reduced_euler_characteristic(k) == -1);
    CHECK_FALSE(is_cone(k));
}

TEST_CASE("void complex is rejected") {
    FaceComplex k;
    k.ground_size = 2;
    bool threw = false;
    try {
        reduced_homology_dims(k, 1);
    } catch (const Error& e) {
        threw = e.code() == "EmptyPolytope";
    }
    CHECK(threw);
    CHECK(reduced_euler_characteristic(k) == 0);
}

TEST_CASE("cone detection requires a universal apex") {
    // Apex 2 extends both segments.
    FaceComplex cone = make_complex(3, {0b101, 0b110});
    CHECK(is_cone(cone));
    // A path of two edges plus an isolated vertex has no apex.
    FaceComplex path_plus = make_complex(4, {0b0011, 0b0110, 0b1000});
    CHECK_FALSE(is_cone(path_plus));
}

TEST_CASE("euler characteristic equals the alternating homology sum") {
    std::vector<FaceComplex> zoo = {
        make_complex(3, {0b011, 0b101, 0b110}),
        make_complex(4, {0b0011, 0b1100}),
        make_complex(4, {0b0111, 0b1011, 0b1101, 0b1110}),
        make_complex(4, {0b1111}),
        make_complex(5, {0b00111, 0b11001, 0b01010}),
    };
    for (const auto& k : zoo) {
        int top = 0;
        for (std::uint32_t f : k.faces) {
            top = std::max(top, static_cast<int>(std::popcount(f)));
        }
        auto dims = reduced_homology_dims(k, top);
        Int alt = 0;
        for (std::size_t c = 0; c < dims.size(); ++c) {
            if (c % 2) {
                alt -= dims[c];
            } else {
                alt += dims[c];
            }
        }
        // chi~ = sum (-1)^(|F|-1) = sum (-1)^(c-1) dim H~_{c-1}.
        CHECK(reduced_euler_characteristic(k) == -alt);
    }
}
