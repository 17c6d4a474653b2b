#include "edgering/homology.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "edgering/errors.hpp"

namespace edgering {

bool is_cone(const FaceComplex& k) {
    if (k.faces.empty()) return false;
    std::unordered_set<std::uint32_t> faces(k.faces.begin(), k.faces.end());
    for (int v = 0; v < k.ground_size; ++v) {
        std::uint32_t bit = 1u << v;
        if (!faces.count(bit)) continue;
        bool apex = true;
        for (std::uint32_t f : k.faces) {
            if (!faces.count(f | bit)) {
                apex = false;
                break;
            }
        }
        if (apex) return true;
    }
    return false;
}

Int reduced_euler_characteristic(const FaceComplex& k) {
    Int chi = 0;
    for (std::uint32_t f : k.faces) {
        if (std::popcount(f) % 2) {
            chi += 1;
        } else {
            chi -= 1;
        }
    }
    return chi;
}

std::vector<int> reduced_homology_dims(const FaceComplex& k, int max_i) {
    if (k.faces.empty()) {
        throw input_error("EmptyPolytope", "homology of the void complex");
    }
    const int top_card = max_i + 1;

    // Faces grouped by cardinality, with positions for matrix indexing.
    std::vector<std::vector<std::uint32_t>> by_card(top_card + 2);
    std::vector<std::unordered_map<std::uint32_t, int>> index(top_card + 2);
    for (std::uint32_t f : k.faces) {
        int c = std::popcount(f);
        if (c <= top_card + 1) {
            index[c].emplace(f, static_cast<int>(by_card[c].size()));
            by_card[c].push_back(f);
        }
    }

    // rank_del[c] = rank of the boundary map from cardinality c to c-1.
    std::vector<int> rank_del(top_card + 3, 0);
    for (int c = 1; c <= top_card + 1; ++c) {
        if (by_card[c].empty() || by_card[c - 1].empty()) continue;
        std::vector<std::vector<Int>> mat(
            by_card[c - 1].size(), std::vector<Int>(by_card[c].size(), Int(0)));
        for (std::size_t col = 0; col < by_card[c].size(); ++col) {
            std::uint32_t f = by_card[c][col];
            int sign = 1;
            for (std::uint32_t rest = f; rest; rest &= rest - 1) {
                std::uint32_t bit = rest & (~rest + 1);
                auto it = index[c - 1].find(f ^ bit);
                // Subsets of faces are faces, so the lookup always succeeds.
                mat[it->second][col] = sign;
                sign = -sign;
            }
        }
        rank_del[c] = rank_destructive(mat);
    }

    std::vector<int> dims(top_card + 1, 0);
    for (int c = 0; c <= top_card; ++c) {
        dims[c] = static_cast<int>(by_card[c].size()) - rank_del[c] -
                  rank_del[c + 1];
    }
    return dims;
}

}  // namespace edgering
