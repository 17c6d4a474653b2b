#include "edgering/numeric.hpp"

#include <cstdlib>
#include <utility>

namespace edgering {

Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

int rank_destructive(std::vector<std::vector<Int>>& m) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    Int prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        // Pick the nonzero pivot of smallest magnitude to slow entry growth.
        int pivot = -1;
        for (int i = rank; i < rows; ++i) {
            if (m[i][col] != 0 &&
                (pivot < 0 || mpz_cmpabs(m[i][col].get_mpz_t(),
                                         m[pivot][col].get_mpz_t()) < 0)) {
                pivot = i;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                Int t = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
                // Bareiss: division by the previous pivot is exact.
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

int integer_rank(std::vector<std::vector<Int>> m) { return rank_destructive(m); }

}  // namespace edgering
