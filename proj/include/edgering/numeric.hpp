#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace edgering {

// All counting and linear algebra is exact. Int is an arbitrary-precision
// integer, Rat an arbitrary-precision rational kept in lowest terms by GMP.
using Int = mpz_class;
using Rat = mpq_class;

// Binomial coefficient, zero for k < 0 or k > n.
Int binomial(long n, long k);

// Rank of an integer matrix, computed by fraction-free (Bareiss) elimination.
// The input is consumed as scratch space.
int rank_destructive(std::vector<std::vector<Int>>& m);

// Convenience overload for small matrices given by value.
int integer_rank(std::vector<std::vector<Int>> m);

}  // namespace edgering
