#pragma once

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Exact special numbers.  Eulerian and Stirling numbers are computed by
// their standard recurrences with memo tables (no alternating closed sums).
// Tables are grown under a mutex; entries are immutable once published.

Int factorial(long n);
// (-1)!! = 0!! = 1 by convention.
Int double_factorial(long n);
Int binomial(long n, long k);

// Number of permutations of {1..m} with exactly k ascents; 0 outside
// 0 <= k <= m-1.
Int eulerian(long m, long k);

// Stirling number of the second kind S(n, k).
Int stirling2(long n, long k);

}  // namespace hurwitz
