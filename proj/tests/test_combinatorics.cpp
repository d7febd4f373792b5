#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "hurwitz/combinatorics.hpp"

using namespace hurwitz;

namespace {

// brute-force ascent statistic over all permutations of {1..m}
Int eulerian_by_enumeration(int m, int k) {
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 1);
  Int count = 0;
  do {
    int ascents = 0;
    for (int i = 0; i + 1 < m; ++i) ascents += perm[i] < perm[i + 1];
    if (ascents == k) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// brute-force set-partition count: partitions of an n-set into k blocks
Int stirling_by_enumeration(int n, int k) {
  // assign each element a block id, normalised so new blocks appear in order
  Int count = 0;
  std::vector<int> block(n, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      if (used == k) ++count;
      return;
    }
    for (int b = 0; b <= used && b < k; ++b) {
      block[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return count;
}

}  // namespace

TEST_CASE("factorials, double factorials, binomials") {
  CHECK(factorial(5) == 120);
  CHECK(factorial(0) == 1);
  CHECK(double_factorial(7) == 105);  // 1*3*5*7
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(8) == 384);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(10, 0) == 1);
  CHECK_THROWS_AS(factorial(-1), DomainError);
  CHECK_THROWS_AS(double_factorial(-3), DomainError);
  CHECK_THROWS_AS(binomial(3, 4), DomainError);
}

TEST_CASE("eulerian numbers") {
  CHECK(eulerian(1, 0) == 1);
  CHECK(eulerian(3, 1) == 4);   // enumerated over S_3
  CHECK(eulerian(4, 1) == 11);  // enumerated over S_4
  CHECK(eulerian(5, -1) == 0);
  CHECK(eulerian(5, 5) == 0);

  for (int m = 1; m <= 6; ++m)
    for (int k = 0; k < m; ++k)
      CHECK(eulerian(m, k) == eulerian_by_enumeration(m, k));

  SUBCASE("row sums are m!") {
    for (int m = 1; m <= 10; ++m) {
      Int total = 0;
      for (int k = 0; k < m; ++k) total += eulerian(m, k);
      CHECK(total == factorial(m));
    }
  }
  SUBCASE("symmetry A(m,k) = A(m,m-1-k)") {
    for (int m = 1; m <= 10; ++m)
      for (int k = 0; k < m; ++k) CHECK(eulerian(m, k) == eulerian(m, m - 1 - k));
  }
}

TEST_CASE("stirling numbers of the second kind") {
  CHECK(stirling2(3, 3) == 1);
  CHECK(stirling2(3, 2) == 3);  // enumerated set partitions
  CHECK(stirling2(4, 2) == 7);  // enumerated set partitions
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(5, 0) == 0);
  CHECK(stirling2(4, 6) == 0);

  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(stirling2(n, k) == stirling_by_enumeration(n, k));

  SUBCASE("recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1)") {
    for (int n = 1; n <= 20; ++n)
      for (int k = 1; k <= n; ++k)
        CHECK(stirling2(n, k) ==
              Int(Int(k) * stirling2(n - 1, k) + stirling2(n - 1, k - 1)));
  }
}
