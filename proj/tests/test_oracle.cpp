#include <algorithm>
#include <functional>
#include <vector>

#include "doctest.h"
#include "hurwitz/combinatorics.hpp"
#include "hurwitz/oracle.hpp"

using namespace hurwitz;

namespace {

// Plain reference enumerator with no pruning or cleverness: walks every
// transposition tuple with an odometer and applies the definitions
// literally.  Only usable for tiny instances; it exists to cross-validate
// the optimised search.
struct NaiveCounts {
  Int unpruned = 0;
  Int pruned = 0;
};

NaiveCounts naive_count(const Permutation& sigma0, const Permutation& target,
                        long m, const std::vector<int>& colour, int ncolours) {
  int d = target.degree();
  std::vector<std::pair<int, int>> transpositions;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) transpositions.emplace_back(i, j);
  NaiveCounts out;
  std::vector<size_t> pick(m, 0);
  while (true) {
    // product sigma0 sigma_1 ... sigma_m applied right to left
    Permutation prod = sigma0;
    for (long t = 0; t < m; ++t) {
      auto [i, j] = transpositions[pick[t]];
      prod = prod.compose(Permutation::from_cycles(d, {{i, j}}));
    }
    if (prod == target) {
      // transitivity of the group generated by all factors
      std::vector<int> comp(d);
      for (int x = 0; x < d; ++x) comp[x] = x;
      std::function<int(int)> find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
      };
      auto join = [&](int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) comp[x] = y;
      };
      for (int x = 0; x < d; ++x) join(x, sigma0[x]);
      for (long t = 0; t < m; ++t)
        join(transpositions[pick[t]].first, transpositions[pick[t]].second);
      bool transitive = true;
      for (int x = 0; x < d; ++x)
        if (find(x) != find(0)) transitive = false;
      if (transitive) {
        ++out.unpruned;
        std::vector<long> incidence(ncolours, 0);
        for (long t = 0; t < m; ++t) {
          ++incidence[colour[transpositions[pick[t]].first]];
          ++incidence[colour[transpositions[pick[t]].second]];
        }
        bool ok = true;
        for (long inc : incidence)
          if (inc < 2) ok = false;
        if (ok) ++out.pruned;
      }
    }
    // odometer
    long t = 0;
    while (t < m && ++pick[t] == transpositions.size()) pick[t++] = 0;
    if (t == m || m == 0) break;
  }
  return out;
}

NaiveCounts naive_simple(int g, const MuTuple& mu) {
  int d = static_cast<int>(mu_sum(mu));
  std::vector<int> colour(d);
  for (int i = 0; i < d; ++i) colour[i] = i;
  return naive_count(Permutation(d), representative_of(mu),
                     transposition_count(g, mu), colour, d);
}

}  // namespace

TEST_CASE("simple factorisation counts: stated values") {
  CHECK(count_simple(0, {1}, false) == 1);  // empty factorisation in S_1
  CHECK(count_simple(0, {3}, false) == 3);
  CHECK(count_simple(1, {2}, true) == 1);  // ((12),(12),(12))
  for (long mu1 = 1; mu1 <= 5; ++mu1)
    CHECK(count_simple(0, {mu1}, true) == 0);  // trees always have leaves
}

TEST_CASE("optimised search agrees with the naive odometer") {
  // every case the odometer can touch in reasonable time
  const std::vector<std::pair<int, MuTuple>> cases = {
      {0, {1}},    {0, {2}},    {0, {3}},    {0, {1, 1}}, {0, {2, 1}},
      {1, {2}},    {0, {2, 2}}, {0, {1, 1, 1}}, {1, {1, 1}},
  };
  for (const auto& [g, mu] : cases) {
    if (transposition_count(g, mu) > 4) continue;
    NaiveCounts naive = naive_simple(g, mu);
    CHECK(count_simple(g, mu, false) == naive.unpruned);
    CHECK(count_simple(g, mu, true) == naive.pruned);
  }
}

TEST_CASE("orbifold search agrees with the naive odometer") {
  const std::vector<std::tuple<long, int, MuTuple>> cases = {
      {2, 0, {2}},   {2, 0, {1, 1}}, {2, 1, {2}},
      {2, 0, {2, 2}}, {2, 0, {3, 1}}, {3, 0, {2, 1}},
  };
  for (const auto& [a, g, mu] : cases) {
    long s = mu_sum(mu);
    if (s % a != 0) {
      CHECK(count_orbifold(a, g, mu, false) == 0);
      continue;
    }
    long m = transposition_count_orbifold(a, g, mu);
    if (m > 3) continue;
    int d = static_cast<int>(s);
    Permutation target = representative_of(mu);
    NaiveCounts naive;
    // iterate sigma0 of shape (a,...,a) naively: all permutations, filter
    std::vector<int> perm(d);
    for (int i = 0; i < d; ++i) perm[i] = i;
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end());
    do {
      Permutation sigma0(std::vector<int>(idx.begin(), idx.end()));
      auto type = sigma0.cycle_type();
      bool uniform = true;
      for (long len : type) uniform = uniform && len == a;
      if (!uniform) continue;
      auto cycles = sigma0.cycles();
      std::vector<int> colour(d);
      for (size_t c = 0; c < cycles.size(); ++c)
        for (int x : cycles[c]) colour[x] = static_cast<int>(c);
      NaiveCounts part = naive_count(sigma0, target, m, colour,
                                     static_cast<int>(cycles.size()));
      naive.unpruned += part.unpruned;
      naive.pruned += part.pruned;
    } while (std::next_permutation(idx.begin(), idx.end()));
    CHECK(count_orbifold(a, g, mu, false) == naive.unpruned);
    CHECK(count_orbifold(a, g, mu, true) == naive.pruned);
  }
}

TEST_CASE("orbifold counts: stated values and divisibility") {
  CHECK(count_orbifold(2, 0, {2}, false) == 1);  // sigma0 = T, m = 0
  CHECK(count_orbifold(2, 0, {2}, true) == 0);   // colour in zero factors
  CHECK(count_orbifold(2, 0, {3}, false) == 0);  // 2 does not divide 3
  // a transposition inside one colour contributes twice to its degree
  CHECK(count_orbifold(2, 0, {1, 1}, true) == 1);
  SUBCASE("a = 1 reduces to the simple count") {
    const std::vector<std::pair<int, MuTuple>> cases = {
        {0, {3}}, {0, {2, 1}}, {1, {2}}, {0, {2, 2}}, {1, {1, 1, 1}}};
    for (const auto& [g, mu] : cases) {
      CHECK(count_orbifold(1, g, mu, false) == count_simple(g, mu, false));
      CHECK(count_orbifold(1, g, mu, true) == count_simple(g, mu, true));
    }
  }
}

TEST_CASE("profile symmetry and representative independence") {
  const MuTuple mu = {2, 1, 2};
  MuTuple perm = mu;
  std::sort(perm.begin(), perm.end());
  Int reference = count_simple(0, mu, false);
  Int reference_pruned = count_simple(0, mu, true);
  do {
    CHECK(count_simple(0, perm, false) == reference);
    CHECK(count_simple(0, perm, true) == reference_pruned);
  } while (std::next_permutation(perm.begin(), perm.end()));

  SUBCASE("a different representative of the same cycle type") {
    // cycles written with scrambled sheet labels
    Permutation scrambled =
        Permutation::from_cycles(5, {{4, 2}, {3}, {1, 0}});
    long m = transposition_count(0, mu);
    CHECK(count_simple_for(scrambled, m, false) == reference);
    CHECK(count_simple_for(scrambled, m, true) == reference_pruned);
  }
}

TEST_CASE("classical one-part counts") {
  // transitive factorisations of a d-cycle into d-1 transpositions
  for (long d = 1; d <= 5; ++d) {
    Int expected = 1;
    for (long i = 0; i < d - 2; ++i) expected *= d;  // d^(d-2)
    CHECK(count_simple(0, {d}, false) == expected);
  }
}

TEST_CASE("transitivity filter cross-check on one-cycle profiles") {
  // for mu = (d) every product equal to the full cycle is automatically
  // transitive, so the filter must not reject anything
  for (long d = 2; d <= 4; ++d) {
    NaiveCounts naive = naive_simple(0, {d});
    CHECK(count_simple(0, {d}, false) == naive.unpruned);
  }
}

TEST_CASE("cycle Hurwitz counts") {
  CHECK(count_cycle(0, {2, 2, 1}) == 1);
  CHECK(count_cycle(0, {3, 2, 2}) == 1);
  CHECK(count_cycle(0, {3, 1, 1}) == 0);  // entry exceeds the degree
  SUBCASE("totally ramified pairs with a marked point") {
    for (long d = 2; d <= 4; ++d) CHECK(count_cycle(0, {d, d, 1}) == 1);
  }
  SUBCASE("genus-0 triples always count 1 when admissible") {
    for (long a = 2; a <= 5; ++a)
      for (long b = 2; b <= a; ++b)
        for (long c = 2; c <= b; ++c) {
          long twice_d = a + b + c - 3 + 2;
          if (twice_d % 2 != 0) continue;
          long d = twice_d / 2;
          if (a > d) continue;
          CHECK(count_cycle(0, {a, b, c}) == 1);
        }
  }
}

TEST_CASE("budget refusal and node abort") {
  Budget tiny{10};
  CHECK_THROWS_AS(count_simple(0, {4, 3}, false, tiny), BudgetError);
  Budget nodes_only{50, false};  // skip the formula, bound explored nodes
  CHECK_THROWS_AS(count_simple(0, {4, 3}, false, nodes_only), BudgetError);
  // small instances pass under the node-only regime
  CHECK(count_simple(0, {3}, false, Budget{100000, false}) == 3);
}
