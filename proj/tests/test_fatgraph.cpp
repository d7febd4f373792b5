#include <algorithm>
#include <functional>
#include <numeric>

#include "doctest.h"
#include "hurwitz/combinatorics.hpp"
#include "hurwitz/fatgraph.hpp"

using namespace hurwitz;

namespace {

// Reference count that enumerates both rotation systems outright: all
// (tau0, tau1) on d darts with tau1 a fixed-point-free involution, counting
// boundary-label assignments and dividing by d!.  Independent of the
// fixed-boundary-permutation trick used by the library.
Rat naive_belyi(int g, const MuTuple& mu, FatgraphMode mode) {
  int d = static_cast<int>(mu_sum(mu));
  if (d % 2 != 0) return 0;
  Int labeled = 0;
  std::vector<int> t0(d);
  std::iota(t0.begin(), t0.end(), 0);
  do {
    Permutation tau0{std::vector<int>(t0)};
    // enumerate involutions
    std::vector<int> t1(d, -1);
    std::function<void()> rec = [&]() {
      int s = -1;
      for (int i = 0; i < d; ++i)
        if (t1[i] < 0) {
          s = i;
          break;
        }
      if (s < 0) {
        Fatgraph fg{tau0, Permutation{std::vector<int>(t1)}};
        if (!fg.connected()) return;
        if (fg.genus() != g) return;
        if (mode == FatgraphMode::Pruned && !fg.pruned()) return;
        if (mode == FatgraphMode::Valence3Plus && !fg.valence3plus()) return;
        // boundary-label assignments respecting the lengths
        std::vector<long> lengths = fg.boundary_lengths();
        if (lengths.size() != mu.size()) return;
        std::vector<int> order(lengths.size());
        std::iota(order.begin(), order.end(), 0);
        do {
          bool ok = true;
          for (size_t i = 0; i < mu.size(); ++i)
            if (lengths[order[i]] != mu[i]) ok = false;
          if (ok) ++labeled;
        } while (std::next_permutation(order.begin(), order.end()));
        return;
      }
      for (int t = s + 1; t < d; ++t) {
        if (t1[t] >= 0) continue;
        t1[s] = t;
        t1[t] = s;
        rec();
        t1[s] = -1;
        t1[t] = -1;
      }
    };
    rec();
  } while (std::next_permutation(t0.begin(), t0.end()));
  return make_rat(labeled, factorial(d));
}

}  // namespace

TEST_CASE("fatgraph counts: stated values") {
  Budget budget;
  CHECK(enumerate_fatgraphs(0, {2}, FatgraphMode::All, budget).weighted ==
        make_rat(1, 2));
  CHECK(enumerate_fatgraphs(1, {4}, FatgraphMode::All, budget).weighted ==
        make_rat(1, 4));
  CHECK(enumerate_fatgraphs(1, {2}, FatgraphMode::Pruned, budget).weighted == 0);
  CHECK(enumerate_fatgraphs(1, {4}, FatgraphMode::Pruned, budget).weighted ==
        make_rat(1, 4));
  CHECK(enumerate_fatgraphs(0, {3}, FatgraphMode::All, budget).weighted == 0);
}

TEST_CASE("fatgraph counts agree with the two-rotation reference") {
  Budget budget;
  const std::vector<std::pair<int, MuTuple>> cases = {
      {0, {2}},    {0, {4}},    {1, {4}},    {0, {2, 2}},
      {0, {3, 1}}, {0, {1, 1, 2}}, {1, {6}},
  };
  for (const auto& [g, mu] : cases) {
    for (FatgraphMode mode :
         {FatgraphMode::All, FatgraphMode::Pruned, FatgraphMode::Valence3Plus})
      CHECK(enumerate_fatgraphs(g, mu, mode, budget).weighted ==
            naive_belyi(g, mu, mode));
  }
}

TEST_CASE("graph listing: automorphisms and class weights") {
  Budget budget;
  for (const auto& [g, mu] : std::vector<std::pair<int, MuTuple>>{
           {1, {4}}, {0, {2, 2}}, {0, {4}}, {1, {6}}}) {
    FatgraphCount out =
        enumerate_fatgraphs(g, mu, FatgraphMode::All, budget, true);
    Rat from_classes = 0;
    for (const auto& cls : out.classes) {
      CHECK(cls.aut > 0);
      CHECK(cls.genus == g);
      // representative is a genuine fatgraph of the right type
      Fatgraph fg = cls.representative;
      CHECK(fg.connected());
      CHECK(fg.genus() == g);
      std::vector<long> lengths = fg.boundary_lengths();
      std::sort(lengths.begin(), lengths.end());
      MuTuple sorted_mu = mu;
      std::sort(sorted_mu.begin(), sorted_mu.end());
      CHECK(lengths == sorted_mu);
      from_classes += make_rat(1, cls.aut);
    }
    CHECK(from_classes == out.weighted);
  }
  SUBCASE("the one-vertex genus-1 graph has automorphism group of order 4") {
    FatgraphCount out =
        enumerate_fatgraphs(1, {4}, FatgraphMode::All, budget, true);
    REQUIRE(out.classes.size() == 1);
    CHECK(out.classes[0].aut == 4);
  }
  SUBCASE("weighted count denominators divide |mu|!") {
    for (const auto& [g, mu] : std::vector<std::pair<int, MuTuple>>{
             {0, {2, 2}}, {1, {4}}, {0, {1, 1, 4}}, {1, {3, 3}}}) {
      Rat w = enumerate_fatgraphs(g, mu, FatgraphMode::All, budget).weighted;
      if (w == 0) continue;
      Rat scaled = w * factorial(mu_sum(mu));
      CHECK(scaled.get_den() == 1);
    }
  }
}

TEST_CASE("lattice point counts") {
  Budget budget;
  CHECK(lattice_count(1, {2}, budget) == 0);
  CHECK(lattice_count(1, {4}, budget) == make_rat(1, 4));
  SUBCASE("(0,3) is the parity indicator") {
    for (long a = 1; a <= 5; ++a)
      for (long b = 1; b <= 5; ++b)
        for (long c = 1; c <= 5; ++c) {
          Rat expected = (a + b + c) % 2 == 0 ? 1 : 0;
          CHECK(lattice_count(0, {a, b, c}, budget) == expected);
        }
  }
  SUBCASE("matches the pruned enumeration on mixed profiles") {
    for (const auto& [g, mu] : std::vector<std::pair<int, MuTuple>>{
             {0, {2, 2, 4}}, {0, {1, 2, 3}}, {1, {6}}, {1, {8}}, {1, {2, 4}}}) {
      CHECK(lattice_count(g, mu, budget) ==
            enumerate_fatgraphs(g, mu, FatgraphMode::Pruned, budget).weighted);
    }
  }
}

TEST_CASE("lattice quasi-polynomials and euler characteristics") {
  Budget budget;
  SUBCASE("(1,1) even branch") {
    Poly branch = lattice_count_branch(1, 1, {0}, budget);
    Poly mu = Poly::var(1, 0);
    CHECK(branch == (mu * mu - Poly::constant(1, 4)) * make_rat(1, 48));
  }
  SUBCASE("(1,1) odd branch vanishes") {
    CHECK(lattice_count_branch(1, 1, {1}, budget).is_zero());
  }
  SUBCASE("(1,2) branches have the claimed degree") {
    Poly even = lattice_count_branch(1, 2, {0, 0}, budget);
    CHECK(even.total_degree() <= 6 * 1 - 6 + 2 * 2);
    CHECK(even.eval_at({2, 2}) == lattice_count(1, {2, 2}, budget));
  }
  CHECK(euler_characteristic(1, 1, budget) == make_rat(-1, 12));
  CHECK(euler_characteristic(0, 3, budget) == 1);
  CHECK(euler_characteristic(1, 2, budget) == make_rat(1, 12));
  CHECK(euler_characteristic(0, 4, budget) == -1);
}
