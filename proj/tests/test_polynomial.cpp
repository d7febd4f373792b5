#include <random>

#include "doctest.h"
#include "hurwitz/combinatorics.hpp"
#include "hurwitz/polynomial.hpp"
#include "hurwitz/polyops.hpp"

using namespace hurwitz;

TEST_CASE("polynomial arithmetic and evaluation") {
  Poly x = Poly::var(2, 0), y = Poly::var(2, 1);
  Poly p = x * x * y + x * make_rat(3, 2) - Poly::constant(2, 1);
  CHECK(p.total_degree() == 3);
  CHECK(p.degree_in(0) == 2);
  CHECK(p.degree_in(1) == 1);
  CHECK(p.coeff({2, 1}) == 1);
  CHECK(p.coeff({1, 0}) == make_rat(3, 2));
  CHECK(p.eval_at({2, 3}) == Rat(12 + 3 - 1));
  CHECK((p - p).is_zero());
  CHECK(p * Rat(0) == Poly(2));

  SUBCASE("substitution") {
    // p(x, y) with x := y + 1
    Poly q = p.substitute(0, y + Poly::constant(2, 1));
    CHECK(q.eval_at({7, 3}) == p.eval_at({4, 3}));
  }
  SUBCASE("remap to a wider variable set") {
    Poly wide = p.remap_vars(3, {0, 2});
    CHECK(wide.eval_at({2, 99, 3}) == p.eval_at({2, 3}));
  }
}

TEST_CASE("serialization is graded-lex and round-trips") {
  Poly x = Poly::var(2, 0), y = Poly::var(2, 1);
  Poly p = y * x * x + x + y * y * y;
  std::string json = p.to_json();
  // graded-lex: degree 1 term first, then the two degree-3 terms in lex order
  CHECK(json ==
        R"([{"exp":[1,0],"coef":"1"},{"exp":[0,3],"coef":"1"},{"exp":[2,1],"coef":"1"}])");
  CHECK(Poly::from_json(json, 2) == p);
}

TEST_CASE("monomial and affine-sum division") {
  Poly x = Poly::var(2, 0), y = Poly::var(2, 1);
  Poly p = x * y * (x + y);
  Poly q(2);
  REQUIRE(p.divide_by_monomial({1, 1}, &q));
  CHECK(q == x + y);
  CHECK_FALSE((p + x).divide_by_monomial({1, 1}, &q));

  // (x + y + 3) divides (x + y + 3)(x^2 + y)
  Poly product = (x + y + Poly::constant(2, 3)) * (x * x + y);
  Poly quotient(2);
  REQUIRE(product.divide_by_affine_sum(3, &quotient));
  CHECK(quotient == x * x + y);
  CHECK_FALSE((product + x).divide_by_affine_sum(3, &quotient));
}

TEST_CASE("discrete antiderivative") {
  Poly t = Poly::var(1, 0);
  CHECK(discrete_antiderivative(Poly::constant(1, 1)) == t);
  // sum of a = x(x+1)/2, checked directly at x = 0..4
  Poly s1 = discrete_antiderivative(t);
  for (long xv = 0; xv <= 4; ++xv)
    CHECK(s1.eval({Rat(xv)}) == make_rat(xv * (xv + 1), 2));
  // sum of a^2 = x(x+1)(2x+1)/6
  Poly s2 = discrete_antiderivative(t * t);
  for (long xv = 0; xv <= 4; ++xv)
    CHECK(s2.eval({Rat(xv)}) == make_rat(xv * (xv + 1) * (2 * xv + 1), 6));

  SUBCASE("P(x) - P(x-1) = p(x) as a polynomial identity") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      Poly p(1);
      int deg = static_cast<int>(rng() % 6);
      for (int e = 0; e <= deg; ++e)
        p += Poly::monomial(1, {e}, make_rat(static_cast<long>(rng() % 19) - 9,
                                             1 + static_cast<long>(rng() % 4)));
      Poly P = discrete_antiderivative(p);
      Poly shifted = P.substitute(0, t - Poly::constant(1, 1));
      CHECK(P - shifted == p);
    }
  }
  SUBCASE("multivariate input is rejected") {
    CHECK_THROWS_AS(discrete_antiderivative(Poly::var(2, 0)), DomainError);
  }
}

TEST_CASE("grid interpolation") {
  SUBCASE("univariate cube") {
    std::vector<Sample> samples = {
        {{1}, Rat(1)}, {{2}, Rat(8)}, {{3}, Rat(27)}, {{4}, Rat(64)}};
    Poly p = interpolate(samples, 3, 1);
    CHECK(p == Poly::monomial(1, {3}, 1));
  }
  SUBCASE("product recovered from the {1,2}^3 grid") {
    std::vector<Sample> samples;
    for (long a = 1; a <= 2; ++a)
      for (long b = 1; b <= 2; ++b)
        for (long c = 1; c <= 2; ++c)
          samples.push_back({{a, b, c}, Rat(a * b * c)});
    Poly p = interpolate(samples, 3, 3);
    CHECK(p == Poly::monomial(3, {1, 1, 1}, 1));
  }
  SUBCASE("stirling diagonal row") {
    // v -> S(v+1, v) interpolates to (v^2 + v)/2
    std::vector<Sample> samples;
    for (long v = 1; v <= 3; ++v)
      samples.push_back({{v}, Rat(stirling2(v + 1, v))});
    Poly p = interpolate(samples, 2, 1);
    Poly v = Poly::var(1, 0);
    CHECK(p == (v * v + v) * make_rat(1, 2));
  }
  SUBCASE("incomplete grid is under-determined") {
    std::vector<Sample> samples = {
        {{1, 1}, Rat(1)}, {{1, 2}, Rat(2)}, {{2, 1}, Rat(2)}};
    CHECK_THROWS_AS(interpolate(samples, 2, 2), InterpolationError);
  }
  SUBCASE("conflicting duplicates are inconsistent") {
    std::vector<Sample> samples = {{{1}, Rat(1)}, {{2}, Rat(2)}, {{1}, Rat(5)}};
    CHECK_THROWS_AS(interpolate(samples, 1, 1), InterpolationError);
  }
  SUBCASE("degree overflow is an inconsistency signal") {
    std::vector<Sample> samples = {
        {{1}, Rat(1)}, {{2}, Rat(8)}, {{3}, Rat(27)}, {{4}, Rat(64)}};
    CHECK_THROWS_AS(interpolate(samples, 2, 1), InterpolationError);
  }
  SUBCASE("interpolate after evaluate is the identity (random polynomials)") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
      int n = 1 + static_cast<int>(rng() % 3);
      int deg = static_cast<int>(rng() % 7);
      Poly p(n);
      for (const Exponents& e : monomials_up_to(n, deg))
        if (rng() % 3 == 0)
          p += Poly::monomial(n, e, make_rat(static_cast<long>(rng() % 21) - 10,
                                             1 + static_cast<long>(rng() % 6)));
      std::vector<Sample> samples;
      MuTuple pt(n, 1);
      std::function<void(int)> fill = [&](int v) {
        if (v == n) {
          samples.push_back({pt, p.eval_at(pt)});
          return;
        }
        for (long c = 1; c <= deg + 1; ++c) {
          pt[v] = c;
          fill(v + 1);
        }
      };
      fill(0);
      CHECK(interpolate(samples, deg, n) == p);
    }
  }
}

TEST_CASE("total-degree fitting") {
  // recover x^2 - y from scattered points
  Poly x = Poly::var(2, 0), y = Poly::var(2, 1);
  Poly target = x * x - y;
  std::vector<Sample> samples;
  for (long a = 1; a <= 4; ++a)
    for (long b = 1; b <= 4; ++b)
      samples.push_back({{a, b}, target.eval_at({a, b})});
  CHECK(fit_total_degree(samples, 2, 2) == target);
  CHECK_THROWS_AS(
      fit_total_degree({{{1, 1}, Rat(0)}, {{2, 2}, Rat(1)}}, 2, 2),
      InterpolationError);
}

TEST_CASE("symbolic sums over compositions") {
  Poly t = Poly::var(1, 0);
  SUBCASE("two parts: sum of a(N-a) = N(N^2-1)/6") {
    Poly c = composition_sum({t, t});
    Poly expected =
        (t * t * t - t) * make_rat(1, 6);
    CHECK(c == expected);
  }
  SUBCASE("empty-range vanishing") {
    Poly c = composition_sum({t, t, t});
    CHECK(c.eval({Rat(1)}) == 0);
    CHECK(c.eval({Rat(2)}) == 0);
    CHECK(c.eval({Rat(3)}) == 1);  // only (1,1,1)
  }
  SUBCASE("matches direct enumeration") {
    Poly c = composition_sum({t * t, t, Poly::constant(1, 1)});
    for (long N = 3; N <= 9; ++N) {
      Rat direct = 0;
      for (long a = 1; a <= N - 2; ++a)
        for (long b = 1; a + b <= N - 1; ++b) direct += Rat(a * a * b);
      CHECK(c.eval({Rat(N)}) == direct);
    }
  }
}
