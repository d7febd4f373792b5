#include "hurwitz/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <sstream>

#include "hurwitz/combinatorics.hpp"
#include "hurwitz/cut_and_join.hpp"
#include "hurwitz/fatgraph.hpp"
#include "hurwitz/gw.hpp"
#include "hurwitz/intersection.hpp"
#include "hurwitz/polyops.hpp"
#include "hurwitz/pruning.hpp"
#include "hurwitz/tables.hpp"

namespace hurwitz {

namespace {

std::string tuple_str(const MuTuple& mu) {
  std::ostringstream s;
  s << "(";
  for (size_t i = 0; i < mu.size(); ++i) s << (i ? "," : "") << mu[i];
  s << ")";
  return s.str();
}

// nondecreasing tuples with entries >= 1 and |mu| <= cap
std::vector<MuTuple> sorted_profiles(long cap) {
  std::vector<MuTuple> out;
  MuTuple mu;
  std::function<void(long, long)> rec = [&](long minpart, long left) {
    if (!mu.empty()) out.push_back(mu);
    for (long part = minpart; part <= left; ++part) {
      mu.push_back(part);
      rec(part, left - part);
      mu.pop_back();
    }
  };
  rec(1, cap);
  std::sort(out.begin(), out.end());
  return out;
}

void check(SuiteResult& suite, const std::string& name, bool ok,
           const std::string& detail = "") {
  suite.checks.push_back({name, ok, detail});
}

ValueSource recursion_pruned_source(CutAndJoinEngine& engine) {
  return [&engine](int g, const MuTuple& mu) {
    return std::optional<Rat>(engine.pruned_simple(g, mu));
  };
}

SuiteResult suite_oracle_vs_recursion(const Budget& budget) {
  SuiteResult suite{"oracle-vs-recursion", {}};
  CutAndJoinEngine engine;
  long pruned_checked = 0, full_checked = 0;
  bool pruned_ok = true, full_ok = true;
  std::string first_bad;
  for (const MuTuple& mu : sorted_profiles(5)) {
    long n = static_cast<long>(mu.size());
    for (int g = 0;; ++g) {
      long m = transposition_count(g, mu);
      if (m > 6) break;
      Rat from_oracle =
          make_rat(count_simple(g, mu, /*pruned=*/true, budget), factorial(m));
      if (from_oracle != engine.pruned_simple(g, mu)) {
        pruned_ok = false;
        if (first_bad.empty())
          first_bad = "pruned g=" + std::to_string(g) + " mu=" + tuple_str(mu);
      }
      ++pruned_checked;
      if (!(g == 0 && n == 1)) {
        Rat full_oracle = make_rat(
            count_simple(g, mu, /*pruned=*/false, budget), factorial(m));
        Rat transported = transform_simple(Direction::PrunedToFull, g, mu,
                                           recursion_pruned_source(engine));
        if (full_oracle != transported) {
          full_ok = false;
          if (first_bad.empty())
            first_bad = "full g=" + std::to_string(g) + " mu=" + tuple_str(mu);
        }
        ++full_checked;
      }
    }
  }
  check(suite, "pruned oracle = cut-and-join recursion * m!", pruned_ok,
        std::to_string(pruned_checked) + " instances" +
            (first_bad.empty() ? "" : ", first failure " + first_bad));
  check(suite, "full oracle = pruning transform of recursion values", full_ok,
        std::to_string(full_checked) + " instances");
  return suite;
}

SuiteResult suite_khat_table(const Budget&) {
  SuiteResult suite{"khat-table", {}};
  CutAndJoinEngine engine;
  for (const auto& row : khat_table()) {
    Poly expected = row.reduced * Poly::monomial(row.n, Exponents(row.n, 1), 1);
    Poly computed = engine.pruned_simple_polynomial(row.g, row.n);
    check(suite,
          "khat polynomial (" + std::to_string(row.g) + "," +
              std::to_string(row.n) + ") matches the stored row",
          computed == expected);
  }
  return suite;
}

SuiteResult suite_eulerian_k02(const Budget& budget) {
  SuiteResult suite{"eulerian-k02", {}};
  bool ok = true;
  long checked = 0;
  for (long m1 = 1; m1 <= 6; ++m1)
    for (long m2 = 1; m1 + m2 <= 7; ++m2) {
      Int expected = Int(m1) * Int(m2) * eulerian(m1 + m2 - 1, m1 - 1);
      Int counted = count_simple(0, {m1, m2}, /*pruned=*/true, budget);
      if (expected != counted) ok = false;
      ++checked;
    }
  check(suite, "pruned two-face counts match the Eulerian closed form", ok,
        std::to_string(checked) + " instances up to |mu| = 7");
  return suite;
}

SuiteResult suite_q_apparatus(const Budget&) {
  SuiteResult suite{"q-apparatus", {}};
  {
    bool ok = true;
    for (const auto& row : q_table())
      if (q_polynomial(row.d) != row.q) ok = false;
    check(suite, "q rows d <= 5 match the stored table", ok);
  }
  {
    bool ok = true;
    for (int d = 0; d <= 8; ++d)
      for (long v = 1; v <= 12; ++v)
        if (q_polynomial(d).eval({Rat(v)}) != Rat(stirling2(v + d, v)))
          ok = false;
    check(suite, "q_d(v) = S(v+d, v) for d <= 8, v <= 12", ok);
  }
  {
    bool ok = true;
    for (int d = 0; d <= 8; ++d) {
      Poly q = q_polynomial(d);
      if (q.total_degree() != 2 * d) ok = false;
      if (q.coeff({2 * d}) != make_rat(1, double_factorial(2 * d))) ok = false;
    }
    check(suite, "degree 2d with leading coefficient 1/(2d)!!", ok);
  }
  {
    bool ok = true;
    Poly v = Poly::var(1, 0);
    for (int d = 0; d + 1 <= 8; ++d) {
      Poly next = q_polynomial(d + 1);
      // q_{d+1}(v) = sum_{i=1}^{v} i q_d(i)
      if (next != discrete_antiderivative(v * q_polynomial(d))) ok = false;
      // q_{d+1}(v) = q_{d+1}(v-1) + v q_d(v)
      Poly shifted = next.substitute(0, v - Poly::constant(1, 1));
      if (next != shifted + v * q_polynomial(d)) ok = false;
    }
    check(suite, "both recurrences hold as polynomial identities", ok);
  }
  {
    bool ok = true;
    for (int d = 0; d <= 4; ++d)
      for (long mu = 1; mu <= 10; ++mu) {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(mu),
                      static_cast<unsigned long>(mu + d + 1));
        Rat lhs = make_rat(p, factorial(mu));
        Rat rhs = 0;
        for (long v = 1; v <= mu; ++v)
          rhs += q_polynomial(d).eval({Rat(v)}) * Rat(v) *
                 make_rat(forest_count(mu, v), factorial(mu - v));
        if (lhs != rhs) ok = false;
      }
    check(suite, "defining triangular system holds for d <= 4, mu <= 10", ok);
  }
  return suite;
}

SuiteResult suite_intersection_triangle(const Budget&) {
  SuiteResult suite{"intersection-triangle", {}};
  CutAndJoinEngine engine;
  const std::vector<std::pair<int, int>> cases = {
      {0, 3}, {0, 4}, {0, 5}, {1, 1}, {1, 2}};
  for (auto [g, n] : cases) {
    Poly khat = engine.pruned_simple_polynomial(g, n);
    auto brackets = extract_brackets(g, n, khat);
    int dim = 3 * g - 3 + n;
    bool ok = true;
    // every sorted exponent vector with |d| = dim
    std::vector<int> d(n, 0);
    std::function<void(int, int, int)> rec = [&](int pos, int minv, int left) {
      if (pos == n) {
        if (left != 0) return;
        auto it = brackets.find(BracketKey{g, d, 0});
        Rat extracted = it == brackets.end() ? Rat(0) : it->second;
        if (extracted != wk_intersection(g, d)) ok = false;
        return;
      }
      for (int v = minv; v <= left; ++v) {
        d[pos] = v;
        rec(pos + 1, v, left - v);
      }
    };
    rec(0, 0, dim);
    check(suite,
          "psi brackets from khat(" + std::to_string(g) + "," +
              std::to_string(n) + ") match the intersection recursion",
          ok);
  }
  {
    Rat wk = wk_intersection(2, {4});
    auto brackets = extract_brackets(2, 1, engine.pruned_simple_polynomial(2, 1));
    auto it = brackets.find(BracketKey{2, {4}, 0});
    bool ok = wk == make_rat(1, 1152) && it != brackets.end() &&
              it->second == make_rat(1, 1152);
    check(suite, "<tau_4>_2 = 1/1152 both ways", ok);
  }
  {
    auto brackets = extract_brackets(1, 1, engine.pruned_simple_polynomial(1, 1));
    auto it = brackets.find(BracketKey{1, {0}, 1});
    bool ok = it != brackets.end() && it->second == make_rat(1, 24);
    check(suite, "<tau_0 lambda_1>_1 = 1/24 from khat(1,1)", ok);
  }
  return suite;
}

SuiteResult suite_caj_unpruned(const Budget& budget) {
  SuiteResult suite{"caj-unpruned", {}};
  bool ok = true;
  long checked = 0;
  std::string first_bad;
  for (const MuTuple& mu : sorted_profiles(4)) {
    for (int g = 0; g <= 3; ++g) {
      long m = transposition_count(g, mu);
      if (m > 9) continue;
      if (!verify_caj_simple(g, mu, budget)) {
        ok = false;
        if (first_bad.empty())
          first_bad = "g=" + std::to_string(g) + " mu=" + tuple_str(mu);
      }
      ++checked;
    }
  }
  check(suite, "unpruned cut-and-join identity on all instances with d <= 4",
        ok,
        std::to_string(checked) + " instances" +
            (first_bad.empty() ? "" : ", first failure " + first_bad));
  return suite;
}

SuiteResult suite_orbifold(const Budget& budget) {
  SuiteResult suite{"orbifold", {}};
  CutAndJoinEngine engine;
  {
    bool ok = true;
    long checked = 0;
    std::string findings;
    for (const MuTuple& mu : sorted_profiles(6)) {
      if (mu_sum(mu) % 2 != 0) continue;
      for (int g = 0;; ++g) {
        long m = transposition_count_orbifold(2, g, mu);
        if (m > 5) break;
        if (m < 0) continue;
        Rat oracle = make_rat(count_orbifold(2, g, mu, /*pruned=*/true, budget),
                              factorial(m));
        Rat recursed = engine.pruned_orbifold(2, g, mu);
        if (oracle != recursed) {
          ok = false;
          findings += " K[2] g=" + std::to_string(g) + " mu=" + tuple_str(mu) +
                      " oracle=" + rat_to_string(oracle) +
                      " recursion=" + rat_to_string(recursed);
        }
        ++checked;
      }
    }
    check(suite, "a=2 pruned oracle = orbifold recursion * m!", ok,
          std::to_string(checked) + " instances" + findings);
  }
  {
    bool ok = true;
    long checked = 0;
    ValueSource source = [&engine](int g, const MuTuple& mu) {
      return std::optional<Rat>(engine.pruned_orbifold(2, g, mu));
    };
    for (const MuTuple& mu : sorted_profiles(6)) {
      if (mu_sum(mu) % 2 != 0) continue;
      if (mu.size() == 1) {
        // (0,1) sits outside the correspondence; higher genus is fine
      }
      for (int g = 0;; ++g) {
        long m = transposition_count_orbifold(2, g, mu);
        if (m > 5) break;
        if (m < 0 || (g == 0 && mu.size() == 1)) continue;
        Rat oracle = make_rat(
            count_orbifold(2, g, mu, /*pruned=*/false, budget), factorial(m));
        Rat transported =
            transform_orbifold(2, Direction::PrunedToFull, g, mu, source);
        if (oracle != transported) ok = false;
        ++checked;
      }
    }
    check(suite, "a=2 full oracle = orbifold pruning transform", ok,
          std::to_string(checked) + " instances");
  }
  {
    bool ok = true;
    long checked = 0;
    for (const MuTuple& mu : sorted_profiles(6)) {
      for (int g = 0; g <= 2; ++g) {
        if (transposition_count(g, mu) > 8) continue;
        if (engine.pruned_orbifold(1, g, mu) != engine.pruned_simple(g, mu))
          ok = false;
        ++checked;
      }
    }
    check(suite, "a=1 collapses to the simple family", ok,
          std::to_string(checked) + " instances");
  }
  return suite;
}

SuiteResult suite_belyi(const Budget& budget) {
  SuiteResult suite{"belyi", {}};
  check(suite, "M(0,1)(2) = 1/2",
        enumerate_fatgraphs(0, {2}, FatgraphMode::All, budget).weighted ==
            make_rat(1, 2));
  check(suite, "M(1,1)(2) = 0",
        enumerate_fatgraphs(1, {2}, FatgraphMode::All, budget).weighted == 0);
  check(suite, "M(1,1)(4) = 1/4",
        enumerate_fatgraphs(1, {4}, FatgraphMode::All, budget).weighted ==
            make_rat(1, 4));
  check(suite, "N(1,1)(4) = 1/4",
        enumerate_fatgraphs(1, {4}, FatgraphMode::Pruned, budget).weighted ==
            make_rat(1, 4));
  {
    bool ok = true;
    for (long mu1 = 1; mu1 <= 10; ++mu1) {
      Rat pruned =
          enumerate_fatgraphs(1, {mu1}, FatgraphMode::Pruned, budget).weighted;
      if (pruned != lattice_count(1, {mu1}, budget)) ok = false;
    }
    check(suite, "(1,1): lattice points = pruned enumeration, |mu| <= 10", ok);
  }
  {
    bool ok = true;
    long checked = 0;
    for (const MuTuple& mu : sorted_profiles(10)) {
      if (mu.size() != 3) continue;
      Rat pruned =
          enumerate_fatgraphs(0, mu, FatgraphMode::Pruned, budget).weighted;
      if (pruned != lattice_count(0, mu, budget)) ok = false;
      ++checked;
    }
    check(suite, "(0,3): lattice points = pruned enumeration, |mu| <= 10", ok,
          std::to_string(checked) + " instances");
  }
  {
    bool ok = true;
    ValueSource pruned_src = [&](int g, const MuTuple& mu) {
      return std::optional<Rat>(
          enumerate_fatgraphs(g, mu, FatgraphMode::Pruned, budget).weighted);
    };
    ValueSource full_src = [&](int g, const MuTuple& mu) {
      return std::optional<Rat>(
          enumerate_fatgraphs(g, mu, FatgraphMode::All, budget).weighted);
    };
    for (long mu1 = 1; mu1 <= 8; ++mu1) {
      Rat full = transform_belyi(Direction::PrunedToFull, 1, {mu1}, pruned_src);
      if (full !=
          enumerate_fatgraphs(1, {mu1}, FatgraphMode::All, budget).weighted)
        ok = false;
      Rat back = transform_belyi(Direction::FullToPruned, 1, {mu1}, full_src);
      if (back !=
          enumerate_fatgraphs(1, {mu1}, FatgraphMode::Pruned, budget).weighted)
        ok = false;
    }
    for (const MuTuple& mu : sorted_profiles(8)) {
      if (mu.size() != 3) continue;
      Rat full = transform_belyi(Direction::PrunedToFull, 0, mu, pruned_src);
      if (full !=
          enumerate_fatgraphs(0, mu, FatgraphMode::All, budget).weighted)
        ok = false;
    }
    check(suite, "Belyi correspondence round-trips on stable cases", ok);
  }
  check(suite, "euler characteristic (1,1) = -1/12",
        euler_characteristic(1, 1, budget) == make_rat(-1, 12));
  check(suite, "euler characteristic (0,3) = 1",
        euler_characteristic(0, 3, budget) == 1);
  {
    // frozen regression value, cross-checked against the fibration relation
    // chi(g, n+1) = (2 - 2g - n) chi(g, n)
    Rat chi12 = euler_characteristic(1, 2, budget);
    bool ok = chi12 == make_rat(1, 12) &&
              chi12 == Rat(2 - 2 - 1) * euler_characteristic(1, 1, budget);
    check(suite, "euler characteristic (1,2) = 1/12 (fibration-consistent)",
          ok);
  }
  return suite;
}

SuiteResult suite_gw(const Budget& budget) {
  SuiteResult suite{"gw", {}};
  {
    // independently transcribed closed forms, 5 sample points per row
    auto sq = [](const MuTuple& mu) {
      Rat s = 0;
      for (long m : mu) s += Rat(m) * Rat(m);
      return s;
    };
    struct RowCheck {
      int g;
      std::vector<MuTuple> points;
      std::function<Rat(const MuTuple&)> formula;
    };
    std::vector<RowCheck> rows;
    rows.push_back({0,
                    {{2, 2, 2}, {1, 1, 2}, {2, 2, 4}, {1, 3, 2}, {4, 4, 2}},
                    [](const MuTuple&) -> Rat { return 0; }});
    rows.push_back({0,
                    {{1, 1, 1}, {1, 2, 2}, {3, 1, 1}, {3, 3, 3}, {5, 2, 2}},
                    [](const MuTuple&) -> Rat { return 1; }});
    rows.push_back(
        {1, {{2}, {4}, {6}, {8}, {10}}, [](const MuTuple&) -> Rat { return 0; }});
    rows.push_back({1,
                    {{1}, {3}, {5}, {7}, {9}},
                    [sq](const MuTuple& mu) -> Rat { return (sq(mu) - 3) / 48; }});
    rows.push_back({0,
                    {{2, 2, 2, 2},
                     {1, 1, 1, 1},
                     {2, 4, 2, 4},
                     {1, 1, 3, 3},
                     {2, 2, 2, 4}},
                    [sq](const MuTuple& mu) -> Rat { return sq(mu) / 4; }});
    rows.push_back({0,
                    {{1, 2, 2, 2},
                     {1, 1, 1, 2},
                     {3, 2, 2, 2},
                     {1, 1, 3, 2},
                     {1, 2, 2, 4}},
                    [](const MuTuple&) -> Rat { return 0; }});
    rows.push_back({0,
                    {{1, 1, 2, 2},
                     {1, 3, 2, 2},
                     {1, 1, 2, 4},
                     {3, 3, 2, 2},
                     {1, 5, 4, 2}},
                    [sq](const MuTuple& mu) -> Rat { return (sq(mu) - 2) / 4; }});
    rows.push_back({1,
                    {{2, 2}, {2, 4}, {4, 4}, {2, 6}, {4, 6}},
                    [sq](const MuTuple& mu) -> Rat {
                      return (sq(mu) - 8) * sq(mu) / 384;
                    }});
    rows.push_back({1,
                    {{1, 2}, {1, 4}, {3, 2}, {3, 4}, {5, 2}},
                    [](const MuTuple&) -> Rat { return 0; }});
    rows.push_back({1,
                    {{1, 1}, {1, 3}, {3, 3}, {1, 5}, {3, 5}},
                    [sq](const MuTuple& mu) -> Rat {
                      return (sq(mu) - 6) * (sq(mu) - 2) / 384;
                    }});
    rows.push_back(
        {2, {{2}, {4}, {6}, {8}, {10}}, [](const MuTuple&) -> Rat { return 0; }});
    rows.push_back({2,
                    {{1}, {3}, {5}, {7}, {9}},
                    [](const MuTuple& mu) -> Rat {
                      Rat m2 = Rat(mu[0]) * Rat(mu[0]);
                      Rat a = (m2 - 1) * (m2 - 1);
                      Rat b = m2 * m2 * 5 - m2 * 186 + 1605;
                      return a * b / 8847360;
                    }});
    bool ok = true;
    long points = 0;
    for (const auto& row : rows)
      for (const MuTuple& pt : row.points) {
        if (gw_eval(row.g, pt) != row.formula(pt)) ok = false;
        ++points;
      }
    check(suite, "stored table rows reproduce the closed forms", ok,
          std::to_string(points) + " sample points");
  }
  {
    bool ok = true;
    long checked = 0, skipped = 0;
    auto run = [&](int g, const MuTuple& mu) {
      for (GwRelation which : {GwRelation::Zero, GwRelation::One}) {
        CheckStatus st = gw_relations_check(g, mu, which);
        if (st == CheckStatus::False) ok = false;
        (st == CheckStatus::Skipped ? skipped : checked) += 1;
      }
    };
    for (const MuTuple& mu : sorted_profiles(8))
      if (mu.size() == 3) run(0, mu);
    for (long m1 = 1; m1 <= 8; ++m1) run(1, {m1});
    check(suite, "string-type relations hold on parity-consistent instances",
          ok,
          std::to_string(checked) + " checked, " + std::to_string(skipped) +
              " parity-skipped");
  }
  {
    bool ok = true;
    long checked = 0;
    for (long a = 1; a <= 7; ++a)
      for (long b = 1; b <= 7; ++b)
        for (long c = 1; c <= 7; ++c) {
          if ((a + b + c) % 2 == 0) continue;
          bool triangle = a < b + c && b < a + c && c < a + b;
          NPComparison cmp = compare_N_P({a, b, c}, budget);
          if (cmp.equal != triangle) ok = false;
          ++checked;
        }
    check(suite, "gw (0,3) agrees with the cycle count exactly on triangles",
          ok, std::to_string(checked) + " odd-sum triples");
  }
  {
    NPComparison d2 = compare_N_P({3, 1, 1}, budget);
    NPComparison d3 = compare_N_P({5, 1, 1}, budget);
    bool ok = d2.gw == 1 && d2.cycle == 0 && d3.gw == 1 && d3.cycle == 0;
    check(suite, "stated disagreement at (2d-1,1,1) for d = 2, 3", ok);
  }
  return suite;
}

SuiteResult suite_properties(const Budget& budget) {
  SuiteResult suite{"properties", {}};
  CutAndJoinEngine engine;
  {
    bool ok = true;
    const std::vector<std::pair<int, MuTuple>> cases = {
        {0, {1, 2, 3}}, {0, {2, 2, 1, 3}}, {1, {3, 1}}, {1, {2, 2, 2}},
        {2, {2, 1}}};
    for (const auto& [g, mu] : cases) {
      MuTuple perm = mu;
      std::sort(perm.begin(), perm.end());
      do {
        if (engine.pruned_simple(g, perm) != engine.pruned_simple(g, mu))
          ok = false;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    check(suite, "khat values invariant under profile permutations", ok);
  }
  {
    bool ok = true;
    auto source = recursion_pruned_source(engine);
    for (const MuTuple& mu : sorted_profiles(5)) {
      for (int g = 0; g <= 1; ++g) {
        if (g == 0 && mu.size() == 1) continue;
        ValueSource full = [&](int gg, const MuTuple& m2) {
          return std::optional<Rat>(
              transform_simple(Direction::PrunedToFull, gg, m2, source));
        };
        Rat back = transform_simple(Direction::FullToPruned, g, mu, full);
        if (back != engine.pruned_simple(g, mu)) ok = false;
      }
    }
    check(suite, "pruning transform round-trips (simple family)", ok);
  }
  {
    bool ok = true;
    ValueSource source = [&engine](int g, const MuTuple& mu) {
      return std::optional<Rat>(engine.pruned_orbifold(2, g, mu));
    };
    for (const MuTuple& mu : sorted_profiles(6)) {
      for (int g = 0; g <= 1; ++g) {
        if (g == 0 && mu.size() == 1) continue;
        ValueSource full = [&](int gg, const MuTuple& m2) {
          return std::optional<Rat>(
              transform_orbifold(2, Direction::PrunedToFull, gg, m2, source));
        };
        Rat back = transform_orbifold(2, Direction::FullToPruned, g, mu, full);
        if (back != engine.pruned_orbifold(2, g, mu)) ok = false;
      }
    }
    check(suite, "pruning transform round-trips (orbifold a=2)", ok);
  }
  {
    CutAndJoinEngine fresh1, fresh2;
    bool ok = fresh1.pruned_simple_polynomial(1, 2).to_json() ==
              fresh2.pruned_simple_polynomial(1, 2).to_json();
    ok = ok && fresh1.pruned_simple_polynomial(0, 4).to_json() ==
                   fresh2.pruned_simple_polynomial(0, 4).to_json();
    check(suite, "rebuilt polynomials serialize byte-identically", ok);
  }
  {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "hurwitz-cache-check.jsonl";
    CutAndJoinEngine writer;
    writer.pruned_simple(1, {3, 2});
    writer.pruned_orbifold(2, 1, {2, 2});
    writer.save_cache(path.string());
    CutAndJoinEngine reader;
    auto report = reader.load_cache(path.string(), /*verify=*/true);
    bool ok = report.mismatches == 0 && report.loaded == writer.cache_size();
    fs::remove(path);
    check(suite, "cache verification reports zero mismatches", ok,
          std::to_string(report.loaded) + " entries");
  }
  (void)budget;
  return suite;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "oracle-vs-recursion",
      "khat-table",
      "eulerian-k02",
      "q-apparatus",
      "intersection-triangle",
      "caj-unpruned",
      "orbifold",
      "belyi",
      "gw",
      "properties"};
  return names;
}

std::vector<SuiteResult> run_verify(const std::string& which,
                                    const Budget& budget) {
  using Runner = SuiteResult (*)(const Budget&);
  static const std::vector<std::pair<std::string, Runner>> runners = {
      {"oracle-vs-recursion", suite_oracle_vs_recursion},
      {"khat-table", suite_khat_table},
      {"eulerian-k02", suite_eulerian_k02},
      {"q-apparatus", suite_q_apparatus},
      {"intersection-triangle", suite_intersection_triangle},
      {"caj-unpruned", suite_caj_unpruned},
      {"orbifold", suite_orbifold},
      {"belyi", suite_belyi},
      {"gw", suite_gw},
      {"properties", suite_properties},
  };
  std::vector<SuiteResult> out;
  bool found = false;
  for (const auto& [name, runner] : runners) {
    if (which == "all" || which == name) {
      out.push_back(runner(budget));
      found = true;
    }
  }
  if (!found) throw DomainError("unknown verification suite: " + which);
  return out;
}

}  // namespace hurwitz
