#include "hurwitz/intersection.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "hurwitz/combinatorics.hpp"
#include "hurwitz/polyops.hpp"

namespace hurwitz {

Poly q_polynomial(int d) {
  if (d < 0) throw DomainError("q_polynomial: d must be >= 0");
  static std::vector<Poly> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<int>(cache.size()) <= d) {
    int k = static_cast<int>(cache.size());
    std::vector<Rat> xs, ys;
    for (long v = 1; v <= 2 * k + 1; ++v) {
      xs.emplace_back(v);
      ys.emplace_back(make_rat(stirling2(v + k, v), 1));
    }
    Poly q = newton_univariate(xs, ys);
    if (k > 0) {
      // recurrence check: q_k(v) = q_k(v-1) + v q_{k-1}(v)
      Poly v = Poly::var(1, 0);
      Poly shifted = q.substitute(0, v - Poly::constant(1, 1));
      if (q != shifted + v * cache[k - 1])
        throw DomainError("q_polynomial: recurrence check failed");
    }
    cache.push_back(std::move(q));
  }
  return cache[d];
}

Poly p_single(int i) {
  // C(N) = sum_{alpha+beta=N} alpha beta q_i(alpha), then N = x + y + 1
  Poly alpha = Poly::var(1, 0);
  Poly c = composition_sum({alpha * q_polynomial(i), alpha});
  Poly x = Poly::var(2, 0), y = Poly::var(2, 1);
  return c.remap_vars(2, {0}).substitute(0, x + y + Poly::constant(2, 1));
}

Poly p_double(int i, int j) {
  Poly alpha = Poly::var(1, 0);
  Poly c = composition_sum(
      {alpha * q_polynomial(i), alpha * q_polynomial(j), alpha});
  return c.substitute(0, Poly::var(1, 0) + Poly::constant(1, 1));
}

namespace {

// Expand p recursively in the per-variable q-basis; every variable degree
// must be even at the top of each reduction step (q_d has degree 2d).
void q_expand(const Poly& p, int var, std::vector<int>& dvec,
              std::map<std::vector<int>, Rat>& out) {
  int n = p.nvars();
  if (var == n) {
    // fully reduced: p must be a constant
    if (p.is_zero()) return;
    if (p.total_degree() > 0)
      throw DomainError("extract_brackets: residue outside the q-basis");
    Rat c = p.coeff(Exponents(n, 0));
    // ordered d-vectors that agree after sorting carry the same bracket;
    // record once and insist the symmetric copies agree
    std::vector<int> key = dvec;
    std::sort(key.begin(), key.end());
    auto [it, inserted] = out.emplace(key, c);
    if (!inserted && it->second != c)
      throw DomainError("extract_brackets: khat is not symmetric");
    return;
  }
  Poly rest = p;
  while (!rest.is_zero()) {
    int e = rest.degree_in(var);
    if (e % 2 != 0)
      throw DomainError("extract_brackets: odd degree residue in variable");
    int d = e / 2;
    Poly c = rest.coeff_of_power(var, e) * make_rat(double_factorial(2 * d), 1);
    if (c.is_zero()) {
      // degree_in(var) == e means some term has exponent e; c cannot vanish
      throw DomainError("extract_brackets: internal coefficient error");
    }
    dvec[var] = d;
    q_expand(c, var + 1, dvec, out);
    // c q_d matches the whole top coefficient, so the degree strictly drops
    Poly qd = q_polynomial(d).remap_vars(n, {var});
    rest -= c * qd;
    if (e == 0) break;
  }
}

}  // namespace

std::map<BracketKey, Rat> extract_brackets(int g, int n, const Poly& khat) {
  if (khat.nvars() != n) throw DomainError("extract_brackets: arity mismatch");
  int dim = 3 * g - 3 + n;
  if (dim < 0) throw DomainError("extract_brackets: unstable (g,n)");
  Poly reduced(n);
  if (!khat.divide_by_monomial(Exponents(n, 1), &reduced))
    throw DomainError(
        "extract_brackets: khat is not divisible by the variable product");
  std::map<std::vector<int>, Rat> coeffs;
  std::vector<int> dvec(n, 0);
  q_expand(reduced, 0, dvec, coeffs);
  std::map<BracketKey, Rat> out;
  for (const auto& [d, c] : coeffs) {
    long total = 0;
    for (int x : d) total += x;
    if (total > dim)
      throw DomainError("extract_brackets: degree exceeds the dimension");
    int ell = static_cast<int>(dim - total);
    Rat value = (ell % 2 == 0) ? c : Rat(-c);
    if (value != 0) out.emplace(BracketKey{g, d, ell}, value);
  }
  return out;
}

namespace {

struct WkKey {
  int g;
  std::vector<int> d;
  bool operator<(const WkKey& o) const {
    return std::tie(g, d) < std::tie(o.g, o.d);
  }
};

std::map<WkKey, Rat> g_wk_memo;
std::mutex g_wk_mutex;

Rat wk_rec(int g, std::vector<int> d);

Rat wk_checked(std::vector<int> d) {
  // genus is forced by |d| = 3g - 3 + n
  long total = 0;
  for (int x : d) total += x;
  long n = static_cast<long>(d.size());
  if (n == 0) return 0;
  if ((total + 3 - n) % 3 != 0) return 0;
  long g = (total + 3 - n) / 3;
  if (g < 0) return 0;
  return wk_rec(static_cast<int>(g), std::move(d));
}

Rat wk_rec(int g, std::vector<int> d) {
  std::sort(d.begin(), d.end());
  if (g == 0 && d == std::vector<int>{0, 0, 0}) return 1;
  if (g == 1 && d == std::vector<int>{1}) return make_rat(1, 24);
  {
    std::lock_guard<std::mutex> lock(g_wk_mutex);
    auto it = g_wk_memo.find({g, d});
    if (it != g_wk_memo.end()) return it->second;
  }
  // pivot: a maximal entry, rotated to the front (the bracket is symmetric)
  int d1 = d.back();
  std::vector<int> rest(d.begin(), d.end() - 1);
  Rat value = 0;
  if (d1 == 0) {
    // all entries zero but not the (0,3) seed: dimension forces value 0
    std::lock_guard<std::mutex> lock(g_wk_mutex);
    g_wk_memo.emplace(WkKey{g, d}, value);
    return value;
  }

  for (size_t j = 0; j < rest.size(); ++j) {
    int dj = rest[j];
    if (d1 + dj - 1 < 0) continue;
    std::vector<int> next;
    for (size_t t = 0; t < rest.size(); ++t)
      if (t != j) next.push_back(rest[t]);
    next.push_back(d1 + dj - 1);
    Rat coef = make_rat(double_factorial(2 * d1 + 2 * dj - 1),
                        double_factorial(2 * d1 + 1)) /
               double_factorial(2 * dj - 1);
    value += coef * wk_checked(next);
  }
  Rat half = make_rat(1, 2);
  for (int i = 0; i + 2 <= d1; ++i) {
    int j = d1 - 2 - i;
    Rat coef = make_rat(double_factorial(2 * i + 1) *
                            double_factorial(2 * j + 1),
                        double_factorial(2 * d1 + 1));
    // non-separating: genus drops
    std::vector<int> joined = rest;
    joined.push_back(i);
    joined.push_back(j);
    Rat bracket = wk_checked(joined);
    // separating splittings over subsets of the remaining indices
    for (unsigned long mask = 0; mask < (1UL << rest.size()); ++mask) {
      std::vector<int> left = {i}, right = {j};
      for (size_t t = 0; t < rest.size(); ++t)
        ((mask >> t) & 1UL ? left : right).push_back(rest[t]);
      Rat a = wk_checked(left);
      if (a == 0) continue;
      bracket += a * wk_checked(right);
    }
    value += half * coef * bracket;
  }
  std::lock_guard<std::mutex> lock(g_wk_mutex);
  g_wk_memo.emplace(WkKey{g, d}, value);
  return value;
}

}  // namespace

Rat wk_intersection(int g, const std::vector<int>& d) {
  if (g < 0) return 0;
  long total = 0;
  for (int x : d) {
    if (x < 0) return 0;
    total += x;
  }
  if (total != 3L * g - 3 + static_cast<long>(d.size())) return 0;
  return wk_rec(g, d);
}

}  // namespace hurwitz
