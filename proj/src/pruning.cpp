#include "hurwitz/pruning.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "hurwitz/combinatorics.hpp"

namespace hurwitz {

Int forest_count(long mu, long nu) {
  if (nu < 1 || mu < 1) throw DomainError("forest_count needs mu, nu >= 1");
  if (nu > mu) return 0;
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(mu),
                static_cast<unsigned long>(mu - nu));
  return r;
}

Int forest_count_orbifold(long a, long k, long e) {
  if (a < 1 || k < 1 || e < 0)
    throw DomainError("forest_count_orbifold needs a, k >= 1 and e >= 0");
  if (e == 0) return 1;
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(a * e + k),
                static_cast<unsigned long>(e - 1));
  return r * k;
}

namespace {

std::string key_name(const char* family, int g, const MuTuple& mu) {
  std::ostringstream s;
  s << family << "(g=" << g << ", mu=[";
  for (size_t i = 0; i < mu.size(); ++i) s << (i ? "," : "") << mu[i];
  s << "])";
  return s.str();
}

Rat require(const ValueSource& source, const char* family, int g,
            const MuTuple& mu) {
  auto v = source(g, mu);
  if (!v)
    throw DependencyError("missing source value " + key_name(family, g, mu));
  return *v;
}

// Common triangular machinery: full(mu) = sum_{nu <= mu} pruned(nu) w(mu,nu)
// where the weight factorises over the coordinates and the nu-lattice steps
// by `step` below each mu_i.
struct TriangularCorrespondence {
  long step;
  std::function<Rat(long mu_i, long nu_i)> weight;  // 0 allowed
  const char* full_name;
  const char* pruned_name;

  Rat full_from_pruned(int g, const MuTuple& mu,
                       const ValueSource& pruned) const {
    size_t n = mu.size();
    Rat total = 0;
    MuTuple nu(n);
    std::function<void(size_t, Rat)> rec = [&](size_t v, Rat w) {
      if (v == n) {
        Rat k = require(pruned, pruned_name, g, nu);
        if (k != 0) total += w * k;
        return;
      }
      for (long x = mu[v] % step == 0 ? step : mu[v] % step; x <= mu[v];
           x += step) {
        nu[v] = x;
        Rat wx = weight(mu[v], x);
        if (wx != 0) rec(v + 1, Rat(w * wx));
      }
    };
    rec(0, Rat(1));
    return total;
  }

  Rat pruned_from_full(int g, const MuTuple& mu,
                       const ValueSource& full) const {
    // triangular solve, lexicographic ascent in nu with memoisation
    std::map<MuTuple, Rat> memo;
    std::function<Rat(const MuTuple&)> solve = [&](const MuTuple& top) -> Rat {
      auto it = memo.find(top);
      if (it != memo.end()) return it->second;
      size_t n = top.size();
      Rat rest = 0;
      Rat diag = 0;
      MuTuple nu(n);
      std::function<void(size_t, Rat)> rec = [&](size_t v, Rat w) {
        if (v == n) {
          if (nu == top) {
            diag = w;
            return;
          }
          Rat k = solve(nu);
          if (k != 0) rest += w * k;
          return;
        }
        // the diagonal weight w(m, m) is 1 in every family, so no branch
        // with a vanishing weight can be the diagonal
        for (long x = top[v] % step == 0 ? step : top[v] % step; x <= top[v];
             x += step) {
          nu[v] = x;
          Rat wx = weight(top[v], x);
          if (wx != 0) rec(v + 1, Rat(w * wx));
        }
      };
      rec(0, Rat(1));
      if (diag == 0)
        throw DomainError("triangular solve: vanishing diagonal weight");
      Rat value = (require(full, full_name, g, top) - rest) / diag;
      memo.emplace(top, value);
      return value;
    };
    return solve(mu);
  }
};

}  // namespace

Rat transform_simple(Direction dir, int g, const MuTuple& mu,
                     const ValueSource& source) {
  if (g == 0 && mu.size() == 1)
    throw DomainError("pruning correspondence excludes (g,n) = (0,1)");
  TriangularCorrespondence corr{
      1,
      [](long m, long n) {
        return make_rat(forest_count(m, n), factorial(m - n));
      },
      "H^", "K^"};
  return dir == Direction::PrunedToFull ? corr.full_from_pruned(g, mu, source)
                                        : corr.pruned_from_full(g, mu, source);
}

Rat transform_orbifold(long a, Direction dir, int g, const MuTuple& mu,
                       const ValueSource& source) {
  if (a < 1) throw DomainError("orbifold parameter a must be positive");
  if (g == 0 && mu.size() == 1)
    throw DomainError("pruning correspondence excludes (g,n) = (0,1)");
  TriangularCorrespondence corr{
      a,
      [a](long m, long n) {
        long e = (m - n) / a;
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(m),
                      static_cast<unsigned long>(e));
        return make_rat(p, factorial(e));
      },
      "H^[a]", "K^[a]"};
  return dir == Direction::PrunedToFull ? corr.full_from_pruned(g, mu, source)
                                        : corr.pruned_from_full(g, mu, source);
}

Rat transform_belyi(Direction dir, int g, const MuTuple& mu,
                    const ValueSource& source) {
  if (2 * g - 2 + static_cast<long>(mu.size()) <= 0)
    throw DomainError(
        "Belyi correspondence implemented for stable (g,n) only");
  // M(mu) prod mu_i = sum N(nu) prod nu_i binom(mu_i, (mu_i-nu_i)/2);
  // fold the prod mu_i over to keep a single triangular template:
  // full'(mu) := M(mu) prod mu_i, pruned'(nu) := N(nu) prod nu_i,
  // with weight binom(mu_i, (mu_i-nu_i)/2) on the parity lattice.
  TriangularCorrespondence corr{
      2, [](long m, long n) { return Rat(binomial(m, (m - n) / 2)); }, "M",
      "N"};
  if (dir == Direction::PrunedToFull) {
    ValueSource weighted = [&](int gg, const MuTuple& nu) {
      auto v = source(gg, nu);
      if (!v) return std::optional<Rat>();
      return std::optional<Rat>(Rat(*v * mu_product(nu)));
    };
    return corr.full_from_pruned(g, mu, weighted) / mu_product(mu);
  }
  ValueSource weighted = [&](int gg, const MuTuple& m2) {
    auto v = source(gg, m2);
    if (!v) return std::optional<Rat>();
    return std::optional<Rat>(Rat(*v * mu_product(m2)));
  };
  return corr.pruned_from_full(g, mu, weighted) / mu_product(mu);
}

}  // namespace hurwitz
