#include "hurwitz/cut_and_join.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "hurwitz/combinatorics.hpp"
#include "hurwitz/polyops.hpp"
#include "json.hpp"

namespace hurwitz {

namespace {

MuTuple sorted(MuTuple mu) {
  std::sort(mu.begin(), mu.end());
  return mu;
}

MuTuple without(const MuTuple& mu, size_t i, size_t j) {
  MuTuple rest;
  for (size_t k = 0; k < mu.size(); ++k)
    if (k != i && k != j) rest.push_back(mu[k]);
  return rest;
}

bool stable(int g, size_t n) { return 2 * g - 2 + static_cast<long>(n) > 0; }

}  // namespace

CutAndJoinEngine::CutAndJoinEngine(Budget base_budget)
    : base_budget_(base_budget) {}

Rat CutAndJoinEngine::base_02(Family variant, long a, const MuTuple& mu) {
  long m1 = mu[0], m2 = mu[1];
  if (variant == Family::PrunedSimple || a == 1) {
    // K_{0,2}(m1, m2) = m1 m2 A(m1+m2-1, m1-1), normalised by (m1+m2)!
    Int k = Int(m1) * Int(m2) * eulerian(m1 + m2 - 1, m1 - 1);
    return make_rat(k, factorial(m1 + m2));
  }
  if (mu_sum(mu) % a != 0) return 0;
  long m = transposition_count_orbifold(a, 0, mu);
  Int k = count_orbifold(a, 0, mu, /*pruned=*/true, base_budget_);
  return make_rat(k, factorial(m));
}

Rat CutAndJoinEngine::khat(Family variant, long a, int g, const MuTuple& mu) {
  size_t n = mu.size();
  if (n == 0) throw DomainError("khat: empty profile");
  if (variant == Family::PrunedOrbifold && mu_sum(mu) % a != 0) return 0;
  if (g == 0 && n == 1) return 0;  // branching graphs would be trees
  if (g == 0 && n == 2) return base_02(variant, a, sorted(mu));

  HurwitzKey key{variant, variant == Family::PrunedSimple ? 1 : a, g,
                 sorted(mu)};
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  Rat value = recompute(key);
  memo_.emplace(key, value);
  return value;
}

Rat CutAndJoinEngine::recompute(const HurwitzKey& key) {
  const Family variant = key.variant;
  const long a = key.a;
  const int g = key.g;
  const MuTuple& mu = key.mu;
  const size_t n = mu.size();

  long m = 2L * g - 2 + static_cast<long>(n) + mu_sum(mu) / a;
  Rat total = 0;

  // A removed path of k edges has k-1 interior vertices; each removed
  // vertex accounts for a units of profile mass and an a-fold cyclic
  // attachment choice, hence the compositions step by a and the weights
  // carry a^(k-1).  (At a = 1 this is the plain simple-family recursion.)
  auto interior_weight = [a](long path_edges) {
    Int w = 1;
    for (long t = 1; t < path_edges; ++t) w *= a;
    return w;
  };

  // join of two faces
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      MuTuple rest = without(mu, i, j);
      long s = mu[i] + mu[j];
      Rat inner = 0;
      // alpha + a*beta = mu_i + mu_j + a, alpha >= 1, beta >= 1
      for (long beta = 1; a * beta <= s + a - 1; ++beta) {
        long alpha = s + a - a * beta;
        MuTuple next = rest;
        next.push_back(alpha);
        Rat k = khat(variant, a, g, next);
        if (k != 0) inner += Rat(Int(beta) * interior_weight(beta)) * k;
      }
      total += Rat(Int(mu[i]) * Int(mu[j])) * inner;
    }
  }

  // cut of one face: genus reduction and stable splittings
  size_t rest_count = n - 1;
  for (size_t i = 0; i < n; ++i) {
    MuTuple rest = without(mu, i, i);
    Rat inner = 0;
    for (long gamma = 1; a * gamma <= mu[i] + a - 2; ++gamma) {
      long ab = mu[i] + a - a * gamma;  // alpha + beta
      Rat bracket = 0;
      for (long alpha = 1; alpha <= ab - 1; ++alpha) {
        long beta = ab - alpha;
        if (g >= 1) {
          MuTuple next = rest;
          next.push_back(alpha);
          next.push_back(beta);
          bracket += khat(variant, a, g - 1, next);
        }
        // Splitting sum.  Pieces shaped (0,1) vanish and are dropped, and
        // mixed stable x (0,2) products are excluded: their contribution is
        // exactly cancelled by the two-face sum's overcount of nested-face
        // graphs.  The overcount also covers the doubly-(0,2) products
        // twice, so those enter with a minus sign (this only activates at
        // (g,n) = (0,3) and is forced by the enumeration oracle, e.g. the
        // profile (2,1,1)).
        for (unsigned long mask = 0; mask < (1UL << rest_count); ++mask) {
          MuTuple mu_i_part, mu_j_part;
          for (size_t t = 0; t < rest_count; ++t)
            ((mask >> t) & 1UL ? mu_i_part : mu_j_part).push_back(rest[t]);
          mu_i_part.push_back(alpha);
          mu_j_part.push_back(beta);
          for (int g1 = 0; g1 <= g; ++g1) {
            int g2 = g - g1;
            bool left_stable = stable(g1, mu_i_part.size());
            bool right_stable = stable(g2, mu_j_part.size());
            bool left_02 = g1 == 0 && mu_i_part.size() == 2;
            bool right_02 = g2 == 0 && mu_j_part.size() == 2;
            int sign;
            if (left_stable && right_stable)
              sign = 1;
            else if (left_02 && right_02)
              sign = -1;
            else
              continue;
            Rat k1 = khat(variant, a, g1, mu_i_part);
            if (k1 == 0) continue;
            bracket += Rat(sign) * k1 * khat(variant, a, g2, mu_j_part);
          }
        }
      }
      if (bracket != 0)
        inner += Rat(Int(gamma) * interior_weight(gamma)) * bracket;
    }
    total += Rat(mu[i]) * inner / 2;
  }

  return total / m;
}

Rat CutAndJoinEngine::pruned_simple(int g, const MuTuple& mu) {
  return khat(Family::PrunedSimple, 1, g, mu);
}

Rat CutAndJoinEngine::pruned_orbifold(long a, int g, const MuTuple& mu) {
  if (a < 1) throw DomainError("orbifold parameter a must be positive");
  return khat(Family::PrunedOrbifold, a, g, mu);
}

Poly CutAndJoinEngine::pruned_simple_polynomial(int g, int n) {
  if (!stable(g, n))
    throw DomainError("pruned polynomial defined for 2g-2+n > 0 only");
  int degree = 6 * g - 6 + 3 * n;
  std::vector<Sample> samples;
  MuTuple point(n, 1);
  std::function<void(int)> fill = [&](int v) {
    if (v == n) {
      samples.emplace_back(point, pruned_simple(g, point));
      return;
    }
    for (long c = 1; c <= degree + 1; ++c) {
      point[v] = c;
      fill(v + 1);
    }
  };
  fill(0);
  Poly p = interpolate(samples, degree, n);
  // held-out verification: interpolation inconsistency signals a recursion bug
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL + 64 * g + n);
  for (int trial = 0; trial < 10; ++trial) {
    MuTuple probe(n);
    for (int v = 0; v < n; ++v)
      probe[v] = 1 + static_cast<long>(rng() % (2 * degree));
    if (p.eval_at(probe) != pruned_simple(g, probe))
      throw InterpolationError(
          "pruned_simple_polynomial: held-out verification failed");
  }
  return p;
}

QuasiPoly CutAndJoinEngine::pruned_orbifold_quasipolynomial(long a, int g,
                                                            int n) {
  if (!stable(g, n))
    throw DomainError("pruned quasi-polynomial defined for 2g-2+n > 0 only");
  if (a < 1) throw DomainError("orbifold parameter a must be positive");
  int degree = 6 * g - 6 + 3 * n;
  QuasiPoly qp;
  qp.modulus = a;
  qp.envelope_base = a;  // per-class values are a^(|mu|/a) times a polynomial
  qp.nvars = n;

  std::vector<int> residues(n, 0);
  std::function<void(int)> per_class = [&](int v) {
    if (v < n) {
      for (int r = 0; r < a; ++r) {
        residues[v] = r;
        per_class(v + 1);
      }
      return;
    }
    long rsum = 0;
    for (int r : residues) rsum += r;
    if (rsum % a != 0) return;  // divisibility kills the whole class

    // class points sorted by |mu|, then lexicographically
    std::vector<MuTuple> points;
    int steps = degree + 3;
    MuTuple point(n);
    std::function<void(int)> gen = [&](int w) {
      if (w == n) {
        points.push_back(point);
        return;
      }
      long base = residues[w] == 0 ? a : residues[w];
      for (int k = 0; k <= steps; ++k) {
        point[w] = base + a * k;
        gen(w + 1);
      }
    };
    gen(0);
    std::stable_sort(points.begin(), points.end(),
                     [](const MuTuple& x, const MuTuple& y) {
                       long sx = 0, sy = 0;
                       for (long v : x) sx += v;
                       for (long v : y) sy += v;
                       return std::tie(sx, x) < std::tie(sy, y);
                     });

    auto reduced_value = [&](const MuTuple& pt) {
      return Rat(pruned_orbifold(a, g, pt) / qp.envelope_at(pt));
    };
    TotalDegreeFitter fitter(n, degree);
    size_t used = 0;
    while (used < points.size() && !fitter.pinned()) {
      fitter.add(points[used], reduced_value(points[used]));
      ++used;
    }
    if (!fitter.pinned())
      throw InterpolationError(
          "orbifold quasi-polynomial: class grid exhausted before the "
          "coefficient space was pinned");
    Poly branch = fitter.result();
    // held-out verification on the next class points
    for (size_t extra = 0; extra < 3 && used < points.size(); ++extra, ++used) {
      if (branch.eval_at(points[used]) != reduced_value(points[used]))
        throw InterpolationError(
            "orbifold quasi-polynomial: held-out verification failed");
    }
    if (!branch.is_zero()) qp.branches.emplace(residues, branch);
  };
  per_class(0);
  return qp;
}

void CutAndJoinEngine::save_cache(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot open cache file for writing: " + path);
  for (const auto& [key, value] : memo_) {
    nlohmann::ordered_json rec;
    rec["variant"] = key.variant == Family::PrunedSimple ? "pruned-simple"
                                                         : "pruned-orbifold";
    rec["a"] = key.a;
    rec["g"] = key.g;
    rec["mu"] = key.mu;
    rec["value"] = rat_to_string(value);
    out << rec.dump() << "\n";
  }
}

CutAndJoinEngine::CacheLoadReport CutAndJoinEngine::load_cache(
    const std::string& path, bool verify) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open cache file: " + path);
  CacheLoadReport report;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto rec = nlohmann::json::parse(line);
    std::string variant_name = rec.at("variant").get<std::string>();
    HurwitzKey key;
    key.variant = variant_name == "pruned-simple" ? Family::PrunedSimple
                                                  : Family::PrunedOrbifold;
    key.a = rec.at("a").get<long>();
    key.g = rec.at("g").get<int>();
    key.mu = sorted(rec.at("mu").get<MuTuple>());
    Rat value = rat_from_string(rec.at("value").get<std::string>());
    if (verify) {
      CutAndJoinEngine fresh(base_budget_);
      Rat recomputed = key.variant == Family::PrunedSimple
                           ? fresh.pruned_simple(key.g, key.mu)
                           : fresh.pruned_orbifold(key.a, key.g, key.mu);
      if (recomputed != value) {
        ++report.mismatches;
        continue;
      }
    }
    memo_[key] = value;
    ++report.loaded;
  }
  return report;
}

bool verify_caj_simple(int g, const MuTuple& mu, const Budget& budget) {
  const size_t n = mu.size();
  auto hhat = [&](int gg, const MuTuple& prof) -> Rat {
    long mm = transposition_count(gg, prof);
    if (mm < 0) return 0;
    return make_rat(count_simple(gg, prof, /*pruned=*/false, budget),
                    factorial(mm));
  };

  long m = transposition_count(g, mu);
  Rat lhs = Rat(m) * hhat(g, mu);

  Rat rhs = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      MuTuple next = without(mu, i, j);
      next.push_back(mu[i] + mu[j]);
      rhs += Rat(Int(mu[i]) * Int(mu[j])) * hhat(g, next);
    }
  for (size_t i = 0; i < n; ++i) {
    MuTuple rest = without(mu, i, i);
    Rat inner = 0;
    for (long alpha = 1; alpha <= mu[i] - 1; ++alpha) {
      long beta = mu[i] - alpha;
      if (g >= 1) {
        MuTuple next = rest;
        next.push_back(alpha);
        next.push_back(beta);
        inner += hhat(g - 1, next);
      }
      for (unsigned long mask = 0; mask < (1UL << rest.size()); ++mask) {
        MuTuple part_i, part_j;
        for (size_t t = 0; t < rest.size(); ++t)
          ((mask >> t) & 1UL ? part_i : part_j).push_back(rest[t]);
        part_i.push_back(alpha);
        part_j.push_back(beta);
        for (int g1 = 0; g1 <= g; ++g1)
          rhs += Rat(mu[i]) * hhat(g1, part_i) * hhat(g - g1, part_j) / 2;
      }
    }
    rhs += Rat(mu[i]) * inner / 2;
  }
  return lhs == rhs;
}

}  // namespace hurwitz
