#include "hurwitz/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "hurwitz/combinatorics.hpp"

namespace hurwitz {

long transposition_count(int g, const MuTuple& mu) {
  return 2L * g - 2 + static_cast<long>(mu.size()) + mu_sum(mu);
}

long transposition_count_orbifold(long a, int g, const MuTuple& mu) {
  long s = mu_sum(mu);
  if (a < 1 || s % a != 0)
    throw DomainError("orbifold transposition count needs a | |mu|");
  return 2L * g - 2 + static_cast<long>(mu.size()) + s / a;
}

Permutation representative_of(const MuTuple& mu) {
  int d = static_cast<int>(mu_sum(mu));
  std::vector<std::vector<int>> cycles;
  int next = 0;
  for (long part : mu) {
    std::vector<int> c;
    for (long i = 0; i < part; ++i) c.push_back(next++);
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(d, cycles);
}

namespace {

// Depth-first enumeration of transposition tuples with product fixed.
// State is mutated in place with explicit undo; prunes:
//   - transposition distance of the still-required product vs slots left
//     (with parity),
//   - connectivity: components - 1 <= slots left,
//   - pruned-only mode: incidence deficiency <= 2 * slots left.
struct FactorizationSearch {
  int d;
  long m;
  std::vector<std::pair<int, int>> transpositions;
  std::vector<int> required;  // still-required product R, image table
  std::vector<int> required_inv;
  std::vector<int> comp;  // connectivity component per sheet
  int ncomp;
  std::vector<int> colour;  // sheet -> colour
  std::vector<long> incidence;
  long deficiency;  // sum over colours of max(0, 2 - incidence)
  bool pruned_only;
  unsigned long node_ceiling = 0;
  unsigned long nodes = 0;
  Int unpruned = 0, pruned = 0;

  std::vector<int> cid;  // scratch: cycle id of `required`

  void run() { descend(m); }

  int cycles_of_required() {
    cid.assign(d, -1);
    int count = 0;
    for (int i = 0; i < d; ++i) {
      if (cid[i] >= 0) continue;
      for (int x = i; cid[x] < 0; x = required[x]) cid[x] = count;
      ++count;
    }
    return count;
  }

  void descend(long slots) {
    if (++nodes > node_ceiling)
      throw BudgetError("enumeration budget exceeded: explored node count " +
                        std::to_string(nodes) + " passed the ceiling");
    int cyc = cycles_of_required();
    int dist = d - cyc;
    if (dist > slots || ((slots - dist) & 1)) return;
    if (ncomp - 1 > slots) return;
    if (pruned_only && deficiency > 2 * slots) return;
    if (slots == 0) {
      ++unpruned;
      if (deficiency == 0) ++pruned;
      return;
    }
    // cid is clobbered by recursion; snapshot what the loop needs
    std::vector<int> cid_here = cid;
    int cyc_here = cyc;
    for (const auto& [i, j] : transpositions) {
      int new_cyc = cyc_here + (cid_here[i] == cid_here[j] ? 1 : -1);
      if (d - new_cyc > slots - 1) continue;
      int ci = comp[i], cj = comp[j];
      // a merge lowers ncomp by one; a within-component edge must still
      // leave time to connect the rest
      if (ci == cj && ncomp - 1 > slots - 1) continue;
      long def_delta = 0;
      if (incidence[colour[i]] < 2) ++def_delta;
      ++incidence[colour[i]];
      if (incidence[colour[j]] < 2) ++def_delta;
      ++incidence[colour[j]];
      long new_def = deficiency - def_delta;
      if (pruned_only && new_def > 2 * (slots - 1)) {
        --incidence[colour[j]];
        --incidence[colour[i]];
        continue;
      }
      // apply transposition on the left: swap values i and j of `required`
      int pi = required_inv[i], pj = required_inv[j];
      std::swap(required[pi], required[pj]);
      std::swap(required_inv[i], required_inv[j]);
      // merge components (relabel cj -> ci), with undo log
      std::vector<int> relabeled;
      if (ci != cj) {
        for (int x = 0; x < d; ++x)
          if (comp[x] == cj) {
            comp[x] = ci;
            relabeled.push_back(x);
          }
        --ncomp;
      }
      long def_save = deficiency;
      deficiency = new_def;

      descend(slots - 1);

      deficiency = def_save;
      if (ci != cj) {
        for (int x : relabeled) comp[x] = cj;
        ++ncomp;
      }
      std::swap(required_inv[i], required_inv[j]);
      std::swap(required[pi], required[pj]);
      --incidence[colour[j]];
      --incidence[colour[i]];
    }
  }
};

void check_tuple_budget(int d, long m, const Int& multiplier,
                        const Budget& budget) {
  if (!budget.formula_precheck) return;
  Int space = multiplier;
  Int per_slot = Int(d) * (d - 1) / 2;
  for (long k = 0; k < m; ++k) {
    space *= per_slot;
    if (space > budget.ceiling) break;
  }
  if (space > budget.ceiling) {
    std::ostringstream msg;
    msg << "enumeration budget exceeded: " << multiplier << " * (" << d << "*"
        << d - 1 << "/2)^" << m << " > " << budget.ceiling;
    throw BudgetError(msg.str());
  }
}

std::pair<Int, Int> run_search(const Permutation& required_product, long m,
                               const std::vector<int>& colour, int ncolours,
                               const std::vector<int>& component_seed,
                               bool pruned_only, const Budget& budget) {
  int d = required_product.degree();
  FactorizationSearch s;
  s.d = d;
  s.m = m;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) s.transpositions.emplace_back(i, j);
  s.required = required_product.images();
  s.required_inv = required_product.inverse().images();
  s.comp = component_seed;
  s.ncomp = static_cast<int>(
      std::set<int>(component_seed.begin(), component_seed.end()).size());
  s.colour = colour;
  s.incidence.assign(ncolours, 0);
  s.deficiency = 2L * ncolours;
  s.pruned_only = pruned_only;
  s.node_ceiling = budget.ceiling;
  s.run();
  return {s.unpruned, s.pruned};
}

}  // namespace

Int count_simple_for(const Permutation& target, long m, bool pruned,
                     const Budget& budget) {
  int d = target.degree();
  if (m < 0) return 0;
  check_tuple_budget(d, m, 1, budget);
  std::vector<int> colour(d), comp(d);
  for (int i = 0; i < d; ++i) colour[i] = comp[i] = i;
  auto [unpruned_count, pruned_count] =
      run_search(target, m, colour, d, comp, pruned, budget);
  return pruned ? pruned_count : unpruned_count;
}

Int count_simple(int g, const MuTuple& mu, bool pruned, const Budget& budget) {
  return count_simple_for(representative_of(mu), transposition_count(g, mu),
                          pruned, budget);
}

namespace {

// All permutations of {0..d-1} whose cycle type is (a, a, ..., a).
void for_each_uniform_shape(int d, long a,
                            const std::function<void(const Permutation&)>& f) {
  std::vector<int> taken(d, 0);
  std::vector<std::vector<int>> cycles;
  std::function<void()> rec = [&]() {
    int s = -1;
    for (int i = 0; i < d; ++i)
      if (!taken[i]) {
        s = i;
        break;
      }
    if (s < 0) {
      f(Permutation::from_cycles(d, cycles));
      return;
    }
    taken[s] = 1;
    std::vector<int> cyc = {s};
    std::function<void()> extend = [&]() {
      if (static_cast<long>(cyc.size()) == a) {
        cycles.push_back(cyc);
        rec();
        cycles.pop_back();
        return;
      }
      for (int x = s + 1; x < d; ++x) {
        if (taken[x]) continue;
        taken[x] = 1;
        cyc.push_back(x);
        extend();
        cyc.pop_back();
        taken[x] = 0;
      }
    };
    extend();
    taken[s] = 0;
  };
  rec();
}

Int uniform_shape_count(int d, long a) {
  // d! / (a^k k!) with k = d/a
  long k = d / a;
  Int count = factorial(d);
  Int denom = factorial(k);
  for (long i = 0; i < k; ++i) denom *= a;
  return count / denom;
}

}  // namespace

namespace {

// The factorisation count for a fixed sigma_0 is invariant under
// conjugation by the cycle group of T (it fixes T, maps colours to colours
// and preserves incidence), so sigma_0 candidates are grouped into orbits
// and searched once per orbit.
std::vector<Permutation> cycle_group_of(const Permutation& T) {
  std::vector<Permutation> out;
  auto cycles = T.cycles();
  int d = T.degree();
  std::vector<int> img(d);
  std::function<void(size_t)> rec = [&](size_t c) {
    if (c == cycles.size()) {
      out.emplace_back(img);
      return;
    }
    const auto& cyc = cycles[c];
    size_t len = cyc.size();
    for (size_t shift = 0; shift < len; ++shift) {
      for (size_t i = 0; i < len; ++i) img[cyc[i]] = cyc[(i + shift) % len];
      rec(c + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

Int count_orbifold(long a, int g, const MuTuple& mu, bool pruned,
                   const Budget& budget) {
  if (a < 1) throw DomainError("orbifold parameter a must be positive");
  long s = mu_sum(mu);
  if (s % a != 0) return 0;  // |mu| must be divisible by a
  int d = static_cast<int>(s);
  long k = s / a;
  long m = transposition_count_orbifold(a, g, mu);
  if (m < 0) return 0;
  check_tuple_budget(d, m, uniform_shape_count(d, a), budget);
  Permutation target = representative_of(mu);

  std::vector<std::vector<int>> shapes;
  for_each_uniform_shape(
      d, a, [&](const Permutation& sigma0) { shapes.push_back(sigma0.images()); });
  std::sort(shapes.begin(), shapes.end());
  std::vector<Permutation> stabiliser = cycle_group_of(target);

  Int total = 0;
  std::set<std::vector<int>> visited;
  for (const auto& shape : shapes) {
    if (visited.count(shape)) continue;
    Permutation sigma0(shape);
    long orbit = 0;
    for (const Permutation& h : stabiliser) {
      std::vector<int> conj(d);
      for (int x = 0; x < d; ++x) conj[h[x]] = h[sigma0[x]];
      if (visited.insert(std::move(conj)).second) ++orbit;
    }
    // sigma_0 sigma_1 ... sigma_m = T  =>  sigma_1 ... sigma_m = sigma_0^-1 T
    Permutation required = sigma0.inverse().compose(target);
    std::vector<int> colour(d), comp(d);
    auto cycles = sigma0.cycles();
    for (size_t c = 0; c < cycles.size(); ++c) {
      int root = cycles[c][0];
      for (int x : cycles[c]) {
        colour[x] = static_cast<int>(c);
        comp[x] = root;
      }
    }
    auto [unpruned_count, pruned_count] = run_search(
        required, m, colour, static_cast<int>(k), comp, pruned, budget);
    total += Int(orbit) * (pruned ? pruned_count : unpruned_count);
  }
  return total;
}

namespace {

// All cycles of length len on {0..d-1}: ordered as (min, rest...).
void for_each_cycle(int d, long len,
                    const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> support;
  std::vector<char> used(d, 0);
  std::function<void(int)> choose_support = [&](int from) {
    if (static_cast<long>(support.size()) == len) {
      // arrange all but the minimum (which stays first)
      std::vector<int> rest(support.begin() + 1, support.end());
      std::sort(rest.begin(), rest.end());
      do {
        std::vector<int> cyc = {support[0]};
        cyc.insert(cyc.end(), rest.begin(), rest.end());
        f(cyc);
      } while (std::next_permutation(rest.begin(), rest.end()));
      return;
    }
    for (int x = from; x < d; ++x) {
      support.push_back(x);
      choose_support(x + 1);
      support.pop_back();
    }
  };
  choose_support(0);
}

int component_count(int d, const std::vector<std::vector<int>>& chains) {
  std::vector<int> parent(d);
  for (int i = 0; i < d; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int ncomp = d;
  for (const auto& chain : chains)
    for (size_t i = 1; i < chain.size(); ++i) {
      int a = find(chain[i - 1]), b = find(chain[i]);
      if (a != b) {
        parent[a] = b;
        --ncomp;
      }
    }
  return ncomp;
}

}  // namespace

Rat count_cycle(int g, const MuTuple& mu, const Budget& budget) {
  long twice_d = mu_sum(mu) - static_cast<long>(mu.size()) + 2 - 2L * g;
  if (twice_d <= 0 || twice_d % 2 != 0) return 0;
  long d = twice_d / 2;
  for (long part : mu)
    if (part > d) return 0;  // conjugacy class is empty

  MuTuple nontrivial;
  long marked = 0;
  for (long part : mu) {
    if (part >= 2)
      nontrivial.push_back(part);
    else
      ++marked;
  }
  std::sort(nontrivial.rbegin(), nontrivial.rend());

  Int d_pow_marked = 1;
  for (long i = 0; i < marked; ++i) d_pow_marked *= d;

  if (nontrivial.empty())
    return (d == 1) ? make_rat(d_pow_marked, factorial(d)) : Rat(0);
  if (nontrivial.size() == 1) return 0;  // a single cycle is never identity

  long t = static_cast<long>(nontrivial.size());
  if (budget.formula_precheck) {
    Int space = 1;
    for (long k = 1; k + 1 < t; ++k) {
      space *= binomial(d, nontrivial[k]) * factorial(nontrivial[k] - 1);
      if (space > budget.ceiling) {
        std::ostringstream msg;
        msg << "cycle enumeration budget exceeded at d=" << d;
        throw BudgetError(msg.str());
      }
    }
  }

  int di = static_cast<int>(d);
  std::vector<int> first_cycle;
  for (long i = 0; i < nontrivial[0]; ++i)
    first_cycle.push_back(static_cast<int>(i));
  Permutation sigma1 = Permutation::from_cycles(di, {first_cycle});
  Int multiplier = binomial(d, nontrivial[0]) * factorial(nontrivial[0] - 1);

  Int hits = 0;
  unsigned long nodes = 0;
  std::vector<std::vector<int>> chains = {first_cycle};
  std::function<void(long, const Permutation&)> descend =
      [&](long pos, const Permutation& partial) {
        if (++nodes > budget.ceiling)
          throw BudgetError(
              "cycle enumeration budget exceeded: explored node count "
              "passed the ceiling");
        long avail = 0;
        for (long j = pos; j < t; ++j) avail += nontrivial[j] - 1;
        long needed = d - partial.cycle_count();
        if (needed > avail || ((avail - needed) & 1)) return;
        if (component_count(di, chains) - 1 > avail) return;
        if (pos == t - 1) {
          Permutation last = partial.inverse();
          // must be a single cycle of length nontrivial[t-1]
          long moved = 0;
          for (int x = 0; x < di; ++x)
            if (last[x] != x) ++moved;
          if (moved != nontrivial[t - 1]) return;
          if (di - last.cycle_count() != nontrivial[t - 1] - 1) return;
          for (const auto& cyc : last.cycles())
            if (cyc.size() > 1) chains.push_back(cyc);
          if (component_count(di, chains) == 1) ++hits;
          chains.pop_back();
          return;
        }
        for_each_cycle(di, nontrivial[pos], [&](const std::vector<int>& cyc) {
          chains.push_back(cyc);
          descend(pos + 1, partial.compose(Permutation::from_cycles(di, {cyc})));
          chains.pop_back();
        });
      };
  descend(1, sigma1);

  return make_rat(hits * multiplier * d_pow_marked, factorial(d));
}

}  // namespace hurwitz
