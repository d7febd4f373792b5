#include "hurwitz/fatgraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <queue>
#include <sstream>

#include "hurwitz/combinatorics.hpp"
#include "hurwitz/polyops.hpp"

namespace hurwitz {

std::vector<long> Fatgraph::boundary_lengths() const {
  Permutation tau2 = tau0.compose(tau1);
  std::vector<long> lengths;
  for (const auto& orbit : tau2.cycles())
    lengths.push_back(static_cast<long>(orbit.size()));
  return lengths;
}

int Fatgraph::genus() const {
  Permutation tau2 = tau0.compose(tau1);
  int chi = vertices() - edges() + tau2.cycle_count();
  if ((2 - chi) % 2 != 0 || chi > 2)
    throw DomainError("fatgraph with invalid Euler characteristic");
  return (2 - chi) / 2;
}

bool Fatgraph::connected() const {
  int d = darts();
  if (d == 0) return false;
  std::vector<int> parent(d);
  for (int i = 0; i < d; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int ncomp = d;
  auto join = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --ncomp;
    }
  };
  for (int x = 0; x < d; ++x) {
    join(x, tau0[x]);
    join(x, tau1[x]);
  }
  return ncomp == 1;
}

bool Fatgraph::pruned() const {
  for (const auto& orbit : tau0.cycles())
    if (orbit.size() == 1) return false;
  return true;
}

bool Fatgraph::valence3plus() const {
  for (const auto& orbit : tau0.cycles())
    if (orbit.size() < 3) return false;
  return true;
}

std::vector<int> Fatgraph::canonical_encoding() const {
  int d = darts();
  std::vector<int> best;
  for (int start = 0; start < d; ++start) {
    std::vector<int> label(d, -1);
    std::vector<int> order;
    order.reserve(d);
    label[start] = 0;
    order.push_back(start);
    for (size_t head = 0; head < order.size(); ++head) {
      int x = order[head];
      for (int y : {tau0[x], tau1[x]}) {
        if (label[y] >= 0) continue;
        label[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
    if (static_cast<int>(order.size()) != d) continue;  // disconnected
    std::vector<int> enc;
    enc.reserve(2 * d);
    for (int x : order) enc.push_back(label[tau0[x]]);
    for (int x : order) enc.push_back(label[tau1[x]]);
    if (best.empty() || enc < best) best = std::move(enc);
  }
  if (best.empty()) throw DomainError("canonical form needs a connected graph");
  return best;
}

namespace {

void for_each_fpf_involution(int d,
                             const std::function<void(const Permutation&)>& f) {
  std::vector<int> img(d, -1);
  std::function<void()> rec = [&]() {
    int s = -1;
    for (int i = 0; i < d; ++i)
      if (img[i] < 0) {
        s = i;
        break;
      }
    if (s < 0) {
      f(Permutation(img));
      return;
    }
    for (int t = s + 1; t < d; ++t) {
      if (img[t] >= 0) continue;
      img[s] = t;
      img[t] = s;
      rec();
      img[s] = -1;
      img[t] = -1;
    }
  };
  rec();
}

// Elements of the group generated by the cycles of T (it preserves T and
// every labeled boundary face).
void for_each_boundary_rotation(
    const Permutation& T, const std::function<void(const Permutation&)>& f) {
  auto cycles = T.cycles();
  int d = T.degree();
  std::vector<int> img(d);
  std::function<void(size_t)> rec = [&](size_t c) {
    if (c == cycles.size()) {
      f(Permutation(img));
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
}

Permutation conjugate(const Permutation& p, const Permutation& h) {
  // h p h^-1
  return h.compose(p).compose(h.inverse());
}

}  // namespace

FatgraphCount enumerate_fatgraphs(int g, const MuTuple& mu, FatgraphMode mode,
                                  const Budget& budget, bool list_graphs) {
  FatgraphCount out;
  out.weighted = 0;
  long d = mu_sum(mu);
  if (d % 2 != 0) return out;  // every edge has two sides
  {
    Int space = 1;
    for (long k = d - 1; k >= 1; k -= 2) space *= k;
    if (space > budget.ceiling) {
      std::ostringstream msg;
      msg << "fatgraph enumeration budget exceeded: " << space << " > "
          << budget.ceiling;
      throw BudgetError(msg.str());
    }
  }
  // Fix the boundary permutation; tau0 is then determined by tau1.  The
  // count of labeled structures divided by |mu|! equals
  // (#admissible tau1) / prod(mu_i).
  Permutation boundary = representative_of(mu);
  int di = static_cast<int>(d);
  std::vector<Permutation> admissible;
  for_each_fpf_involution(di, [&](const Permutation& tau1) {
    Fatgraph fg{boundary.compose(tau1), tau1};
    if (!fg.connected()) return;
    if (fg.genus() != g) return;
    if (mode == FatgraphMode::Pruned && !fg.pruned()) return;
    if (mode == FatgraphMode::Valence3Plus && !fg.valence3plus()) return;
    admissible.push_back(tau1);
  });
  Int prod = mu_product(mu);
  out.weighted = make_rat(static_cast<long>(admissible.size()), 1) / prod;

  if (list_graphs && !admissible.empty()) {
    // group by conjugation under the boundary rotations; the stabiliser is
    // the label-preserving automorphism group
    std::map<std::vector<int>, std::pair<Fatgraph, Int>> classes;
    for (const Permutation& tau1 : admissible) {
      Fatgraph fg{boundary.compose(tau1), tau1};
      std::vector<int> key = fg.canonical_encoding();
      auto it = classes.find(key);
      if (it != classes.end()) continue;
      Int aut = 0;
      for_each_boundary_rotation(boundary, [&](const Permutation& h) {
        if (conjugate(tau1, h) == tau1) ++aut;
      });
      classes.emplace(std::move(key), std::make_pair(fg, aut));
    }
    for (auto& [key, rec] : classes) {
      FatgraphClass cls;
      cls.representative = rec.first;
      cls.genus = g;
      cls.boundaries = mu;
      cls.aut = rec.second;
      out.classes.push_back(std::move(cls));
    }
  }
  return out;
}

namespace {

// A cell of the valence->=3 decomposition: incidence matrix (boundary rows
// in label order, columns sorted) with its orbifold weight.
struct Cell {
  std::vector<std::vector<int>> matrix;  // n x E
  Rat weight;
};

// all permutations on `darts` elements with `parts` cycles, all of length
// >= 3
void for_each_valence3_rotation(
    int darts, int parts, const std::function<void(const Permutation&)>& f) {
  std::vector<int> taken(darts, 0);
  std::vector<std::vector<int>> cycles;
  // remaining: multiset of cycle lengths still to place, nonincreasing
  std::function<void(std::vector<long>&)> place = [&](std::vector<long>& remaining) {
    int s = -1;
    for (int i = 0; i < darts; ++i)
      if (!taken[i]) {
        s = i;
        break;
      }
    if (s < 0) {
      f(Permutation::from_cycles(darts, cycles));
      return;
    }
    long prev = -1;
    for (size_t pi = 0; pi < remaining.size(); ++pi) {
      long len = remaining[pi];
      if (len == prev) continue;  // one representative per distinct length
      prev = len;
      std::vector<long> rest = remaining;
      rest.erase(rest.begin() + static_cast<long>(pi));
      taken[s] = 1;
      std::vector<int> cyc = {s};
      std::function<void()> extend = [&]() {
        if (static_cast<long>(cyc.size()) == len) {
          cycles.push_back(cyc);
          place(rest);
          cycles.pop_back();
          return;
        }
        for (int x = s + 1; x < darts; ++x) {
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
    }
  };
  // enumerate partitions of `darts` into `parts` parts, each >= 3,
  // nonincreasing
  std::vector<long> partition;
  std::function<void(long, long, long)> partitions = [&](long rest, long slots,
                                                         long maxpart) {
    if (slots == 0) {
      if (rest == 0) {
        std::vector<long> remaining = partition;
        place(remaining);
      }
      return;
    }
    for (long part = std::min(maxpart, rest - 3 * (slots - 1)); part >= 3;
         --part) {
      partition.push_back(part);
      partitions(rest - part, slots - 1, part);
      partition.pop_back();
    }
  };
  partitions(darts, parts, darts);
}

Int count_valence3_rotations(int darts, int parts) {
  // sum over partitions of `darts` into `parts` parts >= 3 of
  // darts! / prod(len_i) / prod(mult_j!)
  Int total = 0;
  std::vector<long> partition;
  std::function<void(long, long, long)> rec = [&](long rest, long slots,
                                                  long maxpart) {
    if (slots == 0) {
      if (rest != 0) return;
      Int count = factorial(darts);
      long run = 1;
      for (size_t i = 0; i < partition.size(); ++i) {
        count /= partition[i];
        if (i > 0 && partition[i] == partition[i - 1])
          count /= ++run;
        else
          run = 1;
      }
      total += count;
      return;
    }
    for (long part = std::min(maxpart, rest - 3 * (slots - 1)); part >= 3;
         --part) {
      partition.push_back(part);
      rec(rest - part, slots - 1, part);
      partition.pop_back();
    }
  };
  rec(darts, parts, darts);
  return total;
}

const std::vector<Cell>& cells_for(int g, int n, const Budget& budget) {
  static std::map<std::pair<int, int>, std::vector<Cell>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({g, n});
  if (it != cache.end()) return it->second;

  if (2 * g - 2 + n <= 0)
    throw DomainError("lattice cells exist for stable (g,n) only");
  int emax = 6 * g - 6 + 3 * n;
  {
    Int work = 0;
    for (int e = 1; e <= emax; ++e) {
      int v = e + 2 - 2 * g - n;
      if (v < 1 || 2 * e < 3 * v) continue;
      work += count_valence3_rotations(2 * e, v);
    }
    if (work > budget.ceiling) {
      std::ostringstream msg;
      msg << "cell enumeration budget exceeded for (g,n)=(" << g << "," << n
          << "): " << work << " > " << budget.ceiling;
      throw BudgetError(msg.str());
    }
  }

  std::map<std::vector<std::vector<int>>, Rat> weights;
  for (int e = 1; e <= emax; ++e) {
    int v = e + 2 - 2 * g - n;
    if (v < 1 || 2 * e < 3 * v) continue;
    int darts = 2 * e;
    std::vector<int> tau1img(darts);
    for (int x = 0; x < darts; ++x) tau1img[x] = x ^ 1;
    Permutation tau1(tau1img);
    Rat unit = make_rat(1, factorial(e) * (Int(1) << e));
    for_each_valence3_rotation(darts, v, [&](const Permutation& tau0) {
      Fatgraph fg{tau0, tau1};
      Permutation tau2 = tau0.compose(tau1);
      auto orbits = tau2.cycles();
      if (static_cast<int>(orbits.size()) != n) return;
      if (!fg.connected()) return;
      // genus is forced by V - E + n, but guard anyway
      if (fg.genus() != g) return;
      // dart -> orbit index
      std::vector<int> orbit_of(darts);
      for (size_t o = 0; o < orbits.size(); ++o)
        for (int x : orbits[o]) orbit_of[x] = static_cast<int>(o);
      // all assignments of boundary labels to orbits
      std::vector<int> label(n);
      for (int i = 0; i < n; ++i) label[i] = i;
      do {
        std::vector<std::vector<int>> matrix(
            n, std::vector<int>(e, 0));
        for (int x = 0; x < darts; ++x)
          matrix[label[orbit_of[x]]][x / 2] += 1;
        // edge order is immaterial: canonicalise columns
        std::vector<std::vector<int>> cols(e, std::vector<int>(n));
        for (int c = 0; c < e; ++c)
          for (int r = 0; r < n; ++r) cols[c][r] = matrix[r][c];
        std::sort(cols.begin(), cols.end());
        std::vector<std::vector<int>> key(n, std::vector<int>(e));
        for (int c = 0; c < e; ++c)
          for (int r = 0; r < n; ++r) key[r][c] = cols[c][r];
        weights[key] += unit;
      } while (std::next_permutation(label.begin(), label.end()));
    });
  }
  std::vector<Cell> cells;
  for (const auto& [matrix, weight] : weights)
    cells.push_back(Cell{matrix, weight});
  return cache.emplace(std::make_pair(g, n), std::move(cells)).first->second;
}

Int positive_solutions(const std::vector<std::vector<int>>& matrix,
                       const MuTuple& mu) {
  size_t n = matrix.size();
  size_t e = matrix[0].size();
  std::vector<long> remaining(mu.begin(), mu.end());
  Int hits = 0;
  std::function<void(size_t)> rec = [&](size_t col) {
    if (col == e) {
      for (long r : remaining)
        if (r != 0) return;
      ++hits;
      return;
    }
    long cap = -1;
    for (size_t r = 0; r < n; ++r) {
      if (matrix[r][col] == 0) continue;
      long c = remaining[r] / matrix[r][col];
      cap = cap < 0 ? c : std::min(cap, c);
    }
    for (long x = 1; x <= cap; ++x) {
      for (size_t r = 0; r < n; ++r) remaining[r] -= matrix[r][col] * x;
      bool ok = true;
      for (size_t r = 0; r < n; ++r)
        if (remaining[r] < 0) ok = false;
      if (ok) rec(col + 1);
      for (size_t r = 0; r < n; ++r) remaining[r] += matrix[r][col] * x;
    }
  };
  rec(0);
  return hits;
}

}  // namespace

Rat lattice_count(int g, const MuTuple& mu, const Budget& budget) {
  if (2 * g - 2 + static_cast<long>(mu.size()) <= 0)
    throw DomainError("lattice_count defined for stable (g,n) only");
  const auto& cells = cells_for(g, static_cast<int>(mu.size()), budget);
  Rat total = 0;
  for (const Cell& cell : cells) {
    Int sol = positive_solutions(cell.matrix, mu);
    if (sol != 0) total += cell.weight * sol;
  }
  return total;
}

Poly lattice_count_branch(int g, int n, const std::vector<int>& residues,
                          const Budget& budget) {
  if (static_cast<int>(residues.size()) != n)
    throw DomainError("lattice_count_branch: residue arity mismatch");
  int degree = 6 * g - 6 + 2 * n;
  std::vector<Sample> samples;
  MuTuple point(n);
  std::function<void(int)> fill = [&](int v) {
    if (v == n) {
      samples.emplace_back(point, lattice_count(g, point, budget));
      return;
    }
    long base = residues[v] == 0 ? 2 : 1;
    for (int k = 0; k <= degree; ++k) {
      point[v] = base + 2 * k;
      fill(v + 1);
    }
  };
  fill(0);
  Poly branch = interpolate(samples, degree, n);
  // held-out verification just beyond the grid
  MuTuple probe(n);
  for (int v = 0; v < n; ++v)
    probe[v] = (residues[v] == 0 ? 2 : 1) + 2 * (degree + 1);
  if (branch.eval_at(probe) != lattice_count(g, probe, budget))
    throw DomainError("lattice_count_branch: held-out verification failed");
  return branch;
}

Rat euler_characteristic(int g, int n, const Budget& budget) {
  Poly even_branch = lattice_count_branch(g, n, std::vector<int>(n, 0), budget);
  return even_branch.eval(std::vector<Rat>(n, Rat(0)));
}

}  // namespace hurwitz
