#include "hurwitz/polyops.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace hurwitz {

Poly newton_univariate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw InterpolationError("newton: node/value size mismatch");
  size_t n = xs.size();
  // divided differences
  std::vector<Rat> dd = ys;
  for (size_t level = 1; level < n; ++level) {
    for (size_t i = n - 1; i >= level; --i) {
      Rat denom = xs[i] - xs[i - level];
      if (denom == 0) throw InterpolationError("newton: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / denom;
      if (i == level) break;
    }
  }
  // expand a_0 + a_1 (x-x_0) + a_2 (x-x_0)(x-x_1) + ...
  Poly result = Poly::constant(1, dd[0]);
  Poly basis = Poly::constant(1, 1);
  Poly x = Poly::var(1, 0);
  for (size_t i = 1; i < n; ++i) {
    basis = basis * (x - Poly::constant(1, xs[i - 1]));
    result += basis * dd[i];
  }
  return result;
}

namespace {

// Recursive tensor-grid Newton fit.  axes[v] holds the sorted distinct
// coordinates of variable v; values maps grid points to sample values.
Poly grid_fit(const std::vector<std::vector<long>>& axes,
              const std::map<MuTuple, Rat>& values, int nvars) {
  if (nvars == 1) {
    std::vector<Rat> xs, ys;
    for (long c : axes[0]) {
      xs.emplace_back(c);
      ys.push_back(values.at({c}));
    }
    return newton_univariate(xs, ys);
  }
  // Fit in the last variable per point of the front grid, then interpolate
  // each coefficient of the front fit across the last axis.  Equivalent
  // (and simpler): fit front polynomials per last-axis coordinate, then
  // lift coefficient-by-coefficient.
  const auto& last_axis = axes[nvars - 1];
  std::vector<Poly> slices;
  for (long c : last_axis) {
    std::map<MuTuple, Rat> slice_values;
    for (const auto& [pt, v] : values) {
      if (pt[nvars - 1] != c) continue;
      MuTuple front(pt.begin(), pt.end() - 1);
      slice_values.emplace(std::move(front), v);
    }
    std::vector<std::vector<long>> front_axes(axes.begin(), axes.end() - 1);
    slices.push_back(grid_fit(front_axes, slice_values, nvars - 1));
  }
  // collect all exponent vectors appearing in any slice
  std::set<Exponents> support;
  for (const Poly& s : slices)
    for (const auto& [e, c] : s.terms()) support.insert(e);
  Poly result(nvars);
  std::vector<Rat> xs;
  for (long c : last_axis) xs.emplace_back(c);
  for (const Exponents& e : support) {
    std::vector<Rat> ys;
    for (const Poly& s : slices) ys.push_back(s.coeff(e));
    Poly lifted = newton_univariate(xs, ys);  // univariate in the last var
    for (const auto& [le, lc] : lifted.terms()) {
      Exponents full = e;
      full.push_back(le[0]);
      result += Poly::monomial(nvars, full, lc);
    }
  }
  return result;
}

}  // namespace

Poly interpolate(const std::vector<Sample>& samples, int degree_bound,
                 int nvars) {
  if (samples.empty()) throw InterpolationError("interpolate: no samples");
  std::map<MuTuple, Rat> values;
  std::vector<std::set<long>> axis_sets(nvars);
  for (const auto& [pt, v] : samples) {
    if (static_cast<int>(pt.size()) != nvars)
      throw InterpolationError("interpolate: sample arity mismatch");
    auto [it, inserted] = values.emplace(pt, v);
    if (!inserted && it->second != v)
      throw InterpolationError("interpolate: inconsistent duplicate sample");
    for (int i = 0; i < nvars; ++i) axis_sets[i].insert(pt[i]);
  }
  std::vector<std::vector<long>> axes(nvars);
  unsigned long long cells = 1;
  for (int i = 0; i < nvars; ++i) {
    axes[i].assign(axis_sets[i].begin(), axis_sets[i].end());
    cells *= axes[i].size();
  }
  if (cells != values.size())
    throw InterpolationError(
        "interpolate: under-determined sample set (incomplete grid)");
  Poly p = grid_fit(axes, values, nvars);
  if (p.total_degree() > degree_bound) {
    std::ostringstream msg;
    msg << "interpolate: inconsistent samples, fitted degree "
        << p.total_degree() << " exceeds bound " << degree_bound;
    throw InterpolationError(msg.str());
  }
  return p;
}

Poly discrete_antiderivative(const Poly& p) {
  if (p.nvars() != 1)
    throw DomainError("discrete_antiderivative: univariate input required");
  int d = std::max(p.total_degree(), 0);
  // The unique polynomial of degree d+1 through the d+2 prefix sums.
  std::vector<Rat> xs, ys;
  Rat acc = 0;
  xs.emplace_back(0);
  ys.push_back(acc);
  for (int t = 1; t <= d + 1; ++t) {
    acc += p.eval({Rat(t)});
    xs.emplace_back(t);
    ys.push_back(acc);
  }
  return newton_univariate(xs, ys);
}

Poly power_sum(int k) {
  if (k < 0) throw DomainError("power_sum: negative exponent");
  static std::vector<Poly> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<int>(cache.size()) <= k) {
    int j = static_cast<int>(cache.size());
    Exponents e{j};
    cache.push_back(discrete_antiderivative(Poly::monomial(1, e, 1)));
  }
  return cache[k];
}

Poly sum_over_var(const Poly& p, int v, const Poly& upper) {
  if (upper.degree_in(v) > 0)
    throw DomainError("sum_over_var: upper bound depends on summation var");
  int n = p.nvars();
  Poly result(n);
  for (int k = 0; k <= std::max(p.degree_in(v), 0); ++k) {
    Poly ck = p.coeff_of_power(v, k);
    if (ck.is_zero()) continue;
    // power_sum(k) composed with the upper bound
    Poly ps = power_sum(k).remap_vars(n, {v});
    result += ck * ps.substitute(v, upper);
  }
  return result;
}

Poly composition_sum(const std::vector<Poly>& factors) {
  if (factors.empty()) throw DomainError("composition_sum: no factors");
  for (const Poly& f : factors)
    if (f.nvars() != 1)
      throw DomainError("composition_sum: factors must be univariate");
  Poly acc = factors[0];
  for (size_t r = 1; r < factors.size(); ++r) {
    // C_r(N) = sum_{b=1}^{N-1} f_r(b) C_{r-1}(N-b); workspace vars (b, N).
    Poly b = Poly::var(2, 0);
    Poly N = Poly::var(2, 1);
    Poly fr = factors[r].remap_vars(2, {0});
    Poly prev = acc.remap_vars(2, {0}).substitute(0, N - b);
    Poly summand = fr * prev;
    Poly s = sum_over_var(summand, 0, N - Poly::constant(2, 1));
    if (s.degree_in(0) > 0)
      throw DomainError("composition_sum: internal variable leak");
    acc = s.remap_vars(1, {0, 0});  // only var 1 survives; fold back
  }
  return acc;
}

std::vector<Exponents> monomials_up_to(int nvars, int degree_bound) {
  std::vector<Exponents> out;
  Exponents e(nvars, 0);
  // graded-lex enumeration via recursion per total degree
  for (int d = 0; d <= degree_bound; ++d) {
    std::vector<Exponents> level;
    std::function<void(int, int)> rec = [&](int v, int rest) {
      if (v == nvars - 1) {
        e[v] = rest;
        level.push_back(e);
        return;
      }
      for (int k = 0; k <= rest; ++k) {
        e[v] = k;
        rec(v + 1, rest - k);
      }
    };
    rec(0, d);
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

TotalDegreeFitter::TotalDegreeFitter(int nvars, int degree_bound)
    : nvars_(nvars), basis_(monomials_up_to(nvars, degree_bound)) {}

void TotalDegreeFitter::add(const MuTuple& point, const Rat& value) {
  if (pinned()) return;
  size_t m = basis_.size();
  std::vector<Rat> row(m + 1);
  std::vector<Rat> x;
  for (long c : point) x.emplace_back(c);
  for (size_t j = 0; j < m; ++j)
    row[j] = Poly::monomial(nvars_, basis_[j], 1).eval(x);
  row[m] = value;
  for (size_t p = 0; p < pivot_rows_.size(); ++p) {
    size_t c = pivot_cols_[p];
    if (row[c] == 0) continue;
    Rat f = row[c] / pivot_rows_[p][c];
    for (size_t j = 0; j <= m; ++j) row[j] -= f * pivot_rows_[p][j];
  }
  size_t lead = m + 1;
  for (size_t j = 0; j < m; ++j)
    if (row[j] != 0) {
      lead = j;
      break;
    }
  if (lead == m + 1) {
    if (row[m] != 0)
      throw InterpolationError("fit_total_degree: inconsistent samples");
    return;  // dependent consistent point
  }
  pivot_rows_.push_back(std::move(row));
  pivot_cols_.push_back(lead);
}

Poly TotalDegreeFitter::result() const {
  size_t m = basis_.size();
  if (!pinned())
    throw InterpolationError("fit_total_degree: under-determined sample set");
  std::vector<Rat> coef(m, Rat(0));
  std::vector<size_t> order(pivot_rows_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return pivot_cols_[a] > pivot_cols_[b];
  });
  for (size_t oi : order) {
    const auto& row = pivot_rows_[oi];
    size_t c = pivot_cols_[oi];
    Rat rhs = row[m];
    for (size_t j = c + 1; j < m; ++j) rhs -= row[j] * coef[j];
    coef[c] = rhs / row[c];
  }
  Poly p(nvars_);
  for (size_t j = 0; j < m; ++j)
    if (coef[j] != 0) p += Poly::monomial(nvars_, basis_[j], coef[j]);
  return p;
}

Poly fit_total_degree(const std::vector<Sample>& samples, int degree_bound,
                      int nvars) {
  TotalDegreeFitter fitter(nvars, degree_bound);
  for (const auto& [pt, val] : samples) {
    fitter.add(pt, val);
    if (fitter.pinned()) break;
  }
  return fitter.result();
}

}  // namespace hurwitz
