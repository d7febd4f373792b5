#pragma once

#include <utility>
#include <vector>

#include "hurwitz/polynomial.hpp"

namespace hurwitz {

struct InterpolationError : DomainError {
  using DomainError::DomainError;
};

// Univariate Newton interpolation through distinct nodes; exact.
Poly newton_univariate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

using Sample = std::pair<MuTuple, Rat>;

// Interpolation on a full rectangular grid (the grid is recovered from the
// sample points themselves).  Per-axis degrees are bounded by the grid
// sides; afterwards the total degree is checked against degree_bound.
//   - missing grid combinations        -> under-determined error
//   - duplicated point, other value    -> inconsistent error
//   - fitted total degree > bound      -> inconsistent error (a meaningful
//     failure signal: the sampled function is not the claimed polynomial)
Poly interpolate(const std::vector<Sample>& samples, int degree_bound,
                 int nvars);

// P with P(x) = sum_{t=1}^{x} p(t) for all integers x >= 0 (P(0) = 0),
// as a polynomial identity P(x) - P(x-1) = p(x).  Univariate input only.
Poly discrete_antiderivative(const Poly& p);

// sum_{t=1}^{x} t^k, cached (k >= 0; k = 0 gives x).
Poly power_sum(int k);

// Symbolic sum over variable v from 1 to `upper`; `upper` must not involve
// v.  The result no longer involves v.
Poly sum_over_var(const Poly& p, int v, const Poly& upper);

// sum over positive compositions a_1 + ... + a_k = N of prod f_i(a_i),
// for univariate factors f_i; returns a univariate polynomial in N.  The
// result vanishes identically at N = 1, ..., k-1 where the sum is empty.
Poly composition_sum(const std::vector<Poly>& factors);

// Incremental exact fit of a polynomial of total degree <= degree_bound.
// Points are consumed one at a time (row reduction over Q); `pinned()`
// turns true once the coefficient space is determined.  Contradictory data
// raises an inconsistency error on add().
class TotalDegreeFitter {
 public:
  TotalDegreeFitter(int nvars, int degree_bound);
  void add(const MuTuple& point, const Rat& value);
  bool pinned() const { return pivot_rows_.size() == basis_.size(); }
  Poly result() const;  // under-determined error if not pinned

 private:
  int nvars_;
  std::vector<Exponents> basis_;
  std::vector<std::vector<Rat>> pivot_rows_;
  std::vector<size_t> pivot_cols_;
};

// One-shot wrapper around TotalDegreeFitter, consuming samples in order.
Poly fit_total_degree(const std::vector<Sample>& samples, int degree_bound,
                      int nvars);

// All exponent vectors with |e| <= degree_bound, graded-lex order.
std::vector<Exponents> monomials_up_to(int nvars, int degree_bound);

}  // namespace hurwitz
