#pragma once

#include <map>
#include <vector>

#include "hurwitz/polynomial.hpp"

namespace hurwitz {

// <tau_{d_1} ... tau_{d_n} lambda_ell>_g; zero unless |d| + ell = 3g-3+n.
struct BracketKey {
  int g;
  std::vector<int> d;  // sorted ascending (the bracket is symmetric)
  int ell;
  bool operator<(const BracketKey& o) const {
    return std::tie(g, ell, d) < std::tie(o.g, o.ell, o.d);
  }
  bool operator==(const BracketKey& o) const {
    return g == o.g && ell == o.ell && d == o.d;
  }
};

// The unique polynomial of degree 2d with q_d(v) = S(v+d, v) for all v >= 1,
// built by interpolation from Stirling numbers and checked against the
// recurrence q_{d+1}(v) = q_{d+1}(v-1) + v q_d(v).
Poly q_polynomial(int d);

// P_i(x, y) = sum over alpha+beta = x+y+1 of alpha beta q_i(alpha);
// bivariate of degree 2i+3.
Poly p_single(int i);

// P_{i,j}(x) = sum over alpha+beta+gamma = x+1 of alpha beta gamma
// q_i(alpha) q_j(beta); univariate of degree 2i+2j+5.
Poly p_double(int i, int j);

// Change of basis from khat (divisible by the product of the variables) to
// the tensor q-basis; keys carry ell = 3g-3+n - |d| and the sign (-1)^ell
// unfolded, so values are the intersection numbers themselves.  Failure to
// divide or a residue outside the basis is a hard error.
std::map<BracketKey, Rat> extract_brackets(int g, int n, const Poly& khat);

// Psi-class intersection numbers <tau_{d_1} ... tau_{d_n}>_g by the
// recursion on the maximal index (string and dilaton equations are the
// degenerate cases); seeds <tau_0^3>_0 = 1 and <tau_1>_1 = 1/24.
// Returns 0 unless |d| = 3g-3+n.
Rat wk_intersection(int g, const std::vector<int>& d);

}  // namespace hurwitz
