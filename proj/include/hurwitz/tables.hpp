#pragma once

#include <vector>

#include "hurwitz/polynomial.hpp"

namespace hurwitz {

// Fixed reference tables used by the `table` command and the regression
// suite.  The khat rows are stored divided by mu_1 ... mu_n (the reduced
// convention); multiply by the variable product to recover khat itself.

struct KhatTableRow {
  int g;
  int n;
  Poly reduced;  // khat_{g,n} / (mu_1 ... mu_n)
};
const std::vector<KhatTableRow>& khat_table();

struct QTableRow {
  int d;
  Poly q;
};
const std::vector<QTableRow>& q_table();

struct GwTableRow {
  int g;
  int n;
  std::vector<int> odd_counts;  // branch selector: number of odd arguments
  Poly poly;
};
const std::vector<GwTableRow>& gw_table();

// Symmetric-sum helpers for building the rows.
// sum over ordered tuples of distinct indices of prod mu_{i_t}^{k_t}
Poly sym_ordered(int nvars, const std::vector<int>& pattern);
// sum mu_i^k
Poly sym_power(int nvars, int k);

}  // namespace hurwitz
