#include "hurwitz/gw.hpp"

#include <algorithm>

#include "hurwitz/tables.hpp"

namespace hurwitz {

namespace {

const GwTableRow* find_row(int g, int n, int odd_count) {
  for (const auto& row : gw_table()) {
    if (row.g != g || row.n != n) continue;
    if (std::find(row.odd_counts.begin(), row.odd_counts.end(), odd_count) !=
        row.odd_counts.end())
      return &row;
  }
  return nullptr;
}

}  // namespace

bool gw_supported(int g, int n) {
  for (const auto& row : gw_table())
    if (row.g == g && row.n == n) return true;
  return false;
}

Rat gw_eval(int g, const MuTuple& mu) {
  int n = static_cast<int>(mu.size());
  if (!gw_supported(g, n))
    throw UnsupportedError("gw_eval: (g,n) outside the stored table");
  int odd = 0;
  for (long m : mu) {
    if (m < 0) throw DomainError("gw_eval: negative argument");
    if (m % 2 != 0) ++odd;
  }
  const GwTableRow* row = find_row(g, n, odd);
  if (!row) throw UnsupportedError("gw_eval: missing branch in the table");
  return row->poly.eval_at(mu);
}

CheckStatus gw_relations_check(int g, const MuTuple& mu, GwRelation which) {
  int n = static_cast<int>(mu.size());
  if (!gw_supported(g, n) || !gw_supported(g, n + 1))
    throw UnsupportedError("gw_relations_check: (g,n) pair not in the table");
  long first = which == GwRelation::Zero ? 0 : 1;
  long total = mu_sum(mu) + first;
  // the table vanishes identically off-parity, which makes the relation
  // degenerate there; such instances are skipped rather than judged
  if ((total - (n + 1)) % 2 != 0) return CheckStatus::Skipped;

  MuTuple lhs_tuple = {first};
  lhs_tuple.insert(lhs_tuple.end(), mu.begin(), mu.end());
  Rat lhs = gw_eval(g, lhs_tuple);

  Rat rhs = 0;
  for (size_t j = 0; j < mu.size(); ++j) {
    MuTuple probe = mu;
    for (long k = 1; k <= mu[j]; ++k) {
      probe[j] = k;
      Rat v = gw_eval(g, probe);
      if (v != 0) rhs += Rat(k) * v;
    }
  }
  if (which == GwRelation::One) {
    long chi = 2 - 2L * g - n;
    rhs += make_rat(chi - mu_sum(mu), 2) * gw_eval(g, mu);
  }
  return lhs == rhs ? CheckStatus::True : CheckStatus::False;
}

NPComparison compare_N_P(const MuTuple& mu, const Budget& budget) {
  if (mu.size() != 3) throw DomainError("compare_N_P expects a triple");
  if (mu_sum(mu) % 2 == 0)
    throw DomainError("compare_N_P expects an odd-sum triple");
  NPComparison out{gw_eval(0, mu), count_cycle(0, mu, budget), false};
  out.equal = out.gw == out.cycle;
  return out;
}

}  // namespace hurwitz
