#pragma once

#include "hurwitz/oracle.hpp"
#include "hurwitz/polynomial.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

struct UnsupportedError : DomainError {
  using DomainError::DomainError;
};

// The degree-zero Gromov-Witten quasi-polynomials N_{g,n} (mod 2) are
// stored as a fixed table for (g,n) in {(0,3),(1,1),(0,4),(1,2),(2,1)};
// the branch is selected by the number of odd arguments.
bool gw_supported(int g, int n);

// Quasi-polynomial evaluation; entries >= 0 are allowed (the relations
// evaluate at 0 and 1).  (g,n) outside the table -> UnsupportedError.
Rat gw_eval(int g, const MuTuple& mu);

enum class GwRelation { Zero, One };
enum class CheckStatus { True, False, Skipped };

// The two string-type relations for N_{g,n+1}(0|1, mu_1..mu_n).  Instances
// whose left-hand tuple has inconsistent parity (sum != arity mod 2, where
// the table vanishes identically) are reported as Skipped, not False.
CheckStatus gw_relations_check(int g, const MuTuple& mu, GwRelation which);

struct NPComparison {
  Rat gw;
  Rat cycle;
  bool equal;
};

// gw_eval(0, mu) against count_cycle(0, mu) for an odd-sum triple; equal
// exactly when mu satisfies the triangle inequalities.
NPComparison compare_N_P(const MuTuple& mu, const Budget& budget = {});

}  // namespace hurwitz
