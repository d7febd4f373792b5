#pragma once

#include "hurwitz/permutation.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Exhaustive enumeration is refused (never approximated) once the candidate
// tuple space exceeds the ceiling; in addition the search aborts if the
// number of explored nodes ever passes the ceiling, so the ceiling bounds
// actual work even when pruning makes the tuple-space formula meaningless.
// `formula_precheck` can be turned off for searches whose pruned space is
// structurally tight (the incidence-saturated base cases of the orbifold
// recursion); the node-count abort still applies.
struct Budget {
  unsigned long ceiling = 100000000UL;
  bool formula_precheck = true;
};

struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// m(g, mu) = 2g - 2 + n + |mu|.
long transposition_count(int g, const MuTuple& mu);
// m(g, mu) = 2g - 2 + n + |mu|/a; requires a | |mu|.
long transposition_count_orbifold(long a, int g, const MuTuple& mu);

// Fixed representative of cycle type mu with cycles listed in tuple order:
// (0 .. mu_1-1)(mu_1 .. mu_1+mu_2-1)...
Permutation representative_of(const MuTuple& mu);

// Number of transitive factorisations of a fixed representative T of type mu
// into m(g, mu) transpositions; with `pruned`, only factorisations where
// every sheet appears in at least two factors.
Int count_simple(int g, const MuTuple& mu, bool pruned,
                 const Budget& budget = {});
// Same count for an explicit target and transposition count (test hook for
// representative independence).
Int count_simple_for(const Permutation& target, long m, bool pruned,
                     const Budget& budget = {});

// Factorisations sigma_0 sigma_1 ... sigma_m = T with sigma_0 of shape
// (a, ..., a) and the sigma_i transpositions.  The cycles of sigma_0 are the
// colours; with `pruned`, every colour must have total incidence >= 2 in the
// transposition factors (a transposition inside one colour counts twice —
// a loop edge contributes 2 to the degree of its vertex).
// a does not divide |mu|  ->  0.
Int count_orbifold(long a, int g, const MuTuple& mu, bool pruned,
                   const Budget& budget = {});

// Cycle Hurwitz number P_{g,n}(mu): tuples (sigma_1, ..., sigma_n) with
// sigma_k of cycle type (mu_k, 1, ..., 1), product identity, transitive,
// weighted 1/d!; every factor with mu_k = 1 is the identity carrying a
// distinguished marked point (a factor of d).
Rat count_cycle(int g, const MuTuple& mu, const Budget& budget = {});

}  // namespace hurwitz
