#pragma once

#include <map>
#include <string>

#include "hurwitz/oracle.hpp"
#include "hurwitz/polynomial.hpp"
#include "hurwitz/quasipolynomial.hpp"

namespace hurwitz {

enum class Family { PrunedSimple, PrunedOrbifold };

struct HurwitzKey {
  Family variant;
  long a;
  int g;
  MuTuple mu;  // sorted ascending
  bool operator<(const HurwitzKey& o) const {
    return std::tie(variant, a, g, mu) < std::tie(o.variant, o.a, o.g, o.mu);
  }
};

// Memoized evaluation of normalised pruned Hurwitz numbers by the
// cut-and-join recursions, and reconstruction of their closed forms.
//
// Base cases: the (0,1) family vanishes and (0,2) is the Eulerian closed
// form for the simple family.  For the orbifold family with a >= 2 the
// recursion supplies no (0,2)/(0,1) bases; they are obtained from the
// brute-force oracle and cached.  Those pruned base searches are
// incidence-tight (every colour needs degree exactly 2), so the explored
// space is proportional to the count itself rather than the raw tuple
// space; the engine therefore skips the tuple-space formula for its base
// calls and relies on the explored-node ceiling alone.
class CutAndJoinEngine {
 public:
  explicit CutAndJoinEngine(
      Budget base_budget = Budget{1000000000UL, false});

  Rat pruned_simple(int g, const MuTuple& mu);
  Rat pruned_orbifold(long a, int g, const MuTuple& mu);

  // The symmetric polynomial of total degree 6g-6+3n equal to
  // K^_{g,n} at every positive integer tuple, reconstructed from the grid
  // {1..D+1}^n and verified at held-out points.
  Poly pruned_simple_polynomial(int g, int n);

  // Per-residue-class reconstruction, degree bound 6g-6+3n, fitted on the
  // class points of smallest |mu| and verified on held-out points.
  QuasiPoly pruned_orbifold_quasipolynomial(long a, int g, int n);

  // Cache persistence: JSON lines {variant, a, g, mu, value}.
  void save_cache(const std::string& path) const;
  struct CacheLoadReport {
    size_t loaded = 0;
    size_t mismatches = 0;
  };
  CacheLoadReport load_cache(const std::string& path, bool verify);
  size_t cache_size() const { return memo_.size(); }

 private:
  Budget base_budget_;
  std::map<HurwitzKey, Rat> memo_;

  Rat khat(Family variant, long a, int g, const MuTuple& mu);
  Rat base_02(Family variant, long a, const MuTuple& mu);
  Rat recompute(const HurwitzKey& key);
};

// Checks the unpruned cut-and-join identity exactly on one instance, with
// every normalised count taken from the enumeration oracle.
bool verify_caj_simple(int g, const MuTuple& mu, const Budget& budget = {});

}  // namespace hurwitz
