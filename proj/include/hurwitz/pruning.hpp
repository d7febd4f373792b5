#pragma once

#include <functional>
#include <optional>

#include "hurwitz/rational.hpp"

namespace hurwitz {

enum class Direction { PrunedToFull, FullToPruned };

// Value providers let the transforms draw interchangeably from the
// recursion, the enumeration oracles, or a stored cache.  A provider returns
// nullopt when it cannot supply a value; the transform then raises a
// dependency error naming the missing key.
using ValueSource = std::function<std::optional<Rat>(int g, const MuTuple&)>;

struct DependencyError : DomainError {
  using DomainError::DomainError;
};

// Number of ways to attach mu - nu tree edges to a pruned face of perimeter
// nu inside a face of perimeter mu: mu^(mu-nu).  nu > mu gives 0.
Int forest_count(long mu, long nu);

// Weighted rooted-forest count k(ae+k)^(e-1), weight a per internal edge;
// e = 0 gives 1.
Int forest_count_orbifold(long a, long k, long e);

// Triangular correspondence between normalised full and pruned simple
// Hurwitz numbers.  PrunedToFull consumes pruned values; FullToPruned
// consumes full values and solves the triangular system.  (g,n) = (0,1) is
// outside the correspondence.
Rat transform_simple(Direction dir, int g, const MuTuple& mu,
                     const ValueSource& source);

// Same on the a-step lattice: only nu with nu_i = mu_i (mod a) contribute.
Rat transform_orbifold(long a, Direction dir, int g, const MuTuple& mu,
                       const ValueSource& source);

// Belyi correspondence M <-> N on the parity lattice; stable (g,n) only
// (the unstable cases demonstrably fail the relation).
Rat transform_belyi(Direction dir, int g, const MuTuple& mu,
                    const ValueSource& source);

}  // namespace hurwitz
