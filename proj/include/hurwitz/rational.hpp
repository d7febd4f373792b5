#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz {

// All arithmetic in the engine is exact.  Integers and rationals are backed
// by GMP; mpq_class keeps values in lowest terms with positive denominator,
// so equality is structural.
using Int = mpz_class;
using Rat = mpq_class;

// Ordered ramification profile (mu_1, ..., mu_n), entries >= 1.
using MuTuple = std::vector<long>;

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline long mu_sum(const MuTuple& mu) {
  long s = 0;
  for (long m : mu) {
    if (m < 1) throw DomainError("mu entries must be positive");
    s += m;
  }
  return s;
}

inline Int mu_product(const MuTuple& mu) {
  Int p = 1;
  for (long m : mu) p *= m;
  return p;
}

// "p/q", or just "p" when q = 1.
std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

}  // namespace hurwitz
