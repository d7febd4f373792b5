#pragma once

#include <map>

#include "hurwitz/polynomial.hpp"

namespace hurwitz {

// Function that is polynomial on each residue class of its arguments modulo
// `modulus`, up to the exponential envelope envelope_base^(|mu|/modulus).
// A missing residue class is identically zero.  With envelope_base = 1 this
// is a plain quasi-polynomial; the pruned orbifold numbers carry
// envelope_base = a (their per-class values are a^(|mu|/a) times a
// polynomial, never a polynomial outright for a >= 2).
struct QuasiPoly {
  long modulus = 1;
  long envelope_base = 1;
  int nvars = 1;
  std::map<std::vector<int>, Poly> branches;

  std::vector<int> residues_of(const MuTuple& mu) const {
    std::vector<int> r(mu.size());
    for (size_t i = 0; i < mu.size(); ++i)
      r[i] = static_cast<int>(((mu[i] % modulus) + modulus) % modulus);
    return r;
  }

  const Poly* branch(const std::vector<int>& residues) const {
    auto it = branches.find(residues);
    return it == branches.end() ? nullptr : &it->second;
  }

  Rat envelope_at(const MuTuple& mu) const {
    if (envelope_base == 1) return 1;
    long s = mu_sum(mu);
    if (s % modulus != 0)
      throw DomainError("quasi-polynomial envelope needs modulus | |mu|");
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(envelope_base),
                  static_cast<unsigned long>(s / modulus));
    return Rat(p);
  }

  Rat eval_at(const MuTuple& mu) const {
    const Poly* p = branch(residues_of(mu));
    if (!p) return 0;
    return p->eval_at(mu) * envelope_at(mu);
  }

  std::string to_json() const;
};

}  // namespace hurwitz
