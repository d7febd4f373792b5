#pragma once

#include <map>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

using Exponents = std::vector<int>;

// Graded lexicographic: total degree first, then lexicographic.  This is the
// term order used everywhere a polynomial is iterated or serialized, which
// makes output byte-deterministic.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Exact multivariate polynomial with rational coefficients.  Zero
// coefficients are never stored.
class Poly {
 public:
  Poly() : nvars_(1) {}
  explicit Poly(int nvars);

  static Poly constant(int nvars, const Rat& c);
  static Poly var(int nvars, int v);
  static Poly monomial(int nvars, const Exponents& e, const Rat& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(int v) const;
  const std::map<Exponents, Rat, GrlexLess>& terms() const { return terms_; }
  Rat coeff(const Exponents& e) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Rat eval(const std::vector<Rat>& x) const;
  Rat eval_at(const MuTuple& mu) const;

  // Substitute polynomial q (same variable set) for variable v.
  Poly substitute(int v, const Poly& q) const;
  // Coefficient of x_v^k, returned with x_v-degree zero.
  Poly coeff_of_power(int v, int k) const;
  // Reinterpret over a wider variable set; variable v maps to variable
  // map[v] of the new set.
  Poly remap_vars(int new_nvars, const std::vector<int>& map) const;

  // Exact division by the monomial x_0^{e_0}...; false if not divisible.
  bool divide_by_monomial(const Exponents& e, Poly* quotient) const;
  // Exact division by (c0 + x_0 + x_1 + ... + x_{n-1}); false with no
  // quotient if the remainder is nonzero.
  bool divide_by_affine_sum(const Rat& c0, Poly* quotient) const;

  // JSON array of {"exp":[...],"coef":"p/q"} in graded-lex order.
  std::string to_json() const;
  static Poly from_json(const std::string& json, int nvars);
  std::string to_string(const std::string& var_stem = "x") const;

 private:
  int nvars_;
  std::map<Exponents, Rat, GrlexLess> terms_;
  void add_term(const Exponents& e, const Rat& c);
  void check_same_vars(const Poly& o) const;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

}  // namespace hurwitz
