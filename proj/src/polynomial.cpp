#include "hurwitz/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace hurwitz {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

Poly::Poly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw DomainError("polynomial needs at least one variable");
}

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Poly Poly::var(int nvars, int v) {
  Exponents e(nvars, 0);
  e.at(v) = 1;
  return monomial(nvars, e, 1);
}

Poly Poly::monomial(int nvars, const Exponents& e, const Rat& c) {
  Poly p(nvars);
  if (static_cast<int>(e.size()) != nvars)
    throw DomainError("monomial exponent arity mismatch");
  p.add_term(e, c);
  return p;
}

void Poly::add_term(const Exponents& e, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::check_same_vars(const Poly& o) const {
  if (nvars_ != o.nvars_) throw DomainError("polynomial arity mismatch");
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  // grlex order: the last term has maximal total degree
  const Exponents& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int Poly::degree_in(int v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return terms_.empty() ? -1 : d;
}

Rat Poly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, Rat(-c));
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, Rat(-c));
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_same_vars(o);
  Poly r(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, Rat(ca * cb));
    }
  }
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, Rat(k * c));
  return r;
}

bool Poly::operator==(const Poly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Rat Poly::eval(const std::vector<Rat>& x) const {
  if (static_cast<int>(x.size()) != nvars_)
    throw DomainError("eval arity mismatch");
  // per-variable power tables
  std::vector<std::vector<Rat>> pows(nvars_);
  for (int v = 0; v < nvars_; ++v) pows[v].push_back(1);
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int v = 0; v < nvars_; ++v) {
      while (static_cast<int>(pows[v].size()) <= e[v])
        pows[v].push_back(Rat(pows[v].back() * x[v]));
      t *= pows[v][e[v]];
    }
    total += t;
  }
  return total;
}

Rat Poly::eval_at(const MuTuple& mu) const {
  std::vector<Rat> x;
  x.reserve(mu.size());
  for (long m : mu) x.emplace_back(m);
  return eval(x);
}

Poly Poly::substitute(int v, const Poly& q) const {
  check_same_vars(q);
  std::vector<Poly> qpow = {Poly::constant(nvars_, 1)};
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(qpow.size()) <= e[v])
      qpow.push_back(qpow.back() * q);
    Exponents rest = e;
    rest[v] = 0;
    r += Poly::monomial(nvars_, rest, c) * qpow[e[v]];
  }
  return r;
}

Poly Poly::coeff_of_power(int v, int k) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[v] != k) continue;
    Exponents rest = e;
    rest[v] = 0;
    r.add_term(rest, c);
  }
  return r;
}

Poly Poly::remap_vars(int new_nvars, const std::vector<int>& map) const {
  if (static_cast<int>(map.size()) != nvars_)
    throw DomainError("remap arity mismatch");
  Poly r(new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponents ne(new_nvars, 0);
    for (int v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      ne.at(map[v]) += e[v];
    }
    r.add_term(ne, c);
  }
  return r;
}

bool Poly::divide_by_monomial(const Exponents& e, Poly* quotient) const {
  Poly q(nvars_);
  for (const auto& [te, c] : terms_) {
    Exponents ne(nvars_);
    for (int v = 0; v < nvars_; ++v) {
      ne[v] = te[v] - e[v];
      if (ne[v] < 0) return false;
    }
    q.terms_.emplace(ne, c);
  }
  *quotient = q;
  return true;
}

bool Poly::divide_by_affine_sum(const Rat& c0, Poly* quotient) const {
  // Monic in x_0: synthetic division by x_0 + (c0 + x_1 + ... + x_{n-1}).
  int dtop = degree_in(0);
  Poly b = Poly::constant(nvars_, c0);
  for (int v = 1; v < nvars_; ++v) b += Poly::var(nvars_, v);
  std::vector<Poly> cs;  // coefficients in x_0
  for (int k = 0; k <= std::max(dtop, 0); ++k) cs.push_back(coeff_of_power(0, k));
  Poly q(nvars_);
  for (int k = dtop; k >= 1; --k) {
    Poly qk = cs[k];  // quotient coefficient of x_0^{k-1}
    Exponents e(nvars_, 0);
    e[0] = k - 1;
    q += Poly::monomial(nvars_, e, 1) * qk;
    cs[k - 1] -= qk * b;
  }
  if (dtop < 0 ? !is_zero() : !cs[0].is_zero()) return false;
  *quotient = q;
  return true;
}

std::string Poly::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::ordered_json t;
    t["exp"] = e;
    t["coef"] = rat_to_string(c);
    arr.push_back(t);
  }
  return arr.dump();
}

Poly Poly::from_json(const std::string& json, int nvars) {
  auto arr = nlohmann::json::parse(json);
  Poly p(nvars);
  for (const auto& t : arr) {
    Exponents e = t.at("exp").get<Exponents>();
    if (static_cast<int>(e.size()) != nvars)
      throw DomainError("polynomial json arity mismatch");
    p.add_term(e, rat_from_string(t.at("coef").get<std::string>()));
  }
  return p;
}

std::string Poly::to_string(const std::string& var_stem) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    first = false;
    Rat a = abs(c);
    bool has_var = std::any_of(e.begin(), e.end(), [](int k) { return k > 0; });
    if (a != 1 || !has_var) out << rat_to_string(a);
    bool star = (a != 1);
    for (int v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      if (star) out << "*";
      out << var_stem << (nvars_ > 1 ? std::to_string(v + 1) : "");
      if (e[v] > 1) out << "^" << e[v];
      star = true;
    }
  }
  return out.str();
}

}  // namespace hurwitz
