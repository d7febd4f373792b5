#include "hurwitz/tables.hpp"

#include <functional>

namespace hurwitz {

Poly sym_power(int nvars, int k) {
  Poly s(nvars);
  for (int v = 0; v < nvars; ++v) {
    Exponents e(nvars, 0);
    e[v] = k;
    s += Poly::monomial(nvars, e, 1);
  }
  return s;
}

Poly sym_ordered(int nvars, const std::vector<int>& pattern) {
  Poly s(nvars);
  std::vector<int> idx;
  std::vector<char> used(nvars, 0);
  std::function<void()> rec = [&]() {
    if (idx.size() == pattern.size()) {
      Exponents e(nvars, 0);
      for (size_t t = 0; t < idx.size(); ++t) e[idx[t]] += pattern[t];
      s += Poly::monomial(nvars, e, 1);
      return;
    }
    for (int v = 0; v < nvars; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      idx.push_back(v);
      rec();
      idx.pop_back();
      used[v] = 0;
    }
  };
  rec();
  return s;
}

namespace {

Poly uni(const std::vector<std::pair<long, std::pair<long, long>>>& terms) {
  // terms: (exponent, coefficient p/q)
  Poly p(1);
  for (const auto& [e, c] : terms)
    p += Poly::monomial(1, {static_cast<int>(e)}, make_rat(c.first, c.second));
  return p;
}

}  // namespace

const std::vector<KhatTableRow>& khat_table() {
  static const std::vector<KhatTableRow> rows = [] {
    std::vector<KhatTableRow> t;
    t.push_back({0, 3, Poly::constant(3, 1)});

    {
      Poly r = sym_power(4, 2) * make_rat(1, 2) + sym_power(4, 1) * make_rat(1, 2);
      t.push_back({0, 4, r});
    }
    {
      Poly r = sym_power(5, 4) * make_rat(1, 8) +
               sym_ordered(5, {2, 2}) * make_rat(1, 4) +
               sym_power(5, 3) * make_rat(5, 12) +
               sym_ordered(5, {2, 1}) * make_rat(1, 2) +
               sym_power(5, 2) * make_rat(3, 8) +
               sym_ordered(5, {1, 1}) * make_rat(1, 4) +
               sym_power(5, 1) * make_rat(1, 12);
      t.push_back({0, 5, r});
    }
    t.push_back({1, 1, uni({{2, {1, 48}}, {1, {1, 48}}, {0, {-1, 24}}})});
    {
      Poly r = sym_power(2, 4) * make_rat(1, 192) +
               sym_ordered(2, {2, 2}) * make_rat(1, 192) +
               sym_power(2, 3) * make_rat(5, 288) +
               sym_ordered(2, {2, 1}) * make_rat(1, 96) +
               sym_power(2, 2) * make_rat(-1, 192) +
               sym_ordered(2, {1, 1}) * make_rat(1, 192) +
               sym_power(2, 1) * make_rat(-5, 288);
      t.push_back({1, 2, r});
    }
    t.push_back({2, 1, uni({{8, {1, 442368}},
                            {7, {1, 36864}},
                            {6, {271, 3317760}},
                            {5, {-7, 276480}},
                            {4, {-1873, 6635520}},
                            {3, {-53, 552960}},
                            {2, {329, 1658880}},
                            {1, {13, 138240}}})});
    return t;
  }();
  return rows;
}

const std::vector<QTableRow>& q_table() {
  static const std::vector<QTableRow> rows = [] {
    std::vector<QTableRow> t;
    t.push_back({0, Poly::constant(1, 1)});
    t.push_back({1, uni({{2, {1, 2}}, {1, {1, 2}}})});
    t.push_back({2, uni({{4, {3, 24}}, {3, {10, 24}}, {2, {9, 24}}, {1, {2, 24}}})});
    t.push_back({3, uni({{6, {1, 48}},
                         {5, {7, 48}},
                         {4, {17, 48}},
                         {3, {17, 48}},
                         {2, {6, 48}}})});
    t.push_back({4, uni({{8, {15, 5760}},
                         {7, {180, 5760}},
                         {6, {830, 5760}},
                         {5, {1848, 5760}},
                         {4, {2015, 5760}},
                         {3, {900, 5760}},
                         {2, {20, 5760}},
                         {1, {-48, 5760}}})});
    t.push_back({5, uni({{10, {3, 11520}},
                         {9, {55, 11520}},
                         {8, {410, 11520}},
                         {7, {1598, 11520}},
                         {6, {3467, 11520}},
                         {5, {4055, 11520}},
                         {4, {2120, 11520}},
                         {3, {52, 11520}},
                         {2, {-240, 11520}}})});
    return t;
  }();
  return rows;
}

const std::vector<GwTableRow>& gw_table() {
  static const std::vector<GwTableRow> rows = [] {
    std::vector<GwTableRow> t;
    t.push_back({0, 3, {0, 2}, Poly(3)});
    t.push_back({0, 3, {1, 3}, Poly::constant(3, 1)});
    t.push_back({1, 1, {0}, Poly(1)});
    t.push_back({1, 1, {1}, uni({{2, {1, 48}}, {0, {-3, 48}}})});
    {
      Poly s2 = sym_power(4, 2);
      t.push_back({0, 4, {0, 4}, s2 * make_rat(1, 4)});
      t.push_back({0, 4, {1, 3}, Poly(4)});
      t.push_back(
          {0, 4, {2}, (s2 - Poly::constant(4, 2)) * make_rat(1, 4)});
    }
    {
      Poly s2 = sym_power(2, 2);
      t.push_back({1, 2, {0},
                   (s2 - Poly::constant(2, 8)) * s2 * make_rat(1, 384)});
      t.push_back({1, 2, {1}, Poly(2)});
      t.push_back({1, 2, {2},
                   (s2 - Poly::constant(2, 6)) * (s2 - Poly::constant(2, 2)) *
                       make_rat(1, 384)});
    }
    {
      Poly m2 = Poly::monomial(1, {2}, 1);
      Poly a = m2 - Poly::constant(1, 1);
      Poly b = m2 * 5 * m2;  // 5 mu^4
      Poly inner = b - m2 * 186 + Poly::constant(1, 1605);
      t.push_back({2, 1, {0}, Poly(1)});
      // 2^16 * 3^3 * 5 = 8847360
      t.push_back({2, 1, {1}, a * a * inner * make_rat(1, 8847360)});
    }
    return t;
  }();
  return rows;
}

}  // namespace hurwitz
