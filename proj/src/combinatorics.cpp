#include "hurwitz/combinatorics.hpp"

#include <mutex>
#include <vector>

namespace hurwitz {

Int factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int double_factorial(long n) {
  if (n == -1 || n == 0) return 1;
  if (n < -1) throw DomainError("double factorial of argument < -1");
  Int r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) throw DomainError("binomial out of range");
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

namespace {

// row m holds A(m, 0..m-1)
std::vector<std::vector<Int>> g_eulerian_rows = {{}, {Int(1)}};
std::mutex g_eulerian_mutex;

// row n holds S(n, 0..n)
std::vector<std::vector<Int>> g_stirling_rows = {{Int(1)}};
std::mutex g_stirling_mutex;

}  // namespace

Int eulerian(long m, long k) {
  if (m < 1) throw DomainError("eulerian: m must be >= 1");
  if (k < 0 || k >= m) return 0;
  std::lock_guard<std::mutex> lock(g_eulerian_mutex);
  while (static_cast<long>(g_eulerian_rows.size()) <= m) {
    long r = static_cast<long>(g_eulerian_rows.size());
    const auto& prev = g_eulerian_rows[r - 1];
    std::vector<Int> row(r);
    for (long j = 0; j < r; ++j) {
      Int v = 0;
      if (j < r - 1) v += Int(j + 1) * prev[j];
      if (j >= 1) v += Int(r - j) * prev[j - 1];
      row[j] = v;
    }
    g_eulerian_rows.push_back(std::move(row));
  }
  return g_eulerian_rows[m][k];
}

Int stirling2(long n, long k) {
  if (n < 0 || k < 0) throw DomainError("stirling2: negative argument");
  if (k > n) return 0;
  std::lock_guard<std::mutex> lock(g_stirling_mutex);
  while (static_cast<long>(g_stirling_rows.size()) <= n) {
    long r = static_cast<long>(g_stirling_rows.size());
    const auto& prev = g_stirling_rows[r - 1];
    std::vector<Int> row(r + 1);
    row[0] = 0;
    for (long j = 1; j <= r; ++j) {
      Int v = prev[j - 1];
      if (j < r) v += Int(j) * prev[j];
      row[j] = v;
    }
    g_stirling_rows.push_back(std::move(row));
  }
  return g_stirling_rows[n][k];
}

}  // namespace hurwitz
