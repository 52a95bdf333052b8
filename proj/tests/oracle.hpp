#pragma once

// Test-side reference computations, independent of the library: a different
// prime, naive Gaussian elimination in 64-bit arithmetic, and multiplicity
// conditions obtained by restricting to lines through the point instead of
// by translating coefficients.

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

inline constexpr std::uint64_t P = 2147483647;  // 2^31 - 1

inline std::uint64_t mulm(std::uint64_t a, std::uint64_t b) { return a * b % P; }
inline std::uint64_t addm(std::uint64_t a, std::uint64_t b) { return (a + b) % P; }
inline std::uint64_t powm(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulm(a, a))
    if (e & 1) r = mulm(r, a);
  return r;
}
inline std::uint64_t invm(std::uint64_t a) { return powm(a, P - 2); }

using Row = std::vector<std::uint64_t>;

inline long rank(std::vector<Row> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  long r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<long>(m.size()); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    std::uint64_t inv = invm(m[r][c]);
    for (auto& x : m[r]) x = mulm(x, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == static_cast<std::size_t>(r) || m[i][c] == 0) continue;
      std::uint64_t f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + P - mulm(f, m[r][j])) % P;
    }
    ++r;
  }
  return r;
}

// All exponent vectors of total degree <= d in n variables (any order).
inline void exps_rec(int n, int left, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= left; ++e) {
    cur.push_back(e);
    exps_rec(n, left - e, cur, out);
    cur.pop_back();
  }
}
inline std::vector<std::vector<int>> exponents(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  exps_rec(n, d, cur, out);
  return out;
}

inline long binom(int n, int k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// s^k coefficients, k < m, of x^alpha restricted to s -> q + s v.
inline std::vector<std::uint64_t> restricted(const std::vector<int>& alpha, const Row& q, const Row& v, int m) {
  std::vector<std::uint64_t> poly(m, 0);
  poly[0] = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (int e = 0; e < alpha[i]; ++e) {
      std::vector<std::uint64_t> next(m, 0);
      for (int k = 0; k < m; ++k) {
        next[k] = addm(next[k], mulm(poly[k], q[i]));
        if (k + 1 < m) next[k + 1] = addm(next[k + 1], mulm(poly[k], v[i]));
      }
      poly = next;
    }
  }
  return poly;
}

// Conditions for multiplicity >= m at q on polynomials of degree <= d:
// order < m along enough random directions to determine every form of degree < m.
inline std::vector<Row> fat_point_conditions(const Row& q, int m, int d, std::mt19937_64& rng) {
  const int n = static_cast<int>(q.size());
  const auto exps = exponents(n, d);
  const long dirs = binom(n - 1 + m - 1, n - 1) + 2;
  std::uniform_int_distribution<std::uint64_t> u(1, P - 1);
  std::vector<Row> rows;
  for (long j = 0; j < dirs; ++j) {
    Row v(n);
    for (auto& x : v) x = u(rng);
    std::vector<Row> cols;
    for (const auto& a : exps) cols.push_back(restricted(a, q, v, m));
    for (int k = 0; k < m; ++k) {
      Row r(exps.size());
      for (std::size_t c = 0; c < exps.size(); ++c) r[c] = cols[c][k];
      rows.push_back(r);
    }
  }
  return rows;
}

// dim L_{n,d}(mults) in the affine chart with random points mod 2^31 - 1.
inline long generic_dim(int n, int d, const std::vector<int>& mults, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> u(0, P - 1);
  std::vector<Row> all;
  for (int m : mults) {
    Row q(n);
    for (auto& x : q) x = u(rng);
    auto rows = fat_point_conditions(q, m, d, rng);
    all.insert(all.end(), rows.begin(), rows.end());
  }
  return binom(n + d, n) - rank(all);
}

}  // namespace oracle
