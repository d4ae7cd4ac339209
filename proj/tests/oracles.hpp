// Copyright 2026 The mhtlp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MHTLP_TESTS_ORACLES_HPP_
#define MHTLP_TESTS_ORACLES_HPP_

// Reference computations that avoid the library's own arithmetic paths.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace oracle {

inline mpz_class mod(const mpz_class& a, const mpz_class& p) {
  mpz_class r = a % p;
  if (r < 0) r += p;
  return r;
}

inline mpz_class naive_square(mpz_class base, std::uint64_t t, const mpz_class& n) {
  for (std::uint64_t i = 0; i < t; ++i) base = base * base % n;
  return base;
}

// Sum of c_k * x^k with every power computed from scratch.
inline mpz_class power_sum(const std::vector<mpz_class>& coeffs, const mpz_class& x,
                           const mpz_class& p) {
  mpz_class acc = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    mpz_class power = 1;
    for (std::size_t e = 0; e < k; ++e) power *= x;
    acc += coeffs[k] * power;
  }
  return mod(acc, p);
}

inline std::vector<mpz_class> trim(std::vector<mpz_class> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

inline std::vector<mpz_class> multiply(const std::vector<mpz_class>& a,
                                       const std::vector<mpz_class>& b, const mpz_class& p) {
  if (a.empty() || b.empty()) return {};
  std::vector<mpz_class> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  for (auto& v : c) v = mod(v, p);
  return trim(c);
}

inline std::vector<mpz_class> add(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                                  const mpz_class& p) {
  std::vector<mpz_class> c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  for (auto& v : c) v = mod(v, p);
  return trim(c);
}

// prod (x - r) * sum q_u (x + m_u), expanded directly.
inline std::vector<mpz_class> expanded_theta(const std::vector<mpz_class>& roots,
                                             const std::vector<mpz_class>& q,
                                             const std::vector<mpz_class>& m, const mpz_class& p) {
  std::vector<mpz_class> sum;
  for (std::size_t u = 0; u < q.size(); ++u)
    sum = add(sum, {mod(q[u] * m[u], p), mod(q[u], p)}, p);
  std::vector<mpz_class> out = sum;
  for (const auto& r : roots) out = multiply(out, {mod(-r, p), 1}, p);
  return out;
}

// Every element of F_p that zeroes the polynomial (small p only).
inline std::vector<mpz_class> exhaustive_roots(const std::vector<mpz_class>& coeffs,
                                               unsigned long p) {
  std::vector<mpz_class> roots;
  for (unsigned long v = 0; v < p; ++v)
    if (power_sum(coeffs, v, p) == 0) roots.emplace_back(v);
  return roots;
}

// Solves the Vandermonde system by Gauss-Jordan elimination.
inline std::vector<mpz_class> vandermonde_solve(const std::vector<mpz_class>& xs,
                                                const std::vector<mpz_class>& ys,
                                                const mpz_class& p) {
  const std::size_t n = xs.size();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class power = 1;
    for (std::size_t k = 0; k < n; ++k) {
      a[i][k] = power;
      power = mod(power * xs[i], p);
    }
    a[i][n] = mod(ys[i], p);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (a[pivot][col] == 0) ++pivot;
    std::swap(a[pivot], a[col]);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), a[col][col].get_mpz_t(), p.get_mpz_t());
    for (auto& v : a[col]) v = mod(v * inv, p);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mpz_class f = a[r][col];
      for (std::size_t k = col; k <= n; ++k) a[r][k] = mod(a[r][k] - f * a[col][k], p);
    }
  }
  std::vector<mpz_class> coeffs(n);
  for (std::size_t i = 0; i < n; ++i) coeffs[i] = a[i][n];
  return trim(coeffs);
}

}  // namespace oracle

#endif  // MHTLP_TESTS_ORACLES_HPP_
