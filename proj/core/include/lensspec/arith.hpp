#pragma once

// Small exact integer helpers shared by the lattice, isometry and weight code.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace lensspec {

/// Least nonnegative residue of x modulo q (q >= 1).
constexpr int64_t mod_floor(int64_t x, int64_t q) {
  const int64_t r = x % q;
  return r < 0 ? r + q : r;
}

/// Folds a residue c to min(c, q - c); the sign of a rotation angle is an isometry.
constexpr int64_t fold_residue(int64_t c, int64_t q) {
  const int64_t r = mod_floor(c, q);
  return r <= q - r ? r : q - r;
}

constexpr int64_t mul_mod(int64_t a, int64_t b, int64_t q) {
  return static_cast<int64_t>((static_cast<__int128>(mod_floor(a, q)) * mod_floor(b, q)) % q);
}

constexpr int64_t pow_mod(int64_t base, uint64_t exp, int64_t q) {
  int64_t result = 1 % q;
  int64_t b = mod_floor(base, q);
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, b, q);
    b = mul_mod(b, b, q);
    exp >>= 1U;
  }
  return result;
}

/// Inverse of a modulo q; throws if gcd(a, q) != 1.
inline int64_t inverse_mod(int64_t a, int64_t q) {
  if (q == 1) return 0;
  int64_t old_r = mod_floor(a, q), r = q;
  int64_t old_s = 1, s = 0;
  while (r != 0) {
    const int64_t quot = old_r / r;
    int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::invalid_argument("inverse_mod: argument not a unit");
  return mod_floor(old_s, q);
}

/// Units of Z/qZ in increasing order. For q = 1 the single class 0 is returned.
inline std::vector<int64_t> units_mod(int64_t q) {
  std::vector<int64_t> out;
  if (q == 1) {
    out.push_back(0);
    return out;
  }
  for (int64_t c = 1; c < q; ++c)
    if (std::gcd(c, q) == 1) out.push_back(c);
  return out;
}

inline int64_t euler_phi(int64_t q) {
  int64_t result = q;
  int64_t n = q;
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Exact binomial coefficient; zero outside 0 <= k <= n.
inline uint64_t binomial(int64_t n, int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (int64_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
  }
  return static_cast<uint64_t>(acc);
}

/// Number of ways to write n as an ordered sum of `parts` nonnegative integers.
inline uint64_t compositions(int64_t n, int64_t parts) {
  if (n < 0) return 0;
  if (parts == 0) return n == 0 ? 1 : 0;
  return binomial(n + parts - 1, parts - 1);
}

}  // namespace lensspec
