#pragma once

// Brute-force reference computations for the test suites. Everything here is
// deliberately naive and shares no code with the library beyond its value types.

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "lensspec/isometry.hpp"
#include "lensspec/lattice.hpp"

namespace oracle {

inline int64_t mod(int64_t x, int64_t q) { return ((x % q) + q) % q; }

inline uint64_t choose(int64_t n, int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  uint64_t r = 1;
  for (int64_t i = 1; i <= k; ++i) r = r * static_cast<uint64_t>(n - k + i) / static_cast<uint64_t>(i);
  return r;
}

template <class Fn>
void for_each_in_box(int m, int64_t radius, Fn&& fn) {
  std::vector<int64_t> v(static_cast<std::size_t>(m), -radius);
  while (true) {
    fn(v);
    std::size_t j = 0;
    while (j < v.size() && v[j] == radius) v[j++] = -radius;
    if (j == v.size()) return;
    ++v[j];
  }
}

/// N(k, z) by scanning the whole box [-k, k]^m.
inline uint64_t box_count(int64_t q, const std::vector<int64_t>& s, int64_t k, int z) {
  uint64_t count = 0;
  for_each_in_box(static_cast<int>(s.size()), k, [&](const std::vector<int64_t>& v) {
    int64_t norm = 0, dot = 0;
    int zeros = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      norm += std::abs(v[j]);
      zeros += v[j] == 0;
      dot += v[j] * s[j];
    }
    if (norm == k && zeros == z && mod(dot, q) == 0) ++count;
  });
  return count;
}

/// Reduced counts over the open cube |a_j| < q, by scanning the cube.
inline std::map<std::pair<int64_t, int>, uint64_t> box_reduced(int64_t q, const std::vector<int64_t>& s) {
  std::map<std::pair<int64_t, int>, uint64_t> out;
  for_each_in_box(static_cast<int>(s.size()), q - 1, [&](const std::vector<int64_t>& v) {
    int64_t norm = 0, dot = 0;
    int zeros = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      norm += std::abs(v[j]);
      zeros += v[j] == 0;
      dot += v[j] * s[j];
    }
    if (mod(dot, q) == 0) ++out[{norm, zeros}];
  });
  return out;
}

/// Isometry by trying every unit, permutation and sign pattern.
inline bool brute_isometric(int64_t q, std::vector<int64_t> a, const std::vector<int64_t>& b) {
  const std::size_t m = a.size();
  std::vector<std::size_t> perm(m);
  for (int64_t t = 1; t < std::max<int64_t>(q, 2); ++t) {
    if (std::gcd(t, q) != 1) continue;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (uint32_t signs = 0; signs < (1U << m); ++signs) {
        bool ok = true;
        for (std::size_t j = 0; j < m && ok; ++j) {
          const int64_t eps = (signs >> j) & 1U ? -1 : 1;
          ok = mod(b[perm[j]], q) == mod(t * eps * a[j], q);
        }
        if (ok) return true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return false;
}

/// Number of isometry classes of m-tuples of units mod q, by flood fill over all tuples.
inline std::size_t brute_class_count(int64_t q, int m) {
  std::vector<int64_t> units;
  for (int64_t u = 1; u < q; ++u)
    if (std::gcd(u, q) == 1) units.push_back(u);
  std::set<std::vector<int64_t>> seen;
  std::size_t classes = 0;
  std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
  while (true) {
    std::vector<int64_t> s;
    for (auto i : idx) s.push_back(units[i]);
    if (!seen.contains(s)) {
      ++classes;
      // Orbit: t * eps * s, then every permutation.
      for (int64_t t : units)
        for (uint32_t signs = 0; signs < (1U << m); ++signs) {
          std::vector<int64_t> img(s.size());
          for (std::size_t j = 0; j < s.size(); ++j) img[j] = mod(((signs >> j) & 1U ? -t : t) * s[j], q);
          std::sort(img.begin(), img.end());
          do seen.insert(img);
          while (std::next_permutation(img.begin(), img.end()));
        }
    }
    std::size_t j = 0;
    while (j < idx.size() && idx[j] + 1 == units.size()) idx[j++] = 0;
    if (j == idx.size()) break;
    ++idx[j];
  }
  return classes;
}

/// Weight multiplicity in the exterior power of C^(2m): p-subsets of {+-e_i} summing to mu.
inline uint64_t exterior_power_mult(int p, const std::vector<int64_t>& mu) {
  const int m = static_cast<int>(mu.size());
  uint64_t count = 0;
  for (uint32_t mask = 0; mask < (1U << (2 * m)); ++mask) {
    if (std::popcount(mask) != p) continue;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      const int64_t coord = static_cast<int64_t>((mask >> (2 * i)) & 1U) - static_cast<int64_t>((mask >> (2 * i + 1)) & 1U);
      ok = coord == mu[static_cast<std::size_t>(i)];
    }
    count += ok;
  }
  return count;
}

/// Weight multiplicity in the degree-k symmetric power of C^(2m).
inline uint64_t symmetric_power_mult(int64_t k, const std::vector<int64_t>& mu) {
  if (k < 0) return 0;
  // ways[d]: monomials in the processed coordinates of total degree d.
  std::vector<uint64_t> ways(static_cast<std::size_t>(k + 1), 0);
  ways[0] = 1;
  for (int64_t a : mu) {
    std::vector<uint64_t> next(ways.size(), 0);
    for (int64_t d = 0; d <= k; ++d) {
      if (ways[static_cast<std::size_t>(d)] == 0) continue;
      // x^i y^j with i - j = a.
      for (int64_t j = std::max<int64_t>(0, -a); d + a + 2 * j <= k; ++j)
        next[static_cast<std::size_t>(d + a + 2 * j)] += ways[static_cast<std::size_t>(d)];
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(k)];
}

/// Degree-k harmonics: S^k minus S^(k-2).
inline uint64_t harmonic_mult(int64_t k, const std::vector<int64_t>& mu) {
  return symmetric_power_mult(k, mu) - symmetric_power_mult(k - 2, mu);
}

inline uint64_t harmonic_dimension(int64_t k, int m) {
  return choose(k + 2 * m - 1, 2 * m - 1) - choose(k + 2 * m - 3, 2 * m - 1);
}

/// Random lens parameters with every s_j a unit mod q.
inline lensspec::LensParams random_lens(std::mt19937_64& rng, int m, int64_t q_lo, int64_t q_hi) {
  std::uniform_int_distribution<int64_t> qd(q_lo, q_hi);
  const int64_t q = qd(rng);
  std::uniform_int_distribution<int64_t> sd(1, std::max<int64_t>(q - 1, 1));
  std::vector<int64_t> s;
  while (static_cast<int>(s.size()) < m) {
    const int64_t c = q == 1 ? 0 : sd(rng);
    if (std::gcd(c, q) == 1) s.push_back(c);
  }
  return {q, s};
}

}  // namespace oracle
