#include <gtest/gtest.h>

#include "lensspec/arith.hpp"
#include "oracles.hpp"

using namespace lensspec;

TEST(Arith, ModFloorIsNonnegative) {
  EXPECT_EQ(mod_floor(-1, 7), 6);
  EXPECT_EQ(mod_floor(-14, 7), 0);
  EXPECT_EQ(mod_floor(15, 7), 1);
  EXPECT_EQ(mod_floor(-5, 1), 0);
}

TEST(Arith, FoldResiduePicksTheSmallerRepresentative) {
  EXPECT_EQ(fold_residue(43, 49), 6);
  EXPECT_EQ(fold_residue(29, 49), 20);
  EXPECT_EQ(fold_residue(-6, 49), 6);
  EXPECT_EQ(fold_residue(5, 10), 5);
}

TEST(Arith, InverseMatchesSearch) {
  for (int64_t q = 2; q <= 60; ++q)
    for (int64_t a = 1; a < q; ++a) {
      if (std::gcd(a, q) != 1) {
        EXPECT_THROW(inverse_mod(a, q), std::invalid_argument);
        continue;
      }
      const int64_t inv = inverse_mod(a, q);
      EXPECT_EQ(a * inv % q, 1) << a << " mod " << q;
    }
}

TEST(Arith, PhiCountsUnits) {
  for (int64_t q = 1; q <= 200; ++q) {
    int64_t count = 0;
    for (int64_t c = 0; c < q; ++c) count += std::gcd(c, q) == 1;
    EXPECT_EQ(euler_phi(q), count) << q;
    if (q > 1) EXPECT_EQ(static_cast<int64_t>(units_mod(q).size()), count);
  }
}

TEST(Arith, PowMod) {
  EXPECT_EQ(pow_mod(8, 3, 49), 512 % 49);
  EXPECT_EQ(pow_mod(3, 0, 7), 1);
  EXPECT_EQ(pow_mod(5, 6, 7), 1);
}

TEST(Arith, BinomialMatchesPascal) {
  std::vector<std::vector<uint64_t>> pascal(60);
  for (std::size_t n = 0; n < pascal.size(); ++n) {
    pascal[n].assign(n + 1, 1);
    for (std::size_t k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    for (std::size_t k = 0; k <= n; ++k)
      EXPECT_EQ(binomial(static_cast<int64_t>(n), static_cast<int64_t>(k)), pascal[n][k]);
  }
  EXPECT_EQ(binomial(5, 7), 0U);
  EXPECT_EQ(binomial(5, -1), 0U);
}

TEST(Arith, CompositionsMatchEnumeration) {
  for (int64_t parts = 0; parts <= 4; ++parts)
    for (int64_t n = 0; n <= 8; ++n) {
      uint64_t brute = 0;
      if (parts == 0) {
        brute = n == 0;
      } else {
        oracle::for_each_in_box(static_cast<int>(parts), n, [&](const std::vector<int64_t>& v) {
          int64_t sum = 0;
          for (int64_t x : v) {
            if (x < 0) return;
            sum += x;
          }
          brute += sum == n;
        });
      }
      EXPECT_EQ(compositions(n, parts), brute) << n << " into " << parts;
    }
}
