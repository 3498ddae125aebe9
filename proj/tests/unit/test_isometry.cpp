#include <random>

#include <gtest/gtest.h>

#include "lensspec/arith.hpp"
#include "lensspec/isometry.hpp"
#include "oracles.hpp"

using namespace lensspec;

TEST(LensParams, Validation) {
  EXPECT_THROW(LensParams(10, {1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(LensParams(10, {1}), std::invalid_argument);
  EXPECT_THROW(LensParams(0, {1, 1}), std::invalid_argument);
  EXPECT_EQ(LensParams(49, {1, 6, 15}).to_string(), "L(49; 1,6,15)");
  EXPECT_EQ(LensParams::sphere(3).q(), 1);
  EXPECT_EQ(LensParams::sphere(3).m(), 3);
}

TEST(Isometry, KnownPairs) {
  // Multiplying (1, 43, 29) by -1 gives (48, 6, 20) = (-1, 6, 20).
  EXPECT_TRUE(are_isometric(LensParams(49, {1, 43, 29}), LensParams(49, {1, 6, 20})));
  EXPECT_FALSE(are_isometric(LensParams(49, {1, 6, 15}), LensParams(49, {1, 6, 20})));
  EXPECT_TRUE(are_isometric(LensParams(11, {1, 2, 3}), LensParams(11, {3, 1, 2})));
  EXPECT_FALSE(are_isometric(LensParams(11, {1, 2, 3}), LensParams(11, {1, 2, 4})));
  EXPECT_THROW(are_isometric(LensParams(11, {1, 2, 3}), LensParams(13, {1, 2, 3})), std::invalid_argument);
}

TEST(Isometry, AgreesWithBruteForce) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 2 + trial % 3;
    const auto a = oracle::random_lens(rng, m, 3, 25);
    // Half the time, b is a disguised copy of a.
    std::vector<int64_t> s(a.s().begin(), a.s().end());
    if (trial % 2 == 0) {
      const auto units = units_mod(a.q());
      const int64_t t = units[rng() % units.size()];
      for (auto& x : s) x = mod_floor((rng() % 2 ? t : -t) * x, a.q());
      std::shuffle(s.begin(), s.end(), rng);
    } else {
      for (auto& x : s)
        do x = static_cast<int64_t>(rng() % static_cast<uint64_t>(a.q()));
        while (std::gcd(x, a.q()) != 1);
    }
    const LensParams b(a.q(), s);
    const bool brute = oracle::brute_isometric(a.q(), {a.s().begin(), a.s().end()}, s);
    EXPECT_EQ(are_isometric(a, b), brute) << a.to_string() << " " << b.to_string();
    EXPECT_EQ(canonical_form(a) == canonical_form(b), brute);
    if (trial % 2 == 0) EXPECT_TRUE(brute);
  }
}

TEST(CanonicalForm, IsAFixedPointAndStartsWithOne) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = oracle::random_lens(rng, 3, 3, 80);
    const CanonicalForm c = canonical_form(a);
    EXPECT_EQ(c.s.front(), 1);
    EXPECT_TRUE(std::is_sorted(c.s.begin(), c.s.end()));
    for (int64_t x : c.s) EXPECT_LE(2 * x, a.q());
    EXPECT_EQ(canonical_form(c.params()), c);
    EXPECT_TRUE(are_isometric(a, c.params()));
  }
  EXPECT_EQ(canonical_form(LensParams(49, {1, 43, 29})).to_string(), "L(49; 1,6,20)");
}

TEST(EnumerateClasses, CountsMatchFloodFill) {
  for (int m = 2; m <= 3; ++m)
    for (int64_t q = 2; q <= (m == 2 ? 30 : 16); ++q)
      EXPECT_EQ(enumerate_classes(q, m).size(), oracle::brute_class_count(q, m)) << "q=" << q << " m=" << m;
  for (int64_t q = 2; q <= 9; ++q) EXPECT_EQ(enumerate_classes(q, 4).size(), oracle::brute_class_count(q, 4));
}

TEST(EnumerateClasses, RepresentativesArePairwiseDistinct) {
  const auto classes = enumerate_classes(35, 3);
  EXPECT_TRUE(std::is_sorted(classes.begin(), classes.end()));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    EXPECT_EQ(canonical_form(classes[i].params()), classes[i]);
    for (std::size_t j = i + 1; j < std::min(classes.size(), i + 8); ++j)
      EXPECT_FALSE(are_isometric(classes[i].params(), classes[j].params()));
  }
}

TEST(ComplementLens, CoversTheFoldedUnits) {
  const LensParams a(49, {1, 6, 15});
  const LensParams c = complement_lens(a);
  EXPECT_EQ(c.m(), euler_phi(49) / 2 - 3);
  std::vector<int64_t> all;
  for (auto x : a.s()) all.push_back(fold_residue(x, 49));
  for (auto x : c.s()) all.push_back(fold_residue(x, 49));
  std::sort(all.begin(), all.end());
  std::vector<int64_t> expect;
  for (auto u : units_mod(49))
    if (2 * u < 49) expect.push_back(u);
  EXPECT_EQ(all, expect);
  EXPECT_THROW(complement_lens(LensParams(7, {1, 2, 3})), std::invalid_argument);
  EXPECT_THROW(complement_lens(LensParams(49, {1, 48, 3})), std::invalid_argument);
}

TEST(Family, HomotopyCheckFindsACubeRoot) {
  for (int64_t r : {7, 8, 10, 11})
    for (int64_t t : {1, 2}) {
      EXPECT_TRUE(family_homotopy_check(r, t));
      const int64_t q = r * r * t;
      const int64_t target = pow_mod(1 + r * t, 8, q);
      bool found = false;
      for (int64_t d = 0; d < q && !found; ++d) {
        const int64_t c = d * d % q * d % q;
        found = c == target || c == mod_floor(-target, q);
      }
      EXPECT_TRUE(found);
    }
}

TEST(Family, PartitionTestMatchesIsometry) {
  const std::vector<int64_t> exps{0, 1, 3};
  for (int64_t r = 4; r <= 14; ++r)
    for (int64_t t = 1; t <= 2; ++t) {
      const LensParams a = theta_power_lens(r, t, exps, false);
      const LensParams b = theta_power_lens(r, t, exps, true);
      EXPECT_EQ(family_partition_nonisometry(r, t, exps), !are_isometric(a, b)) << r << ' ' << t;
    }
  EXPECT_FALSE(family_partition_nonisometry(4, 1, exps));
  EXPECT_FALSE(family_partition_nonisometry(5, 1, exps));
  EXPECT_TRUE(family_partition_nonisometry(7, 1, exps));
  EXPECT_THROW(family_partition_nonisometry(3, 1, exps), std::invalid_argument);
  EXPECT_THROW(family_partition_nonisometry(9, 1, std::vector<int64_t>{1, 2}), std::invalid_argument);
}

TEST(Family, ThetaPowersAreUnits) {
  const std::vector<int64_t> exps{0, 1, 3};
  const LensParams a = theta_power_lens(7, 1, exps, false);
  EXPECT_EQ(std::vector<int64_t>(a.s().begin(), a.s().end()), (std::vector<int64_t>{1, 8, 22}));
  // theta^k = 1 + krt holds because (rt)^2 = 0 mod r^2 t.
  for (int64_t k = 0; k < 7; ++k) EXPECT_EQ(pow_mod(8, static_cast<uint64_t>(k), 49), mod_floor(1 + 7 * k, 49));
}
