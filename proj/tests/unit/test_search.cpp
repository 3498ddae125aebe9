#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "lensspec/search.hpp"
#include "lensspec/spectra.hpp"

using namespace lensspec;

namespace {

std::pair<CanonicalForm, CanonicalForm> canonical_pair(int64_t q, std::vector<int64_t> a, std::vector<int64_t> b) {
  auto ca = canonical_form(LensParams(q, std::move(a)));
  auto cb = canonical_form(LensParams(q, std::move(b)));
  if (cb < ca) std::swap(ca, cb);
  return {ca, cb};
}

}  // namespace

TEST(Search, RanksUpToOneHundred) {
  const auto groups = find_groups({.m = 3, .q_min = 2, .q_max = 100, .workers = 1, .cache_dir = {}});
  std::vector<std::pair<CanonicalForm, CanonicalForm>> got;
  for (const auto& g : groups) {
    ASSERT_EQ(g.members.size(), 2U);
    got.emplace_back(g.members[0], g.members[1]);
  }
  std::vector<std::pair<CanonicalForm, CanonicalForm>> expected = {
      canonical_pair(49, {1, 6, 15}, {1, 6, 20}), canonical_pair(64, {1, 7, 17}, {1, 7, 23}),
      canonical_pair(98, {1, 13, 29}, {1, 13, 41}), canonical_pair(100, {1, 9, 21}, {1, 9, 29}),
      canonical_pair(100, {1, 9, 31}, {1, 9, 39})};
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expected);
}

TEST(Search, GroupsArePostHocValid) {
  for (const auto& g : find_groups({.m = 3, .q_min = 40, .q_max = 130, .workers = 2, .cache_dir = {}}))
    for (std::size_t i = 0; i < g.members.size(); ++i)
      for (std::size_t j = i + 1; j < g.members.size(); ++j) {
        const LensParams a = g.members[i].params(), b = g.members[j].params();
        EXPECT_TRUE(are_all_p_isospectral(a, b).holds);
        EXPECT_FALSE(are_isometric(a, b));
        EXPECT_EQ(are_all_p_isospectral(a, b).certificate_a, g.certificate);
      }
}

TEST(Search, EmptyRanges) {
  EXPECT_TRUE(groups_at(50, 3, 1).empty());
  EXPECT_TRUE(group_size_census({.m = 3, .q_min = 2, .q_max = 20, .workers = 1, .cache_dir = {}}).empty());
  EXPECT_TRUE(group_size_census({.m = 2, .q_min = 2, .q_max = 50, .workers = 1, .cache_dir = {}}).empty());
}

TEST(Search, RankFourSmallestGroup) {
  const auto groups = groups_at(49, 4, 1);
  ASSERT_EQ(groups.size(), 1U);
  const auto expect = canonical_pair(49, {1, 6, 8, 20}, {1, 6, 8, 22});
  EXPECT_EQ(groups[0].members, (std::vector<CanonicalForm>{expect.first, expect.second}));
}

TEST(Search, DeterministicAcrossWorkerCounts) {
  const SearchConfig one{.m = 3, .q_min = 95, .q_max = 125, .workers = 1, .cache_dir = {}};
  SearchConfig four = one;
  four.workers = 4;
  const auto a = find_groups(one), b = find_groups(four);
  EXPECT_EQ(a, b);
  EXPECT_EQ(groups_to_csv(a, 3), groups_to_csv(b, 3));
  EXPECT_EQ(groups_to_json(a).dump(), groups_to_json(b).dump());
}

TEST(Search, CacheRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / ("lensspec_cache_" + std::to_string(std::random_device{}()));
  const SearchConfig cfg{.m = 3, .q_min = 60, .q_max = 70, .workers = 1, .cache_dir = dir};
  const auto fresh = find_groups(cfg);
  EXPECT_TRUE(std::filesystem::exists(dir / "m3_q64.json"));
  const auto cached = find_groups(cfg);
  EXPECT_EQ(fresh, cached);
  std::filesystem::remove_all(dir);
}

TEST(Search, ConfigValidation) {
  EXPECT_THROW(find_groups({.m = 1, .q_min = 2, .q_max = 5, .workers = 1, .cache_dir = {}}), std::invalid_argument);
  EXPECT_THROW(find_groups({.m = 3, .q_min = 1, .q_max = 5, .workers = 1, .cache_dir = {}}), std::invalid_argument);
  EXPECT_THROW(find_groups({.m = 3, .q_min = 2, .q_max = 5, .workers = 0, .cache_dir = {}}), std::invalid_argument);
}

TEST(Search, CsvLayout) {
  const auto csv = groups_to_csv(groups_at(49, 3, 1), 3);
  EXPECT_EQ(csv, "q,s1,s2,s3,s1',s2',s3',family_flag\n49,1,6,15,1,6,20,1\n");
}

TEST(Family, PairParameters) {
  const FamilyPair p = family_pair(7, 1);
  EXPECT_EQ(p.a, LensParams(49, {1, 8, 22}));
  EXPECT_EQ(p.b, LensParams(49, {1, 43, 29}));
  EXPECT_TRUE(p.in_hypothesis);
  EXPECT_TRUE(are_isometric(p.b, LensParams(49, {1, 6, 20})));
  EXPECT_TRUE(are_isometric(p.a, LensParams(49, {1, 6, 15})));
  EXPECT_FALSE(family_pair(3, 1).in_hypothesis);
  EXPECT_THROW(family_pair(1, 1), std::invalid_argument);
  EXPECT_THROW(family_pair(4, 0), std::invalid_argument);
}

TEST(Family, VerifiedAtSmallParameters) {
  for (auto [r, t] : {std::pair<int64_t, int64_t>{7, 1}, {8, 1}, {10, 1}, {11, 1}}) {
    const FamilyReport rep = verify_family(r, t);
    EXPECT_TRUE(rep.passed()) << rep.to_json().dump();
    EXPECT_TRUE(rep.violations.empty());
    EXPECT_TRUE(rep.all_p_isospectral);
    EXPECT_FALSE(rep.isometric);
    EXPECT_TRUE(rep.partition_nonisometric);
    EXPECT_TRUE(rep.homotopy_equivalent);
    EXPECT_TRUE(rep.zero_class_counts_agree);
  }
}

TEST(Family, HypothesisViolationsAreReported) {
  const FamilyReport r3 = verify_family(3, 1);
  EXPECT_EQ(r3.violations.size(), 2U);
  const FamilyReport r4 = verify_family(4, 1);
  EXPECT_EQ(r4.violations.size(), 1U);
  EXPECT_TRUE(r4.isometric);
  EXPECT_FALSE(r4.partition_nonisometric);
  EXPECT_TRUE(r4.all_p_isospectral);
}

TEST(Family, MatchesSearchGroups) {
  const auto g49 = groups_at(49, 3, 1);
  ASSERT_EQ(g49.size(), 1U);
  EXPECT_EQ(family_matches(g49[0]), (std::vector<std::pair<int64_t, int64_t>>{{7, 1}}));
  const auto g100 = groups_at(100, 3, 1);
  ASSERT_EQ(g100.size(), 2U);
  EXPECT_EQ(family_matches(g100[0]), (std::vector<std::pair<int64_t, int64_t>>{{10, 1}}));
  EXPECT_TRUE(family_matches(g100[1]).empty());
}

TEST(Family, AppearsInTheSearch) {
  for (int64_t r : {7, 8, 10}) {
    const auto groups = groups_at(r * r, 3, 1);
    const FamilyPair p = family_pair(r, 1);
    bool found = false;
    for (const auto& g : groups) {
      const auto has = [&](const CanonicalForm& c) { return std::find(g.members.begin(), g.members.end(), c) != g.members.end(); };
      found = found || (has(canonical_form(p.a)) && has(canonical_form(p.b)));
    }
    EXPECT_TRUE(found) << r;
  }
}
