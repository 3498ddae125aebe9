#pragma once

// Exhaustive search for non-isometric lens spaces with identical reduced count tables,
// and checks on the explicit theta-power family L(r^2 t; 1, 1 + rt, 1 + 3rt).

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "lensspec/isometry.hpp"

namespace lensspec {

struct SearchConfig {
  int m = 3;
  int64_t q_min = 2;
  int64_t q_max = 2;
  int workers = 1;
  /// Per-q results are read from and written to this directory when set.
  std::filesystem::path cache_dir;
};

struct IsospectralGroup {
  int64_t q = 0;
  std::vector<CanonicalForm> members;
  /// SHA-256 of the shared reduced table.
  std::string certificate;

  friend bool operator==(const IsospectralGroup&, const IsospectralGroup&) = default;
};

/// Throws std::invalid_argument if m < 2, q_min < 2 or workers < 1.
void validate(const SearchConfig& cfg);

/// Groups of size >= 2 ordered by q, then by first member; members sorted.
std::vector<IsospectralGroup> find_groups(const SearchConfig& cfg);

/// The groups at a single modulus.
std::vector<IsospectralGroup> groups_at(int64_t q, int m, int workers);

/// Group size -> number of groups.
std::map<std::size_t, std::size_t> group_size_census(const SearchConfig& cfg);

struct FamilyPair {
  LensParams a;
  LensParams b;
  /// False when 3 divides r, where the isospectrality theorem does not apply.
  bool in_hypothesis;
};

/// L(r^2 t; 1, 1 + rt, 1 + 3rt) and L(r^2 t; 1, 1 - rt, 1 - 3rt). Throws if r < 2 or t < 1.
FamilyPair family_pair(int64_t r, int64_t t);

struct FamilyReport {
  int64_t r = 0;
  int64_t t = 0;
  LensParams a;
  LensParams b;
  bool all_p_isospectral = false;
  bool isometric = false;
  /// Verdict of the ordered-partition test on exponents (0, 1, 3); r >= 4 only.
  bool partition_nonisometric = false;
  bool homotopy_equivalent = false;
  /// N(k, z) agree for z in {1, 2, 3} over the whole reduced range.
  bool zero_class_counts_agree = false;
  /// Hypotheses of the family theorems that (r, t) fails.
  std::vector<std::string> violations;

  /// Every verdict that the hypotheses cover holds.
  bool passed() const;
  nlohmann::json to_json() const;
};

FamilyReport verify_family(int64_t r, int64_t t);

/// Every (r, t) with r^2 t = q whose family pair is canonically contained in the group.
std::vector<std::pair<int64_t, int64_t>> family_matches(const IsospectralGroup& group);

/// "q,s1..sm,s1'..sm',family_flag", one row per member pair.
std::string groups_to_csv(const std::vector<IsospectralGroup>& groups, int m);
nlohmann::json groups_to_json(const std::vector<IsospectralGroup>& groups);

}  // namespace lensspec
