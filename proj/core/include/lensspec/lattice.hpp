#pragma once

// Congruence lattices {a in Z^m : a.s = 0 mod q} and their one-norm counts.
//
// N(k, z) counts lattice vectors of one-norm k with exactly z zero coordinates.
// N_red(k, z) restricts the count to the open cube |a_j| < q; the reduced table is
// finite (k <= (m - z)(q - 1)) and determines every N(k, z).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace lensspec {

/// An integral weight mu = (a_1, ..., a_m).
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<int64_t> entries) : entries_(std::move(entries)) {}
  WeightVector(std::initializer_list<int64_t> entries) : entries_(entries) {}

  int dim() const { return static_cast<int>(entries_.size()); }
  int64_t operator[](std::size_t j) const { return entries_[j]; }
  std::span<const int64_t> entries() const { return entries_; }

  /// One-norm sum |a_j|.
  int64_t norm() const;
  /// Number of zero coordinates.
  int zeros() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<int64_t> entries_;
};

class CongruenceLattice {
 public:
  /// Throws std::invalid_argument if q < 1, m < 2 or some s_j is not a unit mod q.
  CongruenceLattice(int64_t q, std::vector<int64_t> s);

  /// The full lattice Z^m (q = 1).
  static CongruenceLattice integer_lattice(int m);

  int64_t q() const { return q_; }
  int m() const { return static_cast<int>(s_.size()); }
  std::span<const int64_t> s() const { return s_; }

  /// Throws std::invalid_argument on a dimension mismatch.
  bool contains(const WeightVector& mu) const;
  bool contains(std::span<const int64_t> mu) const;

  friend bool operator==(const CongruenceLattice&, const CongruenceLattice&) = default;

 private:
  int64_t q_;
  std::vector<int64_t> s_;
};

enum class CountFlavor { Full, Reduced };

struct CountEntry {
  int64_t k;
  int z;
  uint64_t count;
  friend bool operator==(const CountEntry&, const CountEntry&) = default;
};

/// Dense (k, z) -> count table for 0 <= k <= k_max, 0 <= z <= m.
class CountTable {
 public:
  CountTable(int m, int64_t q, CountFlavor flavor, int64_t k_max);

  int m() const { return m_; }
  int64_t q() const { return q_; }
  CountFlavor flavor() const { return flavor_; }
  int64_t k_max() const { return k_max_; }

  /// Zero outside the stored range.
  uint64_t at(int64_t k, int z) const;
  void add(int64_t k, int z, uint64_t count);

  /// Sum over z of the (k, z) cells.
  uint64_t norm_count(int64_t k) const;

  /// Nonzero cells, sorted by (k, z).
  std::vector<CountEntry> entries() const;

  /// Raw cells, row-major in k with m + 1 columns.
  std::span<const uint64_t> cells() const { return cells_; }

  /// {"q":..,"m":..,"entries":[[k,z,count],...]}; the reduced-table interchange format.
  nlohmann::json to_json() const;
  /// Parses the interchange format as a Reduced table.
  static CountTable from_json(const nlohmann::json& j);

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  int m_;
  int64_t q_;
  CountFlavor flavor_;
  int64_t k_max_;
  std::vector<uint64_t> cells_;
};

/// Reduced table N_red(k, z) over the cube |a_j| < q. Cost O((2q)^(m-1)).
CountTable count_table_reduced(const CongruenceLattice& lattice);

/// Full-flavor table of N(k, z) for k < norm_bound (norm_bound <= q, so every such
/// vector is reduced). Cheap exact prefix of the reduced table.
CountTable count_table_truncated(const CongruenceLattice& lattice, int64_t norm_bound);

/// N(k, z) by direct enumeration of the norm-k shell. Oracle; slow for large k.
uint64_t count_full(const CongruenceLattice& lattice, int64_t k, int z);

/// Full-flavor table of N(k, z), k <= k_max, by enumerating the one-norm ball directly
/// (the last coordinate runs over its residue class). Oracle for reconstruct_full.
CountTable count_table_brute(const CongruenceLattice& lattice, int64_t k_max);

/// N(k, z) rebuilt from a reduced table via the equivalence-class decomposition.
uint64_t reconstruct_full(const CountTable& reduced, int64_t k, int z);

/// Full-flavor table N(k, z), k <= k_max, expanded from a reduced table.
CountTable expand_full(const CountTable& reduced, int64_t k_max);

/// Coefficients of P(x) = sum N_red(k, z) x^k (1 + x^q)^z; the one-norm theta series
/// of the lattice is P(x) / (1 - x^q)^m.
struct ThetaCertificate {
  int64_t q = 1;
  int m = 0;
  std::vector<uint64_t> coefficients;
  friend bool operator==(const ThetaCertificate&, const ThetaCertificate&) = default;
};

ThetaCertificate theta_certificate(const CountTable& reduced);

/// #{(x, y) : 0 < y < x < r, x + 2y = xi mod r} by a double loop.
uint64_t count_A(int64_t r, int64_t xi);

/// Closed form of count_A; throws std::invalid_argument when 3 divides r.
uint64_t count_A_closed(int64_t r, int64_t xi);

}  // namespace lensspec
