#pragma once

// Weight multiplicities for so(2m, C) (type D_m) in the orthonormal epsilon basis,
// Casimir scalars and the SO(2m) -> SO(2m-1) branching rule.

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "lensspec/lattice.hpp"

namespace lensspec {

/// Positive roots e_i +- e_j (i < j) and rho = sum (m - j) e_j.
class RootSystemD {
 public:
  explicit RootSystemD(int m);

  int rank() const { return m_; }
  const std::vector<std::vector<int64_t>>& positive_roots() const { return roots_; }
  const std::vector<int64_t>& rho() const { return rho_; }

 private:
  int m_;
  std::vector<std::vector<int64_t>> roots_;
  std::vector<int64_t> rho_;
};

/// Dominant integral weight a_1 >= ... >= a_{m-1} >= |a_m| of so(2m).
class HighestWeight {
 public:
  /// Throws std::invalid_argument if the chain fails or m < 2.
  explicit HighestWeight(std::vector<int64_t> a);
  HighestWeight(std::initializer_list<int64_t> a) : HighestWeight(std::vector<int64_t>(a)) {}

  int rank() const { return static_cast<int>(a_.size()); }
  std::span<const int64_t> coords() const { return a_; }
  WeightVector as_weight() const { return WeightVector(a_); }

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
  friend auto operator<=>(const HighestWeight&, const HighestWeight&) = default;

 private:
  std::vector<int64_t> a_;
};

/// Dominant weight b_1 >= ... >= b_{m-1} >= 0 of so(2m - 1).
class KHighestWeight {
 public:
  explicit KHighestWeight(std::vector<int64_t> b);
  KHighestWeight(std::initializer_list<int64_t> b) : KHighestWeight(std::vector<int64_t>(b)) {}

  int rank() const { return static_cast<int>(b_.size()); }
  std::span<const int64_t> coords() const { return b_; }

  friend bool operator==(const KHighestWeight&, const KHighestWeight&) = default;

 private:
  std::vector<int64_t> b_;
};

/// pi_{k,p}: highest weight k e_1 + Lambda_p; for p = m the sum with k e_1 + bar(Lambda_m).
struct PiKPLabel {
  int64_t k = 0;
  int p = 0;
  friend bool operator==(const PiKPLabel&, const PiKPLabel&) = default;
};

/// k e_1 + Lambda_p (for p = m, the Lambda_m component).
HighestWeight highest_weight_of(PiKPLabel label, int m);

uint64_t mult_closed_spherical(int64_t k, int m, int64_t norm);
uint64_t mult_closed_exterior(int p, int m, const WeightVector& mu);

/// Dominant representative of mu under the Weyl group of D_m (permutations and
/// even numbers of sign changes).
std::vector<int64_t> dominant_representative(std::span<const int64_t> mu);

/// Whether highest - mu is a nonnegative integer combination of positive roots.
bool dominated_by(std::span<const int64_t> mu, std::span<const int64_t> highest);

/// Memoized Freudenthal recursion. Safe for concurrent use.
class MultiplicityEngine {
 public:
  uint64_t multiplicity(const HighestWeight& highest, std::span<const int64_t> mu);

  /// Process-wide instance used by the free functions below.
  static MultiplicityEngine& shared();

 private:
  struct VecHash {
    std::size_t operator()(const std::vector<int64_t>& v) const noexcept;
  };
  using Memo = std::unordered_map<std::vector<int64_t>, uint64_t, VecHash>;

  uint64_t dominant_multiplicity(const std::vector<int64_t>& highest, const std::vector<int64_t>& dominant_mu,
                                 Memo& memo);

  std::shared_mutex mutex_;
  std::unordered_map<std::vector<int64_t>, std::unique_ptr<Memo>, VecHash> memos_;
};

/// m_{pi_Lambda}(mu). Non-dominant Lambda is rejected by HighestWeight itself.
uint64_t general_multiplicity(const HighestWeight& highest, const WeightVector& mu);

/// m_{pi_{k,p}}(mu) for any mu with one-norm `norm` and `z` zero coordinates.
/// Throws std::invalid_argument when no such mu exists.
uint64_t mult_pi_kp(PiKPLabel label, int m, int64_t norm, int z);

/// <Lambda + rho, Lambda + rho> - <rho, rho>.
int64_t casimir_scalar(const HighestWeight& highest);

/// All dominant Lambda of rank m with the given Casimir scalar, sorted ascending.
std::vector<HighestWeight> enumerate_by_casimir(int64_t lambda, int m);

/// [tau : pi_Lambda restricted to SO(2m-1)], 0 or 1 by interlacing.
uint64_t branching_multiplicity(const HighestWeight& highest, const KHighestWeight& tau);

/// Weyl dimension formula for so(2m) and so(2m-1).
uint64_t weyl_dimension(const HighestWeight& highest);
uint64_t weyl_dimension(const KHighestWeight& tau);

struct WeightMultiplicity {
  WeightVector weight;
  uint64_t multiplicity;
};

/// Every weight of pi_Lambda with its multiplicity (or only the dominant ones),
/// ordered lexicographically descending.
std::vector<WeightMultiplicity> weight_table(const HighestWeight& highest, bool dominant_only);

}  // namespace lensspec
