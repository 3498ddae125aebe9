#pragma once

// Hodge-Laplace p-spectra of lens spaces L(q; s) = Gamma \ S^(2m-1).
//
// Eigenvalues are exact integers lambda_{k,p} = k^2 + k(2m - 2) + (p - 1)(2m - 1 - p).
// For 1 <= p <= m, lambda_{k,p} (k >= 1) is the Casimir scalar of the representation
// with highest weight (k - 1) e_1 + Lambda_p, and its multiplicity is the dimension of
// the Gamma-invariants there. On functions, lambda = k^2 + k(2m - 2), k >= 0, comes from
// k e_1.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lensspec/isometry.hpp"
#include "lensspec/lattice.hpp"
#include "lensspec/weights.hpp"

namespace lensspec {

/// dim V_pi^Gamma = sum over mu in the lattice of m_pi(mu), by direct weight summation.
uint64_t dim_invariants(const CongruenceLattice& lattice, const HighestWeight& highest);
/// Same for pi_{k,p}, including both components when p = m.
uint64_t dim_invariants(const CongruenceLattice& lattice, PiKPLabel label);

/// dim V^Gamma of pi_{k,p} from the (norm, zeros) counts of the lattice.
uint64_t dim_invariants_kp(const CountTable& reduced, PiKPLabel label);

/// lambda_{k,p}; p = 0 is treated as p = 1 (both give k^2 + k(2m - 2)).
int64_t eigenvalue_lambda(int64_t k, int p, int m);

struct SpectrumEntry {
  int64_t lambda;
  int64_t k;
  uint64_t mult;
  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct SpectrumSlice {
  int p = 0;
  std::vector<SpectrumEntry> entries;

  /// Every entry, compared without the form degree.
  bool same_spectrum(const SpectrumSlice& other) const { return entries == other.entries; }

  nlohmann::json to_json(const LensParams& lens) const;
  /// "lambda,k,mult" header followed by one row per entry, LF endings.
  std::string to_csv() const;
};

/// Eigenvalues <= lambda_max (inclusive) with nonzero multiplicity, ascending.
/// Throws std::invalid_argument unless 0 <= p <= 2m - 1.
SpectrumSlice p_spectrum(const LensParams& lens, int p, int64_t lambda_max);
SpectrumSlice p_spectrum(const CountTable& reduced, int p, int64_t lambda_max);

/// Verdict of an isospectrality predicate and the digests that justified it.
struct IsospectralityVerdict {
  bool holds = false;
  std::string certificate_a;
  std::string certificate_b;
  nlohmann::json to_json() const;
};

/// Equal one-norm theta series (0-spectra). Requires equal m.
IsospectralityVerdict are_0_isospectral(const LensParams& a, const LensParams& b);
/// Equal reduced tables (every p-spectrum). Requires equal q and m.
IsospectralityVerdict are_all_p_isospectral(const LensParams& a, const LensParams& b);

/// Certificates over possibly different moduli: P(x)(1 - x^q')^m == P'(x)(1 - x^q)^m.
bool theta_series_equal(const ThetaCertificate& a, const ThetaCertificate& b);

/// Multiplicity of lambda for the Laplace-type operator on the bundle induced by tau.
uint64_t tau_eigenvalue_multiplicity(const LensParams& lens, const KHighestWeight& tau, int64_t lambda);

struct TauMismatch {
  KHighestWeight tau;
  int64_t lambda;
  uint64_t mult_a;
  uint64_t mult_b;
};

/// Scans every dominant tau with b_1 <= tau_bound and every Casimir value up to
/// lambda_max and reports where the tau-multiplicities of the two lens spaces differ.
std::vector<TauMismatch> tau_scan(const LensParams& a, const LensParams& b, int64_t tau_bound, int64_t lambda_max);

}  // namespace lensspec
