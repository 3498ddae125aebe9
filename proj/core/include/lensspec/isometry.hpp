#pragma once

// Lens spaces L(q; s_1, ..., s_m) up to isometry.
//
// Two parameter vectors give isometric lens spaces iff s'_{sigma(j)} = t eps_j s_j (mod q)
// for a permutation sigma, signs eps_j and a unit t. Equivalently, the associated
// congruence lattices differ by a signed coordinate permutation.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lensspec/lattice.hpp"

namespace lensspec {

class LensParams {
 public:
  /// Throws std::invalid_argument if q < 1, m < 2 or some s_j is not coprime to q.
  LensParams(int64_t q, std::vector<int64_t> s);

  /// The round sphere S^(2m-1), i.e. q = 1.
  static LensParams sphere(int m);

  int64_t q() const { return q_; }
  int m() const { return static_cast<int>(s_.size()); }
  std::span<const int64_t> s() const { return s_; }

  CongruenceLattice lattice() const { return CongruenceLattice(q_, s_); }
  std::string to_string() const;

  friend bool operator==(const LensParams&, const LensParams&) = default;

 private:
  int64_t q_;
  std::vector<int64_t> s_;
};

/// Lexicographically least folded, sorted parameter vector over the isometry orbit.
struct CanonicalForm {
  int64_t q = 1;
  std::vector<int64_t> s;

  LensParams params() const { return LensParams(q, s); }
  /// "L(q; s1,s2,...,sm)".
  std::string to_string() const;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Throws std::invalid_argument when q or m differ.
bool are_isometric(const LensParams& a, const LensParams& b);

CanonicalForm canonical_form(const LensParams& a);

/// One canonical representative per isometry class, in lexicographic order.
std::vector<CanonicalForm> enumerate_classes(int64_t q, int m);

/// Lens space whose parameters, together with those of `a`, cover every unit mod q
/// exactly once up to sign. Requires s_i != +-s_j and phi(q) > 2m.
LensParams complement_lens(const LensParams& a);

/// Whether d^3 = +-theta^8 (mod r^2 t) has a solution, theta = 1 + rt.
bool family_homotopy_check(int64_t r, int64_t t);

/// Ordered-partition test for L(q; theta^d_0, ..., theta^d_{m-1}) against its
/// inverse-exponent partner. Returns true when the partitions of r are not cyclic
/// rotations of one another, i.e. the pair is not isometric. Throws on malformed exponents.
bool family_partition_nonisometry(int64_t r, int64_t t, std::span<const int64_t> exponents);

/// L(r^2 t; theta^{+-d_0}, ..., theta^{+-d_{m-1}}) with theta = 1 + rt.
LensParams theta_power_lens(int64_t r, int64_t t, std::span<const int64_t> exponents, bool inverse);

}  // namespace lensspec
