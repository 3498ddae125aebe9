#include "lensspec/isometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lensspec/arith.hpp"

namespace lensspec {

namespace {

std::string format_params(int64_t q, std::span<const int64_t> s) {
  std::ostringstream os;
  os << "L(" << q << ";";
  for (std::size_t j = 0; j < s.size(); ++j) os << (j == 0 ? " " : ",") << s[j];
  os << ")";
  return os.str();
}

std::vector<int64_t> folded_sorted(std::span<const int64_t> s, int64_t t, int64_t q) {
  std::vector<int64_t> out;
  out.reserve(s.size());
  for (const int64_t sj : s) out.push_back(fold_residue(mul_mod(t, sj, q), q));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

LensParams::LensParams(int64_t q, std::vector<int64_t> s) : q_(q), s_(std::move(s)) {
  if (q_ < 1) throw std::invalid_argument("lens space: modulus must be positive");
  if (s_.size() < 2) throw std::invalid_argument("lens space: need at least two rotation parameters");
  for (int64_t& sj : s_) {
    sj = mod_floor(sj, q_);
    if (std::gcd(sj, q_) != 1) throw std::invalid_argument("lens space: parameters must be coprime to q");
  }
}

LensParams LensParams::sphere(int m) { return LensParams(1, std::vector<int64_t>(static_cast<std::size_t>(m), 0)); }

std::string LensParams::to_string() const { return format_params(q_, s_); }

std::string CanonicalForm::to_string() const { return format_params(q, s); }

bool are_isometric(const LensParams& a, const LensParams& b) {
  if (a.q() != b.q() || a.m() != b.m()) throw std::invalid_argument("are_isometric: q and m must agree");
  const int64_t q = a.q();
  const auto target = folded_sorted(b.s(), 1, q);
  for (const int64_t t : units_mod(q)) {
    if (folded_sorted(a.s(), t, q) == target) return true;
  }
  return false;
}

CanonicalForm canonical_form(const LensParams& a) {
  const int64_t q = a.q();
  CanonicalForm best{q, folded_sorted(a.s(), 1, q)};
  if (q <= 2) return best;
  // The orbit minimum starts with 1, so only units sending some s_j to +-1 compete.
  for (const int64_t sj : a.s()) {
    auto candidate = folded_sorted(a.s(), inverse_mod(sj, q), q);
    if (candidate < best.s) best.s = std::move(candidate);
  }
  return best;
}

std::vector<CanonicalForm> enumerate_classes(int64_t q, int m) {
  if (q < 1 || m < 2) throw std::invalid_argument("enumerate_classes: need q >= 1 and m >= 2");
  std::vector<CanonicalForm> out;
  if (q <= 2) {
    out.push_back({q, std::vector<int64_t>(static_cast<std::size_t>(m), q == 1 ? 0 : 1)});
    return out;
  }
  std::vector<int64_t> folded;
  for (const int64_t u : units_mod(q))
    if (u <= q - u) folded.push_back(u);

  // Nondecreasing index vectors over `folded`, first entry pinned to 1.
  std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
  std::vector<int64_t> s(static_cast<std::size_t>(m), 1);
  const std::size_t n = folded.size();
  while (true) {
    for (std::size_t j = 0; j < idx.size(); ++j) s[j] = folded[idx[j]];
    CanonicalForm form = canonical_form(LensParams(q, s));
    if (form.s == s) out.push_back(std::move(form));
    // advance positions 1..m-1
    std::size_t pos = idx.size() - 1;
    while (pos >= 1 && idx[pos] + 1 >= n) --pos;
    if (pos == 0) break;
    ++idx[pos];
    for (std::size_t j = pos + 1; j < idx.size(); ++j) idx[j] = idx[pos];
  }
  return out;
}

LensParams complement_lens(const LensParams& a) {
  const int64_t q = a.q();
  const int m = a.m();
  const int64_t phi = euler_phi(q);
  if (phi <= 2 * m) throw std::invalid_argument("complement_lens: requires phi(q) > 2m");
  std::vector<int64_t> used;
  for (const int64_t sj : a.s()) used.push_back(fold_residue(sj, q));
  std::sort(used.begin(), used.end());
  if (std::adjacent_find(used.begin(), used.end()) != used.end())
    throw std::invalid_argument("complement_lens: parameters must satisfy s_i != +-s_j");
  std::vector<int64_t> rest;
  for (const int64_t u : units_mod(q))
    if (u <= q - u && !std::binary_search(used.begin(), used.end(), u)) rest.push_back(u);
  return LensParams(q, std::move(rest));
}

bool family_homotopy_check(int64_t r, int64_t t) {
  if (r < 1 || t < 1) throw std::invalid_argument("family_homotopy_check: r and t must be positive");
  const int64_t q = r * r * t;
  if (q == 1) return true;
  const int64_t theta = mod_floor(1 + r * t, q);
  const int64_t target = pow_mod(theta, 8, q);
  const int64_t neg_target = mod_floor(-target, q);
  for (int64_t d = 0; d < q; ++d) {
    const int64_t cube = mul_mod(mul_mod(d, d, q), d, q);
    if (cube == target || cube == neg_target) return true;
  }
  return false;
}

namespace {

void check_exponents(int64_t r, std::span<const int64_t> d) {
  if (d.size() < 2) throw std::invalid_argument("exponent sequence needs at least two entries");
  if (d[0] != 0) throw std::invalid_argument("exponent sequence must start at 0");
  for (std::size_t i = 1; i < d.size(); ++i)
    if (d[i] <= d[i - 1]) throw std::invalid_argument("exponent sequence must be strictly increasing");
  if (d.back() >= r) throw std::invalid_argument("exponents must be smaller than r");
}

std::vector<int64_t> gaps_of(int64_t r, std::span<const int64_t> d) {
  std::vector<int64_t> gaps;
  for (std::size_t i = 1; i < d.size(); ++i) gaps.push_back(d[i] - d[i - 1]);
  gaps.push_back(r - d.back());
  return gaps;
}

bool cyclic_rotation_of(const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
  const std::size_t n = a.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool same = true;
    for (std::size_t j = 0; j < n && same; ++j) same = a[j] == b[(j + shift) % n];
    if (same) return true;
  }
  return false;
}

}  // namespace

bool family_partition_nonisometry(int64_t r, int64_t t, std::span<const int64_t> exponents) {
  if (t < 1) throw std::invalid_argument("family_partition_nonisometry: t must be positive");
  check_exponents(r, exponents);
  // The partner theta^{-d_i} times theta^{d_{m-1}} has exponents d_{m-1} - d_i.
  std::vector<int64_t> partner;
  for (auto it = exponents.rbegin(); it != exponents.rend(); ++it) partner.push_back(exponents.back() - *it);
  return !cyclic_rotation_of(gaps_of(r, exponents), gaps_of(r, partner));
}

LensParams theta_power_lens(int64_t r, int64_t t, std::span<const int64_t> exponents, bool inverse) {
  if (r < 2 || t < 1) throw std::invalid_argument("theta_power_lens: need r >= 2 and t >= 1");
  const int64_t q = r * r * t;
  std::vector<int64_t> s;
  for (const int64_t d : exponents) {
    // theta^k = 1 + k r t (mod q)
    const int64_t k = inverse ? -d : d;
    s.push_back(mod_floor(1 + mod_floor(k, r) * r * t, q));
  }
  return LensParams(q, std::move(s));
}

}  // namespace lensspec
