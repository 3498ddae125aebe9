#include "lensspec/weights.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "lensspec/arith.hpp"

namespace lensspec {

RootSystemD::RootSystemD(int m) : m_(m) {
  if (m < 2) throw std::invalid_argument("root system D_m needs m >= 2");
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      std::vector<int64_t> minus(static_cast<std::size_t>(m), 0), plus(static_cast<std::size_t>(m), 0);
      minus[static_cast<std::size_t>(i)] = 1;
      minus[static_cast<std::size_t>(j)] = -1;
      plus[static_cast<std::size_t>(i)] = 1;
      plus[static_cast<std::size_t>(j)] = 1;
      roots_.push_back(std::move(minus));
      roots_.push_back(std::move(plus));
    }
  }
  for (int j = 0; j < m; ++j) rho_.push_back(m - 1 - j);
}

HighestWeight::HighestWeight(std::vector<int64_t> a) : a_(std::move(a)) {
  if (a_.size() < 2) throw std::invalid_argument("highest weight: rank must be at least 2");
  for (std::size_t j = 0; j + 2 < a_.size(); ++j)
    if (a_[j] < a_[j + 1]) throw std::invalid_argument("highest weight: not dominant");
  const int64_t last = a_.back();
  if (a_[a_.size() - 2] < (last < 0 ? -last : last)) throw std::invalid_argument("highest weight: not dominant");
}

KHighestWeight::KHighestWeight(std::vector<int64_t> b) : b_(std::move(b)) {
  if (b_.empty()) throw std::invalid_argument("K highest weight: rank must be at least 1");
  for (std::size_t j = 0; j + 1 < b_.size(); ++j)
    if (b_[j] < b_[j + 1]) throw std::invalid_argument("K highest weight: not dominant");
  if (b_.back() < 0) throw std::invalid_argument("K highest weight: not dominant");
}

HighestWeight highest_weight_of(PiKPLabel label, int m) {
  if (label.k < 0 || label.p < 0 || label.p > m) throw std::invalid_argument("pi_{k,p}: label out of range");
  std::vector<int64_t> a(static_cast<std::size_t>(m), 0);
  a[0] = label.k;
  for (int j = 0; j < label.p; ++j) a[static_cast<std::size_t>(j)] += 1;
  return HighestWeight(std::move(a));
}

uint64_t mult_closed_spherical(int64_t k, int m, int64_t norm) {
  if (norm > k || (k - norm) % 2 != 0) return 0;
  const int64_t r = (k - norm) / 2;
  return binomial(r + m - 2, m - 2);
}

uint64_t mult_closed_exterior(int p, int m, const WeightVector& mu) {
  if (mu.dim() != m) throw std::invalid_argument("mult_closed_exterior: dimension mismatch");
  for (const int64_t a : mu.entries())
    if (a > 1 || a < -1) return 0;
  const int64_t norm = mu.norm();
  if (norm > p || (p - norm) % 2 != 0) return 0;
  const int64_t r = (p - norm) / 2;
  return binomial(m - p + 2 * r, r);
}

std::vector<int64_t> dominant_representative(std::span<const int64_t> mu) {
  std::vector<int64_t> out;
  out.reserve(mu.size());
  int negatives = 0;
  bool has_zero = false;
  for (const int64_t a : mu) {
    if (a < 0) ++negatives;
    if (a == 0) has_zero = true;
    out.push_back(a < 0 ? -a : a);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  if (negatives % 2 == 1 && !has_zero) out.back() = -out.back();
  return out;
}

bool dominated_by(std::span<const int64_t> mu, std::span<const int64_t> highest) {
  const std::size_t m = mu.size();
  int64_t partial = 0;
  for (std::size_t j = 0; j + 2 < m; ++j) {
    partial += highest[j] - mu[j];
    if (partial < 0) return false;
  }
  const int64_t nu_last = highest[m - 1] - mu[m - 1];
  const int64_t s_before_last = partial + highest[m - 2] - mu[m - 2];
  const int64_t s_total = s_before_last + nu_last;
  if (s_total < 0 || s_total % 2 != 0) return false;
  return s_before_last - nu_last >= 0;
}

std::size_t MultiplicityEngine::VecHash::operator()(const std::vector<int64_t>& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const int64_t x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

MultiplicityEngine& MultiplicityEngine::shared() {
  static MultiplicityEngine engine;
  return engine;
}

uint64_t MultiplicityEngine::multiplicity(const HighestWeight& highest, std::span<const int64_t> mu) {
  if (static_cast<int>(mu.size()) != highest.rank())
    throw std::invalid_argument("multiplicity: dimension mismatch");
  const std::vector<int64_t> top(highest.coords().begin(), highest.coords().end());
  Memo* memo = nullptr;
  {
    std::shared_lock lock(mutex_);
    if (auto it = memos_.find(top); it != memos_.end()) memo = it->second.get();
  }
  if (memo == nullptr) {
    std::unique_lock lock(mutex_);
    auto& slot = memos_[top];
    if (!slot) slot = std::make_unique<Memo>();
    memo = slot.get();
  }
  return dominant_multiplicity(top, dominant_representative(mu), *memo);
}

// Freudenthal: (|L+rho|^2 - |mu+rho|^2) m(mu) = 2 sum_{a>0} sum_{j>=1} <mu+ja, a> m(mu+ja).
uint64_t MultiplicityEngine::dominant_multiplicity(const std::vector<int64_t>& highest,
                                                   const std::vector<int64_t>& mu, Memo& memo) {
  if (mu == highest) return 1;
  if (!dominated_by(mu, highest)) return 0;
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo.find(mu); it != memo.end()) return it->second;
  }
  const std::size_t m = mu.size();
  int64_t denom = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const auto rho = static_cast<int64_t>(m - 1 - j);
    denom += (highest[j] + rho) * (highest[j] + rho) - (mu[j] + rho) * (mu[j] + rho);
  }
  assert(denom > 0);

  int64_t sum = 0;
  std::vector<int64_t> shifted(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = i + 1; k < m; ++k) {
      for (const int sign : {-1, 1}) {
        const int64_t pairing = mu[i] + sign * mu[k];
        for (int64_t step = 1;; ++step) {
          shifted = mu;
          shifted[i] += step;
          shifted[k] += sign * step;
          if (!dominated_by(shifted, highest)) break;
          const uint64_t mult = dominant_multiplicity(highest, dominant_representative(shifted), memo);
          sum += (pairing + 2 * step) * static_cast<int64_t>(mult);
        }
      }
    }
  }
  assert((2 * sum) % denom == 0);
  const auto result = static_cast<uint64_t>(2 * sum / denom);
  {
    std::unique_lock lock(mutex_);
    memo.emplace(mu, result);
  }
  return result;
}

uint64_t general_multiplicity(const HighestWeight& highest, const WeightVector& mu) {
  return MultiplicityEngine::shared().multiplicity(highest, mu.entries());
}

uint64_t mult_pi_kp(PiKPLabel label, int m, int64_t norm, int z) {
  if (z < 0 || z > m || norm < 0) throw std::invalid_argument("mult_pi_kp: signature out of range");
  const int nonzero = m - z;
  if ((nonzero == 0 && norm != 0) || (nonzero > 0 && norm < nonzero))
    throw std::invalid_argument("mult_pi_kp: no weight with this (norm, zeros) signature");
  std::vector<int64_t> rep(static_cast<std::size_t>(m), 0);
  if (nonzero > 0) {
    rep[0] = norm - (nonzero - 1);
    for (int j = 1; j < nonzero; ++j) rep[static_cast<std::size_t>(j)] = 1;
  }
  if (label.p == 0) return mult_closed_spherical(label.k, m, norm);
  const HighestWeight highest = highest_weight_of(label, m);
  auto& engine = MultiplicityEngine::shared();
  uint64_t mult = engine.multiplicity(highest, rep);
  if (label.p == m) {
    // bar(Lambda_m) component: reflect the last coordinate.
    rep.back() = -rep.back();
    mult += engine.multiplicity(highest, rep);
  }
  return mult;
}

int64_t casimir_scalar(const HighestWeight& highest) {
  const auto a = highest.coords();
  const auto m = static_cast<int64_t>(a.size());
  int64_t total = 0;
  for (int64_t j = 0; j < m; ++j) total += a[static_cast<std::size_t>(j)] * (a[static_cast<std::size_t>(j)] + 2 * (m - 1 - j));
  return total;
}

namespace {

int64_t isqrt(int64_t n) {
  if (n <= 0) return 0;
  auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Strictly decreasing c_0 > c_1 > ... > |c_{m-1}| with sum of squares `remaining`.
void casimir_search(int m, std::size_t j, int64_t remaining, int64_t upper, std::vector<int64_t>& c,
                    std::vector<HighestWeight>& out) {
  const auto mm = static_cast<std::size_t>(m);
  if (j + 1 == mm) {
    const int64_t root = isqrt(remaining);
    if (root * root != remaining || root >= upper) return;
    for (const int64_t last : {root, -root}) {
      c[j] = last;
      std::vector<int64_t> a(mm);
      for (std::size_t i = 0; i < mm; ++i) a[i] = c[i] - static_cast<int64_t>(mm - 1 - i);
      out.emplace_back(std::move(a));
      if (root == 0) break;
    }
    return;
  }
  const auto floor_value = static_cast<int64_t>(mm - 1 - j);
  for (int64_t v = std::min(upper - 1, isqrt(remaining)); v >= floor_value; --v) {
    c[j] = v;
    casimir_search(m, j + 1, remaining - v * v, v, c, out);
  }
}

// Exact product of ratios, reduced as it goes.
class Fraction {
 public:
  void times(__int128 num, __int128 den) {
    num_ *= num;
    den_ *= den;
    const __int128 g = gcd128(num_ < 0 ? -num_ : num_, den_ < 0 ? -den_ : den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
  uint64_t integer() const {
    if (den_ == 0 || num_ % den_ != 0) throw std::logic_error("weyl dimension: non-integral result");
    return static_cast<uint64_t>(num_ / den_);
  }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  __int128 num_ = 1;
  __int128 den_ = 1;
};

}  // namespace

std::vector<HighestWeight> enumerate_by_casimir(int64_t lambda, int m) {
  if (m < 2) throw std::invalid_argument("enumerate_by_casimir: m must be at least 2");
  std::vector<HighestWeight> out;
  if (lambda < 0) return out;
  int64_t rho_sq = 0;
  for (int j = 0; j < m; ++j) rho_sq += static_cast<int64_t>(m - 1 - j) * (m - 1 - j);
  std::vector<int64_t> c(static_cast<std::size_t>(m), 0);
  casimir_search(m, 0, lambda + rho_sq, isqrt(lambda + rho_sq) + 1, c, out);
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t branching_multiplicity(const HighestWeight& highest, const KHighestWeight& tau) {
  const auto a = highest.coords();
  const auto b = tau.coords();
  if (b.size() + 1 != a.size()) throw std::invalid_argument("branching: ranks must be m and m - 1");
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (a[j] < b[j]) return 0;
    const int64_t next = (j + 1 == b.size()) ? (a[j + 1] < 0 ? -a[j + 1] : a[j + 1]) : a[j + 1];
    if (b[j] < next) return 0;
  }
  return 1;
}

uint64_t weyl_dimension(const HighestWeight& highest) {
  const auto a = highest.coords();
  const std::size_t m = a.size();
  Fraction f;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto ri = static_cast<__int128>(m - 1 - i), rj = static_cast<__int128>(m - 1 - j);
      const __int128 li = a[i] + ri, lj = a[j] + rj;
      f.times(li * li - lj * lj, ri * ri - rj * rj);
    }
  }
  return f.integer();
}

uint64_t weyl_dimension(const KHighestWeight& tau) {
  // Doubled coordinates keep rho = (n - 1/2, ..., 1/2) integral.
  const auto b = tau.coords();
  const std::size_t n = b.size();
  Fraction f;
  for (std::size_t i = 0; i < n; ++i) {
    const auto ri = static_cast<__int128>(2 * (n - i) - 1);
    const __int128 li = 2 * b[i] + ri;
    f.times(li, ri);
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto rj = static_cast<__int128>(2 * (n - j) - 1);
      const __int128 lj = 2 * b[j] + rj;
      f.times(li * li - lj * lj, ri * ri - rj * rj);
    }
  }
  return f.integer();
}

std::vector<WeightMultiplicity> weight_table(const HighestWeight& highest, bool dominant_only) {
  const auto a = highest.coords();
  const std::size_t m = a.size();
  const int64_t bound = a[0];
  const int64_t top_norm = highest.as_weight().norm();
  int64_t parity = 0;
  for (const int64_t x : a) parity += x;
  parity = mod_floor(parity, 2);

  std::vector<WeightMultiplicity> out;
  std::vector<int64_t> mu(m, -bound);
  auto& engine = MultiplicityEngine::shared();
  while (true) {
    int64_t norm = 0, sum = 0;
    for (const int64_t x : mu) {
      norm += x < 0 ? -x : x;
      sum += x;
    }
    if (norm <= top_norm && mod_floor(sum, 2) == parity &&
        (!dominant_only || dominant_representative(mu) == mu)) {
      if (const uint64_t mult = engine.multiplicity(highest, mu); mult > 0) out.push_back({WeightVector(mu), mult});
    }
    std::size_t j = 0;
    while (j < m && mu[j] == bound) mu[j++] = -bound;
    if (j == m) break;
    ++mu[j];
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.weight > y.weight; });
  return out;
}

}  // namespace lensspec
