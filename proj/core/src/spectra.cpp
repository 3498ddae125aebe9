#include "lensspec/spectra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lensspec/arith.hpp"
#include "lensspec/digest.hpp"

namespace lensspec {

uint64_t dim_invariants(const CongruenceLattice& lattice, const HighestWeight& highest) {
  if (lattice.m() != highest.rank()) throw std::invalid_argument("dim_invariants: rank mismatch");
  uint64_t total = 0;
  for (const auto& [weight, mult] : weight_table(highest, false))
    if (lattice.contains(weight)) total += mult;
  return total;
}

uint64_t dim_invariants(const CongruenceLattice& lattice, PiKPLabel label) {
  const int m = lattice.m();
  const HighestWeight highest = highest_weight_of(label, m);
  uint64_t total = dim_invariants(lattice, highest);
  if (label.p == m) {
    std::vector<int64_t> bar(highest.coords().begin(), highest.coords().end());
    bar.back() = -bar.back();
    total += dim_invariants(lattice, HighestWeight(std::move(bar)));
  }
  return total;
}

uint64_t dim_invariants_kp(const CountTable& reduced, PiKPLabel label) {
  const int m = reduced.m();
  const int64_t top = label.k + label.p;
  uint64_t total = 0;
  for (int64_t r = 0; 2 * r <= top; ++r) {
    const int64_t norm = top - 2 * r;
    for (int z = 0; z <= m; ++z) {
      const int nonzero = m - z;
      if ((nonzero == 0 && norm != 0) || (nonzero > 0 && norm < nonzero)) continue;
      const uint64_t count = reconstruct_full(reduced, norm, z);
      if (count == 0) continue;
      total += mult_pi_kp(label, m, norm, z) * count;
    }
  }
  return total;
}

int64_t eigenvalue_lambda(int64_t k, int p, int m) {
  const int64_t pp = p == 0 ? 1 : p;
  return k * k + k * (2 * m - 2) + (pp - 1) * (2 * m - 1 - pp);
}

nlohmann::json SpectrumSlice::to_json(const LensParams& lens) const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : entries) rows.push_back({{"lambda", e.lambda}, {"k", e.k}, {"mult", e.mult}});
  return {{"q", lens.q()},
          {"s", std::vector<int64_t>(lens.s().begin(), lens.s().end())},
          {"p", p},
          {"entries", std::move(rows)}};
}

std::string SpectrumSlice::to_csv() const {
  std::ostringstream os;
  os << "lambda,k,mult\n";
  for (const auto& e : entries) os << e.lambda << ',' << e.k << ',' << e.mult << '\n';
  return os.str();
}

SpectrumSlice p_spectrum(const CountTable& reduced, int p, int64_t lambda_max) {
  const int m = reduced.m();
  if (p < 0 || p > 2 * m - 1) throw std::invalid_argument("p_spectrum: form degree out of range");
  SpectrumSlice slice;
  slice.p = p;
  const int degree = p >= m ? 2 * m - 1 - p : p;

  if (degree == 0) {
    for (int64_t k = 0; eigenvalue_lambda(k, 0, m) <= lambda_max; ++k) {
      if (const uint64_t mult = dim_invariants_kp(reduced, {k, 0}); mult > 0)
        slice.entries.push_back({eigenvalue_lambda(k, 0, m), k, mult});
    }
    return slice;
  }
  for (const int level : {degree, degree + 1}) {
    for (int64_t k = 1; eigenvalue_lambda(k, level, m) <= lambda_max; ++k) {
      if (const uint64_t mult = dim_invariants_kp(reduced, {k - 1, level}); mult > 0)
        slice.entries.push_back({eigenvalue_lambda(k, level, m), k, mult});
    }
  }
  std::sort(slice.entries.begin(), slice.entries.end(),
            [](const SpectrumEntry& x, const SpectrumEntry& y) { return x.lambda < y.lambda; });
  return slice;
}

SpectrumSlice p_spectrum(const LensParams& lens, int p, int64_t lambda_max) {
  return p_spectrum(count_table_reduced(lens.lattice()), p, lambda_max);
}

nlohmann::json IsospectralityVerdict::to_json() const {
  return {{"holds", holds}, {"certificate_a", certificate_a}, {"certificate_b", certificate_b}};
}

bool theta_series_equal(const ThetaCertificate& a, const ThetaCertificate& b) {
  if (a.m != b.m) return false;
  if (a.q == b.q) return a.coefficients == b.coefficients;
  // P_a / (1 - x^qa)^m == P_b / (1 - x^qb)^m, cross-multiplied.
  auto cross = [](const ThetaCertificate& c, int64_t other_q) {
    std::vector<__int128> out(c.coefficients.size() + static_cast<std::size_t>(c.m * other_q), 0);
    for (int i = 0; i <= c.m; ++i) {
      const auto sign = static_cast<__int128>(i % 2 == 0 ? 1 : -1) * static_cast<__int128>(binomial(c.m, i));
      for (std::size_t d = 0; d < c.coefficients.size(); ++d)
        out[d + static_cast<std::size_t>(i * other_q)] += sign * static_cast<__int128>(c.coefficients[d]);
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
  };
  return cross(a, b.q) == cross(b, a.q);
}

IsospectralityVerdict are_0_isospectral(const LensParams& a, const LensParams& b) {
  if (a.m() != b.m()) throw std::invalid_argument("are_0_isospectral: dimensions differ");
  const CountTable ta = count_table_reduced(a.lattice());
  const CountTable tb = count_table_reduced(b.lattice());
  const ThetaCertificate ca = theta_certificate(ta);
  const ThetaCertificate cb = theta_certificate(tb);
  IsospectralityVerdict v{false, certificate_digest(ca), certificate_digest(cb)};
  if (a.q() == b.q()) {
    v.holds = ca == cb;
    return v;
  }
  bool prefix_equal = true;
  const int64_t k_max = 2 * a.m() * std::max(a.q(), b.q());
  for (int64_t k = 0; k <= k_max && prefix_equal; ++k) {
    uint64_t na = 0, nb = 0;
    for (int z = 0; z <= a.m(); ++z) {
      na += reconstruct_full(ta, k, z);
      nb += reconstruct_full(tb, k, z);
    }
    prefix_equal = na == nb;
  }
  v.holds = prefix_equal && theta_series_equal(ca, cb);
  return v;
}

IsospectralityVerdict are_all_p_isospectral(const LensParams& a, const LensParams& b) {
  if (a.q() != b.q() || a.m() != b.m()) throw std::invalid_argument("are_all_p_isospectral: q and m must agree");
  const CountTable ta = count_table_reduced(a.lattice());
  const CountTable tb = count_table_reduced(b.lattice());
  return {ta == tb, table_digest(ta), table_digest(tb)};
}

uint64_t tau_eigenvalue_multiplicity(const LensParams& lens, const KHighestWeight& tau, int64_t lambda) {
  if (tau.rank() + 1 != lens.m()) throw std::invalid_argument("tau multiplicity: tau must have rank m - 1");
  const CongruenceLattice lattice = lens.lattice();
  uint64_t total = 0;
  for (const auto& highest : enumerate_by_casimir(lambda, lens.m())) {
    const uint64_t branch = branching_multiplicity(highest, tau);
    if (branch != 0) total += branch * dim_invariants(lattice, highest);
  }
  return total;
}

namespace {

void dominant_k_weights(std::size_t rank, int64_t bound, std::vector<int64_t>& b, std::size_t j,
                        std::vector<KHighestWeight>& out) {
  if (j == rank) {
    out.emplace_back(b);
    return;
  }
  const int64_t upper = j == 0 ? bound : b[j - 1];
  for (int64_t v = 0; v <= upper; ++v) {
    b[j] = v;
    dominant_k_weights(rank, bound, b, j + 1, out);
  }
}

}  // namespace

std::vector<TauMismatch> tau_scan(const LensParams& a, const LensParams& b, int64_t tau_bound, int64_t lambda_max) {
  if (a.m() != b.m()) throw std::invalid_argument("tau_scan: dimensions differ");
  const int m = a.m();
  std::vector<KHighestWeight> taus;
  std::vector<int64_t> scratch(static_cast<std::size_t>(m - 1), 0);
  dominant_k_weights(static_cast<std::size_t>(m - 1), tau_bound, scratch, 0, taus);

  const CongruenceLattice la = a.lattice(), lb = b.lattice();
  std::vector<TauMismatch> out;
  for (int64_t lambda = 0; lambda <= lambda_max; ++lambda) {
    const auto highs = enumerate_by_casimir(lambda, m);
    if (highs.empty()) continue;
    std::vector<std::pair<uint64_t, uint64_t>> dims;
    for (const auto& h : highs) dims.emplace_back(dim_invariants(la, h), dim_invariants(lb, h));
    for (const auto& tau : taus) {
      uint64_t ma = 0, mb = 0;
      for (std::size_t i = 0; i < highs.size(); ++i) {
        if (branching_multiplicity(highs[i], tau) == 0) continue;
        ma += dims[i].first;
        mb += dims[i].second;
      }
      if (ma != mb) out.push_back({tau, lambda, ma, mb});
    }
  }
  return out;
}

}  // namespace lensspec
