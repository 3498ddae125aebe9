#include "lensspec/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "lensspec/arith.hpp"

namespace lensspec {

int64_t WeightVector::norm() const {
  int64_t total = 0;
  for (const int64_t a : entries_) total += a < 0 ? -a : a;
  return total;
}

int WeightVector::zeros() const {
  return static_cast<int>(std::count(entries_.begin(), entries_.end(), int64_t{0}));
}

CongruenceLattice::CongruenceLattice(int64_t q, std::vector<int64_t> s) : q_(q), s_(std::move(s)) {
  if (q_ < 1) throw std::invalid_argument("congruence lattice: modulus must be positive");
  if (s_.size() < 2) throw std::invalid_argument("congruence lattice: dimension must be at least 2");
  for (int64_t& sj : s_) {
    sj = mod_floor(sj, q_);
    if (std::gcd(sj, q_) != 1)
      throw std::invalid_argument("congruence lattice: parameters must be coprime to q");
  }
}

CongruenceLattice CongruenceLattice::integer_lattice(int m) {
  return CongruenceLattice(1, std::vector<int64_t>(static_cast<std::size_t>(m), 0));
}

bool CongruenceLattice::contains(std::span<const int64_t> mu) const {
  if (mu.size() != s_.size()) throw std::invalid_argument("contains: dimension mismatch");
  int64_t acc = 0;
  for (std::size_t j = 0; j < s_.size(); ++j) acc = mod_floor(acc + mul_mod(mu[j], s_[j], q_), q_);
  return acc == 0;
}

bool CongruenceLattice::contains(const WeightVector& mu) const { return contains(mu.entries()); }

CountTable::CountTable(int m, int64_t q, CountFlavor flavor, int64_t k_max)
    : m_(m), q_(q), flavor_(flavor), k_max_(k_max),
      cells_(static_cast<std::size_t>((k_max + 1) * (m + 1)), 0) {
  if (k_max < 0) throw std::invalid_argument("count table: negative k_max");
}

uint64_t CountTable::at(int64_t k, int z) const {
  if (k < 0 || k > k_max_ || z < 0 || z > m_) return 0;
  return cells_[static_cast<std::size_t>(k * (m_ + 1) + z)];
}

void CountTable::add(int64_t k, int z, uint64_t count) {
  if (k < 0 || k > k_max_ || z < 0 || z > m_) throw std::out_of_range("count table: cell out of range");
  uint64_t& cell = cells_[static_cast<std::size_t>(k * (m_ + 1) + z)];
  assert(cell <= UINT64_MAX - count);
  cell += count;
}

uint64_t CountTable::norm_count(int64_t k) const {
  uint64_t total = 0;
  for (int z = 0; z <= m_; ++z) total += at(k, z);
  return total;
}

std::vector<CountEntry> CountTable::entries() const {
  std::vector<CountEntry> out;
  for (int64_t k = 0; k <= k_max_; ++k)
    for (int z = 0; z <= m_; ++z)
      if (const uint64_t c = at(k, z); c != 0) out.push_back({k, z, c});
  return out;
}

nlohmann::json CountTable::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : entries()) rows.push_back({e.k, e.z, e.count});
  return {{"q", q_}, {"m", m_}, {"entries", std::move(rows)}};
}

CountTable CountTable::from_json(const nlohmann::json& j) {
  const int64_t q = j.at("q").get<int64_t>();
  const int m = j.at("m").get<int>();
  if (q < 1 || m < 1) throw std::invalid_argument("count table json: bad q or m");
  CountTable table(m, q, CountFlavor::Reduced, static_cast<int64_t>(m) * (q - 1));
  for (const auto& row : j.at("entries")) {
    table.add(row.at(0).get<int64_t>(), row.at(1).get<int>(), row.at(2).get<uint64_t>());
  }
  return table;
}

namespace {

// Walks a_1..a_{m-1} over (-q, q) (or a norm budget) and solves the congruence for
// a_m, which has at most two representatives with |a_m| < q.
class PrefixWalker {
 public:
  PrefixWalker(const CongruenceLattice& lattice, CountTable& table, int64_t budget)
      : q_(lattice.q()), m_(lattice.m()), budget_(budget), table_(table) {
    const int64_t inv_last = inverse_mod(lattice.s()[static_cast<std::size_t>(m_ - 1)], q_);
    for (int j = 0; j + 1 < m_; ++j) coef_.push_back(mul_mod(lattice.s()[static_cast<std::size_t>(j)], inv_last, q_));
  }

  void run() { walk(0, 0, 0, 0); }

 private:
  // residue = sum a_j coef_j mod q over the fixed prefix; a_m must be = -residue.
  void leaf(int64_t residue, int64_t norm, int zeros) {
    const int64_t room = budget_ - norm;
    if (residue == 0) {
      table_.add(norm, zeros + 1, 1);
      return;
    }
    const int64_t pos = q_ - residue;  // a_m = pos
    const int64_t neg = residue;       // a_m = pos - q, |a_m| = residue
    if (pos <= room) table_.add(norm + pos, zeros, 1);
    if (neg <= room) table_.add(norm + neg, zeros, 1);
  }

  void walk(int j, int64_t residue, int64_t norm, int zeros) {
    const int64_t reach = std::min(q_ - 1, budget_ - norm);
    const int64_t c = coef_[static_cast<std::size_t>(j)];
    int64_t r = mod_floor(residue - mul_mod(reach, c, q_), q_);
    const bool last_prefix = (j + 2 == m_);
    for (int64_t a = -reach; a <= reach; ++a) {
      const int64_t abs_a = a < 0 ? -a : a;
      if (last_prefix) {
        leaf(r, norm + abs_a, zeros + (a == 0 ? 1 : 0));
      } else {
        walk(j + 1, r, norm + abs_a, zeros + (a == 0 ? 1 : 0));
      }
      r += c;
      if (r >= q_) r -= q_;
    }
  }

  int64_t q_;
  int m_;
  int64_t budget_;
  CountTable& table_;
  std::vector<int64_t> coef_;
};

void enumerate_shell(const CongruenceLattice& lattice, std::vector<int64_t>& mu, std::size_t j, int64_t remaining,
                     int z, uint64_t& count) {
  const std::size_t m = mu.size();
  if (j + 1 == m) {
    const int64_t options[2] = {remaining, -remaining};
    for (int i = 0; i < (remaining == 0 ? 1 : 2); ++i) {
      mu[j] = options[i];
      const int zeros = static_cast<int>(std::count(mu.begin(), mu.end(), int64_t{0}));
      if (zeros == z && lattice.contains(mu)) ++count;
    }
    return;
  }
  for (int64_t a = -remaining; a <= remaining; ++a) {
    mu[j] = a;
    enumerate_shell(lattice, mu, j + 1, remaining - (a < 0 ? -a : a), z, count);
  }
}

void enumerate_ball(const CongruenceLattice& lattice, int64_t inv_last, std::size_t j, int64_t residue,
                    int64_t remaining, int zeros, int64_t k_max, CountTable& table) {
  const int64_t q = lattice.q();
  const auto m = static_cast<std::size_t>(lattice.m());
  if (j + 1 == m) {
    // a_m s_m = -residue (mod q); walk that class inside [-remaining, remaining].
    const int64_t c = mod_floor(mul_mod(mod_floor(-residue, q), inv_last, q), q);
    const int64_t used = k_max - remaining;
    for (int64_t v = -remaining + mod_floor(c + remaining, q); v <= remaining; v += q)
      table.add(used + (v < 0 ? -v : v), zeros + (v == 0 ? 1 : 0), 1);
    return;
  }
  const int64_t s = lattice.s()[j];
  for (int64_t a = -remaining; a <= remaining; ++a)
    enumerate_ball(lattice, inv_last, j + 1, mod_floor(residue + mul_mod(mod_floor(a, q), s, q), q),
                   remaining - (a < 0 ? -a : a), zeros + (a == 0 ? 1 : 0), k_max, table);
}

}  // namespace

CountTable count_table_brute(const CongruenceLattice& lattice, int64_t k_max) {
  if (k_max < 0) throw std::invalid_argument("count_table_brute: k_max must be nonnegative");
  CountTable table(lattice.m(), lattice.q(), CountFlavor::Full, k_max);
  const int64_t inv_last = inverse_mod(lattice.s().back(), lattice.q());
  enumerate_ball(lattice, inv_last, 0, 0, k_max, 0, k_max, table);
  return table;
}

CountTable count_table_reduced(const CongruenceLattice& lattice) {
  const int64_t k_max = static_cast<int64_t>(lattice.m()) * (lattice.q() - 1);
  CountTable table(lattice.m(), lattice.q(), CountFlavor::Reduced, k_max);
  PrefixWalker(lattice, table, k_max).run();
  return table;
}

CountTable count_table_truncated(const CongruenceLattice& lattice, int64_t norm_bound) {
  if (norm_bound < 1 || norm_bound > lattice.q())
    throw std::invalid_argument("count_table_truncated: norm bound must lie in [1, q]");
  CountTable table(lattice.m(), lattice.q(), CountFlavor::Full, norm_bound - 1);
  PrefixWalker(lattice, table, norm_bound - 1).run();
  return table;
}

uint64_t count_full(const CongruenceLattice& lattice, int64_t k, int z) {
  if (k < 0 || z < 0 || z > lattice.m()) return 0;
  std::vector<int64_t> mu(static_cast<std::size_t>(lattice.m()), 0);
  uint64_t count = 0;
  enumerate_shell(lattice, mu, 0, k, z, count);
  return count;
}

uint64_t reconstruct_full(const CountTable& reduced, int64_t k, int z) {
  if (reduced.flavor() != CountFlavor::Reduced)
    throw std::invalid_argument("reconstruct_full: table must be reduced");
  const int m = reduced.m();
  const int64_t q = reduced.q();
  if (k < 0 || z < 0 || z > m) return 0;
  const int64_t alpha = k / q;
  const int free_coords = m - z;
  uint64_t total = 0;
  for (int s = 0; s <= free_coords; ++s) {
    const uint64_t zero_lifts = (uint64_t{1} << s) * binomial(z + s, s);
    uint64_t inner = 0;
    for (int64_t t = s; t <= alpha; ++t) {
      const uint64_t base = reduced.at(k - t * q, z + s);
      if (base == 0) continue;
      inner += compositions(t - s, free_coords) * base;
    }
    total += zero_lifts * inner;
  }
  return total;
}

CountTable expand_full(const CountTable& reduced, int64_t k_max) {
  CountTable full(reduced.m(), reduced.q(), CountFlavor::Full, k_max);
  for (int64_t k = 0; k <= k_max; ++k)
    for (int z = 0; z <= reduced.m(); ++z)
      if (const uint64_t c = reconstruct_full(reduced, k, z); c != 0) full.add(k, z, c);
  return full;
}

ThetaCertificate theta_certificate(const CountTable& reduced) {
  if (reduced.flavor() != CountFlavor::Reduced)
    throw std::invalid_argument("theta_certificate: table must be reduced");
  const int m = reduced.m();
  const int64_t q = reduced.q();
  ThetaCertificate cert{q, m, std::vector<uint64_t>(static_cast<std::size_t>(reduced.k_max() + m * q + 1), 0)};
  for (const auto& e : reduced.entries()) {
    for (int i = 0; i <= e.z; ++i) {
      cert.coefficients[static_cast<std::size_t>(e.k + i * q)] += e.count * binomial(e.z, i);
    }
  }
  while (cert.coefficients.size() > 1 && cert.coefficients.back() == 0) cert.coefficients.pop_back();
  return cert;
}

uint64_t count_A(int64_t r, int64_t xi) {
  if (r < 1) throw std::invalid_argument("count_A: r must be positive");
  const int64_t target = mod_floor(xi, r);
  uint64_t count = 0;
  for (int64_t x = 1; x < r; ++x)
    for (int64_t y = 1; y < x; ++y)
      if (mod_floor(x + 2 * y, r) == target) ++count;
  return count;
}

uint64_t count_A_closed(int64_t r, int64_t xi) {
  if (r < 1) throw std::invalid_argument("count_A_closed: r must be positive");
  if (r % 3 == 0) throw std::invalid_argument("count_A_closed: formula requires r not divisible by 3");
  const int64_t x = mod_floor(xi, r);
  int64_t value = 0;
  if (r % 2 == 1) {
    value = x == 0 ? (r - 1) / 2 : (r - 3) / 2;
  } else if (x == 0 || x % 2 == 1) {
    value = r / 2 - 1;
  } else {
    value = r / 2 - 2;
  }
  return static_cast<uint64_t>(std::max<int64_t>(value, 0));
}

}  // namespace lensspec
