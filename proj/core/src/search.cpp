#include "lensspec/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lensspec/arith.hpp"
#include "lensspec/digest.hpp"
#include "lensspec/spectra.hpp"

namespace lensspec {

namespace {

template <class Fn>
void parallel_for(std::size_t n, int workers, Fn&& fn) {
  const auto threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
}

// Cheap exact prefix of the reduced table: vectors of norm below q/3 are all reduced.
int64_t prefilter_bound(int64_t q) { return std::clamp<int64_t>(q / 3, 1, q); }

std::filesystem::path cache_file(const SearchConfig& cfg, int64_t q) {
  return cfg.cache_dir / ("m" + std::to_string(cfg.m) + "_q" + std::to_string(q) + ".json");
}

nlohmann::json group_json(const IsospectralGroup& g) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& c : g.members) members.push_back(c.s);
  return {{"q", g.q}, {"members", std::move(members)}, {"certificate", g.certificate}};
}

IsospectralGroup group_from_json(const nlohmann::json& j) {
  IsospectralGroup g{j.at("q").get<int64_t>(), {}, j.at("certificate").get<std::string>()};
  for (const auto& s : j.at("members")) g.members.push_back({g.q, s.get<std::vector<int64_t>>()});
  return g;
}

}  // namespace

void validate(const SearchConfig& cfg) {
  if (cfg.m < 2) throw std::invalid_argument("search: m must be at least 2");
  if (cfg.q_min < 2) throw std::invalid_argument("search: q_min must be at least 2");
  if (cfg.workers < 1) throw std::invalid_argument("search: workers must be positive");
}

std::vector<IsospectralGroup> groups_at(int64_t q, int m, int workers) {
  const std::vector<CanonicalForm> classes = enumerate_classes(q, m);
  const int64_t bound = prefilter_bound(q);

  std::vector<std::vector<uint64_t>> prefix(classes.size());
  parallel_for(classes.size(), workers, [&](std::size_t i) {
    const CountTable table = count_table_truncated(classes[i].params().lattice(), bound);
    prefix[i].assign(table.cells().begin(), table.cells().end());
  });

  std::map<std::vector<uint64_t>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < classes.size(); ++i) buckets[prefix[i]].push_back(i);

  std::vector<std::size_t> candidates;
  for (const auto& [key, idx] : buckets)
    if (idx.size() >= 2) candidates.insert(candidates.end(), idx.begin(), idx.end());
  std::sort(candidates.begin(), candidates.end());

  std::vector<std::optional<CountTable>> tables(candidates.size());
  std::vector<std::string> digests(candidates.size());
  parallel_for(candidates.size(), workers, [&](std::size_t i) {
    tables[i] = count_table_reduced(classes[candidates[i]].params().lattice());
    digests[i] = table_digest(*tables[i]);
  });

  // Bucket by digest, then split on full table comparison.
  std::map<std::string, std::vector<std::vector<std::size_t>>> by_digest;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    auto& lists = by_digest[digests[i]];
    auto same = std::find_if(lists.begin(), lists.end(),
                             [&](const std::vector<std::size_t>& l) { return *tables[l.front()] == *tables[i]; });
    if (same == lists.end())
      lists.push_back({i});
    else
      same->push_back(i);
  }

  std::vector<IsospectralGroup> out;
  for (const auto& [digest, lists] : by_digest)
    for (const auto& l : lists) {
      if (l.size() < 2) continue;
      IsospectralGroup g{q, {}, digest};
      for (std::size_t i : l) g.members.push_back(classes[candidates[i]]);
      std::sort(g.members.begin(), g.members.end());
      out.push_back(std::move(g));
    }
  std::sort(out.begin(), out.end(),
            [](const IsospectralGroup& x, const IsospectralGroup& y) { return x.members < y.members; });
  return out;
}

std::vector<IsospectralGroup> find_groups(const SearchConfig& cfg) {
  validate(cfg);
  if (!cfg.cache_dir.empty()) std::filesystem::create_directories(cfg.cache_dir);
  std::vector<IsospectralGroup> out;
  for (int64_t q = cfg.q_min; q <= cfg.q_max; ++q) {
    std::vector<IsospectralGroup> here;
    const bool cached = !cfg.cache_dir.empty() && std::filesystem::exists(cache_file(cfg, q));
    if (cached) {
      std::ifstream in(cache_file(cfg, q));
      const nlohmann::json j = nlohmann::json::parse(in);
      for (const auto& g : j.at("groups")) here.push_back(group_from_json(g));
    } else {
      here = groups_at(q, cfg.m, cfg.workers);
      if (!cfg.cache_dir.empty()) {
        nlohmann::json j = {{"m", cfg.m}, {"q", q}, {"groups", groups_to_json(here)}};
        std::ofstream(cache_file(cfg, q)) << j.dump() << '\n';
      }
    }
    out.insert(out.end(), std::make_move_iterator(here.begin()), std::make_move_iterator(here.end()));
  }
  return out;
}

std::map<std::size_t, std::size_t> group_size_census(const SearchConfig& cfg) {
  std::map<std::size_t, std::size_t> hist;
  for (const auto& g : find_groups(cfg)) ++hist[g.members.size()];
  return hist;
}

FamilyPair family_pair(int64_t r, int64_t t) {
  if (r < 2 || t < 1) throw std::invalid_argument("family_pair: need r >= 2 and t >= 1");
  const int64_t q = r * r * t;
  const int64_t rt = r * t;
  return {LensParams(q, {1, mod_floor(1 + rt, q), mod_floor(1 + 3 * rt, q)}),
          LensParams(q, {1, mod_floor(1 - rt, q), mod_floor(1 - 3 * rt, q)}), r % 3 != 0};
}

bool FamilyReport::passed() const {
  if (!all_p_isospectral || !homotopy_equivalent || !zero_class_counts_agree) return false;
  if (r >= 7) return !isometric && partition_nonisometric;
  return true;
}

nlohmann::json FamilyReport::to_json() const {
  return {{"r", r},
          {"t", t},
          {"q", a.q()},
          {"a", a.to_string()},
          {"b", b.to_string()},
          {"all_p_isospectral", all_p_isospectral},
          {"isometric", isometric},
          {"partition_nonisometric", partition_nonisometric},
          {"homotopy_equivalent", homotopy_equivalent},
          {"zero_class_counts_agree", zero_class_counts_agree},
          {"violations", violations},
          {"passed", passed()}};
}

FamilyReport verify_family(int64_t r, int64_t t) {
  const FamilyPair pair = family_pair(r, t);
  FamilyReport rep{.r = r, .t = t, .a = pair.a, .b = pair.b, .violations = {}};
  if (!pair.in_hypothesis) rep.violations.emplace_back("r divisible by 3: isospectrality is not covered");
  if (r < 7) rep.violations.emplace_back("r < 7: non-isometry is not covered");

  const CountTable ta = count_table_reduced(pair.a.lattice());
  const CountTable tb = count_table_reduced(pair.b.lattice());
  rep.all_p_isospectral = ta == tb;
  rep.isometric = are_isometric(pair.a, pair.b);
  if (r > 3) {
    const std::vector<int64_t> exponents{0, 1, 3};
    rep.partition_nonisometric = family_partition_nonisometry(r, t, exponents);
  }
  rep.homotopy_equivalent = family_homotopy_check(r, t);

  rep.zero_class_counts_agree = true;
  const int64_t k_max = static_cast<int64_t>(ta.m()) * (ta.q() - 1);
  for (int z = 1; z <= 3 && z <= ta.m(); ++z)
    for (int64_t k = 0; k <= k_max; ++k)
      if (reconstruct_full(ta, k, z) != reconstruct_full(tb, k, z)) rep.zero_class_counts_agree = false;
  return rep;
}

std::vector<std::pair<int64_t, int64_t>> family_matches(const IsospectralGroup& group) {
  std::vector<std::pair<int64_t, int64_t>> out;
  if (group.members.empty() || group.members.front().s.size() != 3) return out;
  for (int64_t r = 2; r * r <= group.q; ++r) {
    if (group.q % (r * r) != 0) continue;
    const FamilyPair pair = family_pair(r, group.q / (r * r));
    const CanonicalForm ca = canonical_form(pair.a), cb = canonical_form(pair.b);
    auto has = [&](const CanonicalForm& c) {
      return std::find(group.members.begin(), group.members.end(), c) != group.members.end();
    };
    if (ca != cb && has(ca) && has(cb)) out.emplace_back(r, group.q / (r * r));
  }
  return out;
}

std::string groups_to_csv(const std::vector<IsospectralGroup>& groups, int m) {
  std::ostringstream os;
  os << "q";
  for (int j = 1; j <= m; ++j) os << ",s" << j;
  for (int j = 1; j <= m; ++j) os << ",s" << j << "'";
  os << ",family_flag\n";
  for (const auto& g : groups) {
    const bool family = !family_matches(g).empty();
    for (std::size_t i = 0; i < g.members.size(); ++i)
      for (std::size_t j = i + 1; j < g.members.size(); ++j) {
        os << g.q;
        for (int64_t v : g.members[i].s) os << ',' << v;
        for (int64_t v : g.members[j].s) os << ',' << v;
        os << ',' << (family ? 1 : 0) << '\n';
      }
  }
  return os.str();
}

nlohmann::json groups_to_json(const std::vector<IsospectralGroup>& groups) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& g : groups) {
    nlohmann::json j = group_json(g);
    nlohmann::json fam = nlohmann::json::array();
    for (const auto& [r, t] : family_matches(g)) fam.push_back({{"r", r}, {"t", t}});
    j["family"] = std::move(fam);
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace lensspec
