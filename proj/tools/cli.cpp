#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lensspec/isometry.hpp"
#include "lensspec/lattice.hpp"
#include "lensspec/search.hpp"
#include "lensspec/spectra.hpp"
#include "lensspec/weights.hpp"

namespace lensspec::cli {

namespace {

using nlohmann::json;

struct Outcome {
  json result;
  std::string text;
  int code = kTrue;
};

std::vector<int64_t> parse_list(const std::string& text) {
  std::vector<int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
      throw std::invalid_argument("not an integer list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

// "-" stands for the sphere and needs an explicit rank.
LensParams parse_lens(int64_t q, const std::string& s, std::optional<int> m) {
  if (s == "-") {
    if (q != 1) throw std::invalid_argument("--s - is only valid with --q 1");
    if (!m) throw std::invalid_argument("--s - needs --m");
    return LensParams::sphere(*m);
  }
  LensParams lens(q, parse_list(s));
  if (m && *m != lens.m()) throw std::invalid_argument("--m disagrees with the length of --s");
  return lens;
}

json lens_json(const LensParams& lens) {
  return {{"q", lens.q()}, {"s", std::vector<int64_t>(lens.s().begin(), lens.s().end())}};
}

int default_workers() {
  if (const char* env = std::getenv("LENSSPEC_WORKERS")) {
    int v = 0;
    const std::string_view sv(env);
    const auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (ec == std::errc() && ptr == sv.data() + sv.size() && v >= 1) return v;
  }
  return 1;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

struct Command {
  CLI::App* app;
  std::function<Outcome()> run;
  std::function<json()> inputs;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra and isospectrality of lens spaces"};
  app.require_subcommand(1);
  bool as_json = false;
  std::vector<Command> commands;

  auto add = [&](const std::string& name, const std::string& description) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_flag("--json", as_json, "Wrap the output in a versioned JSON envelope");
    return sub;
  };

  // counts
  int64_t counts_q = 0;
  std::string counts_s;
  std::optional<int> counts_m;
  int64_t counts_kmax = 10;
  {
    auto* sub = add("counts", "N(k, z) and reduced counts of the associated lattice");
    sub->add_option("--q", counts_q, "Modulus")->required();
    sub->add_option("--s", counts_s, "Comma-separated parameters, or - for the sphere")->required();
    sub->add_option("--m", counts_m, "Rank (required with --s -)");
    sub->add_option("--k-max", counts_kmax, "Largest one-norm")->check(CLI::NonNegativeNumber);
    commands.push_back({sub,
                        [&] {
                          const LensParams lens = parse_lens(counts_q, counts_s, counts_m);
                          const CountTable reduced = count_table_reduced(lens.lattice());
                          Outcome o;
                          json rows = json::array();
                          std::ostringstream csv;
                          csv << "k,z,count,reduced\n";
                          for (int64_t k = 0; k <= counts_kmax; ++k)
                            for (int z = 0; z <= lens.m(); ++z) {
                              const uint64_t full = reconstruct_full(reduced, k, z);
                              const uint64_t red = reduced.at(k, z);
                              if (full == 0 && red == 0) continue;
                              rows.push_back({{"k", k}, {"z", z}, {"count", full}, {"reduced", red}});
                              csv << k << ',' << z << ',' << full << ',' << red << '\n';
                            }
                          o.result = {{"lens", lens_json(lens)}, {"rows", std::move(rows)}};
                          o.text = csv.str();
                          return o;
                        },
                        [&] {
                          return json{{"q", counts_q}, {"s", counts_s}, {"k_max", counts_kmax}};
                        }});
  }

  // compare
  int64_t cmp_q = 0;
  std::optional<int64_t> cmp_q2;
  std::string cmp_s, cmp_s2, cmp_mode = "all-p";
  std::optional<int> cmp_m;
  {
    auto* sub = add("compare", "Decide 0-isospectrality, all-p isospectrality or isometry");
    sub->add_option("--q", cmp_q, "Modulus")->required();
    sub->add_option("--q2", cmp_q2, "Modulus of the second lens space (zero mode only)");
    sub->add_option("--s", cmp_s, "Parameters of the first lens space")->required();
    sub->add_option("--s2", cmp_s2, "Parameters of the second lens space")->required();
    sub->add_option("--m", cmp_m, "Rank (required with --s -)");
    sub->add_option("--mode", cmp_mode, "zero | all-p | isometry")
        ->check(CLI::IsMember({"zero", "all-p", "isometry"}));
    commands.push_back({sub,
                        [&] {
                          const LensParams a = parse_lens(cmp_q, cmp_s, cmp_m);
                          const LensParams b = parse_lens(cmp_q2.value_or(cmp_q), cmp_s2, cmp_m);
                          if (cmp_q2 && *cmp_q2 != cmp_q && cmp_mode != "zero")
                            throw std::invalid_argument("--q2 differing from --q needs --mode zero");
                          Outcome o;
                          bool holds = false;
                          if (cmp_mode == "isometry") {
                            holds = are_isometric(a, b);
                            o.result = {{"mode", cmp_mode},
                                        {"holds", holds},
                                        {"canonical_a", canonical_form(a).to_string()},
                                        {"canonical_b", canonical_form(b).to_string()}};
                          } else {
                            const IsospectralityVerdict v =
                                cmp_mode == "zero" ? are_0_isospectral(a, b) : are_all_p_isospectral(a, b);
                            holds = v.holds;
                            o.result = v.to_json();
                            o.result["mode"] = cmp_mode;
                          }
                          o.text = bool_text(holds) + "\n";
                          o.code = holds ? kTrue : kFalse;
                          return o;
                        },
                        [&] {
                          return json{{"q", cmp_q}, {"q2", cmp_q2.value_or(cmp_q)}, {"s", cmp_s},
                                      {"s2", cmp_s2}, {"mode", cmp_mode}};
                        }});
  }

  // spectrum
  int64_t spec_q = 0, spec_lambda = 100;
  std::string spec_s, spec_format = "csv";
  std::optional<int> spec_m;
  int spec_p = 0;
  {
    auto* sub = add("spectrum", "Hodge-Laplace p-spectrum up to a bound");
    sub->add_option("--q", spec_q, "Modulus")->required();
    sub->add_option("--s", spec_s, "Parameters, or - for the sphere")->required();
    sub->add_option("--m", spec_m, "Rank (required with --s -)");
    sub->add_option("--p", spec_p, "Form degree, 0 <= p <= 2m - 1");
    sub->add_option("--lambda-max", spec_lambda, "Largest eigenvalue, inclusive")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", spec_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    commands.push_back({sub,
                        [&] {
                          const LensParams lens = parse_lens(spec_q, spec_s, spec_m);
                          const SpectrumSlice slice = p_spectrum(lens, spec_p, spec_lambda);
                          Outcome o;
                          o.result = slice.to_json(lens);
                          o.text = spec_format == "csv" ? slice.to_csv() : o.result.dump() + "\n";
                          return o;
                        },
                        [&] {
                          return json{{"q", spec_q}, {"s", spec_s}, {"p", spec_p}, {"lambda_max", spec_lambda}};
                        }});
  }

  // search and census share their options
  SearchConfig search_cfg;
  search_cfg.workers = default_workers();
  std::string search_out, search_cache, search_format = "csv";
  auto search_options = [&](CLI::App* sub) {
    sub->add_option("--m", search_cfg.m, "Rank")->required();
    sub->add_option("--q-min", search_cfg.q_min, "Smallest modulus");
    sub->add_option("--q-max", search_cfg.q_max, "Largest modulus")->required();
    sub->add_option("--workers", search_cfg.workers, "Worker threads (default LENSSPEC_WORKERS or 1)");
    sub->add_option("--cache-dir", search_cache, "Directory for per-q results");
  };
  auto search_inputs = [&] {
    return json{{"m", search_cfg.m}, {"q_min", search_cfg.q_min}, {"q_max", search_cfg.q_max}};
  };
  {
    auto* sub = add("search", "Find non-isometric lens spaces with identical reduced tables");
    search_options(sub);
    sub->add_option("--out", search_out, "Write the table here instead of stdout");
    sub->add_option("--format", search_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    commands.push_back({sub,
                        [&] {
                          search_cfg.cache_dir = search_cache;
                          const auto groups = find_groups(search_cfg);
                          Outcome o;
                          o.result = {{"groups", groups_to_json(groups)}};
                          const std::string body = search_format == "csv"
                                                       ? groups_to_csv(groups, search_cfg.m)
                                                       : o.result["groups"].dump(2) + "\n";
                          if (search_out.empty()) {
                            o.text = body;
                          } else {
                            std::ofstream file(search_out, std::ios::binary);
                            if (!file) throw std::runtime_error("cannot open " + search_out);
                            file << body;
                            o.text = std::to_string(groups.size()) + " groups written to " + search_out + "\n";
                          }
                          return o;
                        },
                        search_inputs});
  }
  {
    auto* sub = add("census", "Histogram of isospectral group sizes");
    search_options(sub);
    commands.push_back({sub,
                        [&] {
                          search_cfg.cache_dir = search_cache;
                          Outcome o;
                          o.result = json::object();
                          std::ostringstream os;
                          os << "size,groups\n";
                          for (const auto& [size, count] : group_size_census(search_cfg)) {
                            o.result[std::to_string(size)] = count;
                            os << size << ',' << count << '\n';
                          }
                          o.text = os.str();
                          return o;
                        },
                        search_inputs});
  }

  // family
  int64_t fam_r = 7, fam_t = 1;
  {
    auto* sub = add("family", "Check the theta-power family at (r, t)");
    sub->add_option("--r", fam_r, "r >= 2")->required();
    sub->add_option("--t", fam_t, "t >= 1")->required();
    commands.push_back({sub,
                        [&] {
                          const FamilyReport rep = verify_family(fam_r, fam_t);
                          Outcome o;
                          o.result = rep.to_json();
                          std::ostringstream os;
                          os << rep.a.to_string() << " vs " << rep.b.to_string() << '\n'
                             << "all_p_isospectral: " << bool_text(rep.all_p_isospectral) << '\n'
                             << "isometric: " << bool_text(rep.isometric) << '\n'
                             << "partition_nonisometric: " << bool_text(rep.partition_nonisometric) << '\n'
                             << "homotopy_equivalent: " << bool_text(rep.homotopy_equivalent) << '\n'
                             << "zero_class_counts_agree: " << bool_text(rep.zero_class_counts_agree) << '\n';
                          for (const auto& v : rep.violations) os << "hypothesis violated: " << v << '\n';
                          os << "passed: " << bool_text(rep.passed()) << '\n';
                          o.text = os.str();
                          o.code = !rep.violations.empty() ? kHypothesis : rep.passed() ? kTrue : kFalse;
                          return o;
                        },
                        [&] { return json{{"r", fam_r}, {"t", fam_t}}; }});
  }

  // tau-demo
  {
    auto* sub = add("tau-demo", "Non-tau-isospectrality of L(49; 1,6,15) and L(49; 1,6,20) at lambda = 47");
    commands.push_back({sub,
                        [&] {
                          const LensParams a(49, {1, 6, 15}), b(49, {1, 6, 20});
                          constexpr int64_t lambda = 47;
                          Outcome o;
                          std::ostringstream os;
                          json highs = json::array();
                          for (const auto& h : enumerate_by_casimir(lambda, 3)) {
                            const uint64_t da = dim_invariants(a.lattice(), h), db = dim_invariants(b.lattice(), h);
                            highs.push_back({{"highest", std::vector<int64_t>(h.coords().begin(), h.coords().end())},
                                             {"dim_a", da},
                                             {"dim_b", db}});
                            os << "highest weight (" << h.coords()[0] << ',' << h.coords()[1] << ','
                               << h.coords()[2] << "): dim invariants " << da << " vs " << db << '\n';
                          }
                          json taus = json::array();
                          bool gap = true;
                          for (int64_t b1 = 3; b1 <= 4; ++b1)
                            for (int64_t b2 = 0; b2 <= 3; ++b2) {
                              const KHighestWeight tau{b1, b2};
                              const uint64_t ma = tau_eigenvalue_multiplicity(a, tau, lambda);
                              const uint64_t mb = tau_eigenvalue_multiplicity(b, tau, lambda);
                              gap = gap && ma != mb;
                              taus.push_back({{"tau", {b1, b2}}, {"mult_a", ma}, {"mult_b", mb}});
                              os << "tau (" << b1 << ',' << b2 << "): " << ma << " vs " << mb << '\n';
                            }
                          o.result = {{"a", a.to_string()},
                                      {"b", b.to_string()},
                                      {"lambda", lambda},
                                      {"highest_weights", std::move(highs)},
                                      {"tau", std::move(taus)}};
                          o.text = os.str();
                          o.code = gap ? kTrue : kFalse;
                          return o;
                        },
                        [] { return json::object(); }});
  }

  // classes
  int64_t cls_q = 0;
  int cls_m = 3;
  {
    auto* sub = add("classes", "Canonical representatives of the isometry classes");
    sub->add_option("--q", cls_q, "Modulus")->required();
    sub->add_option("--m", cls_m, "Rank")->required();
    commands.push_back({sub,
                        [&] {
                          const auto classes = enumerate_classes(cls_q, cls_m);
                          Outcome o;
                          o.result = json::array();
                          std::ostringstream os;
                          for (const auto& c : classes) {
                            o.result.push_back(c.s);
                            os << c.to_string() << '\n';
                          }
                          o.text = os.str();
                          return o;
                        },
                        [&] { return json{{"q", cls_q}, {"m", cls_m}}; }});
  }

  // weights
  std::string w_highest;
  bool w_dominant = false;
  {
    auto* sub = add("weights", "Weight table of an so(2m) representation as JSON");
    sub->add_option("--highest", w_highest, "Highest weight, comma-separated")->required();
    sub->add_flag("--dominant-only", w_dominant, "Only dominant weights");
    commands.push_back({sub,
                        [&] {
                          const HighestWeight h(parse_list(w_highest));
                          Outcome o;
                          o.result = json::array();
                          for (const auto& [mu, mult] : weight_table(h, w_dominant))
                            o.result.push_back(
                                {{"weight", std::vector<int64_t>(mu.entries().begin(), mu.entries().end())},
                                 {"mult", mult}});
                          o.text = o.result.dump(2) + "\n";
                          return o;
                        },
                        [&] { return json{{"highest", w_highest}, {"dominant_only", w_dominant}}; }});
  }

  std::vector<char*> argv;
  std::vector<std::string> storage = args.empty() ? std::vector<std::string>{"lensspec"} : args;
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kTrue : kUsage;
  }

  for (const auto& cmd : commands) {
    if (!cmd.app->parsed()) continue;
    const std::string name = cmd.app->get_name();
    Outcome o;
    std::string error;
    try {
      o = cmd.run();
    } catch (const std::exception& e) {
      error = e.what();
      o.code = kUsage;
    }
    if (as_json) {
      json envelope = {{"schema_version", kSchemaVersion},
                       {"command", name},
                       {"inputs", cmd.inputs()},
                       {"result", o.result},
                       {"exit_code", o.code}};
      if (!error.empty()) envelope["error"] = error;
      out << envelope.dump(2) << '\n';
    } else if (!error.empty()) {
      err << "error: " << error << '\n';
    } else {
      out << o.text;
    }
    return o.code;
  }
  return kUsage;
}

}  // namespace lensspec::cli
