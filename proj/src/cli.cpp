#include "copgame/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "copgame/bounds.hpp"
#include "copgame/experiments.hpp"
#include "copgame/game.hpp"
#include "copgame/generators.hpp"
#include "copgame/graph_io.hpp"
#include "copgame/guarding.hpp"
#include "copgame/serialize.hpp"

namespace copgame::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string gen;
  std::string file;
  std::optional<std::uint64_t> seed;
  std::uint64_t state_limit = SolveLimits{}.max_states;
  std::string out_path;
  bool json = false;
  bool csv = false;
};

void add_common(CLI::App* cmd, Common& c, bool graph_source) {
  if (graph_source) {
    auto* gen = cmd->add_option("--gen", c.gen, "generator family[:params], e.g. cycle:6, grid:3x4, gnp:20:0.3:7");
    auto* file = cmd->add_option("--file", c.file, "edge-list file");
    gen->excludes(file);
  }
  cmd->add_option("--seed", c.seed, "seed for random generators and simulations");
  cmd->add_option("--state-limit", c.state_limit, "maximum solver states")->check(CLI::PositiveNumber);
  cmd->add_option("--out", c.out_path, "write output to this file instead of stdout");
  auto* json = cmd->add_flag("--json", c.json, "JSON output");
  auto* csv = cmd->add_flag("--csv", c.csv, "CSV output");
  json->excludes(csv);
}

bool random_family(std::string_view family) {
  return family == "tree" || family == "triangulation" || family == "gnp";
}

Graph load_graph(const Common& c) {
  if (!c.file.empty()) return read_graph_file(c.file);
  if (c.gen.empty()) throw InputError("a graph source is required: --gen FAMILY[:PARAMS] or --file PATH");
  std::string spec = c.gen;
  const std::string family = spec.substr(0, spec.find(':'));
  const std::size_t fixed_params = family == "gnp" ? 2 : 1;
  const std::size_t given = static_cast<std::size_t>(std::count(spec.begin(), spec.end(), ':'));
  if (c.seed && random_family(family) && given == fixed_params) spec += ":" + std::to_string(*c.seed);
  return graph_from_spec(spec);
}

void emit(const Common& c, std::ostream& out, const std::string& text) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw InputError("cannot open output file '" + c.out_path + "'");
  f << text;
  if (!f) throw InputError("failed writing '" + c.out_path + "'");
}

void reject_csv(const Common& c, const char* cmd) {
  if (c.csv) throw InputError(std::string(cmd) + ": CSV output is not available, use --json");
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size() || v > UINT32_MAX - 1) {
      throw InputError("bad vertex '" + item + "' in list '" + text + "'");
    }
    out.push_back(static_cast<Vertex>(v));
  }
  if (out.empty()) throw InputError("empty vertex list");
  return out;
}

int cmd_copnumber(const Common& c, std::ostream& out) {
  reject_csv(c, "copnumber");
  const Graph g = load_graph(c);
  const auto result = cop_number_detail(g, SolveLimits{c.state_limit});
  emit(c, out, to_json(result, g).dump() + "\n");
  return kExitOk;
}

int cmd_bounds(const Common& c, std::optional<std::int64_t> genus, std::optional<double> p, std::ostream& out,
               std::ostream& err) {
  reject_csv(c, "bounds");
  const Graph g = load_graph(c);
  if (genus && *genus < 0) throw InputError("--genus must be non-negative");
  const BoundReport r = full_report(g, genus, p);
  if (r.bkl_below_threshold) err << "warning: p is below 2.1 ln(n)/n; the random-graph indicators' hypothesis fails\n";
  emit(c, out, to_json(r).dump(2) + "\n");
  return kExitOk;
}

int cmd_guard(const Common& c, const std::string& path_text, const std::string& policy_name, std::size_t trials,
              const std::string& traces_dir, std::ostream& out) {
  reject_csv(c, "guard");
  const Graph g = load_graph(c);
  const auto path = parse_vertex_list(path_text);
  for (Vertex v : path) {
    if (v >= g.vertex_count()) throw InputError("path vertex " + std::to_string(v) + " is out of range");
  }
  if (!check_isometric_path(g, path)) {
    throw InputError("path " + path_text + " is not isometric (some pair is closer in the graph than along the path)");
  }
  const GuardRobberPolicy policy = parse_guard_policy(policy_name);
  std::vector<PlayTrace> traces;
  VerifyGuardOptions opts;
  opts.trials = trials;
  opts.seed = c.seed.value_or(0);
  if (!traces_dir.empty()) opts.traces = &traces;
  const GuardVerdict v = verify_guard(g, path, policy, opts);
  if (!traces_dir.empty()) {
    std::filesystem::create_directories(traces_dir);
    for (std::size_t i = 0; i < traces.size(); ++i) {
      std::ofstream f(std::filesystem::path(traces_dir) / ("trial_" + std::to_string(i) + ".json"));
      if (!f) throw InputError("cannot write traces to '" + traces_dir + "'");
      f << to_json(traces[i]).dump() << "\n";
    }
  }
  emit(c, out, to_json(v).dump() + "\n");
  return kExitOk;
}

int cmd_probe(const Common& c, const std::vector<std::size_t>& ns, std::vector<std::uint64_t> seeds,
              std::size_t seed_count, std::optional<double> p, std::size_t workers, std::ostream& out) {
  ExperimentConfig config;
  config.n_values = ns;
  if (seeds.empty()) {
    const std::uint64_t base = c.seed.value_or(0);
    for (std::size_t i = 0; i < seed_count; ++i) seeds.push_back(base + i);
  }
  config.seeds = std::move(seeds);
  config.p = p;
  config.state_limit = c.state_limit;
  config.workers = workers;
  validate(config);
  const auto rows = run_probe(config);
  std::ostringstream text;
  if (c.json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
      j.push_back({{"n", r.n},
                   {"seed", r.seed},
                   {"p", r.p},
                   {"e", r.e},
                   {"alpha_num", r.alpha.num()},
                   {"alpha_den", r.alpha.den()},
                   {"genus_upper", r.genus_upper},
                   {"genus_lower", r.genus_lower},
                   {"bkl_lower_ind", r.bkl_lower},
                   {"bkl_upper_ind", r.bkl_upper},
                   {"bkl_hypothesis_violated", r.below_threshold},
                   {"cop_number", r.cop_number ? nlohmann::json(*r.cop_number) : nlohmann::json(nullptr)},
                   {"error", r.error}});
    }
    text << j.dump(2) << "\n";
  } else {
    write_probe_csv(text, config, rows);
  }
  emit(c, out, text.str());
  return kExitOk;
}

int cmd_gen(const Common& c, bool labels, std::ostream& out) {
  if (c.gen.empty()) throw InputError("gen: --gen FAMILY[:PARAMS] is required");
  reject_csv(c, "gen");
  Graph g = load_graph(c);
  std::vector<std::string> names;
  const std::string family = c.gen.substr(0, c.gen.find(':'));
  if (labels && family == "projective") {
    const auto q = std::stoul(c.gen.substr(c.gen.find(':') + 1));
    names = projective_plane(static_cast<std::uint32_t>(q)).labels;
  }
  std::ostringstream text;
  if (c.json) {
    nlohmann::json j{{"n", g.vertex_count()}, {"edges", nlohmann::json::array()}};
    for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
    if (!names.empty()) j["labels"] = names;
    text << j.dump() << "\n";
  } else {
    write_graph(text, g, names);
  }
  emit(c, out, text.str());
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"copgame: cops and robbers on graphs - exact cop numbers, bounds, guarding, experiments"};
  app.require_subcommand(1);

  Common c;
  auto* copnumber = app.add_subcommand("copnumber", "exact cop number (JSON)");
  add_common(copnumber, c, true);

  auto* bounds = app.add_subcommand("bounds", "bound report (JSON)");
  add_common(bounds, c, true);
  std::optional<std::int64_t> genus;
  std::optional<double> bounds_p;
  bounds->add_option("--genus", genus, "known orientable genus");
  bounds->add_option("--p", bounds_p, "edge probability, when the graph is a G(n, p) sample");

  auto* guard = app.add_subcommand("guard", "verify the one-cop path guard (JSON verdict)");
  add_common(guard, c, true);
  std::string path_text;
  std::string policy = "random";
  std::size_t trials = 1000;
  std::string traces_dir;
  guard->add_option("--path", path_text, "isometric path as comma-separated vertices, a first")->required();
  guard->add_option("--policy", policy, "robber policy: random, greedy, adversarial");
  guard->add_option("--trials", trials, "number of trials");
  guard->add_option("--traces", traces_dir, "directory receiving one trace JSON per trial");

  auto* probe = app.add_subcommand("probe", "G(n, p) sweep (CSV)");
  add_common(probe, c, false);
  std::vector<std::size_t> ns;
  std::vector<std::uint64_t> seeds;
  std::size_t seed_count = 5;
  std::optional<double> probe_p;
  std::size_t workers = 0;
  probe->add_option("--n", ns, "orders, comma-separated and ascending")->delimiter(',')->required();
  probe->add_option("--seeds", seeds, "explicit seeds, comma-separated")->delimiter(',');
  probe->add_option("--seed-count", seed_count, "seeds --seed, --seed+1, ... when --seeds is absent");
  probe->add_option("--p", probe_p, "edge probability (default 2.5 ln(n)/n)");
  probe->add_option("--workers", workers, "worker threads (0: all cores)");

  auto* gen = app.add_subcommand("gen", "emit a generated graph as an edge list");
  add_common(gen, c, true);
  bool labels = false;
  gen->add_flag("--labels", labels, "include vertex labels where the family has them");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help requests are ParseErrors with exit code 0.
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*copnumber) return cmd_copnumber(c, out);
    if (*bounds) return cmd_bounds(c, genus, bounds_p, out, err);
    if (*guard) return cmd_guard(c, path_text, policy, trials, traces_dir, out);
    if (*probe) return cmd_probe(c, ns, seeds, seed_count, probe_p, workers, out);
    if (*gen) return cmd_gen(c, labels, out);
  } catch (const StateLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace copgame::cli
