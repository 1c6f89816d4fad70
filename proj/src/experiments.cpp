#include "copgame/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "copgame/bounds.hpp"
#include "copgame/game.hpp"
#include "copgame/generators.hpp"
#include "copgame/rng.hpp"

namespace copgame {

namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

// CSV field quoting for the free-text error column.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

template <typename T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

// Exact cop number with at most max_k cops per component, or an error text.
void solve_row(const Graph& g, const ExperimentConfig& config, ProbeRow& row) {
  const SolveLimits limits{config.state_limit};
  std::size_t total = 0;
  for (const auto& comp : components(g)) {
    const Graph sub = induced_subgraph(g, comp);
    std::optional<std::size_t> c;
    for (std::size_t k = 1; k <= config.solve_max_k && !c; ++k) {
      if (solve(sub, k, limits).cop_win) c = k;
    }
    if (!c) {
      row.error = "cop number of a component exceeds " + std::to_string(config.solve_max_k);
      return;
    }
    total += *c;
  }
  row.cop_number = total;
}

ProbeRow compute_row(std::size_t n, std::uint64_t seed, const ExperimentConfig& config) {
  ProbeRow row;
  row.n = n;
  row.seed = seed;
  row.p = config.p.value_or(default_edge_probability(n));
  try {
    const Graph g = gen_gnp(n, row.p, seed);
    row.e = g.edge_count();
    row.alpha = Rational(static_cast<std::int64_t>(row.e), static_cast<std::int64_t>(n));
    const auto genus = genus_bounds_by_component(g);
    row.genus_upper = genus.orientable_upper;
    row.genus_lower = genus.orientable_lower;
    const auto bkl = bkl_indicators(static_cast<std::int64_t>(n), row.p);
    row.bkl_lower = bkl.lower;
    row.bkl_upper = bkl.upper;
    row.below_threshold = bkl.below_threshold;
    if (n <= config.solve_max_n) solve_row(g, config, row);
  } catch (const StateLimitExceeded& ex) {
    row.error = std::string("state limit: ") + ex.what();
  } catch (const std::exception& ex) {
    row.error = ex.what();
  }
  return row;
}

}  // namespace

void validate(const ExperimentConfig& config) {
  if (config.n_values.empty()) throw std::invalid_argument("probe: no n values");
  if (config.seeds.empty()) throw std::invalid_argument("probe: seeds must be nonempty");
  if (config.state_limit == 0) throw std::invalid_argument("probe: state limit must be positive");
  if (!std::is_sorted(config.n_values.begin(), config.n_values.end())) {
    throw std::invalid_argument("probe: n values must be sorted ascending");
  }
  if (config.n_values.front() < 2) throw std::invalid_argument("probe: n must be >= 2");
  if (config.p && !(*config.p > 0.0 && *config.p <= 1.0)) throw std::invalid_argument("probe: p must lie in (0, 1]");
}

double default_edge_probability(std::size_t n) {
  const double nd = static_cast<double>(n);
  return std::min(1.0, 2.5 * std::log(nd) / nd);
}

std::vector<ProbeRow> run_probe(const ExperimentConfig& config) {
  validate(config);
  struct Job {
    std::size_t n;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (std::size_t n : config.n_values) {
    for (std::uint64_t s : config.seeds) jobs.push_back({n, s});
  }
  std::vector<ProbeRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < jobs.size(); i = next++) rows[i] = compute_row(jobs[i].n, jobs[i].seed, config);
  };
  std::size_t workers = config.workers ? config.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, jobs.size());
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

std::string probe_csv_header() {
  return "n,seed,e,alpha_num,alpha_den,genus_upper,genus_lower,bkl_lower_ind,bkl_upper_ind,cop_number,error";
}

void write_probe_csv(std::ostream& out, const ExperimentConfig& config, const std::vector<ProbeRow>& rows) {
  out << "# copgame probe " << kToolVersion << "\n";
  out << "# config: n=" << join(config.n_values) << " seeds=" << join(config.seeds)
      << " p=" << (config.p ? format_double(*config.p) : std::string("default(2.5*ln(n)/n)"))
      << " state_limit=" << config.state_limit << " solve_max_n=" << config.solve_max_n
      << " solve_max_k=" << config.solve_max_k << "\n";
  out << "# rng: " << Rng::kAlgorithm << "\n";
  out << "# log: natural\n";
  out << "# graph: gen_gnp(n, p, seed); genus bounds from edge density, summed over components\n";
  out << "# bkl_lower_ind and bkl_upper_ind are asymptotic indicators, not bounds at finite n\n";
  out << probe_csv_header() << "\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.seed << ',' << r.e << ',' << r.alpha.num() << ',' << r.alpha.den() << ','
        << r.genus_upper << ',' << r.genus_lower << ',' << format_double(r.bkl_lower) << ','
        << format_double(r.bkl_upper) << ',' << (r.cop_number ? std::to_string(*r.cop_number) : std::string()) << ','
        << csv_field(r.error) << "\n";
  }
}

}  // namespace copgame
