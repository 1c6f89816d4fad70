#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "copgame/rational.hpp"

// Random-graph sweep: G(n, p) instances with density genus bounds, the
// random-graph indicators and, where the solver is cheap, exact cop numbers.
namespace copgame {

inline constexpr const char* kToolVersion = "1.0.0";

struct ExperimentConfig {
  std::vector<std::size_t> n_values;  // ascending, each >= 2
  std::vector<std::uint64_t> seeds;   // nonempty
  std::optional<double> p;            // explicit edge probability; else 2.5 ln(n)/n
  std::uint64_t state_limit = 50'000'000;
  std::size_t solve_max_n = 30;  // exact cop numbers only up to this order
  std::size_t solve_max_k = 3;   // and at most this many cops per component
  std::size_t workers = 0;       // 0: hardware concurrency
};

// Throws std::invalid_argument when the config breaks its invariants.
void validate(const ExperimentConfig& config);

// min(1, 2.5 ln(n) / n).
double default_edge_probability(std::size_t n);

struct ProbeRow {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double p = 0;
  std::size_t e = 0;
  Rational alpha;
  std::int64_t genus_upper = 0;
  std::int64_t genus_lower = 0;
  double bkl_lower = 0;
  double bkl_upper = 0;
  bool below_threshold = false;
  std::optional<std::size_t> cop_number;
  std::string error;
};

// One row per (n, seed) in config order; the graph for a row is
// gen_gnp(n, p, seed). Rows are computed in parallel, results do not depend
// on the worker count.
std::vector<ProbeRow> run_probe(const ExperimentConfig& config);

// '#' metadata lines, the fixed header, then the rows.
void write_probe_csv(std::ostream& out, const ExperimentConfig& config, const std::vector<ProbeRow>& rows);

std::string probe_csv_header();

}  // namespace copgame
