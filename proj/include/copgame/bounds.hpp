#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "copgame/graph.hpp"
#include "copgame/rational.hpp"

// Closed-form cop-number and genus bounds. All integer bounds are computed in
// exact integer/rational arithmetic.
namespace copgame {

enum class Provenance { Proven, Conjectural, AsymptoticIndicator };
std::string_view to_string(Provenance p);

// Lower bound delta(G) when girth(G) >= 5, nullopt otherwise.
std::optional<std::int64_t> girth5_cop_lower(const GraphMetrics& m);

struct DensityGenusBounds {
  std::int64_t orientable_lower = 0;
  std::int64_t orientable_upper = 0;
  std::int64_t nonorientable_lower = 0;
  std::int64_t nonorientable_upper = 0;
  bool dense = false;  // alpha > 3, the lower bounds are non-vacuous
};

// For a connected graph with n vertices and e edges, alpha = e/n:
//   orientable lower    = floor((alpha-3)n/6) + 1 when alpha > 3, else 0
//   nonorientable lower = floor((alpha-3)n/3) + 1 when alpha > 3, else 0
//   upper (both)        = (alpha-1)n when alpha > 1, else 0, never below lower
DensityGenusBounds genus_bounds_from_density(std::int64_t n, std::int64_t e);
// Throws DisconnectedGraphError (see game.hpp) on disconnected input.
DensityGenusBounds genus_bounds_from_density(const Graph& g);
// Density bounds of each connected component, summed (genus is additive
// over components). Equals genus_bounds_from_density on connected graphs.
DensityGenusBounds genus_bounds_by_component(const Graph& g);

// For girth >= 5: max(ceil((3*delta/10 - 1) n), ceil((3 delta^3 - 10 delta^2)/10)),
// floored at 0; nullopt for girth < 5 (an acyclic graph counts as girth >= 5).
//
// Note: Euler's formula with faces of length >= 5 gives
// g~ >= (3 delta/10 - 1) n + 2 for the nonorientable genus, but only
// 2g >= (3 delta/10 - 1) n + 2 for the orientable one.
std::optional<std::int64_t> genus_lower_girth5(std::int64_t n, std::int64_t delta, std::optional<std::uint32_t> girth);

struct CopUpperBounds {
  std::int64_t two_g_plus_3 = 0;  // proven
  std::int64_t schroder = 0;      // floor(3g/2) + 3, proven
  std::int64_t conjectured = 0;   // g + 3, conjectural
};
CopUpperBounds cop_upper_from_genus(std::int64_t genus);

struct BklIndicators {
  double lower = 0;  // (np)^-2 sqrt(n)
  double upper = 0;  // 160000 sqrt(n) ln(n)
  bool below_threshold = false;  // p < 2.1 ln(n)/n
};
// Natural logarithm throughout. Throws for n < 2 or p outside (0, 1].
BklIndicators bkl_indicators(std::int64_t n, double p);

template <typename T>
struct Bound {
  std::optional<T> value;
  Provenance provenance = Provenance::Proven;
  std::string source;
  bool applicable() const { return value.has_value(); }
};

struct BoundReport {
  std::int64_t n = 0;
  std::int64_t e = 0;
  Rational alpha;
  std::int64_t delta = 0;
  std::optional<std::uint32_t> girth;
  std::uint32_t components = 1;

  Bound<std::int64_t> c_lower_girth5;
  Bound<std::int64_t> genus_lower;
  Bound<std::int64_t> genus_upper;
  Bound<std::int64_t> nonorientable_lower;
  Bound<std::int64_t> nonorientable_upper;
  Bound<std::int64_t> genus_lower_girth5;
  Bound<std::int64_t> c_upper_2g3;
  Bound<std::int64_t> c_upper_schroder;
  Bound<std::int64_t> c_upper_conjectured;
  Bound<double> bkl_lower_indicator;
  Bound<double> bkl_upper_indicator;

  std::optional<std::int64_t> known_genus;
  bool cop_uppers_via_genus_upper = false;  // no known genus supplied
  bool density_bounds_summed = false;       // disconnected: per-component sums
  bool bkl_below_threshold = false;
  std::string log_base = "natural";

  // c lower <= min of the proven c uppers.
  bool cop_bounds_consistent = false;
  // lower <= upper for both genus brackets (and the girth-5 lower).
  bool genus_bounds_consistent = false;
  // known_genus lies inside the orientable density bracket (true when not supplied).
  bool known_genus_in_bracket = true;
};

// `gnp_p` supplies the edge probability when the graph is a G(n, p) sample;
// the random-graph indicators are left absent otherwise. Disconnected graphs
// get density bounds per component (summed) and c uppers of
// formula(g) + 3 (components - 1).
BoundReport full_report(const Graph& g, std::optional<std::int64_t> known_genus = std::nullopt,
                        std::optional<double> gnp_p = std::nullopt);

struct CopNumberCertificate {
  bool lower_ok = true;        // c >= girth-5 lower bound when defined
  bool upper_ok = true;        // c <= proven uppers
  bool ok() const { return lower_ok && upper_ok; }
};
CopNumberCertificate certify_cop_number(const BoundReport& report, std::int64_t cop_number);

}  // namespace copgame
