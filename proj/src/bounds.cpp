#include "copgame/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "copgame/game.hpp"

namespace copgame {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Proven:
      return "proven";
    case Provenance::Conjectural:
      return "conjectural";
    case Provenance::AsymptoticIndicator:
      return "asymptotic-indicator";
  }
  return "unknown";
}

std::optional<std::int64_t> girth5_cop_lower(const GraphMetrics& m) {
  if (m.girth && *m.girth < 5) return std::nullopt;
  return static_cast<std::int64_t>(m.min_degree);
}

DensityGenusBounds genus_bounds_from_density(std::int64_t n, std::int64_t e) {
  if (n < 1 || e < 0) throw std::invalid_argument("genus_bounds_from_density: need n >= 1 and e >= 0");
  DensityGenusBounds b;
  // alpha > 3  <=>  e > 3n;  (alpha - 3) n = e - 3n.
  b.dense = e > 3 * n;
  if (b.dense) {
    b.orientable_lower = Rational(e - 3 * n, 6).floor() + 1;
    b.nonorientable_lower = Rational(e - 3 * n, 3).floor() + 1;
  }
  const std::int64_t upper = e > n ? e - n : 0;
  b.orientable_upper = std::max(upper, b.orientable_lower);
  b.nonorientable_upper = std::max(upper, b.nonorientable_lower);
  return b;
}

DensityGenusBounds genus_bounds_from_density(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("genus_bounds_from_density: empty graph");
  if (!is_connected(g)) throw DisconnectedGraphError("genus_bounds_from_density: graph is disconnected");
  return genus_bounds_from_density(static_cast<std::int64_t>(g.vertex_count()),
                                   static_cast<std::int64_t>(g.edge_count()));
}

DensityGenusBounds genus_bounds_by_component(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("genus_bounds_by_component: empty graph");
  if (is_connected(g)) {
    return genus_bounds_from_density(static_cast<std::int64_t>(g.vertex_count()),
                                     static_cast<std::int64_t>(g.edge_count()));
  }
  DensityGenusBounds sum;
  for (const auto& comp : components(g)) {
    const Graph sub = induced_subgraph(g, comp);
    const auto b = genus_bounds_from_density(static_cast<std::int64_t>(sub.vertex_count()),
                                             static_cast<std::int64_t>(sub.edge_count()));
    sum.orientable_lower += b.orientable_lower;
    sum.orientable_upper += b.orientable_upper;
    sum.nonorientable_lower += b.nonorientable_lower;
    sum.nonorientable_upper += b.nonorientable_upper;
    sum.dense = sum.dense || b.dense;
  }
  return sum;
}

std::optional<std::int64_t> genus_lower_girth5(std::int64_t n, std::int64_t delta, std::optional<std::uint32_t> girth) {
  if (girth && *girth < 5) return std::nullopt;
  if (n < 1 || delta < 0) throw std::invalid_argument("genus_lower_girth5: need n >= 1 and delta >= 0");
  // (3 delta / 10 - 1) n = (3 delta - 10) n / 10
  const std::int64_t by_order = Rational((3 * delta - 10) * n, 10).ceil();
  const std::int64_t by_degree = Rational(3 * delta * delta * delta - 10 * delta * delta, 10).ceil();
  return std::max<std::int64_t>({by_order, by_degree, 0});
}

CopUpperBounds cop_upper_from_genus(std::int64_t genus) {
  if (genus < 0) throw std::invalid_argument("cop_upper_from_genus: negative genus");
  return {2 * genus + 3, (3 * genus) / 2 + 3, genus + 3};
}

BklIndicators bkl_indicators(std::int64_t n, double p) {
  if (n < 2) throw std::invalid_argument("bkl_indicators: need n >= 2");
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("bkl_indicators: p must lie in (0, 1]");
  const double nd = static_cast<double>(n);
  const double np = nd * p;
  BklIndicators out;
  out.lower = std::sqrt(nd) / (np * np);
  out.upper = 160000.0 * std::sqrt(nd) * std::log(nd);
  out.below_threshold = p < 2.1 * std::log(nd) / nd;
  return out;
}

BoundReport full_report(const Graph& g, std::optional<std::int64_t> known_genus, std::optional<double> gnp_p) {
  const GraphMetrics m = metrics(g);
  BoundReport r;
  r.n = static_cast<std::int64_t>(g.vertex_count());
  r.e = static_cast<std::int64_t>(g.edge_count());
  r.alpha = m.alpha;
  r.delta = static_cast<std::int64_t>(m.min_degree);
  r.girth = m.girth;
  r.components = m.component_count;
  r.known_genus = known_genus;

  r.c_lower_girth5 = {girth5_cop_lower(m), Provenance::Proven, "girth >= 5 implies c >= minimum degree"};

  const DensityGenusBounds sum = genus_bounds_by_component(g);
  r.density_bounds_summed = !m.connected;
  r.genus_lower = {sum.orientable_lower, Provenance::Proven, "Euler's formula, faces of length >= 3: g > (alpha-3)n/6"};
  r.genus_upper = {sum.orientable_upper, Provenance::Proven, "spanning tree plus handles: g <= (alpha-1)n"};
  r.nonorientable_lower = {sum.nonorientable_lower, Provenance::Proven,
                           "Euler's formula, faces of length >= 3: g~ > (alpha-3)n/3"};
  r.nonorientable_upper = {sum.nonorientable_upper, Provenance::Proven,
                           "spanning tree plus crosscaps: g~ <= (alpha-1)n"};
  r.genus_lower_girth5 = {genus_lower_girth5(r.n, r.delta, m.girth), Provenance::Proven,
                          "Euler's formula, faces of length >= 5, with n >= 1 + delta^2"};

  const std::int64_t genus = known_genus.value_or(sum.orientable_upper);
  r.cop_uppers_via_genus_upper = !known_genus.has_value();
  auto ub = cop_upper_from_genus(genus);
  const std::int64_t extra = 3 * (static_cast<std::int64_t>(m.component_count) - 1);
  r.c_upper_2g3 = {ub.two_g_plus_3 + extra, Provenance::Proven, "guarding a shortest non-contractible cycle: c <= 2g+3"};
  r.c_upper_schroder = {ub.schroder + extra, Provenance::Proven, "Schroeder: c <= floor(3g/2)+3"};
  r.c_upper_conjectured = {ub.conjectured + extra, Provenance::Conjectural, "Schroeder's conjecture: c <= g+3"};

  r.bkl_lower_indicator = {std::nullopt, Provenance::AsymptoticIndicator,
                           "Bollobas-Kun-Leader lower bound (np)^-2 n^(1/2-o(1)), o(1) dropped"};
  r.bkl_upper_indicator = {std::nullopt, Provenance::AsymptoticIndicator,
                           "Bollobas-Kun-Leader upper bound 160000 sqrt(n) ln(n)"};
  if (gnp_p && r.n >= 2 && *gnp_p > 0.0) {
    const auto bkl = bkl_indicators(r.n, *gnp_p);
    r.bkl_lower_indicator.value = bkl.lower;
    r.bkl_upper_indicator.value = bkl.upper;
    r.bkl_below_threshold = bkl.below_threshold;
  }

  const std::int64_t c_lower = r.c_lower_girth5.value.value_or(1);
  r.cop_bounds_consistent = c_lower <= std::min(*r.c_upper_2g3.value, *r.c_upper_schroder.value);
  r.genus_bounds_consistent = *r.genus_lower.value <= *r.genus_upper.value &&
                              *r.nonorientable_lower.value <= *r.nonorientable_upper.value &&
                              r.genus_lower_girth5.value.value_or(0) <= *r.genus_upper.value;
  if (known_genus) {
    r.known_genus_in_bracket = *known_genus >= *r.genus_lower.value && *known_genus <= *r.genus_upper.value;
  }
  return r;
}

CopNumberCertificate certify_cop_number(const BoundReport& report, std::int64_t cop_number) {
  CopNumberCertificate cert;
  if (report.c_lower_girth5.value) cert.lower_ok = cop_number >= *report.c_lower_girth5.value;
  cert.upper_ok = cop_number <= *report.c_upper_2g3.value && cop_number <= *report.c_upper_schroder.value;
  return cert;
}

}  // namespace copgame
