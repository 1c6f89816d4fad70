#include "copgame/serialize.hpp"

namespace copgame {

using nlohmann::json;

namespace {

template <typename T>
json bound_json(const Bound<T>& b) {
  json j;
  j["value"] = b.value ? json(*b.value) : json(nullptr);
  j["provenance"] = std::string(to_string(b.provenance));
  j["applicable"] = b.applicable();
  j["source"] = b.source;
  return j;
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const SolveResult& r) {
  json j;
  j["k"] = r.k;
  j["cop_win"] = r.cop_win;
  j["capture_time_max"] = optional_json(r.capture_time_max);
  j["initial_placement"] = optional_json(r.winning_initial_placement);
  j["state_count"] = r.state_count;
  j["levels"] = r.levels;
  return j;
}

json to_json(const CopNumberResult& r, const Graph& g) {
  json j;
  j["cop_number"] = r.cop_number;
  j["n"] = g.vertex_count();
  j["e"] = g.edge_count();
  j["components"] = json::array();
  for (const auto& c : r.components) {
    json cj;
    cj["vertices"] = c.vertices;
    cj["cop_number"] = c.cop_number;
    cj["solve"] = to_json(c.winning_solve);
    j["components"].push_back(std::move(cj));
  }
  return j;
}

json to_json(const PlayTrace& t) {
  json j;
  j["captured"] = t.captured;
  j["capture_step"] = t.captured ? json(t.capture_step) : json(nullptr);
  j["cop_moves"] = t.cop_moves;
  j["rounds"] = t.rounds;
  j["steps"] = json::array();
  for (const auto& s : t.steps) {
    j["steps"].push_back({{"step", s.step},
                          {"mover", s.mover == Mover::Cops ? "cops" : "robber"},
                          {"positions", {{"cops", s.cops}, {"robber", s.robber}}}});
  }
  return j;
}

json to_json(const BoundReport& r) {
  json j;
  j["n"] = r.n;
  j["e"] = r.e;
  j["alpha"] = {{"num", r.alpha.num()}, {"den", r.alpha.den()}};
  j["min_degree"] = r.delta;
  j["girth"] = optional_json(r.girth);
  j["components"] = r.components;
  j["known_genus"] = optional_json(r.known_genus);
  j["log_base"] = r.log_base;

  json& b = j["bounds"];
  b["c_lower_girth5"] = bound_json(r.c_lower_girth5);
  b["genus_lower"] = bound_json(r.genus_lower);
  b["genus_upper"] = bound_json(r.genus_upper);
  b["nonorientable_genus_lower"] = bound_json(r.nonorientable_lower);
  b["nonorientable_genus_upper"] = bound_json(r.nonorientable_upper);
  b["genus_lower_girth5"] = bound_json(r.genus_lower_girth5);
  b["c_upper_2g_plus_3"] = bound_json(r.c_upper_2g3);
  b["c_upper_schroder"] = bound_json(r.c_upper_schroder);
  b["c_upper_conjectured"] = bound_json(r.c_upper_conjectured);
  b["bkl_lower_indicator"] = bound_json(r.bkl_lower_indicator);
  b["bkl_upper_indicator"] = bound_json(r.bkl_upper_indicator);

  j["flags"] = {{"cop_uppers_via_genus_upper", r.cop_uppers_via_genus_upper},
                {"density_bounds_summed_over_components", r.density_bounds_summed},
                {"bkl_hypothesis_violated", r.bkl_below_threshold}};
  j["certificates"] = {{"cop_bounds_consistent", r.cop_bounds_consistent},
                       {"genus_bounds_consistent", r.genus_bounds_consistent},
                       {"known_genus_in_bracket", r.known_genus_in_bracket}};
  return j;
}

json to_json(const GuardVerdict& v) {
  json j;
  j["isometric"] = v.isometric;
  j["settle_steps"] = v.max_settle_turns;
  j["trials"] = v.trials;
  j["violations"] = v.violations;
  j["shadow_violations"] = v.shadow_violations;
  j["settle_violations"] = v.settle_violations;
  j["captures"] = v.captures;
  j["entries"] = v.entries;
  j["policy"] = v.policy;
  j["ok"] = v.ok;
  return j;
}

}  // namespace copgame
