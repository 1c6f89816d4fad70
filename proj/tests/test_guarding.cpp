#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "copgame/generators.hpp"
#include "copgame/guarding.hpp"
#include "copgame/serialize.hpp"
#include "oracles/catalog.hpp"

using namespace copgame;

namespace {

std::shared_ptr<const GuardedPath> guarded(const Graph& g, std::vector<Vertex> path) {
  return std::make_shared<const GuardedPath>(g, std::move(path));
}

// A guard already settled against a robber standing at r.
GuardState settled_guard(const std::shared_ptr<const GuardedPath>& p, Vertex r) {
  GuardState gs = make_guard(p, p->a());
  for (int i = 0; i < 64 && !gs.settled(); ++i) guard_step(gs, r);
  REQUIRE(gs.settled());
  return gs;
}

}  // namespace

TEST_CASE("shadow map") {
  const auto p = guarded(cycle_graph(6), {0, 1, 2, 3});
  CHECK(p->length() == 3);
  CHECK(p->shadow(0) == 0);
  CHECK(p->shadow(1) == 1);
  CHECK(p->shadow(5) == 1);
  CHECK(p->shadow(4) == 2);
  CHECK(p->shadow(3) == 3);
  // Distance beyond L maps to b.
  const auto q = guarded(path_graph(6), {0, 1, 2});
  CHECK(q->shadow(5) == 2);
  CHECK(q->shadow(3) == 2);
  // Unreachable vertices map to b as well.
  const Graph split(4, std::vector<Edge>{{0, 1}, {2, 3}});
  const auto s = guarded(split, {0, 1});
  CHECK(s->shadow(3) == 1);
  CHECK_THROWS_AS(p->shadow(6), std::out_of_range);
  CHECK_THROWS_AS(guarded(cycle_graph(6), {0, 1, 2, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(make_guard(s, 2), std::invalid_argument);
}

TEST_CASE("vertices on the path are their own shadow") {
  const Graph g = grid_graph(4, 4);
  for (const auto& path : isometric_paths(g)) {
    const GuardedPath p(g, path);
    for (Vertex v : path) CHECK(p.shadow(v) == v);
  }
}

TEST_CASE("shadow is 1-Lipschitz along edges") {
  std::vector<Graph> graphs{petersen_graph(), grid_graph(3, 4), heawood_graph(), cycle_graph(7), gen_gnp(12, 0.3, 4)};
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) graphs.push_back(g);
  }
  for (const Graph& g : graphs) {
    for (const auto& path : isometric_paths(g)) {
      const GuardedPath p(g, path);
      for (const auto& [u, v] : g.edges()) {
        const auto su = static_cast<long>(p.shadow_index(u));
        const auto sv = static_cast<long>(p.shadow_index(v));
        CHECK(std::labs(su - sv) <= 1);
      }
    }
  }
}

TEST_CASE("isometric path enumeration") {
  CHECK(isometric_paths(path_graph(5)).size() == 25);
  CHECK(isometric_paths(cycle_graph(6)).size() == 42);
  for (const auto& path : isometric_paths(petersen_graph())) CHECK(check_isometric_path(petersen_graph(), path));
}

TEST_CASE("settled guard follows the shadow") {
  const Graph g = grid_graph(4, 4);
  const auto p = guarded(g, {0, 1, 2, 3, 7, 11, 15});
  GuardState gs = settled_guard(p, 10);
  const Vertex here = gs.cop_pos;
  CHECK(here == shadow(gs, 10));
  // Robber stays: cop stays.
  CHECK(guard_step(gs, 10) == here);
  // Robber moves one edge: cop reaches the new shadow.
  for (Vertex r : {9u, 5u, 4u, 8u, 12u}) {
    CHECK(guard_step(gs, r) == shadow(gs, r));
    CHECK(gs.settled());
  }
  // Robber steps onto the path: caught.
  GuardState onto = settled_guard(p, 6);
  CHECK(guard_step(onto, 7) == 7);
  GuardState onto2 = settled_guard(p, 5);
  CHECK(guard_step(onto2, 1) == 1);
}

TEST_CASE("guard phases") {
  const Graph g = path_graph(8);
  const auto p = guarded(g, {2, 3, 4, 5});
  GuardState gs = make_guard(p, 7);
  CHECK(gs.phase == GuardPhase::Approach);
  // Walks 7 -> 6 -> ... -> 2 regardless of the robber.
  for (Vertex expect : {6u, 5u, 4u, 3u, 2u}) CHECK(guard_step(gs, 0) == expect);
  CHECK(gs.phase == GuardPhase::Advance);
  // Robber at 1 has shadow 3, one step ahead: the cop moves there and settles.
  CHECK(guard_step(gs, 1) == 3);
  CHECK(gs.settled());
  REQUIRE(gs.settle_turns.has_value());
  CHECK(*gs.settle_turns == 6);
  CHECK(*gs.settle_turns <= 5 + p->length());
  // A single-vertex path: the cop at a is always on the shadow.
  GuardState at_a = make_guard(guarded(g, {2}), 2);
  CHECK(guard_step(at_a, 0) == 2);
  CHECK(at_a.settle_turns == 0u);
}

TEST_CASE("verify_guard examples") {
  const Graph c6 = cycle_graph(6);
  const std::vector<Vertex> row{0, 1, 2, 3};
  VerifyGuardOptions opts;
  opts.trials = 1000;
  opts.seed = 3;
  const auto v = verify_guard(c6, row, GuardRobberPolicy::Random, opts);
  CHECK(v.ok);
  CHECK(v.violations == 0);
  CHECK(v.settle_violations == 0);
  CHECK(v.trials == 1000);

  const Graph grid = grid_graph(4, 4);
  const std::vector<Vertex> diag{0, 1, 5, 6, 10, 11, 15};
  opts.trials = 300;
  for (auto policy : {GuardRobberPolicy::Adversarial, GuardRobberPolicy::GreedyAway, GuardRobberPolicy::Random}) {
    const auto w = verify_guard(grid, diag, policy, opts);
    CHECK(w.ok);
    CHECK(w.violations == 0);
    CHECK(w.shadow_violations == 0);
  }
  const std::vector<Vertex> bad{0, 1, 2, 3, 4};
  CHECK_THROWS_AS(verify_guard(c6, bad, GuardRobberPolicy::Random, opts), std::invalid_argument);
}

TEST_CASE("verify_guard is deterministic and records traces") {
  const Graph g = petersen_graph();
  std::vector<Vertex> path;
  for (const auto& p : isometric_paths(g)) {
    if (p.size() == 3) {
      path = p;
      break;
    }
  }
  REQUIRE(path.size() == 3);
  std::vector<PlayTrace> traces;
  VerifyGuardOptions opts;
  opts.trials = 50;
  opts.seed = 9;
  opts.traces = &traces;
  const auto a = verify_guard(g, path, GuardRobberPolicy::Adversarial, opts);
  CHECK(traces.size() == 50);
  CHECK(traces[0].steps.front().step == 0);
  const auto b = verify_guard(g, path, GuardRobberPolicy::Adversarial, opts);
  CHECK(to_json(a) == to_json(b));
  CHECK(a.ok);
}

TEST_CASE("exhaustive guard check on every graph with at most 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      for (const auto& path : isometric_paths(g)) {
        const auto r = exhaustive_guard_check(GuardedPath(g, path), 10);
        CHECK(r.ok());
        CHECK((r.states > 0) == (n > 1));
      }
    }
  }
}

TEST_CASE("guard verdict JSON") {
  const std::vector<Vertex> path{0, 1, 2, 3};
  VerifyGuardOptions opts;
  opts.trials = 10;
  const auto j = to_json(verify_guard(cycle_graph(6), path, GuardRobberPolicy::Random, opts));
  CHECK(j["isometric"] == true);
  CHECK(j["violations"] == 0);
  CHECK(j["trials"] == 10);
  CHECK(j["policy"] == "random");
  CHECK(j.contains("settle_steps"));
  CHECK(parse_guard_policy("adversarial") == GuardRobberPolicy::Adversarial);
  CHECK_THROWS_AS(parse_guard_policy("sneaky"), std::invalid_argument);
}
