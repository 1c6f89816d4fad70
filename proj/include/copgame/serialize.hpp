#pragma once

#include <json.hpp>

#include "copgame/bounds.hpp"
#include "copgame/game.hpp"
#include "copgame/guarding.hpp"
#include "copgame/play.hpp"

// JSON forms of the library's result types.
namespace copgame {

nlohmann::json to_json(const SolveResult& r);
nlohmann::json to_json(const CopNumberResult& r, const Graph& g);
nlohmann::json to_json(const PlayTrace& t);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const GuardVerdict& v);

}  // namespace copgame
