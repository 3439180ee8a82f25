#pragma once

#include "propdiv/game.hpp"

#include <json.hpp>

#include <string>

namespace propdiv {

// Document shape:
//   { "players": ["1","2","3"],
//     "worths": { "1":"1", ..., "1|2|3":"12" } }
// Coalition keys are member labels joined with '|' in players-array order;
// every nonempty coalition must be present exactly once, the empty coalition
// is implicit. Worths are rational strings ("p", "-p/q") or bare JSON
// integers; serialization always emits strings.

Game game_from_json(const nlohmann::ordered_json& doc);
nlohmann::ordered_json game_to_json(const Game& g);

// parse_game rejects duplicate JSON keys (which nlohmann would otherwise
// silently collapse last-wins), missing or alien coalitions, bad rationals,
// and player counts outside [2, 16].
Game parse_game(const std::string& text);
// Deterministic: players in order, worth keys in ascending-bitmask order,
// 2-space indentation, trailing newline. parse_game(serialize_game(g))
// reproduces g exactly.
std::string serialize_game(const Game& g);

} // namespace propdiv
