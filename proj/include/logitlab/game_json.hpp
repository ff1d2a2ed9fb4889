#ifndef LOGITLAB_GAME_JSON_HPP
#define LOGITLAB_GAME_JSON_HPP

#include <memory>
#include <string>

#include "logitlab/game.hpp"

namespace logitlab {

// Parse an edge-structured game from its JSON spec:
//   { "players": n, "strategy_sizes": [..],
//     "edges": [ { "u": i, "v": j, "payoff_u": [[..]], "payoff_v": [[..]] } ] }
// payoff_u rows are indexed by u's strategy, columns by v's strategy.
// Malformed documents throw InputError with a description of the problem.
std::unique_ptr<LocalInteractionGame> game_from_spec_json(const std::string& text);

// Parse an identical-interest game from a raw potential table:
//   { "strategy_sizes": [..], "potential": [..] }
// The table is flat in profile-index order (player 0 the most significant
// digit, the last player fastest-varying).
std::unique_ptr<TableGame> game_from_potential_json(const std::string& text);

// Read a whole file; throws InputError when it cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace logitlab

#endif  // LOGITLAB_GAME_JSON_HPP
