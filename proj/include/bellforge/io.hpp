#pragma once

#include <string>

#include "bellforge/game.hpp"
#include "bellforge/strategy.hpp"

namespace bellforge {

// Game definition schema:
//   { "name": str, "nx": int, "ny": int, "na": int, "nb": int,
//     "dist": [nx*ny floats, row-major x-major],
//     "score": [nx*ny*na*nb floats, nested x,y,a,b] }
// Rejected unless the distribution sums to 1 within 1e-9.
NonlocalGame game_from_json(const std::string& text);
std::string game_to_json(const NonlocalGame& g);

// Strategy export: dims, amplitudes as [re, im] pairs, and per-question
// operator matrices; used for cross-engine diffing.
QuantumStrategy strategy_from_json(const std::string& text);
std::string strategy_to_json(const QuantumStrategy& s);

// The shipped 3-CHSH scoring tensor, embedded so builtin game references
// resolve without touching the filesystem. data/three_chsh.json carries the
// same bytes.
const std::string& builtin_three_chsh_json();
NonlocalGame builtin_three_chsh();

}  // namespace bellforge
