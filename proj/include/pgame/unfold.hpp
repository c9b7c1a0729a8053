#pragma once

#include <utility>
#include <vector>

#include "pgame/core.hpp"
#include "pgame/solver.hpp"

namespace pgame {

// Product of an arena with the reachable counter values. Product vertices are
// the (vertex, counter vector) pairs reachable from (start, params); counter
// vertices become single-successor Player-1 vertices, priorities are
// inherited through back_map.
struct UnfoldedGame {
  OrdinaryGame game;
  int start = -1;  // product index of (start, params)
  std::vector<std::pair<int, ParameterVector>> back_map;
};

UnfoldedGame unfold(const ParamGame& pg, const ParameterVector& params, int start);

// True iff Player 1 wins the instantiated game from `start`.
bool wins_with_params(const ParamGame& pg, const ParameterVector& params, int start);

}  // namespace pgame
