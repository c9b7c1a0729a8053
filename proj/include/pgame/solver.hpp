#pragma once

#include <vector>

#include "pgame/core.hpp"

namespace pgame {

// A finite parity game without counter vertices.
struct OrdinaryGame {
  Arena arena;
  ParityCondition condition;
};

// Checks the no-counter invariant and the condition's totality.
OrdinaryGame make_ordinary_game(Arena arena, ParityCondition condition);

// Winning regions with positional strategies. win1/win2 partition the vertex
// set; strategy1 is defined exactly on the Player-1 vertices inside win1 and
// maps into win1, dually for strategy2. Entries are -1 where undefined.
struct Solution {
  std::vector<bool> win1;
  std::vector<int> strategy1;
  std::vector<int> strategy2;
};

struct AttractorResult {
  std::vector<bool> region;
  // reach-strategy for the attracting player on region minus targets; -1 elsewhere
  std::vector<int> strategy;
};

// Least set containing `targets` that `player` can force the token into.
AttractorResult attractor(const OrdinaryGame& game, Player player, const std::vector<bool>& targets);

// Zielonka's recursive algorithm, deterministic under vertex id order.
Solution solve(const OrdinaryGame& game);

// Certifies that `strategy` wins for `player` from everywhere in `region`:
// the region must be closed under the restricted moves and every cycle of the
// restricted subgraph must have a max priority of the player's parity.
// Throws IncompleteStrategy when the strategy misses a region vertex.
bool verify_strategy(const OrdinaryGame& game, Player player, const std::vector<bool>& region,
                     const std::vector<int>& strategy);

}  // namespace pgame
