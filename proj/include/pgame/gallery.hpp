#pragma once

#include "pgame/core.hpp"
#include "pgame/gameform.hpp"

namespace pgame {

struct GameWithStart {
  ParamGame game;
  int start = 0;
};

// Chain of `length` counter vertices linked by green edges into a winning
// leaf; every red edge drops into a losing leaf. Player 1 wins iff the single
// parameter is at least `length`.
GameWithStart build_linear(int length);

// The two-vertex handoff game: Player 1 may leave the v0/v1 loop for a payoff
// of 1 at l1, Player 2 may end it with payoff 2 at l2, looping forever pays 0.
// The payoff thresholds are exposed as two parity conditions. When
// parameterized, v0 counts the loop repetitions before moving to l1.
struct HelpmeGame {
  Arena arena;
  ParityCondition payoff_at_least_1;  // reach {l1, l2}
  ParityCondition payoff_at_least_2;  // reach {l2}
  int start = 0;
};

HelpmeGame build_helpme(bool parameterized);

// A circuit with matching arity together with a word and its image under the
// circuit's function.
struct GadgetSpec {
  MonotoneCircuit circuit;  // m inputs, m outputs
  BitVector w;
  BitVector fw;  // must equal circuit_eval(circuit, w)
};

// Single-counter game built from the circuit's game form: every designated
// leaf becomes a counter vertex whose green edge re-enters at the matching
// source and whose red edge settles at a fixed leaf per fw; Player 2 starts by
// picking any re-entry point with a 1 in w. Player 1 wins at parameter N iff
// f^N(f(w)) >= w.
struct SpernerGadget {
  ParamGame game;
  int start = 0;
  bool degenerate_w = false;  // w all-zeros: the start falls through to a winning leaf
};

SpernerGadget sperner_gadget(const GadgetSpec& spec);

}  // namespace pgame
