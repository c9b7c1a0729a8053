#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgame/bitvector.hpp"
#include "pgame/core.hpp"

namespace pgame {

// An instantiated parameterized game with m designated input leaves and n
// designated output vertices. Assigning win/lose to the input leaves and
// solving from each output vertex defines a boolean function
// {0,1}^m -> {0,1}^n (always monotone).
struct GraphGameForm {
  ParamGame game;
  ParameterVector fixed_params;
  std::vector<int> inputs;   // leaf vertex indices, order significant
  std::vector<int> outputs;  // vertex indices, order significant
};

// Validates: inputs are distinct leaves, outputs are distinct and disjoint
// from the inputs, fixed_params matches the counter count.
GraphGameForm make_ggf(ParamGame game, ParameterVector fixed_params, std::vector<int> inputs,
                       std::vector<int> outputs);

// Acyclic AND/OR graph over input and constant sinks. `children` of a gate
// are the gates it reads; outputs reference gates, order significant. Input
// indices are 1..input_count; unused indices are simply ignored inputs.
struct MonotoneCircuit {
  enum class GateKind { And, Or, Input, Const };
  struct Gate {
    GateKind kind;
    std::vector<int> children;  // And/Or only, nonempty
    int input = 0;              // Input only, 1-based
    bool value = false;         // Const only
  };
  std::vector<Gate> gates;
  std::vector<std::string> ids;  // parallel to gates
  std::vector<int> outputs;
  int input_count = 0;

  bool operator==(const MonotoneCircuit& o) const;
};

// Throws on cycles, empty fan-in, bad input indices, duplicate ids or
// duplicate input indices.
void validate_circuit(const MonotoneCircuit& c);

// Explicitly tabulated boolean function {0,1}^m -> {0,1}^n. Bit i of a row
// index is input i; bit j of a row value is output j.
class BoolFunction {
 public:
  static constexpr int max_tabulated_arity = 16;

  BoolFunction() = default;
  BoolFunction(int m, int n, std::vector<std::uint32_t> table);

  int input_arity() const { return m_; }
  int output_arity() const { return n_; }

  std::uint32_t row(std::uint32_t input) const { return table_.at(input); }
  BitVector apply(const BitVector& in) const;

  bool operator==(const BoolFunction&) const = default;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<std::uint32_t> table_;
};

// Solves the game under the given input-leaf assignment (bit 1 makes the leaf
// winning) and reports the win bit of every output vertex.
BitVector evaluate_ggf(const GraphGameForm& g, const BitVector& input);

// Tabulates evaluate_ggf over all 2^m inputs. Guarded at m <= 16 (and the
// row width at 32 outputs).
BoolFunction define_function(const GraphGameForm& g);

// Empty when monotone, otherwise a witnessing pair u <= w with f(u) !<= f(w).
std::optional<std::pair<BitVector, BitVector>> monotone_counterexample(const BoolFunction& f);
bool is_monotone(const BoolFunction& f);

BitVector circuit_eval(const MonotoneCircuit& c, const BitVector& input);
BoolFunction tabulate_circuit(const MonotoneCircuit& c);

// The circuit as a reachability game: OR gates become Player-1 vertices, AND
// gates Player-2 vertices, inputs become designated leaves, constants fixed
// leaves. Each output gets a relay vertex so the designated sources stay
// disjoint from the designated leaves.
GraphGameForm circuit_to_ggf(const MonotoneCircuit& c);

// Extracts a monotone circuit from a counter-free reachability graph game
// form: per-source tree unfolding (repeating an ancestor loses), constant
// propagation until no fixed leaf remains, designated-leaf copies merged into
// shared input gates. Depth is bounded by the number of game vertices.
MonotoneCircuit ggf_to_circuit(const GraphGameForm& g);

int circuit_depth(const MonotoneCircuit& c);

// Rewires the first x_arity input leaves to the matching output vertices and
// designates those outputs; the result defines y |-> least fixed point of
// x |-> f_x(x, y).
GraphGameForm lfp_ggf(const GraphGameForm& g, int x_arity);

// Independent oracle for lfp_ggf: Kleene iteration from all-zeros on the
// explicit table. Requires f monotone with input and output arity m equal.
BoolFunction lfp_bruteforce(const BoolFunction& f, int x_arity);

// Largest k such that some w has w, f(w), ..., f^{k-1}(w) pairwise distinct.
int repetition_number(const BoolFunction& f);

// Splits every vertex of one counter class into a source copy (green edge
// kept, recoloured plain) and a sink copy (incoming edges kept, made a leaf);
// the defined function advances per-vertex win profiles by one parameter
// increment. `fixed` fixes the other counters, in their original order.
GraphGameForm induced_ggf(const ParamGame& pg, int counter_class, const ParameterVector& fixed);

}  // namespace pgame
