#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pgame/bitvector.hpp"
#include "pgame/core.hpp"

namespace pgame {

// Default per-counter search bound: 2^{|V_c^j|}.
std::uint64_t default_param_bound(const Arena& arena, int counter_class);

// Scans the grid of parameter vectors with each coordinate in
// {0, ..., 2^{|V_c^j|}} in lexicographically ascending order and returns the
// first winning vector; absence means Player 1 wins for no parameter values
// at all.
std::optional<ParameterVector> exists_winning_params(const ParamGame& pg, int start);

// Win profiles of one counter class at increasing parameter values: profile n
// records, per class vertex, whether Player 1 wins from there with the class
// counter at n (other counters per `fixed`). The sequence is produced by
// iterating the induced graph game form's function until the first repeat.
struct ProfileTrajectory {
  int counter_class = 0;
  ParameterVector fixed;
  std::vector<BitVector> profiles;  // pairwise distinct, preperiod + period many
  int preperiod = 0;
  int period = 0;                   // profiles[preperiod + period] would equal profiles[preperiod]
  std::vector<bool> start_wins;     // win from the start vertex, aligned with profiles
};

ProfileTrajectory iterate_profiles(const ParamGame& pg, int start, int counter_class,
                                   const ParameterVector& fixed);

enum class Quantifier { ForAll, Exists };

// Quantified question over the parameters, one prefix entry per counter.
struct ParamQuery {
  ParamGame game;
  int start = 0;
  std::vector<std::pair<Quantifier, int>> prefix;  // (quantifier, counter class)
  std::optional<ParameterVector> bound_override;   // per counter 1..N
};

struct QueryResult {
  bool value = false;
  // decisive values for the leading block of quantifiers matching the answer
  // (witnesses of a true exists-prefix, counterexamples of a false
  // forall-prefix), as (counter class, value)
  std::vector<std::pair<int, std::uint64_t>> assignment;
};

// Evaluates the prefix over domains {0, ..., B_j}, B_j from bound_override or
// the default bound, memoizing the innermost win checks.
QueryResult eval_query(const ParamQuery& q);

}  // namespace pgame
