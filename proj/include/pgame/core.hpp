#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pgame/errors.hpp"

namespace pgame {

enum class Player { One, Two };

enum class VertexKind { Player1, Player2, Counter, Leaf };

enum class EdgeColor { Plain, Red, Green };

// Parameter values / counter contents. Length always equals the arena's
// counter count where one is expected.
using ParameterVector = std::vector<std::uint64_t>;

struct RawVertex {
  std::string id;
  VertexKind kind = VertexKind::Player1;
  int counter_class = 0;  // 1-based, meaningful only for Counter vertices
};

struct RawEdge {
  std::string from;
  std::string to;
  EdgeColor color = EdgeColor::Plain;
};

// Unvalidated arena listing, as read from a file or assembled by a builder.
struct RawArena {
  std::vector<RawVertex> vertices;
  std::vector<RawEdge> edges;
};

// A validated game graph. Vertices are indexed 0..vertex_count()-1 in
// lexicographic order of their ids; every deterministic choice in the library
// (solver tie-breaking, printed output) follows that order.
//
// Counter vertices carry exactly one red and one green edge. Player vertices
// carry plain edges only, at least one. Leaves carry exactly their plain
// self-loop. Instances are immutable once built and safe to share.
class Arena {
 public:
  struct Edge {
    int from;
    int to;
    EdgeColor color;
    auto operator<=>(const Edge&) const = default;
  };

  Arena() = default;

  int vertex_count() const { return static_cast<int>(ids_.size()); }
  int counter_count() const { return counter_count_; }

  const std::string& id(int v) const { return ids_.at(v); }
  // -1 when the id is unknown
  int index_of(std::string_view id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
  }

  VertexKind kind(int v) const { return kinds_.at(v); }
  int counter_class(int v) const { return classes_.at(v); }
  bool is_leaf(int v) const { return kinds_.at(v) == VertexKind::Leaf; }

  // Plain-edge targets, ascending by index. Leaves yield {v}; counter
  // vertices yield the empty span.
  std::span<const int> plain_successors(int v) const { return plain_succ_.at(v); }

  int red_target(int v) const { return red_.at(v); }
  int green_target(int v) const { return green_.at(v); }

  // Members of counter class j (1-based), ascending by index.
  std::span<const int> class_members(int j) const { return members_.at(j - 1); }

  // Full canonical edge list (leaf self-loops included), sorted.
  std::span<const Edge> edges() const { return edges_; }

  bool has_plain_edge(int from, int to) const;

  RawArena to_raw() const;

  bool operator==(const Arena& o) const {
    return ids_ == o.ids_ && kinds_ == o.kinds_ && classes_ == o.classes_ && edges_ == o.edges_;
  }

 private:
  friend Arena validate_arena(const RawArena&);

  std::vector<std::string> ids_;
  std::vector<VertexKind> kinds_;
  std::vector<int> classes_;
  std::vector<std::vector<int>> plain_succ_;
  std::vector<int> red_;
  std::vector<int> green_;
  std::vector<std::vector<int>> members_;
  std::vector<Edge> edges_;
  int counter_count_ = 0;
  std::map<std::string, int, std::less<>> index_;
};

// Checks every structural invariant of the raw listing and builds the arena.
// Leaf self-loops may be omitted in the input; they are added. All violations
// are collected and thrown together as a ValidationError.
Arena validate_arena(const RawArena& raw);

// Priority labelling of an arena's vertices. A run is won by Player 1 iff
// the maximum priority occurring infinitely often is even.
class ParityCondition {
 public:
  ParityCondition() = default;
  explicit ParityCondition(std::vector<int> priorities) : prio_(std::move(priorities)) {}

  static ParityCondition uniform(int vertex_count, int priority) {
    return ParityCondition(std::vector<int>(vertex_count, priority));
  }

  int size() const { return static_cast<int>(prio_.size()); }
  int priority(int v) const { return prio_.at(v); }
  void set_priority(int v, int p) { prio_.at(v) = p; }
  std::span<const int> priorities() const { return prio_; }

  bool operator==(const ParityCondition&) const = default;

 private:
  std::vector<int> prio_;
};

// Priority 2 on the target leaves, 1 elsewhere: Player 1 wins exactly the
// runs that get absorbed in a target leaf.
ParityCondition reach_condition(const Arena& arena, std::span<const int> target_leaves);

// Priority 1 on the bad leaves, 0 elsewhere: Player 1 wins iff no bad leaf is
// ever reached.
ParityCondition safety_condition(const Arena& arena, std::span<const int> bad_leaves);

// A parameterized game: arena plus winning condition. Counters start at
// values supplied per use (unfold, queries, ...).
struct ParamGame {
  Arena arena;
  ParityCondition condition;
};

struct RunState {
  int vertex = 0;
  ParameterVector counters;
  std::uint64_t step_index = 0;
};

// One step of the run semantics. `choice` must name a plain successor when
// the current vertex belongs to a player, and must be absent at counter and
// leaf vertices.
RunState step(const Arena& arena, const RunState& state, std::optional<int> choice = std::nullopt);

}  // namespace pgame
