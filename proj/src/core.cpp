#include "pgame/core.hpp"

#include <algorithm>
#include <set>

namespace pgame {

bool Arena::has_plain_edge(int from, int to) const {
  const auto& s = plain_succ_.at(from);
  return std::binary_search(s.begin(), s.end(), to);
}

RawArena Arena::to_raw() const {
  RawArena raw;
  raw.vertices.reserve(ids_.size());
  for (int v = 0; v < vertex_count(); ++v)
    raw.vertices.push_back({ids_[v], kinds_[v], classes_[v]});
  raw.edges.reserve(edges_.size());
  for (const Edge& e : edges_) raw.edges.push_back({ids_[e.from], ids_[e.to], e.color});
  return raw;
}

namespace {

const char* color_name(EdgeColor c) {
  switch (c) {
    case EdgeColor::Plain: return "plain";
    case EdgeColor::Red: return "red";
    case EdgeColor::Green: return "green";
  }
  return "?";
}

}  // namespace

Arena validate_arena(const RawArena& raw) {
  std::vector<Diagnostic> diags;

  // vertex table, lexicographic
  std::vector<std::string> ids;
  ids.reserve(raw.vertices.size());
  {
    std::set<std::string> seen;
    for (const RawVertex& v : raw.vertices) {
      if (!seen.insert(v.id).second) {
        diags.push_back({Errc::DuplicateVertex, v.id, "vertex declared more than once"});
        continue;
      }
      ids.push_back(v.id);
    }
  }
  std::sort(ids.begin(), ids.end());

  Arena a;
  a.ids_ = ids;
  int n = static_cast<int>(ids.size());
  for (int v = 0; v < n; ++v) a.index_.emplace(ids[v], v);
  a.kinds_.assign(n, VertexKind::Player1);
  a.classes_.assign(n, 0);
  for (const RawVertex& v : raw.vertices) {
    int idx = a.index_of(v.id);
    a.kinds_[idx] = v.kind;
    a.classes_[idx] = v.kind == VertexKind::Counter ? v.counter_class : 0;
  }

  // counter classes must be 1..N, every class nonempty
  int max_class = 0;
  for (int v = 0; v < n; ++v) {
    if (a.kinds_[v] != VertexKind::Counter) continue;
    int j = a.classes_[v];
    if (j < 1) {
      diags.push_back({Errc::CounterClassGap, a.ids_[v], "counter class must be at least 1"});
      continue;
    }
    max_class = std::max(max_class, j);
  }
  a.counter_count_ = max_class;
  a.members_.assign(max_class, {});
  for (int v = 0; v < n; ++v)
    if (a.kinds_[v] == VertexKind::Counter && a.classes_[v] >= 1) a.members_[a.classes_[v] - 1].push_back(v);
  for (int j = 1; j <= max_class; ++j)
    if (a.members_[j - 1].empty())
      diags.push_back({Errc::CounterClassGap, "c" + std::to_string(j),
                       "counter classes must be contiguous starting at 1; class " + std::to_string(j) + " is empty"});

  // edges
  std::set<Arena::Edge> edge_set;
  for (const RawEdge& e : raw.edges) {
    int from = a.index_of(e.from);
    int to = a.index_of(e.to);
    std::string subject = e.from + "->" + e.to;
    if (from < 0 || to < 0) {
      diags.push_back({Errc::UnknownVertex, subject, "edge endpoint is not a declared vertex"});
      continue;
    }
    VertexKind k = a.kinds_[from];
    if (k == VertexKind::Counter) {
      if (e.color == EdgeColor::Plain) {
        diags.push_back({Errc::ExtraCounterEdge, subject, "counter vertex edges must be red or green"});
        continue;
      }
    } else {
      if (e.color != EdgeColor::Plain) {
        diags.push_back({Errc::BadEdgeColor, subject,
                         std::string("edge from a non-counter vertex cannot be ") + color_name(e.color)});
        continue;
      }
      if (k == VertexKind::Leaf) {
        if (from != to) {
          diags.push_back({Errc::BadLeaf, subject, "leaf may only carry its self-loop"});
          continue;
        }
      } else if (from == to) {
        diags.push_back({Errc::SelfLoop, e.from, "self-loops are reserved for leaves"});
        continue;
      }
    }
    edge_set.insert({from, to, e.color});
  }

  // implicit leaf self-loops
  for (int v = 0; v < n; ++v)
    if (a.kinds_[v] == VertexKind::Leaf) edge_set.insert({v, v, EdgeColor::Plain});

  // degree constraints
  a.plain_succ_.assign(n, {});
  a.red_.assign(n, -1);
  a.green_.assign(n, -1);
  std::vector<int> reds(n, 0), greens(n, 0);
  for (const Arena::Edge& e : edge_set) {
    switch (e.color) {
      case EdgeColor::Plain: a.plain_succ_[e.from].push_back(e.to); break;
      case EdgeColor::Red:
        ++reds[e.from];
        a.red_[e.from] = e.to;
        break;
      case EdgeColor::Green:
        ++greens[e.from];
        a.green_[e.from] = e.to;
        break;
    }
  }
  for (int v = 0; v < n; ++v) {
    switch (a.kinds_[v]) {
      case VertexKind::Counter:
        if (reds[v] == 0) diags.push_back({Errc::MissingRedEdge, a.ids_[v], "counter vertex has no red edge"});
        if (greens[v] == 0) diags.push_back({Errc::MissingGreenEdge, a.ids_[v], "counter vertex has no green edge"});
        if (reds[v] > 1 || greens[v] > 1)
          diags.push_back({Errc::ExtraCounterEdge, a.ids_[v], "counter vertex needs exactly one red and one green edge"});
        break;
      case VertexKind::Player1:
      case VertexKind::Player2:
        if (a.plain_succ_[v].empty())
          diags.push_back({Errc::DeadEnd, a.ids_[v], "player vertex has no outgoing edge"});
        break;
      case VertexKind::Leaf:
        break;
    }
  }

  if (!diags.empty()) throw ValidationError(std::move(diags));

  a.edges_.assign(edge_set.begin(), edge_set.end());
  return a;
}

ParityCondition reach_condition(const Arena& arena, std::span<const int> target_leaves) {
  std::vector<int> prio(arena.vertex_count(), 1);
  for (int t : target_leaves) {
    if (t < 0 || t >= arena.vertex_count() || !arena.is_leaf(t))
      throw GameError(Errc::NotALeaf, "reach target must be a leaf");
    prio[t] = 2;
  }
  return ParityCondition(std::move(prio));
}

ParityCondition safety_condition(const Arena& arena, std::span<const int> bad_leaves) {
  std::vector<int> prio(arena.vertex_count(), 0);
  for (int b : bad_leaves) {
    if (b < 0 || b >= arena.vertex_count() || !arena.is_leaf(b))
      throw GameError(Errc::NotALeaf, "bad vertex must be a leaf");
    prio[b] = 1;
  }
  return ParityCondition(std::move(prio));
}

RunState step(const Arena& arena, const RunState& state, std::optional<int> choice) {
  if (state.counters.size() != static_cast<size_t>(arena.counter_count()))
    throw std::invalid_argument("step: counter vector length mismatch");
  RunState next = state;
  ++next.step_index;
  int v = state.vertex;
  switch (arena.kind(v)) {
    case VertexKind::Counter: {
      if (choice) throw GameError(Errc::IllegalChoice, "no choice at a counter vertex");
      int j = arena.counter_class(v);
      std::uint64_t& value = next.counters[j - 1];
      if (value == 0) {
        next.vertex = arena.red_target(v);
      } else {
        --value;
        next.vertex = arena.green_target(v);
      }
      break;
    }
    case VertexKind::Leaf:
      if (choice) throw GameError(Errc::IllegalChoice, "no choice at a leaf");
      break;
    case VertexKind::Player1:
    case VertexKind::Player2:
      if (!choice) throw GameError(Errc::IllegalChoice, "player vertex requires a choice");
      if (!arena.has_plain_edge(v, *choice))
        throw GameError(Errc::IllegalChoice, "chosen successor is not an edge of " + arena.id(v));
      next.vertex = *choice;
      break;
  }
  return next;
}

}  // namespace pgame
