#include "pgame/param.hpp"

#include <algorithm>
#include <map>

#include "pgame/gameform.hpp"
#include "pgame/unfold.hpp"

namespace pgame {

std::uint64_t default_param_bound(const Arena& arena, int counter_class) {
  int k = static_cast<int>(arena.class_members(counter_class).size());
  if (k >= 63) throw GameError(Errc::ArityTooLarge, "counter class too large for a 2^k bound");
  return std::uint64_t{1} << k;
}

std::optional<ParameterVector> exists_winning_params(const ParamGame& pg, int start) {
  int n = pg.arena.counter_count();
  ParameterVector bounds(n), values(n, 0);
  for (int j = 1; j <= n; ++j) bounds[j - 1] = default_param_bound(pg.arena, j);

  while (true) {
    if (wins_with_params(pg, values, start)) return values;
    int pos = n - 1;
    while (pos >= 0 && values[pos] == bounds[pos]) values[pos--] = 0;
    if (pos < 0) return std::nullopt;
    ++values[pos];
  }
}

namespace {

ParameterVector insert_value(const ParameterVector& fixed, int counter_class, std::uint64_t value) {
  ParameterVector full;
  full.reserve(fixed.size() + 1);
  full.insert(full.end(), fixed.begin(), fixed.begin() + (counter_class - 1));
  full.push_back(value);
  full.insert(full.end(), fixed.begin() + (counter_class - 1), fixed.end());
  return full;
}

}  // namespace

ProfileTrajectory iterate_profiles(const ParamGame& pg, int start, int counter_class,
                                   const ParameterVector& fixed) {
  const Arena& a = pg.arena;
  auto members = a.class_members(counter_class);
  int m = static_cast<int>(members.size());
  if (m == 0) throw GameError(Errc::EmptyCounterClass, "counter class has no vertices");
  if (m > 63) throw GameError(Errc::ArityTooLarge, "profile width");

  GraphGameForm g = induced_ggf(pg, counter_class, fixed);

  // win from the start is read off the same evaluation: either the start is a
  // class vertex (profile bit), or it survives into the induced arena and is
  // appended as one extra designated source.
  int start_slot = -1;
  for (int i = 0; i < m; ++i)
    if (members[i] == start) start_slot = i;
  if (start_slot < 0) {
    int mapped = g.game.arena.index_of(a.id(start));
    if (mapped < 0) throw std::invalid_argument("iterate_profiles: bad start vertex");
    g.outputs.push_back(mapped);
  }

  ProfileTrajectory t;
  t.counter_class = counter_class;
  t.fixed = fixed;

  // profile 0: red edges always taken
  ParameterVector at_zero = insert_value(fixed, counter_class, 0);
  BitVector w0(m);
  for (int i = 0; i < m; ++i) w0.set(i, wins_with_params(pg, at_zero, members[i]));

  std::map<std::uint64_t, int> seen;
  BitVector w = w0;
  while (true) {
    int k = static_cast<int>(t.profiles.size());
    seen.emplace(w.bits(), k);
    t.profiles.push_back(w);
    BitVector eval = evaluate_ggf(g, w);
    t.start_wins.push_back(start_slot >= 0 ? w.get(start_slot) : eval.get(m));
    BitVector next(m, eval.bits() & ((m == 64 ? 0 : std::uint64_t{1} << m) - 1));
    auto it = seen.find(next.bits());
    if (it != seen.end()) {
      t.preperiod = it->second;
      t.period = k + 1 - it->second;
      break;
    }
    w = next;
  }
  return t;
}

namespace {

struct QueryEval {
  const ParamQuery* q = nullptr;
  ParameterVector bounds;  // per counter 1..N
  ParameterVector current;
  std::map<ParameterVector, bool> memo;

  bool wins() {
    auto it = memo.find(current);
    if (it != memo.end()) return it->second;
    bool r = wins_with_params(q->game, current, q->start);
    memo.emplace(current, r);
    return r;
  }

  bool eval(size_t level) {
    if (level == q->prefix.size()) return wins();
    auto [quant, cls] = q->prefix[level];
    for (std::uint64_t v = 0; v <= bounds[cls - 1]; ++v) {
      current[cls - 1] = v;
      bool r = eval(level + 1);
      if (quant == Quantifier::Exists && r) return true;
      if (quant == Quantifier::ForAll && !r) return false;
    }
    return quant == Quantifier::ForAll;
  }
};

}  // namespace

QueryResult eval_query(const ParamQuery& q) {
  int n = q.game.arena.counter_count();
  if (q.prefix.size() != static_cast<size_t>(n))
    throw std::invalid_argument("query prefix must quantify every counter");
  std::vector<bool> quantified(n, false);
  for (auto [quant, cls] : q.prefix) {
    (void)quant;
    if (cls < 1 || cls > n || quantified[cls - 1])
      throw std::invalid_argument("query prefix must mention each counter exactly once");
    quantified[cls - 1] = true;
  }
  if (q.bound_override && q.bound_override->size() != static_cast<size_t>(n))
    throw std::invalid_argument("bound override must cover every counter");

  QueryEval ev;
  ev.q = &q;
  ev.bounds.resize(n);
  for (int j = 1; j <= n; ++j)
    ev.bounds[j - 1] = q.bound_override ? (*q.bound_override)[j - 1] : default_param_bound(q.game.arena, j);
  ev.current.assign(n, 0);

  QueryResult result;
  result.value = ev.eval(0);

  // pin down the decisive values of the leading same-polarity block
  for (size_t level = 0; level < q.prefix.size(); ++level) {
    auto [quant, cls] = q.prefix[level];
    bool matches = (quant == Quantifier::Exists) == result.value;
    if (!matches) break;
    for (std::uint64_t v = 0; v <= ev.bounds[cls - 1]; ++v) {
      ev.current[cls - 1] = v;
      if (ev.eval(level + 1) == result.value) {
        result.assignment.emplace_back(cls, v);
        break;
      }
    }
  }
  return result;
}

}  // namespace pgame
