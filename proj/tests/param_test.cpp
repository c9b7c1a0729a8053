#include <doctest.h>

#include <set>

#include "pgame/gallery.hpp"
#include "pgame/param.hpp"
#include "pgame/unfold.hpp"
#include "support/generators.hpp"

using namespace pgame;
using namespace pgame::testing;

TEST_SUITE("param") {
  TEST_CASE("existential search on the counter chain") {
    GameWithStart lin = build_linear(4);
    auto witness = exists_winning_params(lin.game, lin.start);
    REQUIRE(witness.has_value());
    CHECK(*witness == ParameterVector{4});
    CHECK(default_param_bound(lin.game.arena, 1) == 16);
  }

  TEST_CASE("winning leaf start yields the all-zero witness") {
    RawArena raw;
    raw.vertices = {{"c", VertexKind::Counter, 1}, {"w", VertexKind::Leaf, 0}, {"l", VertexKind::Leaf, 0}};
    raw.edges = {{"c", "w", EdgeColor::Green}, {"c", "l", EdgeColor::Red}};
    Arena arena = validate_arena(raw);
    ParamGame pg{arena, reach_condition(arena, std::vector<int>{arena.index_of("w")})};
    auto witness = exists_winning_params(pg, arena.index_of("w"));
    REQUIRE(witness.has_value());
    CHECK(*witness == ParameterVector{0});
  }

  TEST_CASE("no winning parameters when the goal is unreachable") {
    GameWithStart lin = build_linear(4);
    ParamGame hopeless{lin.game.arena, reach_condition(lin.game.arena, std::vector<int>{})};
    CHECK_FALSE(exists_winning_params(hopeless, lin.start).has_value());
  }

  TEST_CASE("profile trajectory of the counter chain") {
    GameWithStart lin = build_linear(4);
    ProfileTrajectory t = iterate_profiles(lin.game, lin.start, 1, {});
    REQUIRE(t.profiles.size() == 5);
    CHECK(t.profiles[0] == BitVector::parse("0000"));
    CHECK(t.profiles[1] == BitVector::parse("0001"));
    CHECK(t.profiles[2] == BitVector::parse("0011"));
    CHECK(t.profiles[3] == BitVector::parse("0111"));
    CHECK(t.profiles[4] == BitVector::parse("1111"));
    CHECK(t.preperiod == 4);
    CHECK(t.period == 1);
    CHECK(t.start_wins == std::vector<bool>{false, false, false, false, true});
  }

  TEST_CASE("green self-loop stabilizes immediately") {
    RawArena raw;
    raw.vertices = {{"c", VertexKind::Counter, 1}, {"l", VertexKind::Leaf, 0}};
    raw.edges = {{"c", "c", EdgeColor::Green}, {"c", "l", EdgeColor::Red}};
    Arena arena = validate_arena(raw);
    ParamGame pg{arena, reach_condition(arena, std::vector<int>{arena.index_of("l")})};
    ProfileTrajectory t = iterate_profiles(pg, arena.index_of("c"), 1, {});
    CHECK(t.period == 1);
    CHECK(t.preperiod <= 1);
  }

  TEST_CASE("profiles match direct instantiation on random single-counter games") {
    Rng rng(20260812);
    int done = 0;
    for (int it = 0; done < 40; ++it) {
      GameGenOptions opt;
      opt.class_sizes = {1 + static_cast<int>(rnd_below(rng, 3))};
      GameWithStart g = random_param_game(rng, opt);
      ProfileTrajectory t = iterate_profiles(g.game, g.start, 1, {});
      auto members = g.game.arena.class_members(1);
      int limit = std::min<int>(static_cast<int>(t.profiles.size()), 10);
      for (int n = 0; n < limit; ++n) {
        for (size_t i = 0; i < members.size(); ++i)
          CHECK(t.profiles[n].get(static_cast<int>(i)) ==
                wins_with_params(g.game, {static_cast<std::uint64_t>(n)}, members[i]));
        CHECK(t.start_wins[n] == wins_with_params(g.game, {static_cast<std::uint64_t>(n)}, g.start));
      }
      ++done;
    }
  }

  TEST_CASE("start wins within the repetition number of the induced function") {
    Rng rng(20260813);
    for (int it = 0; it < 25; ++it) {
      GameGenOptions opt;
      opt.class_sizes = {1 + static_cast<int>(rnd_below(rng, 2))};
      GameWithStart g = random_param_game(rng, opt);
      ProfileTrajectory t = iterate_profiles(g.game, g.start, 1, {});
      int rn = repetition_number(define_function(induced_ggf(g.game, 1, {})));
      std::uint64_t scan_to = 4 * default_param_bound(g.game.arena, 1);
      std::set<bool> early, all;
      for (std::uint64_t n = 0; n <= scan_to; ++n) {
        bool w = wins_with_params(g.game, {n}, g.start);
        if (n <= static_cast<std::uint64_t>(rn)) early.insert(w);
        all.insert(w);
      }
      CHECK(early == all);
      // the start-win sequence is eventually periodic within the profile bound
      int m = static_cast<int>(g.game.arena.class_members(1).size());
      CHECK(t.preperiod + t.period <= (1 << m));
    }
  }

  TEST_CASE("quantified queries on the counter chain") {
    GameWithStart lin = build_linear(4);
    ParamQuery q{lin.game, lin.start, {{Quantifier::Exists, 1}}, std::nullopt};
    QueryResult r = eval_query(q);
    CHECK(r.value);
    REQUIRE(r.assignment.size() == 1);
    CHECK(r.assignment[0] == std::pair<int, std::uint64_t>{1, 4});

    q.prefix = {{Quantifier::ForAll, 1}};
    r = eval_query(q);
    CHECK_FALSE(r.value);
    REQUIRE(r.assignment.size() == 1);
    CHECK(r.assignment[0] == std::pair<int, std::uint64_t>{1, 0});
  }

  TEST_CASE("parameterized handoff game always pays at least one") {
    HelpmeGame h = build_helpme(true);
    ParamQuery q{ParamGame{h.arena, h.payoff_at_least_1}, h.start, {{Quantifier::ForAll, 1}}, std::nullopt};
    QueryResult r = eval_query(q);
    CHECK(r.value);
    CHECK(r.assignment.empty());

    ParamQuery q2{ParamGame{h.arena, h.payoff_at_least_2}, h.start, {{Quantifier::Exists, 1}}, std::nullopt};
    QueryResult r2 = eval_query(q2);
    CHECK_FALSE(r2.value);
    CHECK(r2.assignment.empty());
  }

  TEST_CASE("pure existential prefixes agree with the grid search") {
    Rng rng(20260814);
    for (int it = 0; it < 25; ++it) {
      GameGenOptions opt;
      opt.max_vertices = 6;
      opt.class_sizes = {1 + static_cast<int>(rnd_below(rng, 2))};
      if (rnd_bool(rng)) opt.class_sizes.push_back(1);
      GameWithStart g = random_param_game(rng, opt);
      int n = g.game.arena.counter_count();
      ParamQuery q{g.game, g.start, {}, std::nullopt};
      for (int j = 1; j <= n; ++j) q.prefix.push_back({Quantifier::Exists, j});
      CHECK(eval_query(q).value == exists_winning_params(g.game, g.start).has_value());
    }
  }

  TEST_CASE("query validation") {
    GameWithStart lin = build_linear(2);
    ParamQuery q{lin.game, lin.start, {}, std::nullopt};
    CHECK_THROWS_AS(eval_query(q), std::invalid_argument);  // nothing quantified
    q.prefix = {{Quantifier::Exists, 1}, {Quantifier::Exists, 1}};
    CHECK_THROWS_AS(eval_query(q), std::invalid_argument);  // duplicate counter
    q.prefix = {{Quantifier::Exists, 1}};
    q.bound_override = ParameterVector{1, 2};
    CHECK_THROWS_AS(eval_query(q), std::invalid_argument);  // wrong override width
    q.bound_override = ParameterVector{2};
    CHECK(eval_query(q).value);  // chain of two wins at parameter 2
    q.bound_override = ParameterVector{1};
    CHECK_FALSE(eval_query(q).value);  // too tight a bound misses the witness
  }
}
