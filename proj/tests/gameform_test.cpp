#include <doctest.h>

#include <algorithm>

#include "pgame/format.hpp"
#include "pgame/gallery.hpp"
#include "pgame/gameform.hpp"
#include "support/generators.hpp"

using namespace pgame;
using namespace pgame::testing;

namespace {

MonotoneCircuit and_circuit() {
  MonotoneCircuit c;
  c.input_count = 2;
  c.gates.push_back({MonotoneCircuit::GateKind::Input, {}, 1, false});
  c.gates.push_back({MonotoneCircuit::GateKind::Input, {}, 2, false});
  c.gates.push_back({MonotoneCircuit::GateKind::And, {0, 1}, 0, false});
  c.ids = {"i1", "i2", "g"};
  c.outputs = {2};
  return c;
}

MonotoneCircuit wire_circuit() {
  MonotoneCircuit c;
  c.input_count = 1;
  c.gates.push_back({MonotoneCircuit::GateKind::Input, {}, 1, false});
  c.ids = {"i1"};
  c.outputs = {0};
  return c;
}

// outputs (first = x-block image, second = y pass-through)
MonotoneCircuit xy_circuit(bool use_and) {
  MonotoneCircuit c;
  c.input_count = 2;
  c.gates.push_back({MonotoneCircuit::GateKind::Input, {}, 1, false});
  c.gates.push_back({MonotoneCircuit::GateKind::Input, {}, 2, false});
  c.gates.push_back({use_and ? MonotoneCircuit::GateKind::And : MonotoneCircuit::GateKind::Or, {0, 1}, 0, false});
  c.ids = {"i1", "i2", "g"};
  c.outputs = {2, 1};
  return c;
}

}  // namespace

TEST_SUITE("gameform") {
  TEST_CASE("evaluating the conjunction game form") {
    GraphGameForm g = circuit_to_ggf(and_circuit());
    CHECK(evaluate_ggf(g, BitVector::parse("11")) == BitVector::parse("1"));
    CHECK(evaluate_ggf(g, BitVector::parse("01")) == BitVector::parse("0"));
    CHECK(evaluate_ggf(g, BitVector::parse("10")) == BitVector::parse("0"));
    CHECK(evaluate_ggf(g, BitVector::parse("00")) == BitVector::parse("0"));
  }

  TEST_CASE("all-ones dominates all-zeros for any game form") {
    Rng rng(51);
    for (int it = 0; it < 20; ++it) {
      GraphGameForm g = random_parity_ggf(rng);
      int m = static_cast<int>(g.inputs.size());
      BitVector lo = evaluate_ggf(g, BitVector::zeros(m));
      BitVector hi = evaluate_ggf(g, BitVector::ones(m));
      CHECK(lo.leq(hi));
    }
  }

  TEST_CASE("induced form of the counter chain shifts profiles") {
    GameWithStart lin = build_linear(4);
    GraphGameForm g = induced_ggf(lin.game, 1, {});
    CHECK(g.inputs.size() == 4);
    CHECK(g.outputs.size() == 4);
    CHECK(evaluate_ggf(g, BitVector::parse("0001")) == BitVector::parse("0011"));
    BoolFunction f = define_function(g);
    for (std::uint32_t w = 0; w < 16; ++w) {
      BitVector in(4, w);
      BitVector out = f.apply(in);
      for (int k = 0; k < 3; ++k) CHECK(out.get(k) == in.get(k + 1));
      CHECK(out.get(3));
    }
  }

  TEST_CASE("degenerate induced forms") {
    SUBCASE("green self-loop gives the identity") {
      RawArena raw;
      raw.vertices = {{"c", VertexKind::Counter, 1}, {"l", VertexKind::Leaf, 0}};
      raw.edges = {{"c", "c", EdgeColor::Green}, {"c", "l", EdgeColor::Red}};
      Arena arena = validate_arena(raw);
      ParamGame pg{arena, ParityCondition::uniform(arena.vertex_count(), 1)};
      GraphGameForm g = induced_ggf(pg, 1, {});
      CHECK(evaluate_ggf(g, BitVector::parse("0")) == BitVector::parse("0"));
      CHECK(evaluate_ggf(g, BitVector::parse("1")) == BitVector::parse("1"));
    }
    SUBCASE("green edge into a winning leaf is constantly true") {
      RawArena raw;
      raw.vertices = {{"c", VertexKind::Counter, 1}, {"w", VertexKind::Leaf, 0}, {"l", VertexKind::Leaf, 0}};
      raw.edges = {{"c", "w", EdgeColor::Green}, {"c", "l", EdgeColor::Red}};
      Arena arena = validate_arena(raw);
      ParamGame pg{arena, reach_condition(arena, std::vector<int>{arena.index_of("w")})};
      GraphGameForm g = induced_ggf(pg, 1, {});
      CHECK(evaluate_ggf(g, BitVector::parse("0")) == BitVector::parse("1"));
      CHECK(evaluate_ggf(g, BitVector::parse("1")) == BitVector::parse("1"));
    }
    SUBCASE("missing class") {
      GameWithStart lin = build_linear(2);
      CHECK_THROWS_AS(induced_ggf(lin.game, 2, {}), GameError);
    }
  }

  TEST_CASE("zero-input game forms have a single table row") {
    RawArena raw;
    raw.vertices = {{"a", VertexKind::Player1, 0}, {"w", VertexKind::Leaf, 0}, {"l", VertexKind::Leaf, 0}};
    raw.edges = {{"a", "w", EdgeColor::Plain}, {"a", "l", EdgeColor::Plain}};
    Arena arena = validate_arena(raw);
    ParityCondition cond = reach_condition(arena, std::vector<int>{arena.index_of("w")});
    GraphGameForm g = make_ggf(ParamGame{arena, cond}, {}, {}, {arena.index_of("a")});
    BoolFunction f = define_function(g);
    CHECK(f.input_arity() == 0);
    CHECK(f.row(0) == 1);  // Player 1 walks into w
  }

  TEST_CASE("swap realized by a crossing game") {
    GadgetSpec spec = swap_gadget_spec();
    GraphGameForm g = circuit_to_ggf(spec.circuit);
    BoolFunction f = define_function(g);
    CHECK(f.row(0b00) == 0b00);
    CHECK(f.row(0b01) == 0b10);
    CHECK(f.row(0b10) == 0b01);
    CHECK(f.row(0b11) == 0b11);
  }

  TEST_CASE("monotonicity checks") {
    SUBCASE("identity is monotone") {
      std::vector<std::uint32_t> table(8);
      for (std::uint32_t w = 0; w < 8; ++w) table[w] = w;
      CHECK(is_monotone(BoolFunction(3, 3, std::move(table))));
    }
    SUBCASE("negation is caught with a witness") {
      BoolFunction f(1, 1, {1, 0});
      auto cex = monotone_counterexample(f);
      REQUIRE(cex.has_value());
      CHECK(cex->first == BitVector::parse("0"));
      CHECK(cex->second == BitVector::parse("1"));
      CHECK(f.apply(cex->first) == BitVector::parse("1"));
      CHECK(f.apply(cex->second) == BitVector::parse("0"));
    }
    SUBCASE("every defined function is monotone") {
      Rng rng(52);
      for (int it = 0; it < 30; ++it) {
        GraphGameForm g = random_parity_ggf(rng);
        if (g.inputs.size() > 4) continue;
        CHECK(is_monotone(define_function(g)));
      }
    }
  }

  TEST_CASE("circuit evaluation basics") {
    CHECK(circuit_eval(wire_circuit(), BitVector::parse("1")) == BitVector::parse("1"));
    CHECK(circuit_eval(wire_circuit(), BitVector::parse("0")) == BitVector::parse("0"));

    MonotoneCircuit orc;
    orc.input_count = 2;
    orc.gates.push_back({MonotoneCircuit::GateKind::Input, {}, 1, false});
    orc.gates.push_back({MonotoneCircuit::GateKind::Input, {}, 2, false});
    orc.gates.push_back({MonotoneCircuit::GateKind::Or, {0, 1}, 0, false});
    orc.ids = {"i1", "i2", "g"};
    orc.outputs = {2};
    CHECK(circuit_eval(orc, BitVector::parse("10")) == BitVector::parse("1"));

    MonotoneCircuit con;
    con.input_count = 1;
    con.gates.push_back({MonotoneCircuit::GateKind::Const, {}, 0, true});
    con.ids = {"k"};
    con.outputs = {0};
    CHECK(circuit_eval(con, BitVector::parse("0")) == BitVector::parse("1"));
    CHECK(circuit_eval(con, BitVector::parse("1")) == BitVector::parse("1"));
  }

  TEST_CASE("circuits and game forms define the same functions") {
    SUBCASE("conjunction round trip") {
      GraphGameForm g = circuit_to_ggf(and_circuit());
      BoolFunction direct = tabulate_circuit(and_circuit());
      CHECK(define_function(g) == direct);
      MonotoneCircuit back = ggf_to_circuit(g);
      CHECK(tabulate_circuit(back) == direct);
    }
    SUBCASE("identity wire") {
      GraphGameForm g = circuit_to_ggf(wire_circuit());
      BoolFunction f = define_function(g);
      CHECK(f.row(0) == 0);
      CHECK(f.row(1) == 1);
    }
    SUBCASE("swap") {
      GadgetSpec spec = swap_gadget_spec();
      CHECK(define_function(circuit_to_ggf(spec.circuit)) == tabulate_circuit(spec.circuit));
    }
  }

  TEST_CASE("constant source extracts to a constant gate") {
    RawArena raw;
    raw.vertices = {{"a", VertexKind::Player1, 0}, {"w", VertexKind::Leaf, 0}, {"d", VertexKind::Leaf, 0}};
    raw.edges = {{"a", "w", EdgeColor::Plain}};
    Arena arena = validate_arena(raw);
    ParityCondition cond = reach_condition(arena, std::vector<int>{arena.index_of("w")});
    GraphGameForm g =
        make_ggf(ParamGame{arena, cond}, {}, {arena.index_of("d")}, {arena.index_of("a")});
    MonotoneCircuit c = ggf_to_circuit(g);
    CHECK(c.gates[c.outputs[0]].kind == MonotoneCircuit::GateKind::Const);
    CHECK(c.gates[c.outputs[0]].value);
  }

  TEST_CASE("extraction rejects counters and non-reachability conditions") {
    GameWithStart lin = build_linear(2);
    GraphGameForm g1 = induced_ggf(lin.game, 1, {});
    MonotoneCircuit ok = ggf_to_circuit(g1);  // counter-free and reachability shaped
    CHECK(ok.input_count == 2);

    HelpmeGame h = build_helpme(true);
    GraphGameForm g2 = make_ggf(ParamGame{h.arena, h.payoff_at_least_1}, {0},
                                {h.arena.index_of("l1")}, {h.arena.index_of("v1")});
    CHECK_THROWS_AS(ggf_to_circuit(g2), GameError);

    RawArena raw;
    raw.vertices = {{"a", VertexKind::Player1, 0}, {"w", VertexKind::Leaf, 0}};
    raw.edges = {{"a", "w", EdgeColor::Plain}};
    Arena arena = validate_arena(raw);
    GraphGameForm g3 = make_ggf(ParamGame{arena, ParityCondition({4, 2})}, {}, {}, {arena.index_of("a")});
    CHECK_THROWS_AS(ggf_to_circuit(g3), GameError);
  }

  TEST_CASE("random reachability game forms extract correctly") {
    Rng rng(53);
    for (int it = 0; it < 60; ++it) {
      int m = 1 + static_cast<int>(rnd_below(rng, 4));
      int n = 1 + static_cast<int>(rnd_below(rng, 4));
      GraphGameForm g = random_reach_ggf(rng, m, n, 4);
      MonotoneCircuit c = ggf_to_circuit(g);
      CHECK(tabulate_circuit(c) == define_function(g));
      CHECK(circuit_depth(c) <= g.game.arena.vertex_count());
    }
  }

  TEST_CASE("least fixed points") {
    SUBCASE("x or y settles at y") {
      GraphGameForm g = lfp_ggf(circuit_to_ggf(xy_circuit(false)), 1);
      BoolFunction f = define_function(g);
      CHECK(f.input_arity() == 1);
      CHECK(f.output_arity() == 1);
      CHECK(f.row(0) == 0);
      CHECK(f.row(1) == 1);
    }
    SUBCASE("x and y settles at zero") {
      GraphGameForm g = lfp_ggf(circuit_to_ggf(xy_circuit(true)), 1);
      BoolFunction f = define_function(g);
      CHECK(f.row(0) == 0);
      CHECK(f.row(1) == 0);
    }
    SUBCASE("bruteforce basics") {
      // f(x, y) = (x, y): zero is already fixed
      BoolFunction ident(2, 2, {0b00, 0b01, 0b10, 0b11});
      BoolFunction mu = lfp_bruteforce(ident, 1);
      CHECK(mu.row(0) == 0);
      CHECK(mu.row(1) == 0);
      // f(x, y) = (y, y)
      BoolFunction fy(2, 2, {0b00, 0b00, 0b11, 0b11});
      BoolFunction mu2 = lfp_bruteforce(fy, 1);
      CHECK(mu2.row(0) == 0);
      CHECK(mu2.row(1) == 1);
      // f(x, y) = (x or y, y) matches the game-form route
      BoolFunction forr(2, 2, {0b00, 0b01, 0b11, 0b11});
      BoolFunction mu3 = lfp_bruteforce(forr, 1);
      CHECK(mu3.row(0) == 0);
      CHECK(mu3.row(1) == 1);
      CHECK(mu3 == define_function(lfp_ggf(circuit_to_ggf(xy_circuit(false)), 1)));
    }
    SUBCASE("non-monotone input is rejected") {
      BoolFunction bad(2, 2, {0b01, 0b00, 0b11, 0b10});
      CHECK_THROWS_AS(lfp_bruteforce(bad, 1), GameError);
    }
    SUBCASE("game forms close under the fixed point") {
      Rng rng(54);
      for (int it = 0; it < 30; ++it) {
        int arity = 2 + static_cast<int>(rnd_below(rng, 3));
        int x_arity = 1 + static_cast<int>(rnd_below(rng, arity - 1));
        MonotoneCircuit c = random_circuit(rng, arity, arity, 4);
        GraphGameForm g = circuit_to_ggf(c);
        BoolFunction via_game = define_function(lfp_ggf(g, x_arity));
        BoolFunction via_table = lfp_bruteforce(define_function(g), x_arity);
        CHECK(via_game == via_table);
        CHECK(is_monotone(via_game));
      }
    }
  }

  TEST_CASE("repetition numbers") {
    SUBCASE("identity repeats immediately") {
      for (int m = 0; m <= 4; ++m) {
        std::vector<std::uint32_t> table(std::size_t{1} << m);
        for (std::uint32_t w = 0; w < table.size(); ++w) table[w] = w;
        CHECK(repetition_number(BoolFunction(m, m, std::move(table))) == 1);
      }
    }
    SUBCASE("swap orbits two values") {
      CHECK(repetition_number(tabulate_circuit(swap_gadget_spec().circuit)) == 2);
    }
    SUBCASE("cardinality bound and orbit periodicity") {
      Rng rng(55);
      for (int it = 0; it < 80; ++it) {
        int m = 1 + static_cast<int>(rnd_below(rng, 4));
        BoolFunction f = random_table(rng, m, m);
        int rn = repetition_number(f);
        CHECK(rn >= 1);
        CHECK(rn <= (1 << m));
        // every orbit enters a cycle within rn steps and visits <= rn values
        for (std::uint32_t w = 0; w < (1u << m); ++w) {
          std::vector<std::uint32_t> seen{w};
          std::uint32_t v = w;
          while (true) {
            v = f.row(v);
            if (std::find(seen.begin(), seen.end(), v) != seen.end()) break;
            seen.push_back(v);
          }
          CHECK(static_cast<int>(seen.size()) <= rn);
        }
      }
    }
    SUBCASE("arity mismatch") {
      CHECK_THROWS_AS(repetition_number(BoolFunction(1, 2, {0, 3})), GameError);
    }
  }

  TEST_CASE("table guard rejects oversized tabulation requests") {
    Rng rng(56);
    GraphGameForm g = random_reach_ggf(rng, 2, 1, 2);
    // inflate the declared inputs beyond the table guard
    RawArena raw = g.game.arena.to_raw();
    for (int i = 0; i < 20; ++i) raw.vertices.push_back({"x" + std::to_string(i), VertexKind::Leaf, 0});
    Arena arena = validate_arena(raw);
    std::vector<int> prio(arena.vertex_count(), 1);
    std::vector<int> inputs;
    for (int i = 0; i < 20; ++i) inputs.push_back(arena.index_of("x" + std::to_string(i)));
    GraphGameForm big = make_ggf(ParamGame{arena, ParityCondition(std::move(prio))}, {}, inputs,
                                 {arena.index_of("u0")});
    CHECK_THROWS_AS(define_function(big), GameError);
  }
}
