#include <random>

#include "brute_force.hpp"
#include "doctest.h"
#include "wythoff/strategy.hpp"

using namespace wythoff;

TEST_CASE("best_move examples") {
  const auto table = build_grundy_table(32);

  const auto terminal = best_move({{0, 0}, true}, table);
  CHECK(terminal.position_class == PositionClass::P);
  CHECK_FALSE(terminal.best);
  CHECK_FALSE(terminal.target_class_witness);

  // (1,2) is a classical P-position, so with the pass available it is N.
  // Brute force: moves_pass((1,2),1) targets with G_pass = 0 are only the pass itself.
  testing::BruteForce brute;
  const auto t0_start = best_move({{1, 2}, true}, table);
  CHECK(t0_start.position_class == PositionClass::N);
  REQUIRE(t0_start.best);
  CHECK(brute.grundy(t0_start.best->to.pos.x, t0_start.best->to.pos.y, t0_start.best->to.pass_available) == 0);
  CHECK(t0_start.best->kind == MoveKind::Pass);
  CHECK(t0_start.target_class_witness == t0_start.best->to);

  // (2,2) is in A; the first winning move in canonical order is the diagonal to (0,0) in B.
  const auto in_a = best_move({{2, 2}, true}, table);
  CHECK(in_a.position_class == PositionClass::N);
  REQUIRE(in_a.best);
  CHECK(*in_a.best == Move{MoveKind::Diagonal, {{2, 2}, true}, {{0, 0}, true}});
  CHECK(is_p_pass(in_a.best->to, table));

  const auto p0 = best_move({{3, 5}, false}, table);
  CHECK(p0.position_class == PositionClass::P);
  CHECK_FALSE(p0.best);

  CHECK_THROWS_AS(best_move({{32, 0}, true}, table), OutOfWindowError);
}

TEST_CASE("best_move picks the first winning move in canonical order") {
  const auto table = build_grundy_table(40);
  for (Coord x = 0; x < 40; ++x) {
    for (Coord y = 0; y < 40; ++y) {
      for (bool p : {false, true}) {
        const PassState s{{x, y}, p};
        const auto choice = best_move(s, table);
        if (!choice.best) continue;
        for (const Move& m : moves_pass(s)) {
          if (m == *choice.best) break;
          CHECK_FALSE(is_p_pass(m.to, table));
        }
      }
    }
  }
}

TEST_CASE("strategy soundness over 100 x 100 x 2") {
  const std::size_t n = 100;
  const auto table = build_grundy_table(n);
  for (Coord x = 0; x < n; ++x) {
    for (Coord y = 0; y < n; ++y) {
      for (bool p : {false, true}) {
        const PassState s{{x, y}, p};
        const auto choice = best_move(s, table);
        if (choice.position_class == PositionClass::N) {
          REQUIRE(choice.best);
          CHECK(is_p_pass(choice.best->to, table));
        } else {
          CHECK_FALSE(choice.best);
          for (const Move& m : moves_pass(s)) CHECK_FALSE(is_p_pass(m.to, table));
        }
      }
    }
  }
}

TEST_CASE("playout examples") {
  const auto table = build_grundy_table(20);

  const auto forced = playout({{1, 0}, false}, Opponent::Random, 1, table);
  REQUIRE(forced.moves.size() == 1);
  CHECK(forced.moves[0].move.to == PassState{{0, 0}, false});
  CHECK(forced.moves[0].mover == Mover::Engine);
  CHECK(forced.winner == Mover::Engine);

  for (bool p : {false, true}) {
    const auto empty = playout({{0, 0}, p}, Opponent::Random, 1, table);
    CHECK(empty.moves.empty());
    CHECK_FALSE(empty.winner);
  }

  CHECK_THROWS_AS(playout({{20, 0}, false}, Opponent::Random, 1, table), OutOfWindowError);
}

TEST_CASE("seeded playouts from random N-positions are won by the engine") {
  const std::size_t n = 100;
  const auto table = build_grundy_table(n);
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<Coord> coord(0, n - 1);
  int played = 0;
  while (played < 100) {
    const PassState start{{coord(rng), coord(rng)}, (rng() & 1) != 0};
    if (is_p_pass(start, table)) continue;
    const auto record = playout(start, Opponent::Random, rng(), table);
    CHECK(record.winner == Mover::Engine);
    // Every state in the record follows from the previous one by a legal move.
    PassState state = start;
    for (const auto& played_move : record.moves) {
      CHECK(played_move.move.from == state);
      const auto legal = moves_pass(state);
      CHECK(std::find(legal.begin(), legal.end(), played_move.move) != legal.end());
      state = played_move.move.to;
    }
    CHECK(moves_pass(state).empty());
    ++played;
  }
}

TEST_CASE("optimal vs optimal: the side to move from a P-position loses") {
  const auto table = build_grundy_table(30);
  for (const PassState start : {PassState{{3, 5}, false}, PassState{{1, 3}, true}, PassState{{6, 10}, false}}) {
    const auto record = playout(start, Opponent::Optimal, 0, table);
    CHECK(record.winner == Mover::Opponent);
  }
}

TEST_CASE("playouts are deterministic and serialize to JSON lines") {
  const auto table = build_grundy_table(50);
  const PassState start{{37, 45}, true};
  const auto a = playout(start, Opponent::Random, 99, table);
  const auto b = playout(start, Opponent::Random, 99, table);
  CHECK(game_record_to_jsonl(a) == game_record_to_jsonl(b));

  const auto one = playout({{1, 0}, false}, Opponent::Random, 0, table);
  CHECK(game_record_to_jsonl(one) ==
        "{\"from\":{\"x\":1,\"y\":0,\"pass\":false},\"to\":{\"x\":0,\"y\":0,\"pass\":false},"
        "\"kind\":\"leftward\",\"mover\":\"engine\"}\n");
}

TEST_CASE("engine_move falls back to the first legal move from a P-position") {
  const auto table = build_grundy_table(10);
  const auto m = engine_move({{3, 5}, false}, table);
  REQUIRE(m);
  CHECK(*m == moves_pass({{3, 5}, false}).front());
  CHECK_FALSE(engine_move({{0, 0}, true}, table));
}
