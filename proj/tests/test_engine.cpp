#include <random>
#include <set>

#include "brute_force.hpp"
#include "doctest.h"
#include "wythoff/engine.hpp"
#include "wythoff/table_io.hpp"

using namespace wythoff;

namespace {

std::vector<Position> targets(const std::vector<Move>& ms) {
  std::vector<Position> out;
  for (const auto& m : ms) out.push_back(m.to.pos);
  return out;
}

}  // namespace

TEST_CASE("mex") {
  CHECK(mex({}) == 0);
  const std::vector<Grundy> prefix{0, 1, 2};
  CHECK(mex(prefix) == 3);
  const std::vector<Grundy> gap{1, 2, 5};
  CHECK(mex(gap) == 0);
  const std::vector<Grundy> dup{0, 0, 2, 1, 1, 4};
  CHECK(mex(dup) == 3);
}

TEST_CASE("moves follow the queen geometry in canonical order") {
  CHECK(moves({0, 0}).empty());
  CHECK(moves({1, 1}) == std::vector<Position>{{0, 1}, {1, 0}, {0, 0}});
  CHECK(moves({2, 0}) == std::vector<Position>{{0, 0}, {1, 0}});
  CHECK(moves({0, 2}) == std::vector<Position>{{0, 0}, {0, 1}});
  // Diagonal steps ascend by t: (2,3) -> (1,2) then (0,1).
  CHECK(moves({2, 3}) == std::vector<Position>{{0, 3}, {1, 3}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}});
}

TEST_CASE("moves: no duplicates, strictly dominated, count x + y + min(x, y)") {
  for (Coord x = 0; x < 12; ++x) {
    for (Coord y = 0; y < 12; ++y) {
      const auto ms = moves({x, y});
      CHECK(ms.size() == x + y + std::min(x, y));
      std::set<Position> unique(ms.begin(), ms.end());
      CHECK(unique.size() == ms.size());
      for (Position q : ms) {
        CHECK(q.x <= x);
        CHECK(q.y <= y);
        CHECK(q != Position{x, y});
        const bool line = q.x == x || q.y == y || x - q.x == y - q.y;
        CHECK(line);
      }
    }
  }
}

TEST_CASE("moves_pass") {
  CHECK(moves_pass({{0, 0}, true}).empty());
  CHECK(moves_pass({{0, 0}, false}).empty());

  const auto edge = moves_pass({{1, 0}, true});
  REQUIRE(edge.size() == 2);
  CHECK(edge[0] == Move{MoveKind::Leftward, {{1, 0}, true}, {{0, 0}, true}});
  CHECK(edge[1] == Move{MoveKind::Pass, {{1, 0}, true}, {{1, 0}, false}});

  const auto no_pass = moves_pass({{1, 1}, false});
  REQUIRE(no_pass.size() == 3);
  CHECK(targets(no_pass) == moves({1, 1}));
  for (const auto& m : no_pass) {
    CHECK(m.kind != MoveKind::Pass);
    CHECK_FALSE(m.to.pass_available);
  }

  SUBCASE("the edge reading bars the pass on x = 0 or y = 0") {
    CHECK(moves_pass({{1, 0}, true}, PassRule::BothCoordinatesPositive).size() == 1);
    CHECK(moves_pass({{0, 3}, true}, PassRule::BothCoordinatesPositive).size() == 3);
    CHECK(moves_pass({{1, 1}, true}, PassRule::BothCoordinatesPositive).back().kind == MoveKind::Pass);
  }
}

TEST_CASE("move kinds satisfy their invariants") {
  for (Coord x = 0; x < 9; ++x) {
    for (Coord y = 0; y < 9; ++y) {
      for (bool p : {false, true}) {
        for (const Move& m : moves_pass({{x, y}, p})) {
          const auto& f = m.from;
          const auto& t = m.to;
          switch (m.kind) {
            case MoveKind::Leftward:
              CHECK((t.pos.x < f.pos.x && t.pos.y == f.pos.y && t.pass_available == f.pass_available));
              break;
            case MoveKind::Upward:
              CHECK((t.pos.x == f.pos.x && t.pos.y < f.pos.y && t.pass_available == f.pass_available));
              break;
            case MoveKind::Diagonal:
              CHECK((f.pos.x - t.pos.x == f.pos.y - t.pos.y && t.pos.x < f.pos.x && t.pass_available == f.pass_available));
              break;
            case MoveKind::Pass:
              CHECK((t.pos == f.pos && f.pass_available && !t.pass_available && f.pos.x + f.pos.y >= 1));
              break;
          }
        }
      }
    }
  }
}

TEST_CASE("move kind names round-trip") {
  for (auto k : {MoveKind::Leftward, MoveKind::Upward, MoveKind::Diagonal, MoveKind::Pass}) {
    CHECK(move_kind_from_string(to_string(k)) == k);
  }
  CHECK_THROWS_AS(move_kind_from_string("sideways"), std::invalid_argument);
}

TEST_CASE("build_grundy_table examples") {
  const auto table = build_grundy_table(30);
  CHECK(table.window_size() == 30);
  CHECK(table.classical().at(0, 0) == 0);
  CHECK(table.classical().at(1, 2) == 0);
  CHECK(table.with_pass().at(0, 0) == 0);
  for (std::size_t y = 0; y < 30; ++y) CHECK(table.classical().at(0, y) == y);

  CHECK(grundy({0, 1}, table) == 1);
  CHECK(grundy({3, 5}, table) == 0);
  CHECK(grundy_pass({{3, 5}, false}, table) == 0);
  CHECK(grundy_pass({{0, 0}, true}, table) == 0);
}

TEST_CASE("table matches an independent top-down brute force") {
  const std::size_t n = 24;
  testing::BruteForce brute;
  testing::BruteForce brute_edge(true);
  const auto table = build_grundy_table(n);
  BuildOptions edge;
  edge.pass_rule = PassRule::BothCoordinatesPositive;
  const auto edge_table = build_grundy_table(n, edge);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      CHECK(table.classical().at(x, y) == brute.grundy(x, y, false));
      CHECK(table.with_pass().at(x, y) == brute.grundy(x, y, true));
      CHECK(edge_table.with_pass().at(x, y) == brute_edge.grundy(x, y, true));
    }
  }
}

TEST_CASE("naive and incremental builders produce identical tables") {
  for (std::size_t n : {1u, 2u, 7u, 64u, 150u}) {
    BuildOptions naive;
    BuildOptions fast;
    fast.strategy = BuildStrategy::Incremental;
    CHECK(build_grundy_table(n, naive) == build_grundy_table(n, fast));
    naive.pass_rule = fast.pass_rule = PassRule::BothCoordinatesPositive;
    CHECK(build_grundy_table(n, naive) == build_grundy_table(n, fast));
  }
}

TEST_CASE("table invariants") {
  const std::size_t n = 120;
  const auto table = build_grundy_table(n);
  CHECK(is_consistent(table));

  SUBCASE("symmetry in x and y on both layers") {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        CHECK(table.classical().at(x, y) == table.classical().at(y, x));
        CHECK(table.with_pass().at(x, y) == table.with_pass().at(y, x));
      }
    }
  }

  SUBCASE("p = 0 layer is the classical game") {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) CHECK(grundy_pass({{x, y}, false}, table) == grundy({x, y}, table));
    }
  }

  SUBCASE("random cells: value is mex of successors, every smaller value is reachable") {
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<std::size_t> coord(0, n - 1);
    for (int i = 0; i < 500; ++i) {
      const PassState s{{coord(rng), coord(rng)}, (i % 2) == 1};
      std::vector<Grundy> values;
      for (const Move& m : moves_pass(s)) {
        REQUIRE(table.contains(m.to.pos));
        values.push_back(grundy_pass(m.to, table));
      }
      const Grundy g = grundy_pass(s, table);
      CHECK(g == mex(values));
      std::set<Grundy> reach(values.begin(), values.end());
      for (Grundy k = 0; k < g; ++k) CHECK(reach.count(k) == 1);
    }
  }
}

TEST_CASE("corrupted table is detected as inconsistent") {
  auto table = build_grundy_table(10);
  GrundyGrid classical = table.classical();
  classical.at(4, 4) += 1;
  CHECK_FALSE(is_consistent(GrundyTable(classical, table.with_pass())));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(build_grundy_table(0), std::invalid_argument);
  BuildOptions small;
  small.max_window = 16;
  CHECK_THROWS_AS(build_grundy_table(17, small), ResourceLimitError);
  CHECK_NOTHROW(build_grundy_table(16, small));

  const auto table = build_grundy_table(8);
  CHECK_THROWS_AS(grundy({8, 0}, table), OutOfWindowError);
  CHECK_THROWS_AS(grundy_pass({{0, 8}, true}, table), OutOfWindowError);
  CHECK_THROWS_AS(GrundyTable(GrundyGrid(3), GrundyGrid(4)), std::invalid_argument);
}

TEST_CASE("table export round-trips") {
  std::mt19937 rng(7);
  for (int i = 0; i < 6; ++i) {
    const std::size_t n = 1 + rng() % 40;
    const auto table = build_grundy_table(n);
    const auto csv = table_to_csv(table);
    const auto json = table_to_json(table);
    CHECK(table_from_csv(csv) == table);
    CHECK(table_from_json(json) == table);
    CHECK(table_to_csv(table_from_csv(csv)) == csv);
    CHECK(table_to_json(table_from_json(json)) == json);
  }
}

TEST_CASE("table export formats") {
  const auto table = build_grundy_table(3);
  CHECK(table_to_csv(table) == "0,1,2\n1,2,0\n2,0,1\n\n0,2,1\n2,1,3\n1,3,2\n");
  CHECK(table_to_json(table) ==
        "{\"n\":3,\"classical\":[[0,1,2],[1,2,0],[2,0,1]],\"with_pass\":[[0,2,1],[2,1,3],[1,3,2]]}\n");
}

TEST_CASE("malformed table input is rejected") {
  CHECK_THROWS_AS(table_from_csv(""), TableFormatError);
  CHECK_THROWS_AS(table_from_csv("0,1\n1,0\n"), TableFormatError);               // no second layer
  CHECK_THROWS_AS(table_from_csv("0,1\n1,0\n\n0,2\n"), TableFormatError);        // layer sizes differ
  CHECK_THROWS_AS(table_from_csv("0,1\n1\n\n0,2\n2,1\n"), TableFormatError);     // ragged
  CHECK_THROWS_AS(table_from_csv("0,x\n1,0\n\n0,2\n2,1\n"), TableFormatError);   // not a number
  CHECK_THROWS_AS(table_from_csv("0,-1\n1,0\n\n0,2\n2,1\n"), TableFormatError);  // negative
  CHECK_THROWS_AS(table_from_json("{"), TableFormatError);
  CHECK_THROWS_AS(table_from_json(R"({"n":2,"classical":[[0,1],[1,0]]})"), TableFormatError);
  CHECK_THROWS_AS(table_from_json(R"({"n":2,"classical":[[0,1]],"with_pass":[[0,2],[2,1]]})"), TableFormatError);
}
