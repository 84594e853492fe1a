#include "wythoff/strategy.hpp"

#include <random>

#include "json.hpp"

namespace wythoff {

MoveChoice best_move(PassState state, const GrundyTable& table) {
  if (is_p_pass(state, table)) return {std::nullopt, PositionClass::P, std::nullopt};
  for (const Move& m : moves_pass(state)) {
    if (is_p_pass(m.to, table)) return {m, PositionClass::N, m.to};
  }
  // Unreachable when the closed-form P-set is correct: every N-position has
  // a move into it. Report N without a move rather than inventing one.
  return {std::nullopt, PositionClass::N, std::nullopt};
}

std::optional<Move> engine_move(PassState state, const GrundyTable& table) {
  if (auto choice = best_move(state, table); choice.best) return choice.best;
  auto options = moves_pass(state);
  if (options.empty()) return std::nullopt;
  return options.front();
}

GameRecord playout(PassState start, Opponent opponent, std::uint64_t seed, const GrundyTable& table,
                   bool engine_first) {
  if (!table.contains(start.pos)) {
    throw OutOfWindowError("playout start outside window " + std::to_string(table.window_size()));
  }
  std::mt19937_64 rng(seed);
  GameRecord record{start, {}, std::nullopt};
  PassState state = start;
  Mover to_move = engine_first ? Mover::Engine : Mover::Opponent;
  while (true) {
    std::optional<Move> move;
    if (to_move == Mover::Engine || opponent == Opponent::Optimal) {
      move = engine_move(state, table);
    } else {
      auto options = moves_pass(state);
      if (!options.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
        move = options[pick(rng)];
      }
    }
    if (!move) break;
    record.moves.push_back({*move, to_move});
    record.winner = to_move;
    state = move->to;
    to_move = to_move == Mover::Engine ? Mover::Opponent : Mover::Engine;
  }
  return record;
}

std::string_view to_string(Mover mover) { return mover == Mover::Engine ? "engine" : "opponent"; }

std::string_view to_string(PositionClass cls) { return cls == PositionClass::P ? "P" : "N"; }

std::string game_record_to_jsonl(const GameRecord& record) {
  auto state_json = [](const PassState& s) {
    return nlohmann::ordered_json{{"x", s.pos.x}, {"y", s.pos.y}, {"pass", s.pass_available}};
  };
  std::string out;
  for (const auto& played : record.moves) {
    nlohmann::ordered_json line{{"from", state_json(played.move.from)},
                                {"to", state_json(played.move.to)},
                                {"kind", to_string(played.move.kind)},
                                {"mover", to_string(played.mover)}};
    out += line.dump();
    out += '\n';
  }
  return out;
}

}  // namespace wythoff
