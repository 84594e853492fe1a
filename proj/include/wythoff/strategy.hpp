#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wythoff/characterization.hpp"
#include "wythoff/engine.hpp"

namespace wythoff {

enum class PositionClass { P, N };

struct MoveChoice {
  std::optional<Move> best;  // present iff position_class == N
  PositionClass position_class = PositionClass::P;
  std::optional<PassState> target_class_witness;  // best->to, the P-position reached
};

/// Winning move of the pass game, chosen with the closed-form P-set rather
/// than Grundy values. Among several winning moves the first in canonical
/// move order is taken (leftward, upward, diagonal, then pass).
/// Throws OutOfWindowError outside the table.
MoveChoice best_move(PassState state, const GrundyTable& table);

/// The move the engine plays: best_move when one exists, otherwise the first
/// legal move in canonical order. Empty only at a terminal state.
std::optional<Move> engine_move(PassState state, const GrundyTable& table);

enum class Opponent { Random, Optimal };
enum class Mover { Engine, Opponent };

struct PlayedMove {
  Move move;
  Mover mover = Mover::Engine;
};

struct GameRecord {
  PassState start;
  std::vector<PlayedMove> moves;
  /// Who made the last move. Nullopt for a game that starts terminal, in
  /// which case the player who moved before the start has won.
  std::optional<Mover> winner;
};

/// Plays until no move remains. The engine moves first unless
/// `engine_first` is false. Random opponents draw uniformly from the legal
/// moves with a generator seeded by `seed`, so records are reproducible.
GameRecord playout(PassState start, Opponent opponent, std::uint64_t seed, const GrundyTable& table,
                   bool engine_first = true);

/// One JSON object per line: {"from", "to", "kind", "mover"}.
std::string game_record_to_jsonl(const GameRecord& record);

std::string_view to_string(Mover mover);
std::string_view to_string(PositionClass cls);

}  // namespace wythoff
