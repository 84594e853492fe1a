#pragma once

// Rules and Sprague-Grundy tables for Wythoff's game and its one-time-pass
// variant.
//
// Every move strictly decreases x, y, or the pass flag, so an N x N window
// anchored at (0,0) is closed under moves: a cell's Grundy value depends only
// on cells inside the same window. Tables built here are therefore exact, with
// no boundary approximation anywhere.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wythoff {

using Coord = std::uint64_t;
using Grundy = std::uint32_t;

/// A queen square; x is the distance from the left edge, y from the top edge.
struct Position {
  Coord x = 0;
  Coord y = 0;

  friend constexpr auto operator<=>(const Position&, const Position&) = default;
};

/// Full state of the pass game: square plus whether the pass is still unused.
struct PassState {
  Position pos;
  bool pass_available = false;

  friend constexpr auto operator<=>(const PassState&, const PassState&) = default;
};

enum class MoveKind { Leftward, Upward, Diagonal, Pass };

struct Move {
  MoveKind kind = MoveKind::Leftward;
  PassState from;
  PassState to;

  friend constexpr bool operator==(const Move&, const Move&) = default;
};

std::string_view to_string(MoveKind kind);
/// Inverse of to_string; throws std::invalid_argument on an unknown name.
MoveKind move_kind_from_string(std::string_view name);

/// When the pass move is legal.
///
/// AnyNonTerminal: p = 1 and x + y >= 1.
/// BothCoordinatesPositive: p = 1, x >= 1 and y >= 1.
/// The engine uses AnyNonTerminal; the other reading exists so the
/// verifier can report on it.
enum class PassRule { AnyNonTerminal, BothCoordinatesPositive };

class OutOfWindowError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class ResourceLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Least non-negative integer not present in `values`.
Grundy mex(std::span<const Grundy> values);

/// Classical moves in canonical order: leftward (ascending x), upward
/// (ascending y), then diagonal (ascending step t, i.e. nearest first).
std::vector<Position> moves(Position pos);

bool pass_allowed(PassState state, PassRule rule = PassRule::AnyNonTerminal);

/// Pass-game moves: the classical moves with the flag unchanged, followed by
/// the pass move when legal under `rule`.
std::vector<Move> moves_pass(PassState state, PassRule rule = PassRule::AnyNonTerminal);

/// Row-major N x N grid of Grundy values; index (x, y) lives at y * N + x.
class GrundyGrid {
 public:
  GrundyGrid() = default;
  explicit GrundyGrid(std::size_t n) : n_(n), cells_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  Grundy at(std::size_t x, std::size_t y) const noexcept { return cells_[y * n_ + x]; }
  Grundy& at(std::size_t x, std::size_t y) noexcept { return cells_[y * n_ + x]; }
  std::span<const Grundy> row(std::size_t y) const noexcept { return {cells_.data() + y * n_, n_}; }
  std::span<const Grundy> cells() const noexcept { return cells_; }

  friend bool operator==(const GrundyGrid&, const GrundyGrid&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Grundy> cells_;
};

/// Grundy values of both pass layers over [0, N)^2. The p = 0 layer of the
/// pass game coincides with the classical game, so it is stored once.
/// Immutable after construction and safe to share between threads.
class GrundyTable {
 public:
  GrundyTable() = default;
  /// Throws std::invalid_argument when the layers are empty or differ in size.
  GrundyTable(GrundyGrid classical, GrundyGrid with_pass);

  std::size_t window_size() const noexcept { return classical_.size(); }
  bool contains(Position pos) const noexcept { return pos.x < window_size() && pos.y < window_size(); }

  const GrundyGrid& classical() const noexcept { return classical_; }
  const GrundyGrid& with_pass() const noexcept { return with_pass_; }

  friend bool operator==(const GrundyTable&, const GrundyTable&) = default;

 private:
  GrundyGrid classical_;
  GrundyGrid with_pass_;
};

enum class BuildStrategy {
  /// Row-major; each cell scans its O(x + y) predecessors.
  Naive,
  /// Row-major; keeps per-row, per-column and per-diagonal occupancy.
  Incremental,
};

inline constexpr std::size_t kDefaultMaxWindow = 4096;

struct BuildOptions {
  BuildStrategy strategy = BuildStrategy::Naive;
  PassRule pass_rule = PassRule::AnyNonTerminal;
  std::size_t max_window = kDefaultMaxWindow;
};

/// Throws std::invalid_argument for window_size == 0 and ResourceLimitError
/// when window_size exceeds options.max_window.
GrundyTable build_grundy_table(std::size_t window_size, const BuildOptions& options = {});

/// Throw OutOfWindowError unless the position is inside the table.
Grundy grundy(Position pos, const GrundyTable& table);
Grundy grundy_pass(PassState state, const GrundyTable& table);

/// True when every cell of both layers equals the mex over its moves.
bool is_consistent(const GrundyTable& table, PassRule rule = PassRule::AnyNonTerminal);

}  // namespace wythoff
