#pragma once

// Closed-form membership tests for the position classes of Wythoff's game
// and the P-positions of the one-time-pass variant.
//
// All golden-ratio arithmetic is exact: floor(n * phi) is evaluated as
// (n + isqrt(5 n^2)) / 2 over 128-bit integers, never with floating point.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wythoff/engine.hpp"

namespace wythoff {

/// Largest n (and largest coordinate) accepted by the exact phi arithmetic.
/// 5 n^2 stays below 2^127 and floor(n phi) + n below 2^64.
inline constexpr std::uint64_t kMaxBeattyIndex = std::uint64_t{1} << 62;

/// floor(sqrt(n)) for 128-bit n.
unsigned __int128 isqrt(unsigned __int128 n);

/// floor(n * phi), exact. Throws std::overflow_error when n > kMaxBeattyIndex.
std::uint64_t floor_mul_phi(std::uint64_t n);

/// The n-th P-position pair of the classical game and its mirror:
/// ((floor(n phi), floor(n phi) + n), (floor(n phi) + n, floor(n phi))).
std::pair<Position, Position> beatty_pair(std::uint64_t n);

/// Grundy value 0 in the classical game, decided in O(1) without a table.
/// Throws std::overflow_error if a coordinate exceeds kMaxBeattyIndex.
bool is_t0(Position pos);

/// The finite corrections to T1 that give the P-positions of the pass layer.
struct ExceptionSets {
  std::vector<Position> removed;  // A: Grundy-1 squares that are not P-positions at p = 1
  std::vector<Position> added;    // B: squares outside T1 that are P-positions at p = 1

  static const ExceptionSets& standard();

  bool in_removed(Position pos) const;
  bool in_added(Position pos) const;
};

inline constexpr std::array<Position, 7> kSetA{{{0, 1}, {1, 0}, {2, 2}, {3, 6}, {6, 3}, {5, 7}, {7, 5}}};
inline constexpr std::array<Position, 7> kSetB{{{0, 0}, {1, 3}, {3, 1}, {2, 5}, {5, 2}, {6, 7}, {7, 6}}};

/// Grundy value 1 in the classical game. No closed form is known, so this
/// reads the table; throws OutOfWindowError outside it.
bool is_t1(Position pos, const GrundyTable& table);

/// Every T1 position with both coordinates below `limit`, sorted by (x, y).
/// Throws OutOfWindowError when limit exceeds the table window.
std::vector<Position> t1_enumerate(std::size_t limit, const GrundyTable& table);

/// P-position predicate of the pass game:
///   p = 0: pos in T0
///   p = 1: pos in (T1 u B) \ A
bool is_p_pass(PassState state, const GrundyTable& table,
               const ExceptionSets& sets = ExceptionSets::standard());

enum class Layer { Classic, Pass };

/// All P-positions of one layer inside the first `n` rows and columns,
/// sorted ascending by (x, y). Classic is the p = 0 layer, Pass the p = 1 layer.
std::vector<PassState> p_positions(Layer layer, std::size_t n, const GrundyTable& table);

/// JSON array of {"x", "y", "pass"} records.
std::string p_positions_to_json(std::span<const PassState> states);

}  // namespace wythoff
