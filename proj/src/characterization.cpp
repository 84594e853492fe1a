#include "wythoff/characterization.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace wythoff {

unsigned __int128 isqrt(unsigned __int128 n) {
  // Digit-by-digit (base 4) square root.
  unsigned __int128 result = 0;
  unsigned __int128 bit = static_cast<unsigned __int128>(1) << 126;
  while (bit > n) bit >>= 2;
  while (bit != 0) {
    if (n >= result + bit) {
      n -= result + bit;
      result = (result >> 1) + bit;
    } else {
      result >>= 1;
    }
    bit >>= 2;
  }
  return result;
}

std::uint64_t floor_mul_phi(std::uint64_t n) {
  if (n > kMaxBeattyIndex) {
    throw std::overflow_error("beatty index " + std::to_string(n) + " exceeds 2^62");
  }
  // n*sqrt(5) is irrational for n > 0, so s <= n*sqrt(5) < s + 1 and
  // floor((n + n*sqrt(5)) / 2) == floor((n + s) / 2).
  const auto wide = static_cast<unsigned __int128>(n);
  const auto s = isqrt(5 * wide * wide);
  return static_cast<std::uint64_t>((wide + s) / 2);
}

std::pair<Position, Position> beatty_pair(std::uint64_t n) {
  const std::uint64_t a = floor_mul_phi(n);
  return {{a, a + n}, {a + n, a}};
}

bool is_t0(Position pos) {
  if (pos.x > kMaxBeattyIndex || pos.y > kMaxBeattyIndex) {
    throw std::overflow_error("coordinate exceeds 2^62");
  }
  const auto [lo, hi] = std::minmax(pos.x, pos.y);
  return lo == floor_mul_phi(hi - lo);
}

const ExceptionSets& ExceptionSets::standard() {
  static const ExceptionSets sets{{kSetA.begin(), kSetA.end()}, {kSetB.begin(), kSetB.end()}};
  return sets;
}

bool ExceptionSets::in_removed(Position pos) const {
  return std::find(removed.begin(), removed.end(), pos) != removed.end();
}

bool ExceptionSets::in_added(Position pos) const {
  return std::find(added.begin(), added.end(), pos) != added.end();
}

bool is_t1(Position pos, const GrundyTable& table) { return grundy(pos, table) == 1; }

std::vector<Position> t1_enumerate(std::size_t limit, const GrundyTable& table) {
  if (limit > table.window_size()) {
    throw OutOfWindowError("limit " + std::to_string(limit) + " exceeds window " +
                           std::to_string(table.window_size()));
  }
  std::vector<Position> out;
  for (std::size_t x = 0; x < limit; ++x) {
    for (std::size_t y = 0; y < limit; ++y) {
      if (table.classical().at(x, y) == 1) out.push_back({x, y});
    }
  }
  return out;
}

bool is_p_pass(PassState state, const GrundyTable& table, const ExceptionSets& sets) {
  if (!table.contains(state.pos)) {
    throw OutOfWindowError("position (" + std::to_string(state.pos.x) + "," + std::to_string(state.pos.y) +
                           ") outside window " + std::to_string(table.window_size()));
  }
  if (!state.pass_available) return is_t0(state.pos);
  return (is_t1(state.pos, table) || sets.in_added(state.pos)) && !sets.in_removed(state.pos);
}

std::vector<PassState> p_positions(Layer layer, std::size_t n, const GrundyTable& table) {
  if (n > table.window_size()) {
    throw OutOfWindowError("n " + std::to_string(n) + " exceeds window " + std::to_string(table.window_size()));
  }
  const bool pass = layer == Layer::Pass;
  std::vector<PassState> out;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const PassState s{{x, y}, pass};
      if (is_p_pass(s, table)) out.push_back(s);
    }
  }
  return out;
}

std::string p_positions_to_json(std::span<const PassState> states) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& s : states) {
    arr.push_back({{"x", s.pos.x}, {"y", s.pos.y}, {"pass", s.pass_available}});
  }
  return arr.dump();
}

}  // namespace wythoff
