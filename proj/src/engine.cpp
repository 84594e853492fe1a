#include "wythoff/engine.hpp"

#include <algorithm>
#include <string>

namespace wythoff {

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::Leftward: return "leftward";
    case MoveKind::Upward: return "upward";
    case MoveKind::Diagonal: return "diagonal";
    case MoveKind::Pass: return "pass";
  }
  return "unknown";
}

MoveKind move_kind_from_string(std::string_view name) {
  for (auto kind : {MoveKind::Leftward, MoveKind::Upward, MoveKind::Diagonal, MoveKind::Pass}) {
    if (to_string(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown move kind: " + std::string(name));
}

Grundy mex(std::span<const Grundy> values) {
  // The answer is at most values.size(), so larger entries can be ignored.
  std::vector<bool> seen(values.size() + 1, false);
  for (Grundy v : values) {
    if (v < seen.size()) seen[v] = true;
  }
  Grundy k = 0;
  while (seen[k]) ++k;
  return k;
}

std::vector<Position> moves(Position pos) {
  std::vector<Position> out;
  out.reserve(pos.x + pos.y + std::min(pos.x, pos.y));
  for (Coord u = 0; u < pos.x; ++u) out.push_back({u, pos.y});
  for (Coord v = 0; v < pos.y; ++v) out.push_back({pos.x, v});
  const Coord steps = std::min(pos.x, pos.y);
  for (Coord t = 1; t <= steps; ++t) out.push_back({pos.x - t, pos.y - t});
  return out;
}

bool pass_allowed(PassState state, PassRule rule) {
  if (!state.pass_available) return false;
  const auto [x, y] = state.pos;
  switch (rule) {
    case PassRule::AnyNonTerminal: return x + y >= 1;
    case PassRule::BothCoordinatesPositive: return x >= 1 && y >= 1;
  }
  return false;
}

std::vector<Move> moves_pass(PassState state, PassRule rule) {
  const auto [x, y] = state.pos;
  const bool p = state.pass_available;
  std::vector<Move> out;
  out.reserve(x + y + std::min(x, y) + 1);
  for (Coord u = 0; u < x; ++u) out.push_back({MoveKind::Leftward, state, {{u, y}, p}});
  for (Coord v = 0; v < y; ++v) out.push_back({MoveKind::Upward, state, {{x, v}, p}});
  const Coord steps = std::min(x, y);
  for (Coord t = 1; t <= steps; ++t) out.push_back({MoveKind::Diagonal, state, {{x - t, y - t}, p}});
  if (pass_allowed(state, rule)) out.push_back({MoveKind::Pass, state, {state.pos, false}});
  return out;
}

GrundyTable::GrundyTable(GrundyGrid classical, GrundyGrid with_pass)
    : classical_(std::move(classical)), with_pass_(std::move(with_pass)) {
  if (classical_.size() == 0) throw std::invalid_argument("grundy table must be non-empty");
  if (classical_.size() != with_pass_.size()) {
    throw std::invalid_argument("grundy table layers differ in size");
  }
}

namespace {

bool pass_allowed_at(std::size_t x, std::size_t y, PassRule rule) {
  return pass_allowed({{x, y}, true}, rule);
}

// Fills `layer` row-major. When `pass_target` is non-null, each cell whose pass
// is legal also sees pass_target->at(x, y).
void fill_naive(GrundyGrid& layer, const GrundyGrid* pass_target, PassRule rule) {
  const std::size_t n = layer.size();
  std::vector<bool> seen;
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t steps = std::min(x, y);
      // mex never exceeds the number of options.
      const std::size_t options = x + y + steps + 1;
      seen.assign(options + 1, false);
      auto mark = [&](Grundy v) {
        if (v < seen.size()) seen[v] = true;
      };
      for (std::size_t u = 0; u < x; ++u) mark(layer.at(u, y));
      for (std::size_t v = 0; v < y; ++v) mark(layer.at(x, v));
      for (std::size_t t = 1; t <= steps; ++t) mark(layer.at(x - t, y - t));
      if (pass_target != nullptr && pass_allowed_at(x, y, rule)) mark(pass_target->at(x, y));
      Grundy k = 0;
      while (seen[k]) ++k;
      layer.at(x, y) = k;
    }
  }
}

class OccupancySet {
 public:
  bool test(Grundy v) const { return v < bits_.size() && bits_[v]; }
  void insert(Grundy v) {
    if (v >= bits_.size()) bits_.resize(std::max<std::size_t>(v + 1, bits_.size() * 2), false);
    bits_[v] = true;
  }

 private:
  std::vector<bool> bits_;
};

void fill_incremental(GrundyGrid& layer, const GrundyGrid* pass_target, PassRule rule) {
  const std::size_t n = layer.size();
  std::vector<OccupancySet> rows(n);
  std::vector<OccupancySet> cols(n);
  // Diagonal index x - y + (n - 1) stays constant along a diagonal move.
  std::vector<OccupancySet> diags(2 * n - 1);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      auto& row = rows[y];
      auto& col = cols[x];
      auto& diag = diags[x + (n - 1) - y];
      const bool has_pass = pass_target != nullptr && pass_allowed_at(x, y, rule);
      const Grundy pass_value = has_pass ? pass_target->at(x, y) : 0;
      Grundy k = 0;
      while (row.test(k) || col.test(k) || diag.test(k) || (has_pass && k == pass_value)) ++k;
      layer.at(x, y) = k;
      row.insert(k);
      col.insert(k);
      diag.insert(k);
    }
  }
}

}  // namespace

GrundyTable build_grundy_table(std::size_t window_size, const BuildOptions& options) {
  if (window_size == 0) throw std::invalid_argument("window size must be positive");
  if (window_size > options.max_window) {
    throw ResourceLimitError("window size " + std::to_string(window_size) + " exceeds maximum " +
                             std::to_string(options.max_window));
  }
  GrundyGrid classical(window_size);
  GrundyGrid with_pass(window_size);
  auto fill = options.strategy == BuildStrategy::Naive ? fill_naive : fill_incremental;
  fill(classical, nullptr, options.pass_rule);
  fill(with_pass, &classical, options.pass_rule);
  return GrundyTable(std::move(classical), std::move(with_pass));
}

namespace {

void require_in_window(Position pos, const GrundyTable& table) {
  if (!table.contains(pos)) {
    throw OutOfWindowError("position (" + std::to_string(pos.x) + "," + std::to_string(pos.y) +
                           ") outside window " + std::to_string(table.window_size()));
  }
}

}  // namespace

Grundy grundy(Position pos, const GrundyTable& table) {
  require_in_window(pos, table);
  return table.classical().at(pos.x, pos.y);
}

Grundy grundy_pass(PassState state, const GrundyTable& table) {
  require_in_window(state.pos, table);
  const auto& layer = state.pass_available ? table.with_pass() : table.classical();
  return layer.at(state.pos.x, state.pos.y);
}

bool is_consistent(const GrundyTable& table, PassRule rule) {
  const std::size_t n = table.window_size();
  std::vector<Grundy> options;
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      for (bool p : {false, true}) {
        const PassState state{{x, y}, p};
        options.clear();
        for (const Move& m : moves_pass(state, rule)) options.push_back(grundy_pass(m.to, table));
        if (grundy_pass(state, table) != mex(options)) return false;
      }
    }
  }
  return true;
}

}  // namespace wythoff
