#include "wythoff/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <ostream>
#include <string_view>

#include "wythoff/plot.hpp"
#include "wythoff/service_http.hpp"
#include "wythoff/table_io.hpp"
#include "wythoff/verifier.hpp"

namespace wythoff::cli {

std::size_t max_window_from_env() {
  const char* raw = std::getenv("WYTHOFF_MAX_WINDOW");
  if (raw == nullptr) return kDefaultMaxWindow;
  const std::string_view text(raw);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || v == 0) return kDefaultMaxWindow;
  return v;
}

void check_window(std::size_t n) {
  const std::size_t cap = max_window_from_env();
  if (n > cap) {
    throw ResourceLimitError("window " + std::to_string(n) + " exceeds WYTHOFF_MAX_WINDOW=" + std::to_string(cap));
  }
}

namespace {

GrundyTable table_for(std::size_t n) {
  check_window(n);
  BuildOptions options;
  options.max_window = max_window_from_env();
  return build_grundy_table(n, options);
}

void write_table(const GrundyTable& table, TableFormat format, std::ostream& out) {
  out << (format == TableFormat::Csv ? table_to_csv(table) : table_to_json(table));
}

std::string describe(const PassState& s) {
  return "(" + std::to_string(s.pos.x) + "," + std::to_string(s.pos.y) + ") pass=" +
         (s.pass_available ? "true" : "false");
}

}  // namespace

int cmd_table(std::size_t n, TableFormat format, std::ostream& out) {
  write_table(table_for(n), format, out);
  return 0;
}

int cmd_table_import(const std::string& text, TableFormat format, std::ostream& out) {
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool is_json = first != std::string::npos && text[first] == '{';
  write_table(is_json ? table_from_json(text) : table_from_csv(text), format, out);
  return 0;
}

int cmd_verify(std::size_t n, bool json, std::ostream& out) {
  check_window(n);
  const auto report = verify::run_all(n, max_window_from_env());
  out << (json ? verify::report_to_json(report) : verify::report_to_text(report));
  return report.overall ? 0 : 1;
}

int cmd_eval(Coord x, Coord y, bool pass, std::size_t n, std::ostream& out) {
  const auto table = table_for(n);
  const PassState state{{x, y}, pass};
  const Grundy g_classical = grundy(state.pos, table);
  const Grundy g_pass = grundy_pass(state, table);
  const auto choice = best_move(state, table);
  out << "position " << describe(state) << "\n";
  out << "classical G=" << g_classical << ", pass-game G=" << g_pass << "\n";
  out << "G=" << g_pass << ", " << to_string(choice.position_class) << "-position, ";
  if (choice.best) {
    out << "winning move: " << to_string(choice.best->kind) << " to " << describe(choice.best->to) << "\n";
  } else {
    out << "no winning move\n";
  }
  return 0;
}

int cmd_plot(std::size_t n, Layer which, bool overlay, std::ostream& out) {
  plot::SvgOptions options;
  options.overlay_classic = overlay;
  out << plot::render_svg(table_for(n), which, n, options);
  return 0;
}

int cmd_play(Coord x, Coord y, bool pass, std::uint64_t seed, Opponent policy, std::size_t n, std::ostream& out,
             std::ostream& log) {
  const auto table = table_for(n);
  const auto record = playout({{x, y}, pass}, policy, seed, table);
  out << game_record_to_jsonl(record);
  if (record.winner) {
    log << "winner: " << to_string(*record.winner) << " after " << record.moves.size() << " moves\n";
  } else {
    log << "start is terminal: no moves, previous player wins\n";
  }
  return 0;
}

int cmd_serve(int port, std::size_t n, const std::string& host, std::ostream& log) {
  service::GameService svc(table_for(n));
  log << "serving window " << n << " on http://" << host << ":" << port << "/api\n" << std::flush;
  if (!service::serve(svc, host, port)) {
    log << "failed to bind " << host << ":" << port << "\n";
    return 1;
  }
  return 0;
}

}  // namespace wythoff::cli
