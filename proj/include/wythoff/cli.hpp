#pragma once

// Command implementations behind the `wythoff` executable. Each returns the
// process exit code and writes only to the streams it is given.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "wythoff/characterization.hpp"
#include "wythoff/strategy.hpp"

namespace wythoff::cli {

inline constexpr std::size_t kDefaultWindow = 200;

enum class TableFormat { Csv, Json };

/// WYTHOFF_MAX_WINDOW when set to a positive integer, else kDefaultMaxWindow.
std::size_t max_window_from_env();

/// Throws ResourceLimitError when n exceeds the cap.
void check_window(std::size_t n);

int cmd_table(std::size_t n, TableFormat format, std::ostream& out);
/// Reads a CSV or JSON table (by content) and re-exports it in `format`.
int cmd_table_import(const std::string& text, TableFormat format, std::ostream& out);
int cmd_verify(std::size_t n, bool json, std::ostream& out);
int cmd_eval(Coord x, Coord y, bool pass, std::size_t n, std::ostream& out);
int cmd_plot(std::size_t n, Layer which, bool overlay, std::ostream& out);
int cmd_play(Coord x, Coord y, bool pass, std::uint64_t seed, Opponent policy, std::size_t n, std::ostream& out,
             std::ostream& log);
int cmd_serve(int port, std::size_t n, const std::string& host, std::ostream& log);

}  // namespace wythoff::cli
