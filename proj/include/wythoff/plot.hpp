#pragma once

#include <cstddef>
#include <string>

#include "wythoff/characterization.hpp"
#include "wythoff/engine.hpp"

namespace wythoff::plot {

struct SvgOptions {
  double canvas = 800.0;  // side of the plotting area in px
  /// For the pass layer, also draw the classical P-positions underneath.
  bool overlay_classic = false;
};

/// Scatter plot of the P-positions of one layer inside [0, n)^2. The origin
/// is the upper-left corner and y grows downward, like the board. Each point
/// is a <circle> carrying data-x / data-y board coordinates and a class of
/// "classic" or "pass".
std::string render_svg(const GrundyTable& table, Layer layer, std::size_t n, const SvgOptions& options = {});

}  // namespace wythoff::plot
