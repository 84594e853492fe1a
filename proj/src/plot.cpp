#include "wythoff/plot.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace wythoff::plot {

std::string render_svg(const GrundyTable& table, Layer layer, std::size_t n, const SvgOptions& options) {
  const auto points = p_positions(layer, n, table);
  const double margin = 40.0;
  const double cell = options.canvas / static_cast<double>(std::max<std::size_t>(n, 1));
  const double side = options.canvas + 2 * margin;
  const double radius = std::clamp(cell * 0.45, 0.8, 6.0);

  std::ostringstream svg;
  svg << std::fixed << std::setprecision(2);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
      << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
  svg << "<title>" << (layer == Layer::Classic ? "P-positions of the classical Wythoff game"
                                                : "P-positions of the Wythoff game with a pass (p=1)")
      << ", window " << n << "</title>\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << side << "\" height=\"" << side << "\" fill=\"white\"/>\n";
  // Axes meet at the upper-left origin; y runs down the page.
  svg << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin + options.canvas << "\" y2=\""
      << margin << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
      << margin + options.canvas << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << margin + options.canvas << "\" y=\"" << margin - 10 << "\" text-anchor=\"end\">x</text>\n";
  svg << "<text x=\"" << margin - 10 << "\" y=\"" << margin + options.canvas << "\">y</text>\n";

  auto emit = [&](const PassState& s, const char* cls, const char* fill) {
    const double cx = margin + (static_cast<double>(s.pos.x) + 0.5) * cell;
    const double cy = margin + (static_cast<double>(s.pos.y) + 0.5) * cell;
    svg << "<circle class=\"" << cls << "\" data-x=\"" << s.pos.x << "\" data-y=\"" << s.pos.y << "\" cx=\"" << cx
        << "\" cy=\"" << cy << "\" r=\"" << radius << "\" fill=\"" << fill << "\"/>\n";
  };
  if (layer == Layer::Pass && options.overlay_classic) {
    for (const auto& s : p_positions(Layer::Classic, n, table)) emit(s, "classic", "#bbbbbb");
  }
  for (const auto& s : points) {
    emit(s, layer == Layer::Classic ? "classic" : "pass", layer == Layer::Classic ? "#1f4e9c" : "#c0392b");
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace wythoff::plot
