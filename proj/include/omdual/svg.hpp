#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "omdual/simplicial_complex.hpp"

namespace omdual {

/**
 * Schematic drawing of a complex on x/y vertex labels: x vertices on the
 * top row, y vertices on the bottom row, facets as translucent polygons,
 * edges as segments. Output is a deterministic standalone SVG document.
 */
inline std::string complex_svg(const SimplicialComplex& k) {
  const detail::XyLayout layout = detail::detect_xy_layout(k.vertices());
  if (!layout.present)
    throw std::invalid_argument("svg drawing needs x/y vertex labels");
  const int m = k.vertex_count() / 2;
  const int width = 160 + 120 * (m - 1) + 160;
  const int height = 360;

  const auto px = [&](int v) {
    return 160 + 120 * layout.element[static_cast<std::size_t>(v)];
  };
  const auto py = [&](int v) {
    return layout.side[static_cast<std::size_t>(v)] == 0 ? 100 : 260;
  };

  // Tour a facet clockwise: top row left to right, bottom row right to left.
  const auto tour = [&](Mask face) {
    std::vector<int> order;
    for (int i = 0; i < m; ++i)
      if (has_bit(face, i)) order.push_back(i);
    for (int i = m - 1; i >= 0; --i)
      if (has_bit(face, m + i)) order.push_back(m + i);
    return order;
  };

  static const char* palette[] = {"#4e79a7", "#f28e2b", "#59a14f",
                                  "#e15759", "#76b7b2", "#af7aa1"};
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  int colour = 0;
  for (Mask f : k.facets()) {
    if (popcount(f) < 3) continue;
    svg += "<polygon points=\"";
    bool first = true;
    for (int v : tour(f)) {
      if (!first) svg += ' ';
      first = false;
      svg += std::to_string(px(v)) + "," + std::to_string(py(v));
    }
    svg += "\" fill=\"";
    svg += palette[colour % 6];
    svg += "\" fill-opacity=\"0.25\" stroke=\"none\"/>\n";
    ++colour;
  }

  for (Mask e : k.faces_of_size(2)) {
    const std::vector<int> ends = bit_indices(e);
    svg += "<line x1=\"" + std::to_string(px(ends[0])) + "\" y1=\"" +
           std::to_string(py(ends[0])) + "\" x2=\"" + std::to_string(px(ends[1])) +
           "\" y2=\"" + std::to_string(py(ends[1])) +
           "\" stroke=\"#333\" stroke-width=\"1.5\"/>\n";
  }

  for (int v = 0; v < k.vertex_count(); ++v) {
    const bool present = k.is_face(bit(v));
    svg += "<circle cx=\"" + std::to_string(px(v)) + "\" cy=\"" +
           std::to_string(py(v)) + "\" r=\"6\" fill=\"" +
           (present ? std::string("#222") : std::string("#ccc")) + "\"/>\n";
    const int ly = py(v) + (layout.side[static_cast<std::size_t>(v)] == 0 ? -14 : 26);
    svg += "<text x=\"" + std::to_string(px(v)) + "\" y=\"" + std::to_string(ly) +
           "\" font-family=\"sans-serif\" font-size=\"15\" text-anchor=\"middle\">" +
           k.vertices().label(v) + "</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace omdual
