#pragma once

// SVG 1.1 pictures of diagrams. Output is a pure function of the input, so
// equal inputs give byte-identical documents.

#include <string>
#include <vector>

#include "honeycomb/honeycomb.hpp"

namespace honeycomb {

struct RenderOptions {
  bool origin = false;      // black dot at (0,0,0)
  double ray_length = 3;    // boundary rays are cut here, in plane units
  double unit = 40;         // pixels per plane unit
};

/// Each layer gets its own stroke colour (an overlay is two layers). The view
/// box fits everything drawn with a 10% margin.
std::string render_svg(const std::vector<Diagram>& layers, const RenderOptions& options = {});
std::string render_svg(const Honeycomb& h, const RenderOptions& options = {});

}  // namespace honeycomb
