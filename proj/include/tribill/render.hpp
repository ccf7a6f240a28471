// SVG pictures of grid polygons: the boundary as a closed path, cell edges
// as light strokes, one colored group per trajectory, and optionally the
// dual bicolored graph (discs at cell centers, edges across interior panes,
// stubs to the boundary).  Output is plain SVG 1.1 text and depends only on
// the inputs, byte for byte.  All floating point lives here; coordinates are
// printed with three decimals.
#pragma once

#include <string>
#include <vector>

#include "tribill/polygon.hpp"

namespace tribill {

struct RenderOptions {
  double scale = 40.0;  // pixels per pane
  bool show_trajectories = true;
  bool show_plabic = false;
  // cycled by trajectory index; trajectories are ordered by smallest pane
  std::vector<std::string> palette = {"#e41a1c", "#377eb8", "#4daf4a",
                                      "#984ea3", "#ff7f00", "#a65628"};
  double margins = 20.0;
};

// Requires scale > 0 and a nonempty palette.
std::string render_svg(const GridPolygon& p, const RenderOptions& opts = {});

}  // namespace tribill
