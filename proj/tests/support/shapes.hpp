// Reference shapes shared across test binaries.
#pragma once

#include <vector>

#include "tribill/polygon.hpp"

namespace shapes {

using namespace tribill;

// Chain of k unit hexagons; consecutive centers differ by 2e1 - e2.
inline GridPolygon hexagon_chain(int k) {
  std::vector<Cell> cells;
  for (int n = 0; n < k; ++n) {
    auto hex = hexagon_cells({2 + 4 * n, 2 - 2 * n});
    cells.insert(cells.end(), hex.begin(), hex.end());
  }
  return GridPolygon::from_cells(std::move(cells));
}

// Y-shaped tree of nine unit hexagons: three arms of lengths 3, 3, 2 meeting
// at a central hexagon, arm directions 120 degrees apart.
inline GridPolygon hexagon_tree9() {
  const int pos[9][2] = {{0, 0},  {1, 0},  {2, 0},  {3, 0}, {-1, 1},
                         {-2, 2}, {-3, 3}, {0, -1}, {0, -2}};
  std::vector<Cell> cells;
  for (auto [s, t] : pos) {
    auto hex = hexagon_cells({2 + 4 * s + 2 * t, 2 - 2 * s + 2 * t});
    cells.insert(cells.end(), hex.begin(), hex.end());
  }
  return GridPolygon::from_cells(std::move(cells));
}

}  // namespace shapes
