// Frozen reference polygons for the acceptance checks. The two pinned
// samples have known billiards permutations; the expected strings live here
// as literals on purpose — they anchor the tracer against regressions and
// must never be regenerated from the library itself.
#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "tribill/polygon.hpp"

namespace fixtures {

using namespace tribill;

inline GridPolygon from_key(const std::string& key) {
  std::vector<Cell> cells;
  std::stringstream ss(key);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    if (tok.empty()) continue;
    int i = 0, j = 0;
    char o = 'U';
    if (std::sscanf(tok.c_str(), "%d,%d,%c", &i, &j, &o) != 3 ||
        (o != 'U' && o != 'D'))
      throw ParseError("bad fixture token: " + tok);
    cells.push_back({i, j, o == 'U' ? Orient::U : Orient::D});
  }
  return GridPolygon::from_cells(std::move(cells));
}

// 9-cell wedge whose boundary walk starts at H(0,0). Do not retranslate:
// the permutation below is tied to this exact placement.
inline GridPolygon sample9() {
  return from_key(
      "0,-1,D;1,-2,D;1,-1,U;1,-1,D;2,-2,U;2,-2,D;2,-1,U;2,-1,D;2,0,U;");
}
inline const char* kSample9Pi = "(1 7 4 3 5 9)(2 6 8)";

// 69-cell polygon with 33 boundary panes and 4 trajectories; note the notch
// at row 8 (no D cell between 8,-5,U and 8,-4,U).
inline GridPolygon sample69() {
  return from_key(
      "0,-3,D;0,-2,U;0,-2,D;0,-1,U;0,-1,D;"
      "1,-4,D;1,-3,U;1,-3,D;1,-2,U;1,-2,D;1,-1,U;"
      "2,-5,U;2,-5,D;2,-4,U;2,-4,D;2,-3,U;"
      "3,-6,D;3,-5,U;3,-5,D;3,-4,U;3,-4,D;"
      "4,-6,U;4,-6,D;4,-5,U;4,-5,D;4,-4,U;4,-3,D;4,-2,U;4,-2,D;4,-1,U;4,-1,D;"
      "5,-6,U;5,-6,D;5,-5,U;5,-5,D;5,-4,U;5,-4,D;5,-3,U;5,-3,D;5,-2,U;5,-2,D;"
      "5,-1,U;5,-1,D;"
      "6,-6,U;6,-6,D;6,-5,U;6,-5,D;6,-4,U;6,-4,D;6,-3,U;6,-3,D;6,-2,U;6,-2,D;"
      "6,-1,U;"
      "7,-7,D;7,-6,U;7,-6,D;7,-5,U;7,-5,D;7,-4,U;7,-4,D;7,-3,U;7,-3,D;"
      "8,-6,U;8,-6,D;8,-5,U;8,-4,U;8,-4,D;8,-3,U;");
}
inline const char* kSample69Pi =
    "(1 3 32 26 6 30 2 33 25 12 14 9 21 19 29 28 4 31)"
    "(5 24 13 10 20 27)(7 22 23 15 17)(8 11 18 16)";

// Two primitive perimeter-18 polygons whose billiards systems have five
// cycles, so perim == 4 cyc - 2 holds with zero slack for both. Neither is a
// tree of unit hexagons, which makes them the interesting tight cases of the
// perimeter bound.

// Corner-clipped triangle: side-9 triangle with corners of sides 1, 4, 4
// removed. Convex; area 48.
inline GridPolygon perim18_witness_a() {
  const int s = 9, c1 = 1, c2 = 4, c3 = 4;
  std::vector<Cell> cells;
  for (int i = 0; i < s; ++i)
    for (int j = 0; i + j < s; ++j) {
      if (i + j >= c1 && i <= s - 1 - c2 && j <= s - 1 - c3)
        cells.push_back({i, j, Orient::U});
      if (i + j <= s - 2 && i + j >= c1 - 1 && i <= s - 1 - c2 &&
          j <= s - 1 - c3)
        cells.push_back({i, j, Orient::D});
    }
  return GridPolygon::from_cells(std::move(cells));
}

// Non-convex sibling of witness A: same area, perimeter, and cycle type, but
// the two lowest rows are sheared one step east.
inline GridPolygon perim18_witness_b() {
  return from_key(
      "0,0,D;0,1,U;0,1,D;0,2,U;0,2,D;0,3,U;0,3,D;0,4,U;0,4,D;"
      "1,-1,D;1,0,U;1,0,D;1,1,U;1,1,D;1,2,U;1,2,D;1,3,U;1,3,D;1,4,U;"
      "2,-2,D;2,-1,U;2,-1,D;2,0,U;2,0,D;2,1,U;2,1,D;2,2,U;2,2,D;2,3,U;"
      "3,-2,U;3,-2,D;3,-1,U;3,-1,D;3,0,U;3,0,D;3,1,U;3,1,D;3,2,U;3,2,D;"
      "4,-2,U;4,-2,D;4,-1,U;4,-1,D;4,0,U;4,0,D;4,1,U;4,1,D;4,2,U;");
}

}  // namespace fixtures
