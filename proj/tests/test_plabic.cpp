#include "tribill/plabic.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "support/shapes.hpp"
#include "tribill/billiards.hpp"
#include "tribill/polygon.hpp"

using namespace tribill;

namespace {

Cell U(int i, int j) { return {i, j, Orient::U}; }

PlabicGraph swap_colors(const PlabicGraph& g) {
  auto vs = g.vertices();
  for (auto& v : vs)
    v.color = v.color == VColor::Black ? VColor::White : VColor::Black;
  return PlabicGraph(vs, g.edges(), g.boundary_edges());
}

// The two independent engines must produce the same permutation, and the
// reversed walk (colors swapped) must invert it, edge path reversed.
void check_against_billiards(const GridPolygon& p) {
  PlabicGraph g = dual(p);
  Permutation from_trips = g.trip_permutation();
  Permutation from_beams = billiards_permutation(p);
  CHECK(from_trips == from_beams);

  PlabicGraph rev = swap_colors(g);
  for (int i = 0; i < g.num_boundary(); ++i) {
    Trip fwd = g.trip(i);
    Trip back = rev.trip(fwd.to);
    CHECK(back.to == i);
    std::vector<int> reversed(fwd.path.rbegin(), fwd.path.rend());
    CHECK(back.path == reversed);
  }
}

// Standalone five-strand fixture: seven internal vertices, five boundary
// points, trip permutation (1 3 5 2 4).
PlabicGraph five_strand() {
  // v1..v5 = 0..4, c1 = 5, c2 = 6.
  // Edges: e0..e4 boundary stubs at v1..v5; e5 v1-c1, e6 v1-v5, e7 v2-v3,
  // e8 v2-c1, e9 v3-c2, e10 v4-v5, e11 v4-c2, e12 c1-c2.
  std::vector<PlabicVertex> vs = {
      {VColor::White, {0, 5, 6}},   // v1
      {VColor::White, {1, 7, 8}},   // v2
      {VColor::Black, {2, 9, 7}},   // v3
      {VColor::White, {3, 10, 11}}, // v4
      {VColor::Black, {4, 6, 10}},  // v5
      {VColor::Black, {5, 8, 12}},  // c1
      {VColor::White, {12, 9, 11}}, // c2
  };
  std::vector<PlabicEdge> es = {
      {at_vertex(0), at_boundary(0)}, {at_vertex(1), at_boundary(1)},
      {at_vertex(2), at_boundary(2)}, {at_vertex(3), at_boundary(3)},
      {at_vertex(4), at_boundary(4)}, {at_vertex(0), at_vertex(5)},
      {at_vertex(0), at_vertex(4)},   {at_vertex(1), at_vertex(2)},
      {at_vertex(1), at_vertex(5)},   {at_vertex(2), at_vertex(6)},
      {at_vertex(3), at_vertex(4)},   {at_vertex(3), at_vertex(6)},
      {at_vertex(5), at_vertex(6)},
  };
  return PlabicGraph(std::move(vs), std::move(es), {0, 1, 2, 3, 4});
}

}  // namespace

TEST_CASE("dual of the unit triangle") {
  PlabicGraph g = dual(unit_triangle());
  CHECK(g.num_vertices() == 1);
  CHECK(g.vertices()[0].color == VColor::Black);
  CHECK(g.num_boundary() == 3);
  CHECK(g.num_edges() == 3);
  // Right turn at the single black vertex: bottom pane exits on the L side.
  CHECK(g.trip(0).to == 2);
  CHECK(g.trip_permutation().str() == "(1 3 2)");
  check_against_billiards(unit_triangle());
}

TEST_CASE("dual of the unit rhombus") {
  GridPolygon rhomb = unit_rhombus();
  PlabicGraph g = dual(rhomb);
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_boundary() == 4);
  CHECK(g.num_edges() == 5);
  int internal = 0;
  for (const PlabicEdge& e : g.edges())
    if (!e.a.at_boundary && !e.b.at_boundary) ++internal;
  CHECK(internal == 1);
  int black = 0, white = 0;
  for (const auto& v : g.vertices())
    (v.color == VColor::Black ? black : white)++;
  CHECK(black == 1);
  CHECK(white == 1);
  CHECK(g.trip_permutation().str() == "(1 3 4 2)");
  check_against_billiards(rhomb);
}

TEST_CASE("dual of the unit hexagon") {
  GridPolygon hex = unit_hexagon();
  PlabicGraph g = dual(hex);
  CHECK(g.num_vertices() == 6);
  CHECK(g.num_boundary() == 6);
  CHECK(g.trip_permutation().cycle_type() == std::vector<int>{3, 3});
  check_against_billiards(hex);
}

TEST_CASE("trip permutations agree with beam tracing on assorted shapes") {
  check_against_billiards(shapes::hexagon_chain(2));
  check_against_billiards(shapes::hexagon_chain(4));
  check_against_billiards(shapes::hexagon_tree9());
  check_against_billiards(clipped_triangle16());

  auto cells = hexagon_cells({2, 2});
  cells.erase(std::remove(cells.begin(), cells.end(), U(1, 1)), cells.end());
  check_against_billiards(GridPolygon::from_cells(cells));

  check_against_billiards(GridPolygon::from_cells(
      {{0, 0, Orient::U}, {0, 0, Orient::D}, {1, 0, Orient::U}, {0, 1, Orient::U}}));
}

TEST_CASE("five-strand fixture reproduces its printed trips") {
  PlabicGraph g = five_strand();
  CHECK(g.trip(0).to == 2);  // b*_1 -> b*_3
  CHECK(g.trip(4).to == 1);  // b*_5 -> b*_2
  CHECK(g.trip_permutation().str() == "(1 3 5 2 4)");

  PlabicGraph rev = swap_colors(g);
  for (int i = 0; i < 5; ++i) CHECK(rev.trip(g.trip(i).to).to == i);
}

TEST_CASE("json export round-trips") {
  PlabicGraph g = dual(unit_rhombus());
  std::string s = g.to_json();
  CHECK(s.find("\"schema\": \"plabic-v1\"") != std::string::npos);
  PlabicGraph h = PlabicGraph::from_json(s);
  CHECK(h.to_json() == s);
  CHECK(h.trip_permutation() == g.trip_permutation());

  PlabicGraph tri = PlabicGraph::from_json(dual(unit_triangle()).to_json());
  CHECK(tri.num_vertices() == 1);
  CHECK(tri.num_boundary() == 3);

  std::string five = five_strand().to_json();
  CHECK(PlabicGraph::from_json(five).trip_permutation().str() == "(1 3 5 2 4)");
}

TEST_CASE("dot export lists nodes and edges") {
  std::string d = dual(unit_rhombus()).to_dot();
  CHECK(d.find("v0 [") != std::string::npos);
  CHECK(d.find("v1 [") != std::string::npos);
  CHECK(d.find("v2 [") == std::string::npos);
  CHECK(d.find("v0 -- v1;") != std::string::npos);
  int stubs = 0;
  for (std::size_t pos = 0; (pos = d.find("-- b", pos)) != std::string::npos; ++pos)
    ++stubs;
  CHECK(stubs == 4);
}

TEST_CASE("malformed graphs are rejected") {
  // Degree-2 internal vertex.
  CHECK_THROWS_AS(PlabicGraph({{VColor::Black, {0, 1}}},
                              {{at_vertex(0), at_boundary(0)},
                               {at_vertex(0), at_boundary(1)}},
                              {0, 1}),
                  NonTrivalentError);
  // Boundary point used twice.
  CHECK_THROWS_AS(PlabicGraph({{VColor::Black, {0, 1, 2}}},
                              {{at_vertex(0), at_boundary(0)},
                               {at_vertex(0), at_boundary(0)},
                               {at_vertex(0), at_boundary(1)}},
                              {0, 2}),
                  Error);
  // Loop edge.
  CHECK_THROWS_AS(PlabicGraph({{VColor::Black, {0, 0, 0}}},
                              {{at_vertex(0), at_vertex(0)}}, {}),
                  Error);
  // Clockwise list disagrees with incidence.
  CHECK_THROWS_AS(PlabicGraph({{VColor::Black, {0, 1, 1}}},
                              {{at_vertex(0), at_boundary(0)},
                               {at_vertex(0), at_boundary(1)},
                               {at_vertex(0), at_boundary(2)}},
                              {0, 1, 2}),
                  Error);

  CHECK_THROWS_AS(PlabicGraph::from_json("not json"), Error);
  CHECK_THROWS_AS(PlabicGraph::from_json("{\"schema\": \"plabic-v2\"}"), Error);
  CHECK_THROWS_AS(PlabicGraph::from_json("{}"), Error);
}
