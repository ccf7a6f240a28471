#include <algorithm>
#include <vector>

#include "doctest.h"
#include "tribill/polygon.hpp"

using namespace tribill;

namespace {

Cell U(int i, int j) { return {i, j, Orient::U}; }
Cell D(int i, int j) { return {i, j, Orient::D}; }
Pane H(int i, int j) { return {PType::H, i, j}; }
Pane R(int i, int j) { return {PType::R, i, j}; }
Pane L(int i, int j) { return {PType::L, i, j}; }

// checks that hold for every valid polygon
void check_walk_invariants(const GridPolygon& p) {
  int n = p.perim();
  REQUIRE(n >= 3);
  int total = 0;
  for (int k = 0; k < n; ++k) {
    total += p.turn_at(k);
    // the walk chains up: pane k runs vertex(k-1) -> vertex(k)
    DPoint step = p.walk_vertex(k) - p.walk_vertex(k - 1);
    CHECK(dir_from_vec(step) == p.walk_dir(k));
    auto e = p.boundary()[k].endpoints();
    CHECK(((e[0] == p.walk_vertex(k - 1) && e[1] == p.walk_vertex(k)) ||
           (e[1] == p.walk_vertex(k - 1) && e[0] == p.walk_vertex(k))));
    // turn angle counts the member cells at the vertex
    int members = 0;
    for (Cell c : cells_around_vertex(p.walk_vertex(k)))
      if (p.contains(c)) ++members;
    CHECK(p.turn_at(k) == 180 - 60 * members);
    // boundary panes have their inner cell inside, the other outside
    Cell in = p.inner_cell(p.boundary()[k]);
    CHECK(p.contains(in));
    CHECK(!p.contains(other_cell(p.boundary()[k], in)));
    CHECK(p.boundary_index(p.boundary()[k]) == k);
  }
  CHECK(total == 360);
  // every pane of every cell is either boundary or interior
  auto interior = p.interior_panes();
  for (Cell c : p.cells())
    for (Pane pn : cell_panes(c)) {
      bool is_interior = std::find(interior.begin(), interior.end(), pn) != interior.end();
      CHECK(is_interior == !p.boundary_index(pn).has_value());
    }
  CHECK(2 * static_cast<int>(interior.size()) + n == 3 * p.area());
}

}  // namespace

TEST_CASE("construction validates") {
  CHECK_THROWS_AS(GridPolygon::from_cells({}), EmptyInputError);
  CHECK_THROWS_AS(GridPolygon::from_cells({U(0, 0), U(0, 0)}), DuplicateCellError);
  CHECK_THROWS_AS(GridPolygon::from_cells({U(0, 0), U(2, 0)}), DisconnectedError);
  CHECK(check_cells({U(0, 0)}) == CellsVerdict::Ok);
  CHECK(check_cells({}) == CellsVerdict::Empty);
  CHECK(check_cells({U(0, 0), D(5, 5)}) == CellsVerdict::Disconnected);
}

TEST_CASE("pinch detection") {
  // a chain of cells curling around p(1,1) and touching itself there
  std::vector<Cell> chain = {U(1, 1), D(1, 1), U(2, 1), D(2, 0),  U(2, 0),
                             D(2, -1), U(2, -1), D(1, -1), U(1, -1), U(1, 0)};
  CHECK(check_cells(chain) == CellsVerdict::Pinch);
  try {
    GridPolygon::from_cells(chain);
    FAIL("expected PinchError");
  } catch (const PinchError& e) {
    CHECK(e.vertex == DPoint{2, 2});
  }
}

TEST_CASE("hole detection") {
  // twelve cells ringed around U(0,0)
  std::vector<Cell> ring = {D(0, -1), D(-1, 0), D(0, 0),  U(-1, 0), D(-1, -1), U(0, -1),
                            U(1, -1), D(1, -1), U(1, 0),  U(0, 1),  D(-1, 1),  U(-1, 1)};
  CHECK(check_cells(ring) == CellsVerdict::Hole);
  CHECK_THROWS_AS(GridPolygon::from_cells(ring), HoleError);
  // filling the hole makes it valid
  ring.push_back(U(0, 0));
  CHECK(check_cells(ring) == CellsVerdict::Ok);
  check_walk_invariants(GridPolygon::from_cells(ring));
}

TEST_CASE("unit triangle boundary walk") {
  GridPolygon tri = unit_triangle();
  CHECK(tri.area() == 1);
  CHECK(tri.perim() == 3);
  CHECK(tri.boundary() == std::vector<Pane>{H(0, 0), R(0, 0), L(0, 0)});
  CHECK(tri.walk_dir(0) == Dir::W);
  CHECK(tri.walk_dir(1) == Dir::NE);
  CHECK(tri.walk_dir(2) == Dir::SE);
  CHECK(tri.walk_vertex(0) == DPoint{0, 0});
  CHECK(tri.walk_vertex(1) == DPoint{0, 2});
  CHECK(tri.walk_vertex(2) == DPoint{2, 0});
  for (int k = 0; k < 3; ++k) CHECK(tri.turn_at(k) == 120);
  CHECK(tri.interior_panes().empty());
  CHECK(tri.is_primitive());
  check_walk_invariants(tri);
}

TEST_CASE("unit rhombus boundary walk") {
  GridPolygon rh = unit_rhombus();
  CHECK(rh.area() == 2);
  CHECK(rh.perim() == 4);
  CHECK(rh.boundary() == std::vector<Pane>{H(0, 0), R(0, 0), H(0, 1), R(1, 0)});
  CHECK(rh.walk_dir(0) == Dir::W);
  CHECK(rh.walk_dir(1) == Dir::NE);
  CHECK(rh.walk_dir(2) == Dir::E);
  CHECK(rh.walk_dir(3) == Dir::SW);
  CHECK(rh.turn_at(0) == 120);
  CHECK(rh.turn_at(1) == 60);
  CHECK(rh.turn_at(2) == 120);
  CHECK(rh.turn_at(3) == 60);
  CHECK(rh.interior_panes() == std::vector<Pane>{L(0, 0)});
  CHECK(rh.cut_panes() == std::vector<Pane>{L(0, 0)});
  CHECK(!rh.is_primitive());
  check_walk_invariants(rh);
}

TEST_CASE("unit hexagon boundary walk") {
  GridPolygon hex = unit_hexagon();
  CHECK(hex.area() == 6);
  CHECK(hex.perim() == 6);
  CHECK(hex.boundary() ==
        std::vector<Pane>{H(0, 2), L(1, 1), R(2, 0), H(1, 0), L(0, 0), R(0, 1)});
  for (int k = 0; k < 6; ++k) CHECK(hex.turn_at(k) == 60);
  CHECK(hex.interior_panes() ==
        std::vector<Pane>{H(0, 1), H(1, 1), R(1, 0), R(1, 1), L(0, 1), L(1, 0)});
  CHECK(hex.cut_panes().empty());
  CHECK(hex.is_primitive());
  CHECK(is_tree_of_unit_hexagons(hex));
  check_walk_invariants(hex);
}

TEST_CASE("inner cell wants a boundary pane") {
  GridPolygon hex = unit_hexagon();
  CHECK(hex.inner_cell(H(1, 0)) == U(1, 0));
  CHECK(hex.inner_cell(R(2, 0)) == D(1, 0));
  CHECK_THROWS_AS(hex.inner_cell(H(0, 1)), Error);   // interior
  CHECK_THROWS_AS(hex.inner_cell(H(9, 9)), Error);   // nowhere near
}

TEST_CASE("canonical forms") {
  // fixed form: translate the smallest cell key to the origin
  std::vector<Cell> rh = {D(3, -2), U(3, -2)};
  CHECK(canonical_cells(rh, CanonMode::Fixed) == std::vector<Cell>{U(0, 0), D(0, 0)});

  // free form is invariant under every lattice symmetry
  std::vector<Cell> shapes[] = {
      {U(0, 0)},
      {U(0, 0), D(0, 0)},
      hexagon_cells({2, 2}),
      {U(0, 0), D(0, 0), U(1, 0), D(1, 0)},      // strip
      {U(0, 0), D(0, 0), U(0, 1), D(0, -1)},     // no symmetry at all
  };
  for (const auto& cells : shapes) {
    auto base = canonical_cells(cells, CanonMode::Free);
    for (const Symmetry& s : Symmetry::point_group()) {
      Symmetry g = Symmetry::translation({4, -6}).after(s);
      std::vector<Cell> img;
      for (Cell c : cells) img.push_back(g.apply(c));
      CHECK(canonical_cells(img, CanonMode::Free) == base);
    }
  }

  // hashes separate shapes and ignore placement
  GridPolygon tri = unit_triangle(), rhp = unit_rhombus();
  CHECK(canonical_hash(tri) != canonical_hash(rhp));
  GridPolygon moved = GridPolygon::from_cells({U(7, -3), D(7, -3)});
  CHECK(canonical_hash(moved) == canonical_hash(rhp));
}

TEST_CASE("split and primitive pieces") {
  GridPolygon rh = unit_rhombus();
  auto [a, b] = split_at(rh, L(0, 0));
  CHECK(a.cells() == std::vector<Cell>{U(0, 0)});  // the up side comes first
  CHECK(b.cells() == std::vector<Cell>{D(0, 0)});
  CHECK_THROWS_AS(split_at(rh, H(0, 0)), Error);  // boundary pane, not a cut

  auto pieces = primitive_pieces(rh);
  CHECK(pieces.size() == 2);
  CHECK(pieces[0].cells() == std::vector<Cell>{U(0, 0)});
  CHECK(pieces[1].cells() == std::vector<Cell>{U(0, 0)});

  CHECK(primitive_pieces(unit_hexagon()).size() == 1);
}

TEST_CASE("two hexagons joined through one pane") {
  auto cells = hexagon_cells({2, 2});
  auto more = hexagon_cells({6, 0});
  cells.insert(cells.end(), more.begin(), more.end());
  GridPolygon two = GridPolygon::from_cells(cells);
  CHECK(two.area() == 12);
  CHECK(two.perim() == 10);
  CHECK(two.cut_panes() == std::vector<Pane>{R(2, 0)});
  CHECK(is_tree_of_unit_hexagons(two));
  auto pieces = primitive_pieces(two);
  CHECK(pieces.size() == 2);
  check_walk_invariants(two);

  // gluing builds the same shape
  GridPolygon glued = glue(unit_hexagon(), R(2, 0), unit_hexagon(), R(0, 1));
  CHECK(canonical_hash(glued) == canonical_hash(two));
}

TEST_CASE("gluing places the piece on the far side") {
  GridPolygon tri = unit_triangle();
  GridPolygon rh = glue(tri, H(0, 0), tri, H(0, 0));
  CHECK(rh.area() == 2);
  CHECK(rh.contains(U(0, 0)));
  CHECK(rh.contains(D(0, -1)));
  CHECK(canonical_hash(rh) == canonical_hash(unit_rhombus()));

  // an orientation-preserving placement is preferred
  GridPolygon rr = glue(unit_rhombus(), H(0, 0), unit_rhombus(), H(0, 0));
  CHECK(rr.area() == 4);
  CHECK(rr.contains(U(0, -1)));
  CHECK(!rr.contains(U(1, -1)));
  check_walk_invariants(rr);
}

TEST_CASE("gluing refuses extra contact") {
  // a hexagon missing one cell; filling the notch touches two panes at once
  auto cells = hexagon_cells({2, 2});
  std::erase(cells, U(1, 1));
  GridPolygon notch = GridPolygon::from_cells(cells);
  CHECK(notch.area() == 5);
  check_walk_invariants(notch);
  CHECK_THROWS_AS(glue(notch, H(1, 1), unit_triangle(), H(0, 0)), OverlapError);
}

TEST_CASE("cells come back sorted") {
  GridPolygon p = GridPolygon::from_cells({D(0, 0), U(1, 0), U(0, 0), D(1, 0)});
  CHECK(std::is_sorted(p.cells().begin(), p.cells().end()));
  CHECK(p.contains(U(1, 0)));
  CHECK(!p.contains(U(2, 0)));
}

TEST_CASE("json round trip") {
  GridPolygon hex = unit_hexagon();
  std::string text = polygon_to_json(hex);
  CHECK(text.find("\"cells\"") != std::string::npos);
  CHECK(text.back() == '\n');
  GridPolygon back = polygon_from_json(text);
  CHECK(back == hex);

  CHECK(polygon_from_json("{\"cells\": [[0, 0, \"U\"]]}") == unit_triangle());
  CHECK(polygon_from_json("{\"cells\": [[2, -1, \"D\"], [2, -1, \"U\"]]}").area() == 2);
}

TEST_CASE("json parsing rejects malformed input") {
  CHECK_THROWS_AS(polygon_from_json("not json"), ParseError);
  CHECK_THROWS_AS(polygon_from_json("[[0, 0, \"U\"]]"), ParseError);
  CHECK_THROWS_AS(polygon_from_json("{}"), ParseError);
  CHECK_THROWS_AS(polygon_from_json("{\"cells\": 3}"), ParseError);
  CHECK_THROWS_AS(polygon_from_json("{\"cells\": [[0, 0, \"U\"]], \"extra\": 1}"), ParseError);
  CHECK_THROWS_AS(polygon_from_json("{\"cells\": [[0, 0]]}"), ParseError);
  CHECK_THROWS_AS(polygon_from_json("{\"cells\": [[0, 0, \"X\"]]}"), ParseError);
  CHECK_THROWS_AS(polygon_from_json("{\"cells\": [[0.5, 0, \"U\"]]}"), ParseError);
  CHECK_THROWS_AS(polygon_from_json("{\"cells\": [[0, 0, \"U\", 4]]}"), ParseError);
  // shape problems keep their usual error types
  CHECK_THROWS_AS(polygon_from_json("{\"cells\": []}"), EmptyInputError);
  CHECK_THROWS_AS(polygon_from_json("{\"cells\": [[0, 0, \"U\"], [0, 0, \"U\"]]}"),
                  DuplicateCellError);
  CHECK_THROWS_AS(polygon_from_json("{\"cells\": [[0, 0, \"U\"], [5, 5, \"U\"]]}"),
                  DisconnectedError);
}
