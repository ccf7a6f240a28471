#pragma once

// Grid polygons: finite edge-connected, simply connected unions of lattice
// cells whose boundary is a single simple closed curve. Construction validates;
// a GridPolygon in hand is always well formed.

#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tribill/grid.hpp"

namespace tribill {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : Error {
  using Error::Error;
};
struct EmptyInputError : ValidationError {
  EmptyInputError() : ValidationError("polygon has no cells") {}
};
struct DuplicateCellError : ValidationError {
  explicit DuplicateCellError(Cell c) : ValidationError("duplicate cell " + c.str()) {}
};
struct DisconnectedError : ValidationError {
  DisconnectedError() : ValidationError("cells are not edge-connected") {}
};
struct HoleError : ValidationError {
  HoleError() : ValidationError("cell set encloses a hole") {}
};
struct PinchError : ValidationError {
  explicit PinchError(DPoint v)
      : ValidationError("boundary touches itself at vertex (" + std::to_string(v.a / 2) + "," +
                        std::to_string(v.b / 2) + ")"),
        vertex(v) {}
  DPoint vertex;
};
struct OverlapError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct ConsistencyError : Error {
  using Error::Error;
};

// Cheap validity check used by the enumerator's inner loops; from_cells gives
// the same verdicts as exceptions.
enum class CellsVerdict : std::uint8_t { Ok, Empty, Duplicate, Disconnected, Hole, Pinch };
CellsVerdict check_cells(const std::vector<Cell>& cells);

enum class CanonMode : std::uint8_t { Fixed, Free };

class GridPolygon {
 public:
  static GridPolygon from_cells(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }
  int area() const { return static_cast<int>(cells_.size()); }
  int perim() const { return static_cast<int>(boundary_.size()); }
  bool contains(Cell c) const { return cell_set_.count(c) != 0; }

  // Boundary panes as one clockwise walk starting at the smallest pane
  // (type H < R < L, then i, then j).
  const std::vector<Pane>& boundary() const { return boundary_; }
  std::optional<int> boundary_index(Pane p) const;

  // walk_vertex(k) is the vertex the walk reaches after traversing boundary
  // pane k; pane k runs walk_vertex(k-1) -> walk_vertex(k), indices mod perim.
  DPoint walk_vertex(int k) const { return walk_verts_[((k % perim()) + perim()) % perim()]; }
  Dir walk_dir(int k) const { return walk_dirs_[((k % perim()) + perim()) % perim()]; }
  // Clockwise-positive turn at the vertex between panes k and k+1, in degrees.
  int turn_at(int k) const;

  // The member cell adjacent to a boundary pane.
  Cell inner_cell(Pane p) const;

  std::vector<Pane> interior_panes() const;
  // Interior panes with both endpoints on the boundary.
  std::vector<Pane> cut_panes() const;
  bool is_primitive() const { return cut_panes().empty(); }

  // All lattice vertices of member cells; boundary flag per vertex.
  const std::unordered_set<DPoint, DPointHash>& boundary_vertices() const {
    return boundary_verts_;
  }

  friend bool operator==(const GridPolygon& p, const GridPolygon& q) {
    return p.cells_ == q.cells_;
  }

 private:
  GridPolygon() = default;
  void build_boundary();

  std::vector<Cell> cells_;  // sorted
  std::unordered_set<Cell, CellHash> cell_set_;
  std::vector<Pane> boundary_;
  std::unordered_map<Pane, int, PaneHash> boundary_pos_;
  std::vector<DPoint> walk_verts_;
  std::vector<Dir> walk_dirs_;
  std::unordered_set<DPoint, DPointHash> boundary_verts_;
};

// ---- canonical forms -----------------------------------------------------

// Fixed: translate so the smallest cell key lands on (0,0). Free: the smallest
// fixed form over the twelve point maps. Both are idempotent and constant on
// orbits of their group.
std::vector<Cell> canonical_cells(std::vector<Cell> cells, CanonMode mode);
GridPolygon canonical_form(const GridPolygon& p, CanonMode mode);

// Stable 64-bit digest of the free canonical cell list.
std::uint64_t canonical_hash(const GridPolygon& p);
std::string cells_key(const std::vector<Cell>& cells);  // "i,j,U;..." for maps
std::uint64_t key_hash(const std::string& key);         // FNV-1a of a cell key

// ---- surgery -------------------------------------------------------------

// Split along a cut pane; returns the two placed pieces (cells keep their
// coordinates). The piece containing the U-side cell of the pane comes first.
std::pair<GridPolygon, GridPolygon> split_at(const GridPolygon& p, Pane cut);

// Repeatedly cut along cut panes until every piece is primitive. Pieces are
// returned in free canonical form, sorted; the multiset does not depend on the
// order of cuts.
std::vector<GridPolygon> primitive_pieces(const GridPolygon& p);

// Attach p2 to p1 by a lattice symmetry carrying pane2 onto pane1 with the two
// interiors on opposite sides. Of the two candidate symmetries the
// orientation-preserving one is chosen. The images must meet exactly in the
// shared pane.
GridPolygon glue(const GridPolygon& p1, Pane pane1, const GridPolygon& p2, Pane pane2);

// ---- serialization -------------------------------------------------------

// One object {"cells": [[i, j, "U"|"D"], ...]}. Parsing rejects unknown keys
// and malformed entries with ParseError; duplicate cells and invalid shapes
// surface as the usual validation errors.
GridPolygon polygon_from_json(const std::string& text);
std::string polygon_to_json(const GridPolygon& p);

// ---- stock shapes --------------------------------------------------------

GridPolygon unit_triangle();                       // one up cell
GridPolygon unit_rhombus();                        // U(0,0) + D(0,0)
GridPolygon unit_hexagon();                        // six cells around p(1,1)
// Side-5 triangle with corner triangles of sides 2, 2, 1 removed: the
// area-16 primitive hexagon with side pattern 1,2,2,1,2,2 and three cycles.
GridPolygon clipped_triangle16();
std::vector<Cell> hexagon_cells(DPoint center);    // six cells around a vertex
bool is_tree_of_unit_hexagons(const GridPolygon& p);

}  // namespace tribill
