// Planar bicolored graphs in a disc and their rules-of-the-road trips.
//
// A PlabicGraph stores internal vertices (each colored black or white, with
// its incident edges listed in clockwise cyclic order) and marked boundary
// points b*_1..b*_n in clockwise order, each hanging off one edge.  A trip
// enters the disc at a boundary point and walks edge to edge, turning right
// at black vertices and left at white ones; following all trips gives the
// trip permutation of the graph.
//
// dual() builds the plabic graph of a grid polygon: a black vertex per
// up cell, a white vertex per down cell, an edge across every interior
// pane, and a boundary point per boundary pane.  Its trip permutation
// always coincides with the billiards permutation of the polygon, which
// makes it an independent cross-check for the beam tracer.
#pragma once

#include <string>
#include <vector>

#include "tribill/billiards.hpp"
#include "tribill/polygon.hpp"

namespace tribill {

enum class VColor { Black, White };

inline const char* color_name(VColor c) {
  return c == VColor::Black ? "black" : "white";
}

// One end of an edge: either internal vertex #idx or boundary point #idx.
struct PlabicEnd {
  bool at_boundary = false;
  int idx = 0;

  friend bool operator==(PlabicEnd, PlabicEnd) = default;
};

inline PlabicEnd at_vertex(int idx) { return {false, idx}; }
inline PlabicEnd at_boundary(int idx) { return {true, idx}; }

struct PlabicEdge {
  PlabicEnd a, b;

  friend bool operator==(PlabicEdge, PlabicEdge) = default;
};

struct PlabicVertex {
  VColor color = VColor::Black;
  std::vector<int> cw;  // incident edge ids, clockwise cyclic order

  friend bool operator==(const PlabicVertex&, const PlabicVertex&) = default;
};

struct NonTrivalentError : Error {
  using Error::Error;
};

struct Trip {
  int to = 0;              // boundary point where the walk exits
  std::vector<int> path;   // edge ids in walk order
};

class PlabicGraph {
 public:
  // boundary_edges[k] is the edge carrying boundary point k; boundary points
  // are numbered clockwise.  Throws NonTrivalentError if an internal vertex
  // is not incident to exactly three edges, Error on inconsistent incidence
  // data (bad ids, loops, boundary points of degree != 1).
  PlabicGraph(std::vector<PlabicVertex> vertices, std::vector<PlabicEdge> edges,
              std::vector<int> boundary_edges);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_boundary() const { return static_cast<int>(boundary_edges_.size()); }
  const std::vector<PlabicVertex>& vertices() const { return vertices_; }
  const std::vector<PlabicEdge>& edges() const { return edges_; }
  const std::vector<int>& boundary_edges() const { return boundary_edges_; }

  // Walk into the disc from boundary point i (0-based): at each black vertex
  // leave by the edge immediately preceding the arrival edge in clockwise
  // order (a right turn), at each white vertex by the one immediately
  // following (a left turn); stop at the first boundary point reached.
  Trip trip(int i) const;

  // next[i] = trip(i).to over all boundary points.
  Permutation trip_permutation() const;

  std::string to_json() const;
  std::string to_dot() const;
  static PlabicGraph from_json(const std::string& text);

 private:
  std::vector<PlabicVertex> vertices_;
  std::vector<PlabicEdge> edges_;
  std::vector<int> boundary_edges_;
};

PlabicGraph dual(const GridPolygon& p);

}  // namespace tribill
