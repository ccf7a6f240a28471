#pragma once

// Triangular lattice primitives. Points live in doubled coordinates: the pair
// (a, b) stands for (a/2)*e1 + (b/2)*e2 with e1 = (1, 0) and e2 = (1/2, sqrt(3)/2).
// Lattice vertices have both coordinates even; pane midpoints pick up odd entries.
// Everything downstream (cells, panes, beams, symmetries) stays in integers.

#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

namespace tribill {

struct DPoint {
  int a = 0;
  int b = 0;

  friend DPoint operator+(DPoint p, DPoint q) { return {p.a + q.a, p.b + q.b}; }
  friend DPoint operator-(DPoint p, DPoint q) { return {p.a - q.a, p.b - q.b}; }
  DPoint operator-() const { return {-a, -b}; }
  friend bool operator==(DPoint, DPoint) = default;
  friend auto operator<=>(DPoint, DPoint) = default;

  // Cartesian embedding; only the renderer should need floating point.
  double x() const { return a * 0.5 + b * 0.25; }
  double y() const { return b * 0.43301270189221932; }  // sqrt(3)/4
};

inline DPoint lattice_vertex(int i, int j) { return {2 * i, 2 * j}; }

enum class Orient : std::uint8_t { U, D };
enum class PType : std::uint8_t { H, R, L };  // ordering H < R < L is load-bearing

inline char orient_char(Orient o) { return o == Orient::U ? 'U' : 'D'; }
inline char ptype_char(PType t) { return t == PType::H ? 'H' : (t == PType::R ? 'R' : 'L'); }

// Up cell U(i,j): vertices p(i,j), p(i+1,j), p(i,j+1).
// Down cell D(i,j): vertices p(i+1,j), p(i,j+1), p(i+1,j+1).
struct Cell {
  int i = 0;
  int j = 0;
  Orient o = Orient::U;

  friend bool operator==(Cell, Cell) = default;
  friend auto operator<=>(Cell lhs, Cell rhs) {
    if (auto c = lhs.i <=> rhs.i; c != 0) return c;
    if (auto c = lhs.j <=> rhs.j; c != 0) return c;
    return lhs.o <=> rhs.o;
  }

  std::array<DPoint, 3> vertices() const {
    if (o == Orient::U)
      return {lattice_vertex(i, j), lattice_vertex(i + 1, j), lattice_vertex(i, j + 1)};
    return {lattice_vertex(i + 1, j), lattice_vertex(i, j + 1), lattice_vertex(i + 1, j + 1)};
  }

  std::string str() const {
    return std::string(1, orient_char(o)) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
};

// Panes (unit lattice segments):
//   H(i,j) joins p(i,j)-p(i+1,j), R(i,j) joins p(i,j)-p(i,j+1),
//   L(i,j) joins p(i+1,j)-p(i,j+1).
struct Pane {
  PType t = PType::H;
  int i = 0;
  int j = 0;

  friend bool operator==(Pane, Pane) = default;
  friend auto operator<=>(Pane lhs, Pane rhs) {
    if (auto c = lhs.t <=> rhs.t; c != 0) return c;
    if (auto c = lhs.i <=> rhs.i; c != 0) return c;
    return lhs.j <=> rhs.j;
  }

  std::array<DPoint, 2> endpoints() const {
    switch (t) {
      case PType::H: return {lattice_vertex(i, j), lattice_vertex(i + 1, j)};
      case PType::R: return {lattice_vertex(i, j), lattice_vertex(i, j + 1)};
      default: return {lattice_vertex(i + 1, j), lattice_vertex(i, j + 1)};
    }
  }

  DPoint midpoint() const {
    switch (t) {
      case PType::H: return {2 * i + 1, 2 * j};
      case PType::R: return {2 * i, 2 * j + 1};
      default: return {2 * i + 1, 2 * j + 1};
    }
  }

  std::string str() const {
    return std::string(1, ptype_char(t)) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
};

// The two cells flanking a pane, U-side first.
inline std::array<Cell, 2> pane_cells(Pane p) {
  switch (p.t) {
    case PType::H: return {Cell{p.i, p.j, Orient::U}, Cell{p.i, p.j - 1, Orient::D}};
    case PType::R: return {Cell{p.i, p.j, Orient::U}, Cell{p.i - 1, p.j, Orient::D}};
    default: return {Cell{p.i, p.j, Orient::U}, Cell{p.i, p.j, Orient::D}};
  }
}

inline std::array<Pane, 3> cell_panes(Cell c) {
  if (c.o == Orient::U)
    return {Pane{PType::H, c.i, c.j}, Pane{PType::R, c.i, c.j}, Pane{PType::L, c.i, c.j}};
  return {Pane{PType::L, c.i, c.j}, Pane{PType::R, c.i + 1, c.j}, Pane{PType::H, c.i, c.j + 1}};
}

// Each cell has exactly one pane of each type.
inline Pane pane_of_type(Cell c, PType t) {
  if (c.o == Orient::U) return {t, c.i, c.j};
  switch (t) {
    case PType::H: return {PType::H, c.i, c.j + 1};
    case PType::R: return {PType::R, c.i + 1, c.j};
    default: return {PType::L, c.i, c.j};
  }
}

inline Cell other_cell(Pane p, Cell c) {
  auto cs = pane_cells(p);
  assert(c == cs[0] || c == cs[1]);
  return c == cs[0] ? cs[1] : cs[0];
}

// Reconstruct a pane from its two endpoints (doubled, even coordinates).
Pane pane_from_endpoints(DPoint p, DPoint q);

// Inverse of Pane::str(): "H(0,0)", "R(2,-1)"; also accepts "H,0,0".
// Throws std::invalid_argument on anything else.
Pane pane_from_str(const std::string& s);

// The six cells incident to a lattice vertex, in counterclockwise cyclic order
// starting with the up cell to the east-northeast.
std::array<Cell, 6> cells_around_vertex(DPoint v);

// ---- directions ----------------------------------------------------------

enum class Dir : std::uint8_t { E, NE, NW, W, SW, SE };

inline DPoint dir_vec(Dir d) {
  switch (d) {
    case Dir::E: return {2, 0};
    case Dir::NE: return {0, 2};
    case Dir::NW: return {-2, 2};
    case Dir::W: return {-2, 0};
    case Dir::SW: return {0, -2};
    default: return {2, -2};
  }
}

inline Dir dir_opposite(Dir d) { return static_cast<Dir>((static_cast<int>(d) + 3) % 6); }

// Direction angle in degrees (E = 0, counterclockwise positive).
inline int dir_angle(Dir d) {
  switch (d) {
    case Dir::E: return 0;
    case Dir::NE: return 60;
    case Dir::NW: return 120;
    case Dir::W: return 180;
    case Dir::SW: return 240;
    default: return 300;
  }
}

Dir dir_from_vec(DPoint v);  // v must be a positive multiple of a unit direction

// Pane type a direction runs parallel to.
inline PType parallel_ptype(Dir d) {
  switch (d) {
    case Dir::E:
    case Dir::W: return PType::H;
    case Dir::NE:
    case Dir::SW: return PType::R;
    default: return PType::L;
  }
}

inline PType third_ptype(PType a, PType b) {
  assert(a != b);
  return static_cast<PType>(3 - static_cast<int>(a) - static_cast<int>(b));
}

// Mirror a travel direction across the line of a pane type. The direction must
// not be parallel to the pane.
Dir reflect_dir(Dir d, PType mirror);

const char* dir_name(Dir d);

// ---- exact planar predicates --------------------------------------------

// Sign of the cross product (q - p) x (r - p), computed in lattice coordinates.
// The Cartesian embedding has positive determinant, so the sign agrees with the
// usual counterclockwise test in the plane.
inline int orient2(DPoint p, DPoint q, DPoint r) {
  long long v = static_cast<long long>(q.a - p.a) * (r.b - p.b) -
                static_cast<long long>(q.b - p.b) * (r.a - p.a);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

inline bool on_segment(DPoint p, DPoint q, DPoint r) {
  // r collinear with pq assumed; checks the bounding box
  return std::min(p.a, q.a) <= r.a && r.a <= std::max(p.a, q.a) &&
         std::min(p.b, q.b) <= r.b && r.b <= std::max(p.b, q.b);
}

enum class SegRel : std::uint8_t { Disjoint, Touch, CollinearOverlap };

// Closed-segment relation. Touch covers proper crossings and single-point
// contacts; CollinearOverlap means the segments share a collinear stretch or
// abut end to end on a common line.
SegRel segment_relation(DPoint p1, DPoint q1, DPoint p2, DPoint q2);

// ---- lattice symmetries --------------------------------------------------

// An isometry of the lattice: x -> lin * x + t, with lin one of the twelve
// integer matrices fixing the origin (six rotations, six reflections) and t an
// even translation. Stored row-major as {m00, m01, m10, m11}.
struct Symmetry {
  std::array<int, 4> lin{1, 0, 0, 1};
  DPoint t{0, 0};

  friend bool operator==(const Symmetry&, const Symmetry&) = default;

  int det() const { return lin[0] * lin[3] - lin[1] * lin[2]; }
  bool orientation_preserving() const { return det() == 1; }

  DPoint apply_vec(DPoint v) const {
    return {lin[0] * v.a + lin[1] * v.b, lin[2] * v.a + lin[3] * v.b};
  }
  DPoint apply(DPoint p) const { return apply_vec(p) + t; }
  Cell apply(Cell c) const;
  Pane apply(Pane p) const;

  // Composition: (*this) after g.
  Symmetry after(const Symmetry& g) const;
  Symmetry inverse() const;

  static Symmetry identity() { return {}; }
  static Symmetry translation(DPoint t) { return {{1, 0, 0, 1}, t}; }
  static Symmetry rotation(int sixths);  // counterclockwise by 60 * sixths degrees
  static Symmetry reflection();          // across the horizontal axis
  // The twelve linear maps fixing the origin, rotations first.
  static const std::array<Symmetry, 12>& point_group();
};

// ---- hashing -------------------------------------------------------------

inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

struct CellHash {
  std::size_t operator()(Cell c) const {
    std::uint64_t h = 1469598103934665603ULL;
    h = hash_mix(h, static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.i)));
    h = hash_mix(h, static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.j)));
    h = hash_mix(h, static_cast<std::uint64_t>(c.o));
    return static_cast<std::size_t>(h);
  }
};

struct PaneHash {
  std::size_t operator()(Pane p) const {
    std::uint64_t h = 1099511628211ULL;
    h = hash_mix(h, static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.i)));
    h = hash_mix(h, static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.j)));
    h = hash_mix(h, static_cast<std::uint64_t>(p.t));
    return static_cast<std::size_t>(h);
  }
};

struct DPointHash {
  std::size_t operator()(DPoint p) const {
    std::uint64_t h = 14695981039346656037ULL;
    h = hash_mix(h, static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.a)));
    h = hash_mix(h, static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.b)));
    return static_cast<std::size_t>(h);
  }
};

}  // namespace tribill
