#include "tribill/grid.hpp"

#include <cstdio>
#include <cstring>
#include <stdexcept>

namespace tribill {

Pane pane_from_endpoints(DPoint p, DPoint q) {
  DPoint d = q - p;
  if (d.a < 0 || (d.a == 0 && d.b < 0)) {
    std::swap(p, q);
    d = -d;
  }
  assert(p.a % 2 == 0 && p.b % 2 == 0 && q.a % 2 == 0 && q.b % 2 == 0);
  if (d == DPoint{2, 0}) return {PType::H, p.a / 2, p.b / 2};
  if (d == DPoint{0, 2}) return {PType::R, p.a / 2, p.b / 2};
  if (d == DPoint{2, -2}) return {PType::L, (q.a - 2) / 2, q.b / 2};
  throw std::invalid_argument("pane_from_endpoints: not a unit lattice segment");
}

std::array<Cell, 6> cells_around_vertex(DPoint v) {
  assert(v.a % 2 == 0 && v.b % 2 == 0);
  int i = v.a / 2, j = v.b / 2;
  return {Cell{i, j, Orient::U},         Cell{i - 1, j, Orient::D},
          Cell{i - 1, j, Orient::U},     Cell{i - 1, j - 1, Orient::D},
          Cell{i, j - 1, Orient::U},     Cell{i, j - 1, Orient::D}};
}

Dir dir_from_vec(DPoint v) {
  for (int d = 0; d < 6; ++d) {
    DPoint u = dir_vec(static_cast<Dir>(d));
    // positive multiple test
    long long cross = static_cast<long long>(u.a) * v.b - static_cast<long long>(u.b) * v.a;
    long long dot = static_cast<long long>(u.a) * v.a + static_cast<long long>(u.b) * v.b;
    if (cross == 0 && dot > 0) return static_cast<Dir>(d);
  }
  throw std::invalid_argument("dir_from_vec: not aligned with a lattice direction");
}

Dir reflect_dir(Dir d, PType mirror) {
  assert(parallel_ptype(d) != mirror);
  // mirror line angles: H = 0, R = 60, L = 120 degrees; reflection maps angle
  // theta to 2 * line - theta.
  int line = mirror == PType::H ? 0 : (mirror == PType::R ? 60 : 120);
  int angle = ((2 * line - dir_angle(d)) % 360 + 360) % 360;
  switch (angle) {
    case 0: return Dir::E;
    case 60: return Dir::NE;
    case 120: return Dir::NW;
    case 180: return Dir::W;
    case 240: return Dir::SW;
    default: return Dir::SE;
  }
}

const char* dir_name(Dir d) {
  switch (d) {
    case Dir::E: return "E";
    case Dir::NE: return "NE";
    case Dir::NW: return "NW";
    case Dir::W: return "W";
    case Dir::SW: return "SW";
    default: return "SE";
  }
}

SegRel segment_relation(DPoint p1, DPoint q1, DPoint p2, DPoint q2) {
  int d1 = orient2(p1, q1, p2);
  int d2 = orient2(p1, q1, q2);
  int d3 = orient2(p2, q2, p1);
  int d4 = orient2(p2, q2, q1);

  if (d1 == 0 && d2 == 0) {
    // collinear: overlap iff the 1-d ranges meet
    bool meet = on_segment(p1, q1, p2) || on_segment(p1, q1, q2) ||
                on_segment(p2, q2, p1) || on_segment(p2, q2, q1);
    return meet ? SegRel::CollinearOverlap : SegRel::Disjoint;
  }
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return SegRel::Touch;
  if (d1 == 0 && on_segment(p1, q1, p2)) return SegRel::Touch;
  if (d2 == 0 && on_segment(p1, q1, q2)) return SegRel::Touch;
  if (d3 == 0 && on_segment(p2, q2, p1)) return SegRel::Touch;
  if (d4 == 0 && on_segment(p2, q2, q1)) return SegRel::Touch;
  return SegRel::Disjoint;
}

namespace {

// Cell centroids scaled by six stay integral: U(i,j) -> (6i+2, 6j+2) and
// D(i,j) -> (6i+4, 6j+4). The point group permutes these residues.
DPoint centroid6(Cell c) {
  int off = c.o == Orient::U ? 2 : 4;
  return {6 * c.i + off, 6 * c.j + off};
}

Cell cell_from_centroid6(DPoint p) {
  int ra = ((p.a % 6) + 6) % 6;
  int rb = ((p.b % 6) + 6) % 6;
  assert(ra == rb && (ra == 2 || ra == 4));
  Orient o = ra == 2 ? Orient::U : Orient::D;
  return {(p.a - ra) / 6, (p.b - rb) / 6, o};
}

}  // namespace

Cell Symmetry::apply(Cell c) const {
  DPoint img = apply_vec(centroid6(c));
  img.a += 3 * t.a;
  img.b += 3 * t.b;
  return cell_from_centroid6(img);
}

Pane Symmetry::apply(Pane p) const {
  auto e = p.endpoints();
  return pane_from_endpoints(apply(e[0]), apply(e[1]));
}

Symmetry Symmetry::after(const Symmetry& g) const {
  Symmetry r;
  r.lin = {lin[0] * g.lin[0] + lin[1] * g.lin[2], lin[0] * g.lin[1] + lin[1] * g.lin[3],
           lin[2] * g.lin[0] + lin[3] * g.lin[2], lin[2] * g.lin[1] + lin[3] * g.lin[3]};
  r.t = apply_vec(g.t) + t;
  return r;
}

Symmetry Symmetry::inverse() const {
  int d = det();
  assert(d == 1 || d == -1);
  Symmetry r;
  r.lin = {d * lin[3], -d * lin[1], -d * lin[2], d * lin[0]};
  r.t = -r.apply_vec(t);
  return r;
}

Symmetry Symmetry::rotation(int sixths) {
  sixths = ((sixths % 6) + 6) % 6;
  Symmetry m;                        // 60 degrees: e1 -> e2, e2 -> e2 - e1
  const Symmetry r60{{0, -1, 1, 1}, {0, 0}};
  for (int k = 0; k < sixths; ++k) m = r60.after(m);
  return m;
}

Pane pane_from_str(const std::string& s) {
  PType t;
  switch (s.empty() ? '\0' : s[0]) {
    case 'H': t = PType::H; break;
    case 'R': t = PType::R; break;
    case 'L': t = PType::L; break;
    default:
      throw std::invalid_argument("pane selector must start with H, R or L: \"" + s + "\"");
  }
  const char* body = s.c_str() + 1;
  int i = 0, j = 0, used = -1;
  if (std::sscanf(body, "(%d ,%d )%n", &i, &j, &used) == 2 &&
      used == static_cast<int>(std::strlen(body)))
    return {t, i, j};
  used = -1;
  if (std::sscanf(body, ",%d ,%d%n", &i, &j, &used) == 2 &&
      used == static_cast<int>(std::strlen(body)))
    return {t, i, j};
  throw std::invalid_argument("cannot parse pane selector \"" + s + "\"; use T(i,j) with T in {H,R,L}");
}

Symmetry Symmetry::reflection() { return {{1, 1, 0, -1}, {0, 0}}; }

const std::array<Symmetry, 12>& Symmetry::point_group() {
  static const std::array<Symmetry, 12> g = [] {
    std::array<Symmetry, 12> a;
    for (int k = 0; k < 6; ++k) {
      a[k] = rotation(k);
      a[6 + k] = rotation(k).after(reflection());
    }
    return a;
  }();
  return g;
}

}  // namespace tribill
