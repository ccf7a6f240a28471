#include "tribill/polygon.hpp"

#include <algorithm>
#include <utility>

#include "json.hpp"

namespace tribill {

namespace {

struct CheckDetail {
  CellsVerdict verdict = CellsVerdict::Ok;
  DPoint pinch_vertex{0, 0};
  Cell dup{};
};

CheckDetail check_cells_impl(const std::vector<Cell>& cells) {
  if (cells.empty()) return {CellsVerdict::Empty};

  std::unordered_set<Cell, CellHash> set;
  for (Cell c : cells)
    if (!set.insert(c).second) return {CellsVerdict::Duplicate, {}, c};

  // edge connectivity
  std::vector<Cell> stack{cells[0]};
  std::unordered_set<Cell, CellHash> seen{cells[0]};
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    for (Pane p : cell_panes(c)) {
      Cell n = other_cell(p, c);
      if (set.count(n) && !seen.count(n)) {
        seen.insert(n);
        stack.push_back(n);
      }
    }
  }
  if (seen.size() != set.size()) return {CellsVerdict::Disconnected};

  // vertex fans: member cells around every used vertex form one cyclic arc
  std::unordered_set<DPoint, DPointHash> verts;
  for (Cell c : cells)
    for (DPoint v : c.vertices()) verts.insert(v);
  for (DPoint v : verts) {
    auto ring = cells_around_vertex(v);
    int members = 0;
    for (Cell c : ring) members += set.count(c) ? 1 : 0;
    if (members == 6) continue;
    int arcs = 0;
    for (int k = 0; k < 6; ++k) {
      bool cur = set.count(ring[k]) != 0;
      bool prev = set.count(ring[(k + 5) % 6]) != 0;
      if (cur && !prev) ++arcs;
    }
    if (arcs != 1) return {CellsVerdict::Pinch, v};
  }

  // Euler characteristic: V - E + F = 1 for a disc
  std::unordered_set<Pane, PaneHash> panes;
  for (Cell c : cells)
    for (Pane p : cell_panes(c)) panes.insert(p);
  long long chi = static_cast<long long>(verts.size()) - static_cast<long long>(panes.size()) +
                  static_cast<long long>(cells.size());
  if (chi != 1) return {CellsVerdict::Hole};

  return {CellsVerdict::Ok};
}

}  // namespace

CellsVerdict check_cells(const std::vector<Cell>& cells) {
  return check_cells_impl(cells).verdict;
}

GridPolygon GridPolygon::from_cells(std::vector<Cell> cells) {
  CheckDetail d = check_cells_impl(cells);
  switch (d.verdict) {
    case CellsVerdict::Ok: break;
    case CellsVerdict::Empty: throw EmptyInputError();
    case CellsVerdict::Duplicate: throw DuplicateCellError(d.dup);
    case CellsVerdict::Disconnected: throw DisconnectedError();
    case CellsVerdict::Hole: throw HoleError();
    case CellsVerdict::Pinch: throw PinchError(d.pinch_vertex);
  }
  GridPolygon p;
  std::sort(cells.begin(), cells.end());
  p.cells_ = std::move(cells);
  p.cell_set_.insert(p.cells_.begin(), p.cells_.end());
  p.build_boundary();
  return p;
}

void GridPolygon::build_boundary() {
  // boundary panes have exactly one member cell
  std::unordered_map<Pane, int, PaneHash> count;
  for (Cell c : cells_)
    for (Pane pn : cell_panes(c)) ++count[pn];

  std::unordered_map<DPoint, std::vector<Pane>, DPointHash> at_vertex;
  Pane start{};
  bool have_start = false;
  for (auto& [pn, n] : count) {
    if (n != 1) continue;
    for (DPoint v : pn.endpoints()) at_vertex[v].push_back(pn);
    if (!have_start || pn < start) {
      start = pn;
      have_start = true;
    }
  }
  assert(have_start);
  for (auto& [v, list] : at_vertex) {
    assert(list.size() == 2);
    boundary_verts_.insert(v);
  }

  // walk pane-to-pane through shared vertices
  std::vector<Pane> walk{start};
  std::vector<DPoint> verts;  // verts[k] = vertex after pane k
  DPoint cur = start.endpoints()[1];
  verts.push_back(cur);
  while (true) {
    auto& pair = at_vertex[cur];
    Pane next = pair[0] == walk.back() ? pair[1] : pair[0];
    if (next == start) break;
    walk.push_back(next);
    auto e = next.endpoints();
    cur = e[0] == cur ? e[1] : e[0];
    verts.push_back(cur);
  }
  assert(walk.size() == verts.size() && walk.size() >= 3);
  assert(cur == start.endpoints()[0]);

  // orient clockwise: shoelace in lattice coordinates shares its sign with the
  // Cartesian one
  long long twice_area = 0;
  for (size_t k = 0; k < verts.size(); ++k) {
    DPoint a = verts[k], b = verts[(k + 1) % verts.size()];
    twice_area += static_cast<long long>(a.a) * b.b - static_cast<long long>(a.b) * b.a;
  }
  assert(twice_area != 0);
  if (twice_area > 0) {
    // counterclockwise; flip, keeping the start pane first
    std::reverse(walk.begin() + 1, walk.end());
    std::reverse(verts.begin(), verts.end());
  }

  boundary_ = std::move(walk);
  walk_verts_ = std::move(verts);
  for (size_t k = 0; k < boundary_.size(); ++k) boundary_pos_[boundary_[k]] = static_cast<int>(k);

  walk_dirs_.resize(boundary_.size());
  for (size_t k = 0; k < boundary_.size(); ++k) {
    DPoint from = walk_verts_[(k + boundary_.size() - 1) % boundary_.size()];
    walk_dirs_[k] = dir_from_vec(walk_verts_[k] - from);
  }
}

std::optional<int> GridPolygon::boundary_index(Pane p) const {
  auto it = boundary_pos_.find(p);
  if (it == boundary_pos_.end()) return std::nullopt;
  return it->second;
}

int GridPolygon::turn_at(int k) const {
  int n = perim();
  int in = dir_angle(walk_dir(k));
  int out = dir_angle(walk_dir((k + 1) % n));
  int turn = in - out;  // clockwise positive
  while (turn > 180) turn -= 360;
  while (turn <= -180) turn += 360;
  return turn;
}

Cell GridPolygon::inner_cell(Pane p) const {
  auto cs = pane_cells(p);
  bool a = contains(cs[0]), b = contains(cs[1]);
  if (a == b) throw Error("pane " + p.str() + " is not a boundary pane");
  return a ? cs[0] : cs[1];
}

std::vector<Pane> GridPolygon::interior_panes() const {
  std::vector<Pane> out;
  for (Cell c : cells_) {
    if (c.o != Orient::U) continue;  // count each pane once, from its U side
    for (Pane pn : cell_panes(c))
      if (contains(other_cell(pn, c))) out.push_back(pn);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Pane> GridPolygon::cut_panes() const {
  std::vector<Pane> out;
  for (Pane pn : interior_panes()) {
    auto e = pn.endpoints();
    if (boundary_verts_.count(e[0]) && boundary_verts_.count(e[1])) out.push_back(pn);
  }
  return out;
}

// ---- canonical forms -----------------------------------------------------

std::vector<Cell> canonical_cells(std::vector<Cell> cells, CanonMode mode) {
  auto fixed = [](std::vector<Cell> cs) {
    Cell min = *std::min_element(cs.begin(), cs.end());
    for (Cell& c : cs) {
      c.i -= min.i;
      c.j -= min.j;
    }
    std::sort(cs.begin(), cs.end());
    return cs;
  };
  if (mode == CanonMode::Fixed) return fixed(std::move(cells));

  std::vector<Cell> best;
  for (const Symmetry& s : Symmetry::point_group()) {
    std::vector<Cell> img;
    img.reserve(cells.size());
    for (Cell c : cells) img.push_back(s.apply(c));
    img = fixed(std::move(img));
    if (best.empty() || img < best) best = std::move(img);
  }
  return best;
}

GridPolygon canonical_form(const GridPolygon& p, CanonMode mode) {
  return GridPolygon::from_cells(canonical_cells(p.cells(), mode));
}

std::string cells_key(const std::vector<Cell>& cells) {
  std::string s;
  for (Cell c : cells) {
    s += std::to_string(c.i);
    s += ',';
    s += std::to_string(c.j);
    s += ',';
    s += orient_char(c.o);
    s += ';';
  }
  return s;
}

std::uint64_t key_hash(const std::string& key) {
  std::uint64_t h = 14695981039346656037ULL;  // FNV-1a
  for (unsigned char ch : key) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t canonical_hash(const GridPolygon& p) {
  return key_hash(cells_key(canonical_cells(p.cells(), CanonMode::Free)));
}

// ---- surgery -------------------------------------------------------------

std::pair<GridPolygon, GridPolygon> split_at(const GridPolygon& p, Pane cut) {
  auto sides = pane_cells(cut);
  if (!p.contains(sides[0]) || !p.contains(sides[1]))
    throw Error("split_at: " + cut.str() + " is not an interior pane");

  // component of the U-side cell when crossing 'cut' is forbidden
  std::unordered_set<Cell, CellHash> comp{sides[0]};
  std::vector<Cell> stack{sides[0]};
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    for (Pane pn : cell_panes(c)) {
      if (pn == cut) continue;
      Cell n = other_cell(pn, c);
      if (p.contains(n) && !comp.count(n)) {
        comp.insert(n);
        stack.push_back(n);
      }
    }
  }
  if (comp.count(sides[1])) throw Error("split_at: " + cut.str() + " is not a cut pane");

  std::vector<Cell> first, second;
  for (Cell c : p.cells()) (comp.count(c) ? first : second).push_back(c);
  return {GridPolygon::from_cells(std::move(first)), GridPolygon::from_cells(std::move(second))};
}

std::vector<GridPolygon> primitive_pieces(const GridPolygon& p) {
  std::vector<GridPolygon> out, pending{p};
  while (!pending.empty()) {
    GridPolygon cur = std::move(pending.back());
    pending.pop_back();
    auto cuts = cur.cut_panes();
    if (cuts.empty()) {
      out.push_back(canonical_form(cur, CanonMode::Free));
      continue;
    }
    auto [a, b] = split_at(cur, cuts.front());
    pending.push_back(std::move(a));
    pending.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(),
            [](const GridPolygon& a, const GridPolygon& b) { return a.cells() < b.cells(); });
  return out;
}

GridPolygon glue(const GridPolygon& p1, Pane pane1, const GridPolygon& p2, Pane pane2) {
  Cell in1 = p1.inner_cell(pane1);  // also verifies pane1 is on the boundary
  Cell in2 = p2.inner_cell(pane2);
  Cell target = other_cell(pane1, in1);

  std::optional<Symmetry> pick;
  for (const Symmetry& lin : Symmetry::point_group()) {
    auto e2 = pane2.endpoints();
    std::array<DPoint, 2> img{lin.apply(e2[0]), lin.apply(e2[1])};
    auto e1 = pane1.endpoints();
    for (int swap = 0; swap < 2; ++swap) {
      DPoint t = e1[0] - img[swap];
      if (e1[1] - img[1 - swap] != t) continue;
      Symmetry g = Symmetry::translation(t).after(lin);
      assert(g.apply(pane2) == pane1);
      if (g.apply(in2) != target) continue;
      if (!pick || (!pick->orientation_preserving() && g.orientation_preserving())) pick = g;
    }
  }
  assert(pick);  // two candidates always exist, one per handedness

  std::vector<Cell> cells = p1.cells();
  std::unordered_set<Cell, CellHash> taken(cells.begin(), cells.end());
  for (Cell c : p2.cells()) {
    Cell img = pick->apply(c);
    if (taken.count(img)) throw OverlapError("glued images share cell " + img.str());
    cells.push_back(img);
  }

  GridPolygon result = GridPolygon::from_cells(std::move(cells));  // throws if pinched

  // the images must meet in the glue pane alone
  std::unordered_set<Pane, PaneHash> panes1;
  for (Cell c : p1.cells())
    for (Pane pn : cell_panes(c)) panes1.insert(pn);
  int shared = 0;
  for (Cell c : p2.cells())
    for (Pane pn : cell_panes(c)) {
      Pane img = pick->apply(pn);
      if (panes1.count(img)) {
        if (img != pane1) throw OverlapError("glued images also meet at pane " + img.str());
        ++shared;
      }
    }
  assert(shared >= 1);
  return result;
}

// ---- stock shapes --------------------------------------------------------

GridPolygon unit_triangle() { return GridPolygon::from_cells({{0, 0, Orient::U}}); }

GridPolygon unit_rhombus() {
  return GridPolygon::from_cells({{0, 0, Orient::U}, {0, 0, Orient::D}});
}

std::vector<Cell> hexagon_cells(DPoint center) {
  auto ring = cells_around_vertex(center);
  return {ring.begin(), ring.end()};
}

GridPolygon unit_hexagon() { return GridPolygon::from_cells(hexagon_cells({2, 2})); }

GridPolygon clipped_triangle16() {
  std::vector<Cell> cells;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j) {
      bool cut = i + j <= 1 || i >= 3 || j >= 4;  // the three removed corners
      if (!cut) cells.push_back({i, j, Orient::U});
      if (i + j <= 3 && i + j >= 1 && i < 3) cells.push_back({i, j, Orient::D});
    }
  return GridPolygon::from_cells(std::move(cells));
}

// ---- serialization -------------------------------------------------------

GridPolygon polygon_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid json: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("polygon file must be a json object");
  for (const auto& item : doc.items())
    if (item.key() != "cells") throw ParseError("unknown key \"" + item.key() + "\"");
  if (!doc.contains("cells")) throw ParseError("missing \"cells\" array");
  const nlohmann::json& arr = doc["cells"];
  if (!arr.is_array()) throw ParseError("\"cells\" must be an array");
  std::vector<Cell> cells;
  cells.reserve(arr.size());
  for (const nlohmann::json& e : arr) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_string())
      throw ParseError("each cell must be [i, j, \"U\"|\"D\"]");
    std::string o = e[2].get<std::string>();
    if (o != "U" && o != "D") throw ParseError("orientation must be \"U\" or \"D\", got \"" + o + "\"");
    cells.push_back({e[0].get<int>(), e[1].get<int>(), o == "U" ? Orient::U : Orient::D});
  }
  return GridPolygon::from_cells(std::move(cells));
}

std::string polygon_to_json(const GridPolygon& p) {
  std::string out = "{\"cells\": [";
  bool first = true;
  for (Cell c : p.cells()) {
    if (!first) out += ", ";
    first = false;
    out += "[" + std::to_string(c.i) + ", " + std::to_string(c.j) + ", \"" +
           orient_char(c.o) + "\"]";
  }
  return out + "]}\n";
}

bool is_tree_of_unit_hexagons(const GridPolygon& p) {
  static const std::vector<Cell> hex = canonical_cells(hexagon_cells({2, 2}), CanonMode::Free);
  for (const GridPolygon& piece : primitive_pieces(p))
    if (piece.cells() != hex) return false;
  return true;
}

}  // namespace tribill
