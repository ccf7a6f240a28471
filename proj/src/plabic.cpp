#include "tribill/plabic.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace tribill {

namespace {

std::string end_str(PlabicEnd e) {
  return (e.at_boundary ? "b" : "v") + std::to_string(e.idx);
}

}  // namespace

PlabicGraph::PlabicGraph(std::vector<PlabicVertex> vertices,
                         std::vector<PlabicEdge> edges,
                         std::vector<int> boundary_edges)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      boundary_edges_(std::move(boundary_edges)) {
  int nv = num_vertices();
  int ne = num_edges();
  int nb = num_boundary();

  auto check_end = [&](PlabicEnd e) {
    int limit = e.at_boundary ? nb : nv;
    if (e.idx < 0 || e.idx >= limit)
      throw Error("edge endpoint " + end_str(e) + " out of range");
  };
  std::vector<std::vector<int>> incident(nv);
  std::vector<int> boundary_degree(nb, 0);
  for (int e = 0; e < ne; ++e) {
    check_end(edges_[e].a);
    check_end(edges_[e].b);
    if (edges_[e].a == edges_[e].b)
      throw Error("edge " + std::to_string(e) + " is a loop");
    for (PlabicEnd end : {edges_[e].a, edges_[e].b}) {
      if (end.at_boundary)
        ++boundary_degree[end.idx];
      else
        incident[end.idx].push_back(e);
    }
  }
  for (int v = 0; v < nv; ++v) {
    if (incident[v].size() != 3)
      throw NonTrivalentError("vertex v" + std::to_string(v) + " has degree " +
                              std::to_string(incident[v].size()));
    std::vector<int> cw = vertices_[v].cw;
    std::sort(cw.begin(), cw.end());
    std::sort(incident[v].begin(), incident[v].end());
    if (cw != incident[v])
      throw Error("clockwise edge order at v" + std::to_string(v) +
                  " does not match its incident edges");
  }
  for (int b = 0; b < nb; ++b) {
    if (boundary_degree[b] != 1)
      throw Error("boundary point b" + std::to_string(b) + " has degree " +
                  std::to_string(boundary_degree[b]));
    int e = boundary_edges_[b];
    if (e < 0 || e >= ne ||
        (edges_[e].a != at_boundary(b) && edges_[e].b != at_boundary(b)))
      throw Error("boundary point b" + std::to_string(b) +
                  " not on its listed edge");
  }
}

Trip PlabicGraph::trip(int i) const {
  if (i < 0 || i >= num_boundary())
    throw Error("boundary index " + std::to_string(i) + " out of range");
  Trip t;
  int e = boundary_edges_[i];
  t.path.push_back(e);
  PlabicEnd here = edges_[e].a == at_boundary(i) ? edges_[e].b : edges_[e].a;
  std::size_t guard = 2 * edges_.size();
  while (!here.at_boundary) {
    const PlabicVertex& v = vertices_[here.idx];
    int pos = static_cast<int>(
        std::find(v.cw.begin(), v.cw.end(), e) - v.cw.begin());
    int deg = static_cast<int>(v.cw.size());
    // Right turn at black: previous edge clockwise; left turn at white: next.
    e = v.color == VColor::Black ? v.cw[(pos + deg - 1) % deg]
                                 : v.cw[(pos + 1) % deg];
    t.path.push_back(e);
    here = edges_[e].a == at_vertex(here.idx) ? edges_[e].b : edges_[e].a;
    if (t.path.size() > guard)
      throw ConsistencyError("trip from b" + std::to_string(i) +
                             " failed to terminate");
  }
  t.to = here.idx;
  return t;
}

Permutation PlabicGraph::trip_permutation() const {
  std::vector<int> next(num_boundary());
  for (int i = 0; i < num_boundary(); ++i) next[i] = trip(i).to;
  return Permutation(std::move(next));
}

std::string PlabicGraph::to_json() const {
  nlohmann::json j;
  j["schema"] = "plabic-v1";
  j["vertices"] = nlohmann::json::array();
  for (const PlabicVertex& v : vertices_)
    j["vertices"].push_back({{"color", color_name(v.color)}, {"cw", v.cw}});
  j["edges"] = nlohmann::json::array();
  for (const PlabicEdge& e : edges_)
    j["edges"].push_back({end_str(e.a), end_str(e.b)});
  j["boundary"] = boundary_edges_;
  return j.dump(2) + "\n";
}

std::string PlabicGraph::to_dot() const {
  std::ostringstream out;
  out << "graph plabic {\n";
  out << "  layout=neato;\n";
  for (int v = 0; v < num_vertices(); ++v) {
    bool black = vertices_[v].color == VColor::Black;
    out << "  v" << v << " [shape=circle label=\"\" width=0.15 style=filled"
        << " fillcolor=" << (black ? "black" : "white") << "];\n";
  }
  for (int b = 0; b < num_boundary(); ++b)
    out << "  b" << b << " [shape=plaintext label=\"" << b + 1 << "\"];\n";
  for (const PlabicEdge& e : edges_)
    out << "  " << end_str(e.a) << " -- " << end_str(e.b) << ";\n";
  out << "}\n";
  return out.str();
}

PlabicGraph PlabicGraph::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("bad plabic json: ") + e.what());
  }
  try {
    if (j.at("schema").get<std::string>() != "plabic-v1")
      throw Error("unknown plabic schema");
    std::vector<PlabicVertex> vertices;
    for (const auto& jv : j.at("vertices")) {
      PlabicVertex v;
      std::string color = jv.at("color").get<std::string>();
      if (color != "black" && color != "white")
        throw Error("bad vertex color: " + color);
      v.color = color == "black" ? VColor::Black : VColor::White;
      v.cw = jv.at("cw").get<std::vector<int>>();
      vertices.push_back(std::move(v));
    }
    auto parse_end = [](const std::string& s) {
      if (s.size() < 2 || (s[0] != 'v' && s[0] != 'b'))
        throw Error("bad edge endpoint: " + s);
      std::size_t used = 0;
      int idx = std::stoi(s.substr(1), &used);
      if (used + 1 != s.size()) throw Error("bad edge endpoint: " + s);
      return PlabicEnd{s[0] == 'b', idx};
    };
    std::vector<PlabicEdge> edges;
    for (const auto& je : j.at("edges")) {
      if (!je.is_array() || je.size() != 2) throw Error("bad edge record");
      edges.push_back({parse_end(je[0].get<std::string>()),
                       parse_end(je[1].get<std::string>())});
    }
    auto boundary = j.at("boundary").get<std::vector<int>>();
    return PlabicGraph(std::move(vertices), std::move(edges),
                       std::move(boundary));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad plabic json: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error("bad plabic json: malformed endpoint");
  }
}

PlabicGraph dual(const GridPolygon& p) {
  const std::vector<Cell>& cells = p.cells();
  std::map<Cell, int> vid;
  std::vector<PlabicVertex> vertices(cells.size());
  for (std::size_t k = 0; k < cells.size(); ++k) {
    vid[cells[k]] = static_cast<int>(k);
    vertices[k].color = cells[k].o == Orient::U ? VColor::Black : VColor::White;
  }

  std::vector<PlabicEdge> edges;
  std::map<Pane, int> pane_edge;
  for (Pane q : p.interior_panes()) {
    auto [u, d] = pane_cells(q);
    pane_edge[q] = static_cast<int>(edges.size());
    edges.push_back({at_vertex(vid.at(u)), at_vertex(vid.at(d))});
  }
  std::vector<int> boundary_edges;
  for (std::size_t k = 0; k < p.boundary().size(); ++k) {
    Pane q = p.boundary()[k];
    pane_edge[q] = static_cast<int>(edges.size());
    boundary_edges.push_back(static_cast<int>(edges.size()));
    edges.push_back(
        {at_vertex(vid.at(p.inner_cell(q))), at_boundary(static_cast<int>(k))});
  }

  // Clockwise around either cell's center, its three panes always come in
  // type order H, R, L, so sorting the panes gives the embedding directly.
  for (std::size_t k = 0; k < cells.size(); ++k) {
    auto panes = cell_panes(cells[k]);
    std::sort(panes.begin(), panes.end());
    for (Pane q : panes) vertices[k].cw.push_back(pane_edge.at(q));
  }
  return PlabicGraph(std::move(vertices), std::move(edges),
                     std::move(boundary_edges));
}

}  // namespace tribill
