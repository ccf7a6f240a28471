#include "tribill/render.hpp"

#include <array>
#include <cstdio>
#include <cstring>
#include <set>

#include "tribill/billiards.hpp"

namespace tribill {

namespace {

std::array<DPoint, 3> cell_corners(Cell c) {
  if (c.o == Orient::U)
    return {lattice_vertex(c.i, c.j), lattice_vertex(c.i + 1, c.j),
            lattice_vertex(c.i, c.j + 1)};
  return {lattice_vertex(c.i + 1, c.j), lattice_vertex(c.i, c.j + 1),
          lattice_vertex(c.i + 1, c.j + 1)};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  if (std::strcmp(buf, "-0.000") == 0) return "0.000";
  return buf;
}

// Doubled lattice -> pixels, with the y axis flipped for screen coordinates.
struct Frame {
  double minx, maxy, scale, margin;

  std::string x(double v) const { return num(margin + (v - minx) * scale); }
  std::string y(double v) const { return num(margin + (maxy - v) * scale); }
  std::string x(DPoint p) const { return x(p.x()); }
  std::string y(DPoint p) const { return y(p.y()); }
};

void line(std::string& out, const Frame& f, DPoint a, DPoint b) {
  out += "    <line x1=\"" + f.x(a) + "\" y1=\"" + f.y(a) + "\" x2=\"" + f.x(b) +
         "\" y2=\"" + f.y(b) + "\"/>\n";
}

void line(std::string& out, const Frame& f, double ax, double ay, double bx, double by) {
  out += "    <line x1=\"" + f.x(ax) + "\" y1=\"" + f.y(ay) + "\" x2=\"" + f.x(bx) +
         "\" y2=\"" + f.y(by) + "\"/>\n";
}

struct Centroid {
  double x, y;
};

Centroid centroid(Cell c) {
  auto v = cell_corners(c);
  return {(v[0].x() + v[1].x() + v[2].x()) / 3.0, (v[0].y() + v[1].y() + v[2].y()) / 3.0};
}

}  // namespace

std::string render_svg(const GridPolygon& p, const RenderOptions& opts) {
  if (!(opts.scale > 0)) throw Error("render scale must be positive");
  if (opts.palette.empty()) throw Error("render palette must not be empty");

  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool first = true;
  for (Cell c : p.cells())
    for (DPoint v : cell_corners(c)) {
      if (first || v.x() < minx) minx = v.x();
      if (first || v.x() > maxx) maxx = v.x();
      if (first || v.y() < miny) miny = v.y();
      if (first || v.y() > maxy) maxy = v.y();
      first = false;
    }
  Frame f{minx, maxy, opts.scale, opts.margins};
  std::string w = num((maxx - minx) * opts.scale + 2 * opts.margins);
  std::string h = num((maxy - miny) * opts.scale + 2 * opts.margins);

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w +
                    "\" height=\"" + h + "\" viewBox=\"0 0 " + w + " " + h + "\">\n";

  std::set<Pane> panes;
  for (Cell c : p.cells())
    for (Pane q : cell_panes(c)) panes.insert(q);
  out += "  <g class=\"cells\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (Pane q : panes) {
    auto e = q.endpoints();
    line(out, f, e[0], e[1]);
  }
  out += "  </g>\n";

  const std::vector<Pane>& boundary = p.boundary();
  out += "  <path class=\"boundary\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\" d=\"";
  for (int k = 0; k < static_cast<int>(boundary.size()); ++k)
    out += (k == 0 ? "M " : " L ") + f.x(p.walk_vertex(k)) + " " + f.y(p.walk_vertex(k));
  out += " Z\"/>\n";

  if (opts.show_trajectories) {
    BilliardsAnalysis a = analyze(p);
    out += "  <g class=\"trajectories\" fill=\"none\" stroke-width=\"1.5\">\n";
    for (std::size_t t = 0; t < a.trajectories.size(); ++t) {
      out += "  <g class=\"trajectory\" stroke=\"" +
             opts.palette[t % opts.palette.size()] + "\">\n";
      for (const BeamChord& seg : a.trajectories[t].segments) line(out, f, seg.a, seg.b);
      out += "  </g>\n";
    }
    out += "  </g>\n";
  }

  if (opts.show_plabic) {
    out += "  <g class=\"plabic\">\n";
    out += "  <g class=\"dual-edges\" stroke=\"#555555\" stroke-width=\"1\">\n";
    for (Pane q : p.interior_panes()) {
      auto cs = pane_cells(q);
      Centroid a = centroid(cs[0]), b = centroid(cs[1]);
      line(out, f, a.x, a.y, b.x, b.y);
    }
    out += "  </g>\n";
    out += "  <g class=\"stubs\" stroke=\"#555555\" stroke-width=\"1\">\n";
    for (Pane q : boundary) {
      Centroid a = centroid(p.inner_cell(q));
      DPoint m = q.midpoint();
      line(out, f, a.x, a.y, m.x(), m.y());
    }
    out += "  </g>\n";
    std::string r = num(opts.scale * 0.12);
    out += "  <g class=\"vertices\" stroke=\"#000000\" stroke-width=\"1\">\n";
    for (Cell c : p.cells()) {
      Centroid a = centroid(c);
      out += "    <circle cx=\"" + f.x(a.x) + "\" cy=\"" + f.y(a.y) + "\" r=\"" + r +
             "\" fill=\"" + (c.o == Orient::U ? "#000000" : "#ffffff") + "\"/>\n";
    }
    out += "  </g>\n";
    out += "  </g>\n";
  }

  out += "</svg>\n";
  return out;
}

}  // namespace tribill
