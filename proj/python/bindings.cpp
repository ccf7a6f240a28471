// Python module exposing the core operations: polygons, billiards analysis,
// plabic duals, enumeration, the verification suite, and SVG rendering.
// Cells cross the boundary as (i, j, "U"|"D") triples and panes as the
// "H(0,0)" strings printed everywhere else.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "tribill/billiards.hpp"
#include "tribill/enumerate.hpp"
#include "tribill/plabic.hpp"
#include "tribill/polygon.hpp"
#include "tribill/render.hpp"

namespace py = pybind11;
using namespace tribill;

namespace {

using CellTriple = std::tuple<int, int, std::string>;

Cell to_cell(const CellTriple& t) {
  const std::string& o = std::get<2>(t);
  if (o != "U" && o != "D")
    throw ParseError("cell orientation must be \"U\" or \"D\", got \"" + o + "\"");
  return {std::get<0>(t), std::get<1>(t), o == "U" ? Orient::U : Orient::D};
}

CellTriple from_cell(Cell c) {
  return {c.i, c.j, std::string(1, orient_char(c.o))};
}

std::vector<CellTriple> cell_triples(const GridPolygon& p) {
  std::vector<CellTriple> out;
  for (Cell c : p.cells()) out.push_back(from_cell(c));
  return out;
}

GridPolygon polygon_from_triples(const std::vector<CellTriple>& ts) {
  std::vector<Cell> cells;
  for (const CellTriple& t : ts) cells.push_back(to_cell(t));
  return GridPolygon::from_cells(std::move(cells));
}

CanonMode canon_mode(const std::string& name) {
  if (name == "fixed") return CanonMode::Fixed;
  if (name == "free") return CanonMode::Free;
  throw ParseError("mode must be \"fixed\" or \"free\", got \"" + name + "\"");
}

EnumMode enum_mode(const std::string& name) {
  return canon_mode(name) == CanonMode::Fixed ? EnumMode::Fixed : EnumMode::Free;
}

py::dict analysis_dict(const GridPolygon& p) {
  BilliardsAnalysis a = analyze(p);
  py::dict d;
  d["area"] = p.area();
  d["perim"] = p.perim();
  d["cyc"] = a.perm.cyc();
  d["cycle_type"] = a.perm.cycle_type();
  d["pi"] = a.perm.str();

  std::vector<std::vector<int>> cycles;
  for (const auto& cyc : a.perm.cycles()) {
    std::vector<int> one;
    for (int i : cyc) one.push_back(i + 1);  // 1-based like the printed form
    cycles.push_back(std::move(one));
  }
  d["cycles"] = cycles;

  std::vector<std::string> panes;
  for (Pane q : p.boundary()) panes.push_back(q.str());
  d["panes"] = panes;

  py::list trajs;
  for (const Trajectory& t : a.trajectories) {
    py::dict traj;
    traj["length2"] = t.length2;
    traj["triangular"] = t.is_triangular();
    traj["orientation"] = std::string(orientation_name(t.orientation));
    trajs.append(traj);
  }
  d["trajectories"] = trajs;
  return d;
}

py::dict report_dict(const VerificationReport& rep) {
  py::dict d;
  d["max_area"] = rep.max_area;
  d["mode"] = std::string(mode_name(rep.mode));
  d["polygons"] = static_cast<long long>(rep.records.size());
  d["counts"] = rep.counts;
  d["clean"] = rep.clean();
  d["violated"] = rep.conjecture_violated();
  d["min_conj_slack"] = rep.min_conj_slack;
  d["conj_minimizers"] = rep.conj_minimizers;
  d["area_equality"] = rep.area_equality;
  py::dict viols;
  for (const auto& [check, offenders] : rep.violations)
    viols[py::str(check)] = offenders;
  d["violations"] = viols;
  return d;
}

}  // namespace

PYBIND11_MODULE(_tribill, m) {
  m.doc() = "Exact billiards on triangular-grid polygons";

  py::register_exception<Error>(m, "Error");

  py::class_<GridPolygon>(m, "Polygon")
      .def(py::init([](const std::vector<CellTriple>& cells) {
             return polygon_from_triples(cells);
           }),
           py::arg("cells"))
      .def_static(
          "from_json",
          [](const std::string& text) { return polygon_from_json(text); },
          py::arg("text"))
      .def("to_json", [](const GridPolygon& p) { return polygon_to_json(p); })
      .def_property_readonly("area", &GridPolygon::area)
      .def_property_readonly("perim", &GridPolygon::perim)
      .def("cells", [](const GridPolygon& p) { return cell_triples(p); })
      .def("boundary",
           [](const GridPolygon& p) {
             std::vector<std::string> out;
             for (Pane q : p.boundary()) out.push_back(q.str());
             return out;
           })
      .def("is_primitive", &GridPolygon::is_primitive)
      .def("canonical",
           [](const GridPolygon& p, const std::string& mode) {
             return canonical_form(p, canon_mode(mode));
           },
           py::arg("mode") = "free")
      .def("__eq__",
           [](const GridPolygon& a, const GridPolygon& b) { return a == b; })
      .def("__hash__",
           [](const GridPolygon& p) { return canonical_hash(p); })
      .def("__repr__", [](const GridPolygon& p) {
        return "Polygon(area=" + std::to_string(p.area()) +
               ", perim=" + std::to_string(p.perim()) + ")";
      });

  m.def("billiards_permutation",
        [](const GridPolygon& p) {
          Permutation pi = billiards_permutation(p);
          std::vector<int> next;
          for (int i = 0; i < pi.size(); ++i) next.push_back(pi.next(i));
          return next;
        },
        py::arg("polygon"),
        "0-based successor array of the billiards permutation");

  m.def("analyze", &analysis_dict, py::arg("polygon"),
        "Full billiards analysis as a dict (1-based cycle labels)");

  m.def("trip_permutation",
        [](const GridPolygon& p) {
          Permutation pi = dual(p).trip_permutation();
          std::vector<int> next;
          for (int i = 0; i < pi.size(); ++i) next.push_back(pi.next(i));
          return next;
        },
        py::arg("polygon"),
        "0-based trip permutation of the dual plabic graph");

  m.def("plabic_json",
        [](const GridPolygon& p) { return dual(p).to_json(); },
        py::arg("polygon"));
  m.def("plabic_dot", [](const GridPolygon& p) { return dual(p).to_dot(); },
        py::arg("polygon"));

  m.def("glue",
        [](const GridPolygon& a, const std::string& pane_a,
           const GridPolygon& b, const std::string& pane_b) {
          return glue(a, pane_from_str(pane_a), b, pane_from_str(pane_b));
        },
        py::arg("first"), py::arg("first_pane"), py::arg("second"),
        py::arg("second_pane"),
        "Join two polygons, identifying the named boundary panes");

  m.def("enumerate_polyiamonds",
        [](int max_area, const std::string& mode, int threads) {
          return enumerate_polyiamonds(max_area, enum_mode(mode), threads);
        },
        py::arg("max_area"), py::arg("mode") = "free", py::arg("threads") = 1,
        "All polygons of area <= max_area in canonical form");

  m.def("verify",
        [](int max_area, const std::string& mode, int threads) {
          return report_dict(verify_suite(max_area, enum_mode(mode), threads));
        },
        py::arg("max_area"), py::arg("mode") = "free", py::arg("threads") = 1,
        "Run the structural check battery; returns the report as a dict");

  m.def("render_svg",
        [](const GridPolygon& p, double scale, bool trajectories, bool plabic) {
          RenderOptions opts;
          opts.scale = scale;
          opts.show_trajectories = trajectories;
          opts.show_plabic = plabic;
          return render_svg(p, opts);
        },
        py::arg("polygon"), py::arg("scale") = 40.0,
        py::arg("trajectories") = true, py::arg("plabic") = false);
}
