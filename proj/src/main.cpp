// Command-line front end. Every subcommand is a thin shell over the library:
// parsing, analysis, enumeration, verification, gluing and rendering all live
// in tribill_core and are unit-tested there.
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tribill/billiards.hpp"
#include "tribill/enumerate.hpp"
#include "tribill/plabic.hpp"
#include "tribill/polygon.hpp"
#include "tribill/render.hpp"

namespace {

using namespace tribill;

constexpr const char* kCsvColumns =
    "CSV columns: canonical_hash (16 hex digits of the free canonical form), "
    "area, perim, cyc, cycle_type (sizes joined by '+', largest first), "
    "slack_area = area-(6*cyc-6), slack_perim_thm = perim-(3.5*cyc-1.5), "
    "slack_perim_conj = perim-(4*cyc-2).";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

GridPolygon load_polygon(const std::string& path) {
  try {
    return polygon_from_json(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// Boundary labels shifted so that pane `start` becomes b_1.
Permutation rotate_labels(const Permutation& perm, int start) {
  int n = perm.size();
  std::vector<int> next(n);
  for (int i = 0; i < n; ++i) next[(i - start + n) % n] = (perm.next(i) - start + n) % n;
  return Permutation(std::move(next));
}

std::string analyze_json(const GridPolygon& p, int start, bool with_plabic) {
  BilliardsAnalysis a = analyze(p);
  int n = a.perm.size();
  Permutation shown = rotate_labels(a.perm, start);

  std::vector<int> cycle_of(n);
  for (std::size_t k = 0; k < a.perm.cycles().size(); ++k)
    for (int idx : a.perm.cycles()[k]) cycle_of[idx] = static_cast<int>(k);

  nlohmann::json cycles = nlohmann::json::array();
  nlohmann::json trajs = nlohmann::json::array();
  for (const std::vector<int>& sc : shown.cycles()) {
    nlohmann::json labels = nlohmann::json::array();
    for (int v : sc) labels.push_back(v + 1);
    cycles.push_back(std::move(labels));
    const Trajectory& t = a.trajectories[cycle_of[(sc.front() + start) % n]];
    nlohmann::json tj;
    tj["length2"] = t.length2;
    tj["triangular"] = t.is_triangular();
    if (t.orientation == TriangleOrientation::None)
      tj["orientation"] = nullptr;
    else
      tj["orientation"] = orientation_name(t.orientation);
    trajs.push_back(std::move(tj));
  }

  nlohmann::json panes = nlohmann::json::array();
  for (int l = 0; l < n; ++l) panes.push_back(p.boundary()[(start + l) % n].str());

  PolygonRecord rec = polygon_record(p);
  nlohmann::json j;
  j["area"] = p.area();
  j["perim"] = p.perim();
  j["cyc"] = shown.cyc();
  j["cycle_type"] = shown.cycle_type();
  j["cycles"] = std::move(cycles);
  j["pi"] = shown.str();
  j["panes"] = std::move(panes);
  j["trajectories"] = std::move(trajs);
  j["slack_area"] = rec.slack_area;
  j["slack_perim_conj"] = rec.slack_conj;
  if (with_plabic) {
    PlabicGraph g = dual(p);
    j["plabic"] = nlohmann::json::parse(g.to_json());
    j["trip_pi"] = rotate_labels(g.trip_permutation(), start).str();
  }
  return j.dump(2) + "\n";
}

int run_verify(const VerificationReport& rep, const std::string& report,
               const std::string& out_path) {
  write_out(out_path, report == "csv" ? rep.to_csv() : rep.to_json());
  if (!rep.clean()) {
    for (const auto& [name, list] : rep.violations)
      if (name != "conjecture-perim" && !list.empty()) {
        std::cerr << "theorem violation: check '" << name << "' fails on " << list.front()
                  << " (" << list.size() << " offender" << (list.size() == 1 ? "" : "s")
                  << ")\n";
        return 2;
      }
  }
  if (rep.conjecture_violated()) {
    std::cerr << "conjecture violated: min slack " << rep.min_conj_slack
              << ", counterexamples:\n";
    for (const std::string& key : rep.conj_minimizers) std::cerr << "  " << key << "\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact billiards in polygons on the triangular grid"};
  app.require_subcommand(1);

  std::string in_path, in_path2, out_path, pane_sel, pane_sel2, start_pane;
  std::string mode_str = "free", report = "";
  int max_area = 0, threads = 1;
  double scale = 40.0;
  bool plabic = false;

  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Billiards report for one polygon file (json)");
  analyze_cmd->add_option("input", in_path, "polygon json file")->required();
  analyze_cmd->add_option("--report", report, "json (default) or csv; " +
                          std::string(kCsvColumns))
      ->check(CLI::IsMember({"csv", "json"}));
  analyze_cmd->add_option("--start-pane", start_pane,
                          "boundary pane to label b_1, e.g. H(0,0); default: smallest");
  analyze_cmd->add_flag("--plabic", plabic, "attach the dual graph and its trip permutation");
  analyze_cmd->add_option("--out", out_path, "output path (default: stdout)");

  CLI::App* enum_cmd =
      app.add_subcommand("enumerate", "Stream one record per polygon up to --max-area");
  enum_cmd->add_option("--max-area", max_area, "largest area to enumerate")
      ->required()
      ->check(CLI::PositiveNumber);
  enum_cmd->add_option("--mode", mode_str, "fixed or free (default free)")
      ->check(CLI::IsMember({"fixed", "free"}));
  enum_cmd->add_option("--report", report, "csv (default) or json; " + std::string(kCsvColumns))
      ->check(CLI::IsMember({"csv", "json"}));
  enum_cmd->add_option("--threads", threads, "enumeration workers (default 1)")
      ->check(CLI::PositiveNumber);
  enum_cmd->add_option("--out", out_path, "output path (default: stdout)");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Run every structural check over all polygons up to --max-area");
  verify_cmd->add_option("--max-area", max_area, "largest area to sweep")
      ->required()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--mode", mode_str, "fixed or free (default free)")
      ->check(CLI::IsMember({"fixed", "free"}));
  verify_cmd->add_option("--report", report, "json (default) or csv; " + std::string(kCsvColumns))
      ->check(CLI::IsMember({"csv", "json"}));
  verify_cmd->add_option("--threads", threads, "worker threads (default 1)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", out_path, "output path (default: stdout)");
  verify_cmd->footer(
      "Exit codes: 0 all checks pass, 2 a theorem check fails, 3 the perimeter\n"
      "conjecture is violated (counterexamples on stderr), 1 bad input.");

  CLI::App* render_cmd = app.add_subcommand("render", "Draw a polygon file as SVG");
  render_cmd->add_option("input", in_path, "polygon json file")->required();
  render_cmd->add_option("--out", out_path, "output path (default: stdout)");
  render_cmd->add_option("--scale", scale, "pixels per pane (default 40)")
      ->check(CLI::PositiveNumber);
  render_cmd->add_flag("--plabic", plabic, "overlay the dual bicolored graph");

  CLI::App* glue_cmd = app.add_subcommand(
      "glue", "Join two polygon files along one pane each and write the union");
  glue_cmd->add_option("first", in_path, "first polygon json file")->required();
  glue_cmd->add_option("first-pane", pane_sel, "pane of the first polygon, e.g. H(0,0)")
      ->required();
  glue_cmd->add_option("second", in_path2, "second polygon json file")->required();
  glue_cmd->add_option("second-pane", pane_sel2, "pane of the second polygon")->required();
  glue_cmd->add_option("--out", out_path, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  EnumMode mode = mode_str == "fixed" ? EnumMode::Fixed : EnumMode::Free;
  try {
    if (analyze_cmd->parsed()) {
      GridPolygon p = load_polygon(in_path);
      int start = 0;
      if (!start_pane.empty()) {
        auto idx = p.boundary_index(pane_from_str(start_pane));
        if (!idx) throw Error("pane " + start_pane + " is not on the boundary");
        start = *idx;
      }
      if (report == "csv")
        write_out(out_path, records_to_csv({polygon_record(p)}));
      else
        write_out(out_path, analyze_json(p, start, plabic));
    } else if (enum_cmd->parsed()) {
      std::vector<GridPolygon> polys = enumerate_polyiamonds(max_area, mode, threads);
      if (report == "json") {
        std::vector<int> counts(max_area + 1, 0);
        for (const GridPolygon& p : polys) ++counts[p.area()];
        nlohmann::json j;
        j["max_area"] = max_area;
        j["mode"] = mode_name(mode);
        j["counts"] = counts;
        j["polygons"] = polys.size();
        write_out(out_path, j.dump(2) + "\n");
      } else {
        std::vector<PolygonRecord> recs;
        recs.reserve(polys.size());
        for (const GridPolygon& p : polys) recs.push_back(polygon_record(p));
        write_out(out_path, records_to_csv(recs));
      }
    } else if (verify_cmd->parsed()) {
      return run_verify(verify_suite(max_area, mode, threads), report, out_path);
    } else if (render_cmd->parsed()) {
      RenderOptions opts;
      opts.scale = scale;
      opts.show_plabic = plabic;
      write_out(out_path, render_svg(load_polygon(in_path), opts));
    } else if (glue_cmd->parsed()) {
      GridPolygon joined = glue(load_polygon(in_path), pane_from_str(pane_sel),
                                load_polygon(in_path2), pane_from_str(pane_sel2));
      write_out(out_path, polygon_to_json(joined));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
