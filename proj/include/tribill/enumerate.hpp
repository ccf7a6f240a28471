// Exhaustive enumeration of grid polygons and the verification harness.
//
// enumerate_polyiamonds walks every grid polygon up to a given area exactly
// once (up to translation, or up to all twelve lattice symmetries).
// verify_suite runs the full battery of structural checks over an
// enumeration: the billiards/plabic permutation agreement, the area and
// perimeter lower bounds with their equality characterization, the bound on
// intersecting triangular trajectories, shoreline accounting, the cycle
// count bound for primitive shapes, and cut additivity.  The perimeter
// conjecture perim >= 4 cyc - 2 is recorded rather than asserted: its
// minimum slack and minimizers are reported, and a negative slack is
// surfaced loudly instead of failing the suite.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tribill/billiards.hpp"
#include "tribill/polygon.hpp"

namespace tribill {

enum class EnumMode : std::uint8_t { Fixed, Free };

inline const char* mode_name(EnumMode m) {
  return m == EnumMode::Fixed ? "fixed" : "free";
}

// Streams each polygon in canonical form, in a deterministic depth-first
// order. Throws Error if max_area < 1.
void enumerate_polyiamonds(int max_area, EnumMode mode,
                           const std::function<void(const GridPolygon&)>& sink);
// Collected and sorted by (area, cell key); threads > 1 splits the walk by
// seed-cell subtrees, with identical output.
std::vector<GridPolygon> enumerate_polyiamonds(int max_area, EnumMode mode,
                                               int threads = 1);

struct PolygonRecord {
  std::string cells;            // canonical cell key
  std::uint64_t hash = 0;       // key_hash of `cells`
  int area = 0;
  int perim = 0;
  int cyc = 0;
  std::vector<int> cycle_type;  // largest first
  int slack_area = 0;           // area - (6 cyc - 6)
  int slack2_perim = 0;         // 2 perim - (7 cyc - 3): exact, doubled
  int slack_conj = 0;           // perim - (4 cyc - 2)
};

PolygonRecord polygon_record(const GridPolygon& p);
std::string records_to_csv(const std::vector<PolygonRecord>& records);

struct SuiteFailure : Error {
  SuiteFailure(const std::string& check_, const std::string& cells_)
      : Error("verification check '" + check_ + "' failed on " + cells_),
        check(check_),
        cells(cells_) {}
  std::string check;
  std::string cells;  // canonical form of the first offender
};

struct VerificationReport {
  int max_area = 0;
  EnumMode mode = EnumMode::Free;
  int threads = 1;
  std::vector<long long> counts;       // counts[a] = polygons of area a
  std::vector<PolygonRecord> records;  // sorted by (area, cells)

  // Offending canonical forms per check; every check name is always present.
  // All lists except "conjecture-perim" must be empty on a healthy build.
  std::map<std::string, std::vector<std::string>> violations;

  std::vector<std::string> area_equality;  // area == 6 cyc - 6
  std::vector<std::string> conj_equality;  // perim == 4 cyc - 2
  int min_conj_slack = 0;
  std::vector<std::string> conj_minimizers;

  bool conjecture_violated() const { return min_conj_slack < 0; }
  bool clean() const;          // ignores the conjecture list
  void require_clean() const;  // throws SuiteFailure at the first offender
  std::string to_csv() const;
  std::string to_json() const;
};

VerificationReport verify_suite(int max_area, EnumMode mode = EnumMode::Free,
                                int threads = 1);

struct BadDecomposition : Error {
  using Error::Error;
};

struct CutLemmaRecord {
  int eta = 0;                    // number of shared panes
  int cyc1 = 0, cyc2 = 0;         // cycle counts of the pieces
  int delta1 = 0, delta2 = 0;     // trajectories of each piece touching the cut
  int cyc_union = 0;
  bool inequality_holds = false;  // cyc <= cyc1 + cyc2 - d1 - d2 + eta
};

// Both pieces live in one coordinate frame; the lists name the shared panes
// (both must list the same set). Validates the decomposition, evaluates the
// cut inequality, and for a single shared pane insists on exact additivity
// cyc = cyc1 + cyc2 - 1 (throwing ConsistencyError otherwise).
CutLemmaRecord check_cut_lemma(const GridPolygon& p1, std::vector<Pane> panes1,
                               const GridPolygon& p2, std::vector<Pane> panes2);

enum class Objective : std::uint8_t { MinPerimSlack, MinAreaSlack };

struct ExtremalResult {
  Objective objective{};
  int min_slack = 0;
  std::vector<PolygonRecord> winners;  // all attaining polygons, sorted
};

// Minimum of the chosen slack over all free polygons of area <= max_area,
// with every minimizer listed.
ExtremalResult extremal_search(int max_area, Objective objective,
                               int threads = 1);

// Free canonical cell keys of the three primitive shapes the cycle-count
// classification handles separately: the unit triangle, the unit hexagon,
// and the clipped triangle of area 16.
const std::vector<std::string>& exceptional_shape_keys();

}  // namespace tribill
