// Beam tracing and the billiards permutation. A beam leaves the midpoint of a
// boundary pane at 60 degrees into the interior, runs straight through cells
// to the midpoint of another boundary pane, and the induced pane-to-pane map
// is a permutation whose cycles are the closed trajectories.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "tribill/polygon.hpp"

namespace tribill {

class Permutation {
 public:
  explicit Permutation(std::vector<int> next);

  int size() const { return static_cast<int>(next_.size()); }
  int next(int i) const { return next_[i]; }
  int cyc() const { return static_cast<int>(cycles_.size()); }
  // Each cycle starts at its smallest element; cycles ordered by that element.
  const std::vector<std::vector<int>>& cycles() const { return cycles_; }
  std::vector<int> cycle_type() const;  // sizes, largest first
  std::map<int, int> alpha() const;     // size -> number of cycles of that size
  std::string str() const;              // "(1 3 2)(4 5 6)", 1-based

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> next_;
  std::vector<std::vector<int>> cycles_;
};

// One straight run of the beam between two boundary pane midpoints.
struct BeamChord {
  int from = 0;
  int to = 0;  // boundary indices
  DPoint a{0, 0}, b{0, 0};
  Dir dir = Dir::E;
  std::vector<Cell> cells;  // crossed, in travel order
  int crossings() const { return static_cast<int>(cells.size()); }
};

enum class TriangleOrientation : std::uint8_t { None, Up, Down };
const char* orientation_name(TriangleOrientation o);

struct Trajectory {
  std::vector<int> cycle;           // boundary indices, starting at the smallest
  std::vector<BeamChord> segments;  // segments[k] runs cycle[k] -> cycle[k+1 mod m]
  int length2 = 0;                  // twice the euclidean length; one per cell crossed
  TriangleOrientation orientation = TriangleOrientation::None;
  bool is_triangular() const { return cycle.size() == 3; }
};

struct BilliardsAnalysis {
  Permutation perm;
  std::vector<Trajectory> trajectories;  // same order as perm.cycles()
};

struct ShorelineReport {
  int m = 0;
  std::vector<int> panes;        // the cycle's boundary indices, ascending
  std::vector<DPoint> z_points;  // their midpoints
  std::vector<int> Ks;           // Ks[i] belongs to the arc panes[i] -> panes[i+1]
  std::vector<int> touch_counts;
};

struct CycleTooSmallError : Error {
  using Error::Error;
};

// The unique direction in {NE, SE, W} pointing from midp(b) into the interior.
Dir emission_direction(const GridPolygon& p, Pane b);

BeamChord trace_beam(const GridPolygon& p, int i);  // i: 0-based boundary index
Permutation billiards_permutation(const GridPolygon& p);
BilliardsAnalysis analyze(const GridPolygon& p);

// Whether the two closed trajectories share at least one point.
bool trajectories_intersect(const Trajectory& t1, const Trajectory& t2);
// Number of other triangular trajectories meeting the given one.
int triangular_intersection_count(const BilliardsAnalysis& a, int cycle_index);

ShorelineReport shoreline_report(const GridPolygon& p, const BilliardsAnalysis& a, int cycle_index);

}  // namespace tribill
