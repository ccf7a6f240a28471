#include "tribill/billiards.hpp"

#include <algorithm>

namespace tribill {

Permutation::Permutation(std::vector<int> next) : next_(std::move(next)) {
  int n = static_cast<int>(next_.size());
  std::vector<char> hit(n, 0);
  for (int v : next_) {
    if (v < 0 || v >= n || hit[v]) throw Error("not a permutation");
    hit[v] = 1;
  }
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    // i is the smallest element of its cycle
    std::vector<int> cyc;
    for (int k = i; !seen[k]; k = next_[k]) {
      seen[k] = 1;
      cyc.push_back(k);
    }
    cycles_.push_back(std::move(cyc));
  }
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> sizes;
  for (const auto& c : cycles_) sizes.push_back(static_cast<int>(c.size()));
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  return sizes;
}

std::map<int, int> Permutation::alpha() const {
  std::map<int, int> a;
  for (const auto& c : cycles_) ++a[static_cast<int>(c.size())];
  return a;
}

std::string Permutation::str() const {
  std::string s;
  for (const auto& c : cycles_) {
    s += '(';
    for (size_t k = 0; k < c.size(); ++k) {
      if (k) s += ' ';
      s += std::to_string(c[k] + 1);
    }
    s += ')';
  }
  return s;
}

const char* orientation_name(TriangleOrientation o) {
  switch (o) {
    case TriangleOrientation::Up: return "up";
    case TriangleOrientation::Down: return "down";
    default: return "none";
  }
}

Dir emission_direction(const GridPolygon& p, Pane b) {
  Cell in = p.inner_cell(b);  // throws if not a boundary pane
  bool u_side = in == pane_cells(b)[0];
  switch (b.t) {
    case PType::H: return u_side ? Dir::NE : Dir::SE;
    case PType::R: return u_side ? Dir::SE : Dir::W;
    default: return u_side ? Dir::W : Dir::NE;
  }
}

BeamChord trace_beam(const GridPolygon& p, int i) {
  Pane start = p.boundary()[i];
  BeamChord chord;
  chord.from = i;
  chord.a = start.midpoint();
  chord.dir = emission_direction(p, start);
  PType axis = parallel_ptype(chord.dir);

  Cell cur = p.inner_cell(start);
  Pane entry = start;
  for (int guard = 0; guard <= p.area(); ++guard) {
    chord.cells.push_back(cur);
    Pane exit = pane_of_type(cur, third_ptype(axis, entry.t));
    if (auto j = p.boundary_index(exit)) {
      if (*j == i) throw ConsistencyError("beam returned to its own pane");
      chord.to = *j;
      chord.b = exit.midpoint();
      assert(dir_from_vec(chord.b - chord.a) == chord.dir);
      return chord;
    }
    cur = other_cell(exit, cur);
    entry = exit;
  }
  throw ConsistencyError("beam failed to terminate");
}

Permutation billiards_permutation(const GridPolygon& p) {
  return analyze(p).perm;
}

BilliardsAnalysis analyze(const GridPolygon& p) {
  int n = p.perim();
  std::vector<BeamChord> chords;
  std::vector<int> next(n);
  chords.reserve(n);
  for (int i = 0; i < n; ++i) {
    chords.push_back(trace_beam(p, i));
    next[i] = chords.back().to;
  }
  Permutation perm{std::move(next)};
  for (const auto& c : perm.cycles())
    if (c.size() < 3) throw ConsistencyError("billiards cycle of size " + std::to_string(c.size()));

  std::vector<Trajectory> trajs;
  for (const auto& c : perm.cycles()) {
    Trajectory t;
    t.cycle = c;
    for (int idx : c) {
      t.segments.push_back(chords[idx]);
      t.length2 += chords[idx].crossings();
    }
    if (t.cycle.size() == 3) {
      int w = -1;
      for (int k = 0; k < 3; ++k)
        if (t.segments[k].dir == Dir::W) w = k;
      assert(w >= 0);
      const BeamChord& base = t.segments[w];
      assert(base.a.b == base.b.b);
      DPoint apex = t.segments[(w + 2) % 3].a;  // the vertex off the horizontal chord
      t.orientation = apex.b > base.a.b ? TriangleOrientation::Up : TriangleOrientation::Down;
    }
    trajs.push_back(std::move(t));
  }
  return {std::move(perm), std::move(trajs)};
}

bool trajectories_intersect(const Trajectory& t1, const Trajectory& t2) {
  bool touch = false;
  for (const BeamChord& s1 : t1.segments)
    for (const BeamChord& s2 : t2.segments) {
      SegRel rel = segment_relation(s1.a, s1.b, s2.a, s2.b);
      if (rel == SegRel::CollinearOverlap)
        throw ConsistencyError("distinct trajectories overlap along a line");
      if (rel == SegRel::Touch) touch = true;
    }
  return touch;
}

int triangular_intersection_count(const BilliardsAnalysis& a, int cycle_index) {
  const Trajectory& t = a.trajectories[cycle_index];
  int count = 0;
  for (size_t d = 0; d < a.trajectories.size(); ++d) {
    if (static_cast<int>(d) == cycle_index || !a.trajectories[d].is_triangular()) continue;
    if (trajectories_intersect(t, a.trajectories[d])) ++count;
  }
  return count;
}

ShorelineReport shoreline_report(const GridPolygon& p, const BilliardsAnalysis& a,
                                 int cycle_index) {
  const Trajectory& t = a.trajectories[cycle_index];
  int m = static_cast<int>(t.cycle.size());
  if (m < 4) throw CycleTooSmallError("shorelines need a cycle of size at least 4");

  ShorelineReport rep;
  rep.m = m;
  rep.panes = t.cycle;
  std::sort(rep.panes.begin(), rep.panes.end());
  for (int idx : rep.panes) rep.z_points.push_back(p.boundary()[idx].midpoint());

  int n = p.perim();
  for (int i = 0; i < m; ++i) {
    int from = rep.panes[i], to = rep.panes[(i + 1) % m];
    int turn_sum = 0;
    for (int k = from; k != to; k = (k + 1) % n) turn_sum += p.turn_at(k);
    assert(turn_sum % 60 == 0);
    rep.Ks.push_back(3 - turn_sum / 60);
  }

  // triangular trajectories meeting this one, counted by the shoreline arc
  // holding a vertex of theirs
  for (int i = 0; i < m; ++i) {
    int from = rep.panes[i], to = rep.panes[(i + 1) % m];
    int arc_len = (to - from + n) % n;  // panes strictly inside: from+1 .. to-1
    int count = 0;
    for (size_t d = 0; d < a.trajectories.size(); ++d) {
      const Trajectory& other = a.trajectories[d];
      if (static_cast<int>(d) == cycle_index || !other.is_triangular()) continue;
      if (!trajectories_intersect(t, other)) continue;
      bool on_arc = false;
      for (int idx : other.cycle)
        if ((idx - from + n) % n > 0 && (idx - from + n) % n < arc_len) on_arc = true;
      if (on_arc) ++count;
    }
    rep.touch_counts.push_back(count);
  }
  return rep;
}

}  // namespace tribill
