#include "tribill/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>
#include <unordered_set>
#include <utility>

#include "json.hpp"
#include "tribill/plabic.hpp"

namespace tribill {

namespace {

std::array<Cell, 3> cell_neighbors(Cell c) {
  std::array<Cell, 3> out{};
  auto panes = cell_panes(c);
  for (int k = 0; k < 3; ++k) out[k] = other_cell(panes[k], c);
  return out;
}

// A suspended branch of the search: the seed cells placed so far plus the
// state needed to finish that subtree on any worker.
struct EnumTask {
  std::vector<Cell> placed;
  std::vector<Cell> untried;
  std::vector<Cell> reached;
};

// Depth-first enumeration over the untried set, one root per orientation of
// the minimum cell. Growth is restricted to cells above the root, so every
// connected set is built exactly once, anchored at its smallest cell; with
// the root at the origin the placed set is already in fixed canonical form.
struct Redelmeier {
  int max_area;
  EnumMode mode;
  const std::function<void(const GridPolygon&)>& sink;
  int cut_depth = 0;  // with a task list: park subtrees at this depth
  std::vector<EnumTask>* tasks = nullptr;
  Cell root{};
  std::unordered_set<Cell, CellHash> reached{};
  std::vector<Cell> placed{};

  void run(Cell r) {
    root = r;
    reached.clear();
    reached.insert(r);
    placed.clear();
    rec({r});
  }

  void resume(const EnumTask& t) {
    root = t.placed.front();
    reached = {t.reached.begin(), t.reached.end()};
    placed = t.placed;
    rec(t.untried);
  }

  void emit() {
    if (check_cells(placed) != CellsVerdict::Ok) return;
    std::vector<Cell> cells = placed;
    std::sort(cells.begin(), cells.end());
    if (mode == EnumMode::Free && cells != canonical_cells(cells, CanonMode::Free)) return;
    sink(GridPolygon::from_cells(std::move(cells)));
  }

  void rec(std::vector<Cell> untried) {
    while (!untried.empty()) {
      Cell c = untried.back();
      untried.pop_back();
      placed.push_back(c);
      emit();
      if (static_cast<int>(placed.size()) < max_area) {
        std::vector<Cell> added;
        for (Cell nb : cell_neighbors(c))
          if (root < nb && reached.insert(nb).second) added.push_back(nb);
        std::vector<Cell> next = untried;
        next.insert(next.end(), added.begin(), added.end());
        if (tasks && static_cast<int>(placed.size()) == cut_depth)
          tasks->push_back({placed, std::move(next), {reached.begin(), reached.end()}});
        else
          rec(std::move(next));
        for (Cell nb : added) reached.erase(nb);
      }
      placed.pop_back();
      // c stays reached through the remaining branches at this level: they
      // cover exactly the sets that exclude it.
    }
  }
};

bool poly_before(const GridPolygon& x, const GridPolygon& y) {
  if (x.area() != y.area()) return x.area() < y.area();
  return x.cells() < y.cells();
}

PolygonRecord make_record(const GridPolygon& p, const Permutation& perm) {
  PolygonRecord r;
  r.cells = cells_key(p.cells());
  r.hash = key_hash(r.cells);
  r.area = p.area();
  r.perim = p.perim();
  r.cyc = perm.cyc();
  r.cycle_type = perm.cycle_type();
  r.slack_area = r.area - (6 * r.cyc - 6);
  r.slack2_perim = 2 * r.perim - (7 * r.cyc - 3);
  r.slack_conj = r.perim - (4 * r.cyc - 2);
  return r;
}

std::string halves(int doubled) {
  int mag = std::abs(doubled);
  return (doubled < 0 ? std::string("-") : std::string()) + std::to_string(mag / 2) +
         (mag % 2 ? ".5" : ".0");
}

const char* const kCheckNames[] = {
    "pi-oracle",         "area-bound",
    "perim-bound",       "equality-trees",
    "triangle-bound",    "triangle-pairing",
    "shoreline-single-touch", "shoreline-capacity",
    "turning-identity",  "alpha-count",
    "primitive-area",    "cut-additivity",
    "length-identity",   "cell-chords",
    "orbit-invariance",  "conjecture-perim",
};

struct ItemResult {
  PolygonRecord rec;
  std::vector<const char*> fails;
  std::string error;
};

bool is_exceptional(const GridPolygon& p) {
  std::string key = cells_key(canonical_cells(p.cells(), CanonMode::Free));
  const auto& ex = exceptional_shape_keys();
  return std::find(ex.begin(), ex.end(), key) != ex.end();
}

// One polygon's worth of checks. `index` is the position in the sorted
// enumeration; it only gates the sampled symmetry cross-check.
void analyze_item(const GridPolygon& p, std::size_t index, ItemResult& out) {
  BilliardsAnalysis a = analyze(p);
  const Permutation& perm = a.perm;
  out.rec = make_record(p, perm);
  auto fail = [&](const char* name) { out.fails.push_back(name); };

  if (!(dual(p).trip_permutation() == perm)) fail("pi-oracle");

  if (out.rec.slack_area < 0) fail("area-bound");
  if (out.rec.slack2_perim < 0) fail("perim-bound");
  if ((out.rec.slack_area == 0) != is_tree_of_unit_hexagons(p)) fail("equality-trees");
  if (out.rec.slack_conj < 0) fail("conjecture-perim");

  long long total_len2 = 0;
  for (const Trajectory& t : a.trajectories) total_len2 += t.length2;
  if (total_len2 != 3LL * p.area()) fail("length-identity");

  {
    std::map<Cell, std::set<PType>> axes;
    for (const Trajectory& t : a.trajectories)
      for (const BeamChord& seg : t.segments)
        for (const Cell& c : seg.cells) axes[c].insert(parallel_ptype(seg.dir));
    bool ok = axes.size() == static_cast<std::size_t>(p.area());
    for (const auto& [c, types] : axes)
      if (types.size() != 3) ok = false;
    if (!ok) fail("cell-chords");
  }

  bool bound_ok = true, pairing_ok = true;
  bool single_ok = true, capacity_ok = true, turning_ok = true;
  for (std::size_t ci = 0; ci < a.trajectories.size(); ++ci) {
    const Trajectory& t = a.trajectories[ci];
    int m = static_cast<int>(t.cycle.size());
    int tri_count = triangular_intersection_count(a, static_cast<int>(ci));
    if (tri_count > m - 2) bound_ok = false;

    if (t.is_triangular()) {
      if (tri_count > 1) pairing_ok = false;
      for (std::size_t cj = 0; cj < a.trajectories.size() && tri_count == 1; ++cj) {
        if (cj == ci || !a.trajectories[cj].is_triangular()) continue;
        if (!trajectories_intersect(t, a.trajectories[cj])) continue;
        TriangleOrientation o1 = t.orientation, o2 = a.trajectories[cj].orientation;
        bool opposite = (o1 == TriangleOrientation::Up && o2 == TriangleOrientation::Down) ||
                        (o1 == TriangleOrientation::Down && o2 == TriangleOrientation::Up);
        if (!opposite) pairing_ok = false;
      }
      continue;
    }
    if (m < 4) continue;

    ShorelineReport sr = shoreline_report(p, a, static_cast<int>(ci));
    int n = p.perim();
    int sum = 0;
    for (std::size_t i = 0; i < sr.Ks.size(); ++i) {
      sum += sr.Ks[i];
      if (sr.touch_counts[i] > sr.Ks[i]) capacity_ok = false;
    }
    if (sum != 3 * (m - 2)) turning_ok = false;

    // No intersecting triangular trajectory puts two panes on one arc.
    for (std::size_t cj = 0; cj < a.trajectories.size(); ++cj) {
      if (cj == ci || !a.trajectories[cj].is_triangular()) continue;
      if (!trajectories_intersect(t, a.trajectories[cj])) continue;
      for (std::size_t i = 0; i < sr.panes.size(); ++i) {
        int from = sr.panes[i];
        int arc_len = (sr.panes[(i + 1) % sr.panes.size()] - from + n) % n;
        int inside = 0;
        for (int idx : a.trajectories[cj].cycle) {
          int off = (idx - from + n) % n;
          if (off > 0 && off < arc_len) ++inside;
        }
        if (inside > 1) single_ok = false;
      }
    }
  }
  if (!bound_ok) fail("triangle-bound");
  if (!pairing_ok) fail("triangle-pairing");
  if (!single_ok) fail("shoreline-single-touch");
  if (!capacity_ok) fail("shoreline-capacity");
  if (!turning_ok) fail("turning-identity");

  if (p.is_primitive() && !is_exceptional(p)) {
    std::map<int, int> al = perm.alpha();
    long long rhs = 0;
    for (const auto& [m, cnt] : al) {
      if (m == 4) rhs += cnt;
      if (m >= 5) rhs += static_cast<long long>(m - 2) * cnt;
    }
    int a3 = al.count(3) ? al.at(3) : 0;
    if (a3 > rhs) fail("alpha-count");
    if (p.area() < 6 * perm.cyc()) fail("primitive-area");
  }

  {
    std::vector<Pane> cuts = p.cut_panes();
    if (!cuts.empty()) {
      try {
        auto [p1, p2] = split_at(p, cuts.front());
        CutLemmaRecord cr = check_cut_lemma(p1, {cuts.front()}, p2, {cuts.front()});
        if (!cr.inequality_holds || cr.cyc_union != perm.cyc()) fail("cut-additivity");
      } catch (const Error&) {
        fail("cut-additivity");
      }
    }
  }

  if (index % 17 == 0) {
    for (const Symmetry& s :
         {Symmetry::rotation(1), Symmetry::rotation(1).after(Symmetry::reflection())}) {
      std::vector<Cell> mapped;
      mapped.reserve(p.cells().size());
      for (Cell c : p.cells()) mapped.push_back(s.apply(c));
      GridPolygon q = GridPolygon::from_cells(std::move(mapped));
      BilliardsAnalysis qa = analyze(q);
      long long qlen2 = 0;
      for (const Trajectory& t : qa.trajectories) qlen2 += t.length2;
      if (q.area() != p.area() || q.perim() != p.perim() || qa.perm.cyc() != perm.cyc() ||
          qa.perm.cycle_type() != perm.cycle_type() || qlen2 != total_len2) {
        fail("orbit-invariance");
        break;
      }
    }
  }
}

// Runs fn(i) for i in [0, n) across the requested number of threads; the
// chunks are self-scheduled, so the result layout must not depend on which
// thread handles which index.
void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  threads = std::max(1, std::min(threads, n));
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= n) break;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
}

// Sorted collection with the work split into seed-cell subranges: a serial
// descent parks every subtree rooted at a 6-cell seed, then workers finish
// the parked subtrees in any order. The final sort makes the result
// independent of the schedule (and of whether this path ran at all).
std::vector<GridPolygon> collect_polyiamonds(int max_area, EnumMode mode, int threads) {
  if (max_area < 1) throw Error("max_area must be at least 1");
  std::vector<GridPolygon> out;
  constexpr int kCutDepth = 6;
  if (threads <= 1 || max_area <= kCutDepth + 1) {
    enumerate_polyiamonds(max_area, mode, [&](const GridPolygon& p) { out.push_back(p); });
  } else {
    std::function<void(const GridPolygon&)> take = [&](const GridPolygon& p) {
      out.push_back(p);
    };
    std::vector<EnumTask> tasks;
    Redelmeier seeder{max_area, mode, take, kCutDepth, &tasks};
    seeder.run({0, 0, Orient::U});
    seeder.run({0, 0, Orient::D});

    std::vector<std::vector<GridPolygon>> parts(tasks.size());
    parallel_for(static_cast<int>(tasks.size()), threads, [&](int i) {
      std::function<void(const GridPolygon&)> local =
          [&parts, i](const GridPolygon& p) { parts[i].push_back(p); };
      Redelmeier worker{max_area, mode, local};
      worker.resume(tasks[i]);
    });
    for (std::vector<GridPolygon>& part : parts)
      for (GridPolygon& p : part) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), poly_before);
  return out;
}

}  // namespace

void enumerate_polyiamonds(int max_area, EnumMode mode,
                           const std::function<void(const GridPolygon&)>& sink) {
  if (max_area < 1) throw Error("max_area must be at least 1");
  Redelmeier e{max_area, mode, sink};
  e.run({0, 0, Orient::U});
  e.run({0, 0, Orient::D});
}

std::vector<GridPolygon> enumerate_polyiamonds(int max_area, EnumMode mode, int threads) {
  return collect_polyiamonds(max_area, mode, threads);
}

PolygonRecord polygon_record(const GridPolygon& p) {
  return make_record(p, billiards_permutation(p));
}

bool VerificationReport::clean() const {
  for (const auto& [name, list] : violations)
    if (name != std::string("conjecture-perim") && !list.empty()) return false;
  return true;
}

void VerificationReport::require_clean() const {
  for (const char* name : kCheckNames) {
    if (name == std::string("conjecture-perim")) continue;
    auto it = violations.find(name);
    if (it != violations.end() && !it->second.empty())
      throw SuiteFailure(name, it->second.front());
  }
}

std::string records_to_csv(const std::vector<PolygonRecord>& records) {
  std::ostringstream os;
  os << "canonical_hash,area,perim,cyc,cycle_type,slack_area,slack_perim_thm,slack_perim_conj\n";
  for (const PolygonRecord& r : records) {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(r.hash));
    os << hex << ',' << r.area << ',' << r.perim << ',' << r.cyc << ',';
    for (std::size_t k = 0; k < r.cycle_type.size(); ++k)
      os << (k ? "+" : "") << r.cycle_type[k];
    os << ',' << r.slack_area << ',' << halves(r.slack2_perim) << ',' << r.slack_conj << '\n';
  }
  return os.str();
}

std::string VerificationReport::to_csv() const { return records_to_csv(records); }

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["max_area"] = max_area;
  j["mode"] = mode_name(mode);
  j["threads"] = threads;
  long long total = 0;
  for (long long c : counts) total += c;
  j["polygons"] = total;
  j["counts"] = counts;
  j["equality_area"] = area_equality;
  j["conjecture"] = {{"equality", conj_equality},
                     {"min_slack", min_conj_slack},
                     {"minimizers", conj_minimizers},
                     {"violated", conjecture_violated()}};
  j["violations"] = violations;
  return j.dump(2) + "\n";
}

VerificationReport verify_suite(int max_area, EnumMode mode, int threads) {
  VerificationReport rep;
  rep.max_area = max_area;
  rep.mode = mode;
  rep.threads = std::max(1, threads);
  rep.counts.assign(max_area + 1, 0);
  for (const char* name : kCheckNames) rep.violations[name];
  exceptional_shape_keys();  // prime before the workers race to it

  std::vector<GridPolygon> polys = collect_polyiamonds(max_area, mode, rep.threads);
  int n = static_cast<int>(polys.size());
  std::vector<ItemResult> items(n);
  parallel_for(n, rep.threads, [&](int i) {
    try {
      analyze_item(polys[i], static_cast<std::size_t>(i), items[i]);
    } catch (const std::exception& e) {
      items[i].error = e.what();
    }
  });

  rep.min_conj_slack = 0;
  bool have_min = false;
  for (const ItemResult& it : items) {
    if (!it.error.empty())
      throw Error("analysis failed on " + cells_key(polys[&it - items.data()].cells()) + ": " +
                  it.error);
    rep.counts[it.rec.area] += 1;
    for (const char* name : it.fails) rep.violations[name].push_back(it.rec.cells);
    if (it.rec.slack_area == 0) rep.area_equality.push_back(it.rec.cells);
    if (it.rec.slack_conj == 0) rep.conj_equality.push_back(it.rec.cells);
    if (!have_min || it.rec.slack_conj < rep.min_conj_slack) {
      rep.min_conj_slack = it.rec.slack_conj;
      have_min = true;
    }
    rep.records.push_back(it.rec);
  }
  for (const ItemResult& it : items)
    if (it.rec.slack_conj == rep.min_conj_slack) rep.conj_minimizers.push_back(it.rec.cells);
  return rep;
}

CutLemmaRecord check_cut_lemma(const GridPolygon& p1, std::vector<Pane> panes1,
                               const GridPolygon& p2, std::vector<Pane> panes2) {
  auto norm = [](std::vector<Pane>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  norm(panes1);
  norm(panes2);
  if (panes1.empty() || panes1 != panes2)
    throw BadDecomposition("the pieces must agree on a nonempty set of shared panes");
  for (const Cell& c : p1.cells())
    if (p2.contains(c)) throw BadDecomposition("pieces overlap at " + c.str());

  std::vector<Pane> contact;
  for (Pane q : p1.boundary())
    if (p2.contains(other_cell(q, p1.inner_cell(q)))) contact.push_back(q);
  std::sort(contact.begin(), contact.end());
  if (contact != panes1)
    throw BadDecomposition("listed panes do not match where the pieces actually meet");

  std::vector<Cell> all = p1.cells();
  all.insert(all.end(), p2.cells().begin(), p2.cells().end());
  CutLemmaRecord r;
  r.eta = static_cast<int>(panes1.size());
  int cyc_union;
  try {
    cyc_union = billiards_permutation(GridPolygon::from_cells(std::move(all))).cyc();
  } catch (const ValidationError& e) {
    throw BadDecomposition(std::string("union is not a valid polygon: ") + e.what());
  }
  r.cyc_union = cyc_union;

  auto piece_stats = [&](const GridPolygon& piece) {
    Permutation perm = billiards_permutation(piece);
    std::vector<int> cycle_of(piece.perim(), -1);
    for (std::size_t ci = 0; ci < perm.cycles().size(); ++ci)
      for (int idx : perm.cycles()[ci]) cycle_of[idx] = static_cast<int>(ci);
    std::set<int> touched;
    for (Pane q : panes1) {
      std::optional<int> bi = piece.boundary_index(q);
      if (!bi) throw BadDecomposition("pane " + q.str() + " is not on a piece's boundary");
      touched.insert(cycle_of[*bi]);
    }
    return std::pair<int, int>(perm.cyc(), static_cast<int>(touched.size()));
  };
  std::tie(r.cyc1, r.delta1) = piece_stats(p1);
  std::tie(r.cyc2, r.delta2) = piece_stats(p2);

  r.inequality_holds = r.cyc_union <= r.cyc1 + r.cyc2 - r.delta1 - r.delta2 + r.eta;
  if (r.eta == 1 && r.cyc_union != r.cyc1 + r.cyc2 - 1)
    throw ConsistencyError("single-pane cut is not additive: " + std::to_string(r.cyc_union) +
                           " != " + std::to_string(r.cyc1) + " + " + std::to_string(r.cyc2) +
                           " - 1");
  return r;
}

ExtremalResult extremal_search(int max_area, Objective objective, int threads) {
  std::vector<GridPolygon> polys = collect_polyiamonds(max_area, EnumMode::Free, threads);
  int n = static_cast<int>(polys.size());
  std::vector<PolygonRecord> recs(n);
  parallel_for(n, threads, [&](int i) {
    recs[i] = make_record(polys[i], billiards_permutation(polys[i]));
  });

  ExtremalResult res;
  res.objective = objective;
  auto slack = [&](const PolygonRecord& r) {
    return objective == Objective::MinPerimSlack ? r.slack_conj : r.slack_area;
  };
  for (int i = 0; i < n; ++i)
    if (i == 0 || slack(recs[i]) < res.min_slack) res.min_slack = slack(recs[i]);
  for (const PolygonRecord& r : recs)
    if (slack(r) == res.min_slack) res.winners.push_back(r);
  return res;
}

const std::vector<std::string>& exceptional_shape_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> v;
    for (const GridPolygon& p : {unit_triangle(), unit_hexagon(), clipped_triangle16()})
      v.push_back(cells_key(canonical_cells(p.cells(), CanonMode::Free)));
    return v;
  }();
  return keys;
}

}  // namespace tribill
