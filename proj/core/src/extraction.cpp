#include "linmod/extraction.hpp"

#include <array>
#include <memory>
#include <optional>

namespace linmod {

namespace {

enum class Route { Edge, PairTag, Threshold };

Route route_of(Variant v) {
  switch (v) {
    case Variant::A:
    case Variant::B:
    case Variant::ABullet:
      return Route::Edge;
    case Variant::APrime:
      return Route::PairTag;
    case Variant::AStar:
    case Variant::APlus:
      return Route::Threshold;
  }
  fail(ErrorKind::Internal, "unknown variant");
}

// Per-route reads over one model; the threshold route carries the step
// tables.
struct Reads {
  const PredicateModel& m;
  const FamilySignature& family;
  Route route;
  std::unique_ptr<ThresholdReader> reader;      // Threshold route
  std::unique_ptr<StepRelation> phase_step;     // PairTag route

  Reads(const PredicateModel& model, const FamilySignature& fam, Route r)
      : m(model), family(fam), route(r) {
    if (route == Route::Threshold)
      reader = std::make_unique<ThresholdReader>(m, family);
    else if (route == Route::PairTag)
      phase_step = std::make_unique<StepRelation>(step_relation(m, StepGuard::PhaseLetter));
  }

  bool marked(int w, int a) const {
    const LetterMap& L = family.map;
    if (route == Route::Threshold)
      return m.holds(w, L.block, {}) && m.holds(w, L.mono, std::array<int, 1>{a});
    return m.holds(w, L.mark, std::array<int, 1>{a});
  }

  // tile level t readable of element a at world w
  bool tiled_as(int w, int t, int a) const {
    const LetterMap& L = family.map;
    if (route == Route::Threshold) return reader->beta_at(w, t, a);
    return m.holds(w, L.tile[static_cast<size_t>(t)], std::array<int, 1>{a});
  }

  bool some_tile(int w, int a) const {
    for (int t = 0; t < family.map.tile_count(); ++t)
      if (tiled_as(w, t, a)) return true;
    return false;
  }

  // least successor of a read at the root world, if the prefix shows one
  std::optional<int> successor(int root, int a) const {
    const LetterMap& L = family.map;
    const int W = m.frame().world_count();
    const int s = L.tile_count() - 1;
    switch (route) {
      case Route::Edge: {
        for (int b : m.domain(root))
          if (m.holds(root, L.edge, std::array<int, 2>{a, b})) return b;
        return std::nullopt;
      }
      case Route::PairTag: {
        for (int b : m.domain(root))
          for (int v = 0; v < W; ++v)
            if (phase_step->at(root, v) &&
                m.holds(v, L.pair_lo, std::array<int, 1>{a}) &&
                m.holds(v, L.pair_hi, std::array<int, 1>{b}))
              return b;
        return std::nullopt;
      }
      case Route::Threshold: {
        // Worlds outermost: one threshold read decides a world before the
        // element scan.  Still deterministic: least pair world, least b.
        for (int v = 0; v < W; ++v) {
          if (!reader->power(1).at(root, v) || !reader->beta_at(v, s + 1, a)) continue;
          for (int b : m.domain(root))
            if (reader->beta_at(v, s + 2, b)) return b;
        }
        return std::nullopt;
      }
    }
    return std::nullopt;
  }
};

}  // namespace

MarkTrace extract_marks(const PredicateModel& m, const FamilySignature& family,
                        Variant variant, int want_marks) {
  if (want_marks < 1) fail(ErrorKind::Input, "need at least one mark");
  Reads reads(m, family, route_of(variant));
  const int root = m.root();
  const int W = m.frame().world_count();

  MarkTrace trace;

  std::optional<int> a0;
  for (int a : m.domain(root))
    if (reads.marked(root, a) && reads.some_tile(root, a)) {
      a0 = a;
      break;
    }
  if (!a0) fail(ErrorKind::Input, "root world carries no tiled mark");
  trace.marks.push_back(*a0);

  while (static_cast<int>(trace.marks.size()) < want_marks) {
    std::optional<int> next = reads.successor(root, trace.marks.back());
    if (!next) {
      trace.truncated_stop = true;
      trace.stop_reason = "no successor of " + std::to_string(trace.marks.back()) +
                          " visible in the prefix";
      break;
    }
    trace.marks.push_back(*next);
  }

  for (int a : trace.marks) {
    int found = -1;
    for (int w = 0; w < W; ++w)
      if (reads.marked(w, a)) {
        found = w;
        break;
      }
    if (found < 0) {
      trace.truncated_stop = true;
      if (trace.stop_reason.empty())
        trace.stop_reason = "no world marks " + std::to_string(a) + " in the prefix";
      break;
    }
    if (!trace.rep_worlds.empty() && found < trace.rep_worlds.back())
      fail(ErrorKind::Input, "representative worlds decrease at element " + std::to_string(a));
    trace.rep_worlds.push_back(found);
  }

  return trace;
}

ExtractResult extract_tiling(const PredicateModel& m, const MarkTrace& trace,
                             const FamilySignature& family, const TileSet& tiles,
                             Variant variant, int cols, int rows) {
  if (cols < 1 || rows < 1) fail(ErrorKind::Input, "window dimensions must be positive");
  if (tiles.size() != family.map.tile_count())
    fail(ErrorKind::Input, "tile set size disagrees with the letter map");
  if (static_cast<int>(trace.marks.size()) < cols)
    fail(ErrorKind::Input, "trace has fewer marks than requested columns");
  Reads reads(m, family, route_of(variant));

  ExtractResult out;
  out.rows_requested = rows;
  out.rows_certified = std::min(rows, trace.certified_rows());
  if (out.rows_certified < 1) fail(ErrorKind::Input, "no full row certified by the trace");

  out.window = TilingGrid(cols, out.rows_certified);
  const bool threshold = route_of(variant) == Route::Threshold;

  for (int row = 0; row < out.rows_certified; ++row) {
    const int w = trace.rep_worlds[static_cast<size_t>(row)];
    for (int col = 0; col < cols; ++col) {
      const int a = trace.marks[static_cast<size_t>(col)];
      int found = -1;
      for (int t = 0; t < family.map.tile_count(); ++t) {
        if (!reads.tiled_as(w, t, a)) continue;
        if (found >= 0)
          fail(ErrorKind::Input, "cell (" + std::to_string(col) + ", " + std::to_string(row) +
                                     ") carries two tiles at world " + std::to_string(w));
        found = t;
      }
      if (found < 0)
        fail(ErrorKind::Input, "cell (" + std::to_string(col) + ", " + std::to_string(row) +
                                   ") carries no tile at world " + std::to_string(w));
      out.window.set(col, row, found);
      std::string atom = threshold
                             ? "beta_" + std::to_string(found) + "(" + std::to_string(a) + ")"
                             : "P" + std::to_string(found) + "(" + std::to_string(a) + ")";
      out.cells.push_back({col, row, w, found, std::move(atom)});
    }
  }

  out.check = check_grid(tiles, out.window, false);
  return out;
}

}  // namespace linmod
