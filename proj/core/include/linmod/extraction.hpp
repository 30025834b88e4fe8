#pragma once

#include <string>
#include <vector>

#include "linmod/model.hpp"
#include "linmod/properties.hpp"
#include "linmod/reductions.hpp"
#include "linmod/tiling.hpp"

namespace linmod {

// Mark chain recovered from a model: marks[n] is the n-th element of the
// successor chain starting at the root's marked element, rep_worlds[m] the
// least prefix world where marks[m] carries the mark.  Both stop where the
// prefix runs out of witnesses; truncated_stop records that the stop was the
// prefix edge rather than a refutation.
struct MarkTrace {
  std::vector<int> marks;
  std::vector<int> rep_worlds;
  bool truncated_stop = false;
  std::string stop_reason;

  int certified_rows() const { return static_cast<int>(rep_worlds.size()); }
};

struct CellProvenance {
  int col = 0;   // n
  int row = 0;   // m
  int world = 0; // where the tile atom was read
  int tile = 0;
  std::string atom;  // e.g. "P2(5)" or "beta_2(5)"
};

struct ExtractResult {
  TilingGrid window;  // cols x certified rows
  GridCheck check;    // horizontal and vertical seams of the window
  std::vector<CellProvenance> cells;
  int rows_requested = 0;
  int rows_certified = 0;
};

// Recovers the mark chain.  The successor read depends on the stage: the
// edge letter directly (A, B, Abullet), pair-tag worlds one phase step away
// (Aprime), or the beta thresholds one mono step away (Astar, Aplus).  Ties
// break to the least element, so extraction is deterministic.
MarkTrace extract_marks(const PredicateModel& m, const FamilySignature& family,
                        Variant variant, int want_marks);

// Reads the cols x rows window: cell (n, m) is the unique tile t whose atom
// holds of marks[n] at rep_worlds[m].  A cell with no tile is an input error
// (names the world), as is a cell with two.  Rows beyond the trace are
// omitted, never padded.  The window's seams are then checked against the
// tile set, without wraparound.
ExtractResult extract_tiling(const PredicateModel& m, const MarkTrace& trace,
                             const FamilySignature& family, const TileSet& tiles,
                             Variant variant, int cols, int rows);

}  // namespace linmod
