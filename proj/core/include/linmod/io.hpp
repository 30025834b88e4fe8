#pragma once

#include <string>
#include <vector>

#include "linmod/eval.hpp"
#include "linmod/extraction.hpp"
#include "linmod/metrics.hpp"
#include "linmod/model.hpp"
#include "linmod/properties.hpp"
#include "linmod/reductions.hpp"
#include "linmod/tiling.hpp"

namespace linmod {

std::string slurp(const std::string& path);
void spit(const std::string& path, const std::string& text);

// ── Tile sets ────────────────────────────────────────────────────────────────
// Header "tiles k", then one line per tile "i: left right up down".
TileSet parse_tiles(const std::string& text);
std::string format_tiles(const TileSet& tiles);
TileSet load_tiles(const std::string& path);
void save_tiles(const TileSet& tiles, const std::string& path);

// ── Grids ────────────────────────────────────────────────────────────────────
// Header "grid n m", then m rows of n tile indices, row 0 first.
TilingGrid parse_grid(const std::string& text);
std::string format_grid(const TilingGrid& grid);
TilingGrid load_grid(const std::string& path);
void save_grid(const TilingGrid& grid, const std::string& path);

// ── Formula artifacts ────────────────────────────────────────────────────────
// Comment header lines "# variant ..", "# boxmode ..", "# tiles k",
// "# tile i: l r u d", then alternating "# <conjunct name>" and one formula
// per line in the core grammar.  Printing is canonical, so identical inputs
// produce byte-identical files.
std::string format_artifact(const ReductionArtifact& art);
ReductionArtifact parse_artifact(const std::string& text);
ReductionArtifact load_artifact(const std::string& path);
void save_artifact(const ReductionArtifact& art, const std::string& path);

// ── Models ───────────────────────────────────────────────────────────────────
// Structured text: "frame <kind params>", "edge w v" lines for explicit
// frames, "root w", "truncated 0|1", either "domain e e .." (constant) or
// "domain@w e e .." lines, then either a generator line
// "gen <name> tiles=<path> cert=<path>" or "letter <name> <arity>" lines
// followed by "table <world> <letter> <args..>" lines.  Generator input
// paths are resolved against the model file's directory.
Frame parse_frame_line(const std::string& params);
PredicateModel load_model(const std::string& path);
// Explicit tables; fails on rule-based models (save those as generator files).
std::string format_model_tables(const PredicateModel& m);
void save_model_tables(const PredicateModel& m, const std::string& path);
// Header plus a generator line; the caller supplies the generator text.
std::string format_model_generated(const PredicateModel& m, const std::string& gen_line);

// ── Reports ──────────────────────────────────────────────────────────────────

enum class ReportMode { Text, Structured };
ReportMode report_mode_from_name(const std::string& name);

struct ConjunctVerdict {
  std::string name;
  Verdict verdict;
};

std::string format_check_report(const std::vector<ConjunctVerdict>& rows, ReportMode mode,
                                bool include_traces);
std::string format_metrics_report(const Metrics& metrics, ReportMode mode);
std::string format_suite_report(const SuiteResult& suite, ReportMode mode);
std::string format_extract_report(const ExtractResult& res, ReportMode mode);

}  // namespace linmod
