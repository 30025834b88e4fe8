#include "linmod/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "linmod/parse.hpp"

namespace linmod {

namespace {

using nlohmann::json;

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

int to_int(const std::string& tok, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::Syntax, std::string("expected an integer ") + what + ", got '" + tok + "'");
  }
}

// non-empty, non-comment lines in order
std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t at = line.find_first_not_of(" \t");
    if (at == std::string::npos) continue;
    if (line[at] == '#') continue;
    out.push_back(line.substr(at));
  }
  return out;
}

const char* truth_word(Truth t) {
  switch (t) {
    case Truth::True: return "TRUE";
    case Truth::False: return "FALSE";
    case Truth::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

}  // namespace

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Input, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Input, "cannot write " + path);
  out << text;
}

// ── Tile sets ────────────────────────────────────────────────────────────────

TileSet parse_tiles(const std::string& text) {
  std::vector<std::string> lines = content_lines(text);
  if (lines.empty()) fail(ErrorKind::Syntax, "empty tile file");
  std::vector<std::string> head = split_ws(lines[0]);
  if (head.size() != 2 || head[0] != "tiles")
    fail(ErrorKind::Syntax, "tile file must start with 'tiles k'");
  int k = to_int(head[1], "tile count");
  if (k < 1) fail(ErrorKind::Input, "tile count must be positive");
  if (static_cast<int>(lines.size()) != k + 1)
    fail(ErrorKind::Syntax, "expected " + std::to_string(k) + " tile lines");
  TileSet out;
  for (int i = 0; i < k; ++i) {
    std::vector<std::string> toks = split_ws(lines[static_cast<size_t>(i) + 1]);
    if (toks.size() != 5 || toks[0] != std::to_string(i) + ":")
      fail(ErrorKind::Syntax, "tile line " + std::to_string(i) +
                                  " must read 'i: left right up down'");
    Tile t;
    t.left = to_int(toks[1], "color");
    t.right = to_int(toks[2], "color");
    t.up = to_int(toks[3], "color");
    t.down = to_int(toks[4], "color");
    if (t.left < 0 || t.right < 0 || t.up < 0 || t.down < 0)
      fail(ErrorKind::Input, "colors must be nonnegative");
    out.tiles.push_back(t);
  }
  return out;
}

std::string format_tiles(const TileSet& tiles) {
  std::ostringstream os;
  os << "tiles " << tiles.size() << "\n";
  for (int i = 0; i < tiles.size(); ++i) {
    const Tile& t = tiles.at(i);
    os << i << ": " << t.left << " " << t.right << " " << t.up << " " << t.down << "\n";
  }
  return os.str();
}

TileSet load_tiles(const std::string& path) { return parse_tiles(slurp(path)); }
void save_tiles(const TileSet& tiles, const std::string& path) { spit(path, format_tiles(tiles)); }

// ── Grids ────────────────────────────────────────────────────────────────────

TilingGrid parse_grid(const std::string& text) {
  std::vector<std::string> lines = content_lines(text);
  if (lines.empty()) fail(ErrorKind::Syntax, "empty grid file");
  std::vector<std::string> head = split_ws(lines[0]);
  if (head.size() != 3 || head[0] != "grid")
    fail(ErrorKind::Syntax, "grid file must start with 'grid n m'");
  int n = to_int(head[1], "width");
  int m = to_int(head[2], "height");
  if (n < 1 || m < 1) fail(ErrorKind::Input, "grid dimensions must be positive");
  if (static_cast<int>(lines.size()) != m + 1)
    fail(ErrorKind::Syntax, "expected " + std::to_string(m) + " grid rows");
  TilingGrid g(n, m);
  for (int y = 0; y < m; ++y) {
    std::vector<std::string> toks = split_ws(lines[static_cast<size_t>(y) + 1]);
    if (static_cast<int>(toks.size()) != n)
      fail(ErrorKind::Syntax, "grid row " + std::to_string(y) + " must hold " +
                                  std::to_string(n) + " indices");
    for (int x = 0; x < n; ++x) g.set(x, y, to_int(toks[static_cast<size_t>(x)], "tile index"));
  }
  return g;
}

std::string format_grid(const TilingGrid& grid) {
  std::ostringstream os;
  os << "grid " << grid.width() << " " << grid.height() << "\n";
  for (int y = 0; y < grid.height(); ++y) {
    for (int x = 0; x < grid.width(); ++x) {
      if (x) os << " ";
      os << grid.at(x, y);
    }
    os << "\n";
  }
  return os.str();
}

TilingGrid load_grid(const std::string& path) { return parse_grid(slurp(path)); }
void save_grid(const TilingGrid& grid, const std::string& path) { spit(path, format_grid(grid)); }

// ── Formula artifacts ────────────────────────────────────────────────────────

std::string format_artifact(const ReductionArtifact& art) {
  std::ostringstream os;
  os << "# linmod artifact\n";
  os << "# variant " << variant_name(art.variant) << "\n";
  os << "# boxmode " << (art.box_mode == BoxMode::Plus ? "plus" : "plain") << "\n";
  os << "# tiles " << art.tiles.size() << "\n";
  for (int i = 0; i < art.tiles.size(); ++i) {
    const Tile& t = art.tiles.at(i);
    os << "# tile " << i << ": " << t.left << " " << t.right << " " << t.up << " " << t.down
       << "\n";
  }
  for (const NamedConjunct& c : art.conjuncts) {
    os << "# " << c.name << "\n";
    os << print(c.formula, art.sig()) << "\n";
  }
  return os.str();
}

ReductionArtifact parse_artifact(const std::string& text) {
  std::string variant_name_str, boxmode_str = "plain";
  int tile_count = -1;
  TileSet tiles;
  std::vector<std::pair<std::string, std::string>> pending;  // name, formula text

  std::istringstream is(text);
  std::string line;
  std::string conjunct_name;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t at = line.find_first_not_of(" \t");
    if (at == std::string::npos) continue;
    if (line[at] == '#') {
      std::vector<std::string> toks = split_ws(line.substr(at + 1));
      if (toks.empty()) continue;
      if (toks[0] == "linmod") continue;
      if (toks[0] == "variant" && toks.size() == 2) {
        variant_name_str = toks[1];
      } else if (toks[0] == "boxmode" && toks.size() == 2) {
        boxmode_str = toks[1];
      } else if (toks[0] == "tiles" && toks.size() == 2) {
        tile_count = to_int(toks[1], "tile count");
      } else if (toks[0] == "tile" && toks.size() == 6) {
        Tile t;
        t.left = to_int(toks[2], "color");
        t.right = to_int(toks[3], "color");
        t.up = to_int(toks[4], "color");
        t.down = to_int(toks[5], "color");
        tiles.tiles.push_back(t);
      } else if (toks.size() == 1) {
        conjunct_name = toks[0];  // names the next formula line
      } else {
        fail(ErrorKind::Syntax, "unrecognized artifact header line: " + line);
      }
      continue;
    }
    if (conjunct_name.empty())
      fail(ErrorKind::Syntax, "formula line without a preceding '# <name>' line");
    pending.emplace_back(conjunct_name, line.substr(at));
    conjunct_name.clear();
  }

  if (variant_name_str.empty()) fail(ErrorKind::Syntax, "artifact lacks a '# variant' line");
  if (tile_count < 1 || tiles.size() != tile_count)
    fail(ErrorKind::Syntax, "artifact tile lines disagree with the declared count");
  if (pending.empty()) fail(ErrorKind::Syntax, "artifact holds no conjuncts");
  if (boxmode_str != "plain" && boxmode_str != "plus")
    fail(ErrorKind::Syntax, "boxmode must be plain or plus");

  ReductionArtifact art;
  art.variant = variant_from_name(variant_name_str);
  art.tiles = tiles;
  art.family = family_signature(tile_count);
  art.box_mode = boxmode_str == "plus" ? BoxMode::Plus : BoxMode::Plain;
  for (auto& [name, body] : pending)
    art.conjuncts.push_back({name, parse(body, art.family.sig)});
  return art;
}

ReductionArtifact load_artifact(const std::string& path) { return parse_artifact(slurp(path)); }
void save_artifact(const ReductionArtifact& art, const std::string& path) {
  spit(path, format_artifact(art));
}

// ── Models ───────────────────────────────────────────────────────────────────

Frame parse_frame_line(const std::string& params) {
  std::vector<std::string> toks = split_ws(params);
  if (toks.empty()) fail(ErrorKind::Syntax, "empty frame description");
  const std::string& kind = toks[0];
  auto want = [&](size_t n) {
    if (toks.size() != n) fail(ErrorKind::Syntax, "frame '" + kind + "' takes " +
                                                       std::to_string(n - 1) + " parameters");
  };
  if (kind == "natle") {
    want(2);
    return Frame::nat_le(to_int(toks[1], "length"));
  }
  if (kind == "natlt") {
    want(2);
    return Frame::nat_lt(to_int(toks[1], "length"));
  }
  if (kind == "natrefl") {
    want(3);
    int len = to_int(toks[1], "length");
    std::vector<int> refl;
    std::istringstream rs(toks[2]);
    std::string item;
    while (std::getline(rs, item, ',')) refl.push_back(to_int(item, "world"));
    return Frame::nat_refl(len, std::move(refl));
  }
  if (kind == "gn") {
    want(3);
    return Frame::gn(to_int(toks[1], "n"), to_int(toks[2], "length"));
  }
  if (kind == "hn") {
    want(3);
    return Frame::hn(to_int(toks[1], "n"), to_int(toks[2], "length"));
  }
  if (kind == "ord") {
    want(4);
    return Frame::ordinal(to_int(toks[1], "copies"), to_int(toks[2], "tail"),
                          to_int(toks[3], "copy length"));
  }
  if (kind == "dense") {
    want(2);
    return Frame::dense(toks[1]);
  }
  fail(ErrorKind::Syntax, "unknown frame kind: " + kind);
}

std::string format_model_tables(const PredicateModel& m) {
  if (m.rule_based())
    fail(ErrorKind::Unsupported, "rule-based models are saved as generator files");
  std::ostringstream os;
  os << "# linmod model\n";
  os << "frame " << m.frame().describe() << "\n";
  if (m.frame().kind() == Frame::Kind::Explicit) {
    for (int w = 0; w < m.frame().world_count(); ++w)
      for (int v = 0; v < m.frame().world_count(); ++v)
        if (m.frame().accessible(w, v)) os << "edge " << w << " " << v << "\n";
  }
  os << "root " << m.root() << "\n";
  os << "truncated " << (m.domain_truncated() ? 1 : 0) << "\n";
  for (const Letter& l : m.sig().letters()) os << "letter " << l.name << " " << l.arity << "\n";
  if (m.has_constant_domain()) {
    os << "domain";
    for (int e : m.domain(0)) os << " " << e;
    os << "\n";
  } else {
    for (int w = 0; w < m.frame().world_count(); ++w) {
      os << "domain@" << w;
      for (int e : m.domain(w)) os << " " << e;
      os << "\n";
    }
  }
  for (LetterId id = 0; id < static_cast<LetterId>(m.sig().letters().size()); ++id)
    for (int w = 0; w < m.frame().world_count(); ++w)
      for (const std::vector<int>& args : m.tuples(w, id)) {
        os << "table " << w << " " << m.sig().letters()[static_cast<size_t>(id)].name;
        for (int a : args) os << " " << a;
        os << "\n";
      }
  return os.str();
}

void save_model_tables(const PredicateModel& m, const std::string& path) {
  spit(path, format_model_tables(m));
}

std::string format_model_generated(const PredicateModel& m, const std::string& gen_line) {
  std::ostringstream os;
  os << "# linmod model\n";
  os << "frame " << m.frame().describe() << "\n";
  os << "root " << m.root() << "\n";
  os << "truncated " << (m.domain_truncated() ? 1 : 0) << "\n";
  os << "domain";
  for (int e : m.domain(0)) os << " " << e;
  os << "\n";
  os << "gen " << gen_line << "\n";
  return os.str();
}

PredicateModel load_model(const std::string& path) {
  const std::string text = slurp(path);
  const std::filesystem::path base = std::filesystem::path(path).parent_path();

  std::optional<Frame> frame;
  std::vector<std::pair<int, int>> edges;
  int explicit_worlds = -1;
  int root = 0;
  bool truncated = false;
  std::optional<std::vector<int>> const_domain;
  std::map<int, std::vector<int>> world_domains;
  std::vector<Letter> letters;
  std::vector<std::vector<std::string>> table_lines;
  std::optional<std::vector<std::string>> gen;

  for (const std::string& line : content_lines(text)) {
    std::vector<std::string> toks = split_ws(line);
    const std::string& head = toks[0];
    if (head == "frame") {
      std::string rest = line.substr(5);
      size_t at = rest.find_first_not_of(" \t");
      if (at == std::string::npos) fail(ErrorKind::Syntax, "frame line lacks parameters");
      rest = rest.substr(at);
      std::vector<std::string> ftoks = split_ws(rest);
      if (ftoks[0] == "explicit") {
        if (ftoks.size() != 2) fail(ErrorKind::Syntax, "explicit frame takes a world count");
        explicit_worlds = to_int(ftoks[1], "world count");
      } else {
        frame = parse_frame_line(rest);
      }
    } else if (head == "edge") {
      if (toks.size() != 3) fail(ErrorKind::Syntax, "edge lines read 'edge w v'");
      edges.emplace_back(to_int(toks[1], "world"), to_int(toks[2], "world"));
    } else if (head == "root") {
      if (toks.size() != 2) fail(ErrorKind::Syntax, "root lines read 'root w'");
      root = to_int(toks[1], "world");
    } else if (head == "truncated") {
      if (toks.size() != 2) fail(ErrorKind::Syntax, "truncated lines read 'truncated 0|1'");
      truncated = to_int(toks[1], "flag") != 0;
    } else if (head == "letter") {
      if (toks.size() != 3) fail(ErrorKind::Syntax, "letter lines read 'letter name arity'");
      letters.push_back({toks[1], to_int(toks[2], "arity")});
    } else if (head == "domain") {
      std::vector<int> elems;
      for (size_t i = 1; i < toks.size(); ++i) elems.push_back(to_int(toks[i], "element"));
      const_domain = std::move(elems);
    } else if (head.rfind("domain@", 0) == 0) {
      int w = to_int(head.substr(7), "world");
      std::vector<int> elems;
      for (size_t i = 1; i < toks.size(); ++i) elems.push_back(to_int(toks[i], "element"));
      world_domains[w] = std::move(elems);
    } else if (head == "gen") {
      gen = std::vector<std::string>(toks.begin() + 1, toks.end());
    } else if (head == "table") {
      if (toks.size() < 3) fail(ErrorKind::Syntax, "table lines read 'table w letter args..'");
      table_lines.push_back(std::move(toks));
    } else {
      fail(ErrorKind::Syntax, "unrecognized model line: " + line);
    }
  }

  if (gen) {
    if (gen->empty()) fail(ErrorKind::Syntax, "generator line lacks a name");
    std::string name = (*gen)[0];
    std::map<std::string, std::string> kv;
    for (size_t i = 1; i < gen->size(); ++i) {
      size_t eq = (*gen)[i].find('=');
      if (eq == std::string::npos)
        fail(ErrorKind::Syntax, "generator arguments read key=value");
      kv[(*gen)[i].substr(0, eq)] = (*gen)[i].substr(eq + 1);
    }
    auto arg = [&](const char* key) -> std::string {
      auto it = kv.find(key);
      if (it == kv.end())
        fail(ErrorKind::Syntax, std::string("generator needs ") + key + "=...");
      return it->second;
    };
    auto resolve = [&](const std::string& rel) {
      std::filesystem::path p(rel);
      return p.is_absolute() ? p.string() : (base / p).string();
    };
    TileSet tiles = load_tiles(resolve(arg("tiles")));
    PeriodicTiling cert{load_grid(resolve(arg("cert")))};
    if (!const_domain || const_domain->empty())
      fail(ErrorKind::Syntax, "generated models need a constant domain line");
    const int K = const_domain->back();
    if (!frame) fail(ErrorKind::Syntax, "generated models need a frame line");

    PredicateModel m = [&] {
      if (name == "M0") return build_m0(tiles, cert, *frame, K);
      if (name == "M0prime") return build_m0_prime(tiles, cert, frame->world_count(), K);
      if (name == "M0star") {
        const int block = 2 * (tiles.size() - 1) + 8;
        if (frame->world_count() % block != 0)
          fail(ErrorKind::Input, "frame length is not a whole number of blocks");
        return build_m0_star(tiles, cert, *frame, frame->world_count() / block, K);
      }
      if (name == "dense") {
        std::string desc = frame->describe();
        if (desc.rfind("dense ", 0) != 0)
          fail(ErrorKind::Input, "dense generator needs a dense frame line");
        return build_dense_model(tiles, cert, desc.substr(6), K);
      }
      if (name == "ordinal")
        return build_ordinal_model(tiles, cert, frame->copies(), frame->tail(),
                                   frame->copy_len(), K);
      fail(ErrorKind::Syntax, "unknown generator: " + name);
    }();
    m.set_root(root);
    return m;
  }

  // explicit tables
  if (explicit_worlds >= 0) frame = Frame::finite_explicit(explicit_worlds, edges);
  if (!frame) fail(ErrorKind::Syntax, "model lacks a frame line");
  if (letters.empty()) fail(ErrorKind::Syntax, "table models need letter lines");
  Signature sig = Signature::with_default_vars();
  for (const Letter& l : letters) sig.add_letter(l.name, l.arity);
  PredicateModel m(*frame, sig);
  m.set_root(root);
  m.set_domain_truncated(truncated);
  if (const_domain) m.set_constant_domain(*const_domain);
  for (auto& [w, elems] : world_domains) m.set_world_domain(w, elems);
  for (const std::vector<std::string>& toks : table_lines) {
    int w = to_int(toks[1], "world");
    auto letter = m.sig().find_letter(toks[2]);
    if (!letter) fail(ErrorKind::Undeclared, "table line names unknown letter " + toks[2]);
    std::vector<int> args;
    for (size_t i = 3; i < toks.size(); ++i) args.push_back(to_int(toks[i], "element"));
    m.set_true(w, *letter, std::move(args));
  }
  m.validate_expanding();
  return m;
}

// ── Reports ──────────────────────────────────────────────────────────────────

ReportMode report_mode_from_name(const std::string& name) {
  if (name == "text") return ReportMode::Text;
  if (name == "structured") return ReportMode::Structured;
  fail(ErrorKind::Input, "report mode must be text or structured");
}

std::string format_check_report(const std::vector<ConjunctVerdict>& rows, ReportMode mode,
                                bool include_traces) {
  if (mode == ReportMode::Structured) {
    json out;
    out["conjuncts"] = json::array();
    int false_count = 0;
    for (const ConjunctVerdict& row : rows) {
      json r;
      r["name"] = row.name;
      r["verdict"] = truth_word(row.verdict.truth);
      r["obligations"] = row.verdict.obligations;
      if (include_traces && !row.verdict.trace.empty()) r["trace"] = row.verdict.trace;
      out["conjuncts"].push_back(std::move(r));
      if (row.verdict.truth == Truth::False) ++false_count;
    }
    out["false_count"] = false_count;
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const ConjunctVerdict& row : rows) {
    os << row.name << ": " << truth_word(row.verdict.truth) << " (";
    if (row.verdict.truth == Truth::Unknown) os << "no False subverdict; ";
    os << row.verdict.obligations << " obligations checked)\n";
    if (include_traces)
      for (const std::string& line : row.verdict.trace) os << "  | " << line << "\n";
  }
  return os.str();
}

std::string format_metrics_report(const Metrics& metrics, ReportMode mode) {
  if (mode == ReportMode::Structured) {
    json out;
    out["variables"] = metrics.variable_count;
    out["modal_depth"] = metrics.modal_depth;
    out["conjuncts"] = metrics.conjunct_count;
    out["census"] = json::array();
    for (const LetterUse& u : metrics.census) {
      json r;
      r["name"] = u.name;
      r["arity"] = u.arity;
      r["count"] = u.count;
      out["census"].push_back(std::move(r));
    }
    return out.dump(2) + "\n";
  }
  return format_metrics(metrics);
}

std::string format_suite_report(const SuiteResult& suite, ReportMode mode) {
  if (mode == ReportMode::Structured) {
    json out;
    out["lines"] = suite.lines;
    out["instances"] = suite.instances;
    out["ok"] = suite.ok();
    out["violations"] = json::array();
    for (const PropertyViolation& v : suite.violations) {
      json r;
      r["property"] = v.property;
      r["detail"] = v.detail;
      out["violations"].push_back(std::move(r));
    }
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const std::string& line : suite.lines) os << line << "\n";
  if (suite.violations.empty()) {
    os << "violations: none\n";
  } else {
    for (const PropertyViolation& v : suite.violations)
      os << "violation " << v.property << ": " << v.detail << "\n";
  }
  return os.str();
}

std::string format_extract_report(const ExtractResult& res, ReportMode mode) {
  if (mode == ReportMode::Structured) {
    json out;
    out["rows_requested"] = res.rows_requested;
    out["rows_certified"] = res.rows_certified;
    out["grid"] = json::array();
    for (int y = 0; y < res.window.height(); ++y) {
      json row = json::array();
      for (int x = 0; x < res.window.width(); ++x) row.push_back(res.window.at(x, y));
      out["grid"].push_back(std::move(row));
    }
    out["seams_ok"] = res.check.ok();
    out["cells"] = json::array();
    for (const CellProvenance& c : res.cells) {
      json r;
      r["col"] = c.col;
      r["row"] = c.row;
      r["world"] = c.world;
      r["tile"] = c.tile;
      r["atom"] = c.atom;
      out["cells"].push_back(std::move(r));
    }
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  os << format_grid(res.window);
  os << "rows certified: " << res.rows_certified << " of " << res.rows_requested << "\n";
  os << "seams: " << (res.check.ok() ? "ok" : "violated") << "\n";
  for (const SeamViolation& v : res.check.violations)
    os << "  seam (" << v.x0 << "," << v.y0 << ")-(" << v.x1 << "," << v.y1 << ") "
       << (v.horizontal ? "right/left" : "up/down") << "\n";
  return os.str();
}

}  // namespace linmod
