// Command line front end for the tiling reduction workbench.
//
// Subcommands: gen (tile set to formula artifact), build (tile set to witness
// model file), check (model x artifact to per-conjunct verdicts), props
// (witness model property suites), extract (model to tiling window), solve
// (finite tiling search), sep (separation formulas plus countermodel search),
// pipeline (gen, build, check, extract, diff in one run).
//
// Exit codes: 0 success, 2 input error, 3 a check came back negative (False
// verdict, property violation, seam or roundtrip mismatch, unsatisfiable),
// 4 a search or step guard tripped.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "linmod/countermodel.hpp"
#include "linmod/error.hpp"
#include "linmod/eval.hpp"
#include "linmod/extraction.hpp"
#include "linmod/io.hpp"
#include "linmod/letters.hpp"
#include "linmod/metrics.hpp"
#include "linmod/model.hpp"
#include "linmod/parse.hpp"
#include "linmod/properties.hpp"
#include "linmod/reductions.hpp"
#include "linmod/tiling.hpp"

namespace lm = linmod;

namespace {

struct Options {
  std::string tiles;
  std::string cert;
  std::string variant = "A";
  std::string frame = "natlt";
  std::string model;
  std::string artifact;
  std::string out;
  std::string report = "text";
  std::string formula = "Z";
  int horizon = 0;
  int domain_bound = 0;
  int blocks = 0;
  int cols = 8;
  int rows = 8;
  int width = 4;
  int height = 4;
  int len = 5;
  int n = 0;
  int max_domain = 1;
  int max_w = 100;
  int max_n = 10;
  int max_j = 5;
  int max_m = 8;
  int max_a = 10;
  int cert_block = 4;
  int world = -1;
  std::uint64_t step_limit = lm::EvalBounds{}.step_limit;
  std::uint64_t seed = 0;
  bool wrap = false;
  bool require_tile0 = false;
  bool certificate = false;
  bool traces = false;
};

int to_i(const std::string& text, const char* what) {
  try {
    size_t used = 0;
    int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    lm::fail(lm::ErrorKind::Input, std::string(what) + " is not a number: " + text);
  }
}

std::vector<int> int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(to_i(cur, what));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

struct FrameSpec {
  std::string family;
  std::string params;
};

FrameSpec split_frame_spec(const std::string& text) {
  FrameSpec fs;
  size_t colon = text.find(':');
  fs.family = text.substr(0, colon);
  if (colon != std::string::npos) fs.params = text.substr(colon + 1);
  std::transform(fs.family.begin(), fs.family.end(), fs.family.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return fs;
}

// Families: natle, natlt, natrefl:<w,w,..>, gn:<n>, hn:<n>, ord:<m>,<k>,
// dense:<pattern>.  length supplies the prefix length; ord uses it as the
// segment length.
lm::Frame make_frame(const std::string& spec, int length) {
  FrameSpec fs = split_frame_spec(spec);
  if (fs.family == "natle") return lm::Frame::nat_le(length);
  if (fs.family == "natlt") return lm::Frame::nat_lt(length);
  if (fs.family == "natrefl")
    return lm::Frame::nat_refl(length, int_list(fs.params, "reflexive world"));
  if (fs.family == "gn") return lm::Frame::gn(to_i(fs.params, "switch position"), length);
  if (fs.family == "hn") return lm::Frame::hn(to_i(fs.params, "switch position"), length);
  if (fs.family == "ord") {
    std::vector<int> mk = int_list(fs.params, "segment count");
    if (mk.size() != 2) lm::fail(lm::ErrorKind::Input, "ord frames read ord:<m>,<k>");
    return lm::Frame::ordinal(mk[0], mk[1], length);
  }
  if (fs.family == "dense") return lm::Frame::dense(fs.params);
  lm::fail(lm::ErrorKind::Input, "unknown frame family: " + fs.family);
}

std::string abs_path(const std::string& p) {
  return std::filesystem::absolute(p).lexically_normal().string();
}

void emit(const std::string& report, const std::string& out) {
  std::cout << report;
  if (!out.empty()) lm::spit(out, report);
}

// Loads the certificate block, or searches for one and stores it at save_to
// so the model file can reference it.
lm::PeriodicTiling obtain_cert(const lm::TileSet& tiles, Options& o,
                               const std::string& save_to) {
  if (!o.cert.empty()) return lm::PeriodicTiling{lm::load_grid(o.cert)};
  auto found = lm::find_certificate(tiles, o.cert_block, o.cert_block);
  if (!found)
    lm::fail(lm::ErrorKind::Input, "no periodic certificate with blocks up to " +
                                       std::to_string(o.cert_block) + "x" +
                                       std::to_string(o.cert_block));
  if (!save_to.empty()) {
    lm::save_grid(found->block, save_to);
    o.cert = save_to;
  }
  return *found;
}

struct Witness {
  lm::PredicateModel model;
  std::string gen_line;
};

// Picks the generator from the frame family first (dense and ordinal frames
// carry their own witness constructions), then from the reduction stage.
// force_blocks overrides the block count of the single-letter model.
Witness build_witness(const lm::TileSet& tiles, const lm::PeriodicTiling& cert,
                      lm::Variant variant, const Options& o, int force_blocks = 0) {
  const int s = tiles.size() - 1;
  const int block = 2 * s + 8;
  const int H = o.horizon > 0 ? o.horizon : block * (o.rows + 2);
  const int K = o.domain_bound > 0 ? o.domain_bound : o.cols + 2;
  // The single-letter model reveals the successor pair of element a only in
  // the block of a's first alpha occurrence, so extraction of an n-column
  // window needs blocks well past rows+2.
  int need = o.rows + 2;
  const int marks = std::max(o.cols, o.rows);
  if (marks >= 2)
    need = std::max(need, static_cast<int>(lm::alpha_first_index(marks - 2)) + 2);
  const int B = force_blocks > 0 ? force_blocks : (o.blocks > 0 ? o.blocks : need);

  std::string paths =
      " tiles=" + abs_path(o.tiles) + " cert=" + abs_path(o.cert);
  FrameSpec fs = split_frame_spec(o.frame);

  if (fs.family == "dense")
    return {lm::build_dense_model(tiles, cert, fs.params, K), "dense" + paths};
  if (fs.family == "ord") {
    std::vector<int> mk = int_list(fs.params, "segment count");
    if (mk.size() != 2) lm::fail(lm::ErrorKind::Input, "ord frames read ord:<m>,<k>");
    return {lm::build_ordinal_model(tiles, cert, mk[0], mk[1], H, K), "ordinal" + paths};
  }
  switch (variant) {
    case lm::Variant::APrime:
      return {lm::build_m0_prime(tiles, cert, H, K), "M0prime" + paths};
    case lm::Variant::AStar:
    case lm::Variant::APlus: {
      // Thresholds at block m point at the witness element m+1, so the
      // domain must reach past the deepest block read.
      const int KB = o.domain_bound > 0 ? K : std::max(K, B + 1);
      return {lm::build_m0_star(tiles, cert, make_frame(o.frame, block * B), B, KB),
              "M0star" + paths};
    }
    default:
      return {lm::build_m0(tiles, cert, make_frame(o.frame, H), K), "M0" + paths};
  }
}

void require_family_layout(const lm::PredicateModel& m, const lm::FamilySignature& fam) {
  const auto& have = m.sig().letters();
  const auto& want = fam.sig.letters();
  bool ok = have.size() == want.size();
  for (size_t i = 0; ok && i < have.size(); ++i)
    ok = have[i].name == want[i].name && have[i].arity == want[i].arity;
  if (!ok)
    lm::fail(lm::ErrorKind::Input,
             "model letters do not match the tile family layout; use a generated witness model");
}

std::vector<lm::ConjunctVerdict> check_conjuncts(const lm::PredicateModel& m, int world,
                                                 const lm::ReductionArtifact& art,
                                                 std::uint64_t step_limit) {
  std::vector<lm::LetterId> map;
  for (const lm::Letter& l : art.sig().letters()) {
    auto found = m.sig().find_letter(l.name);
    if (!found) lm::fail(lm::ErrorKind::Input, "model does not declare letter " + l.name);
    map.push_back(*found);
  }
  lm::EvalBounds bounds;
  bounds.step_limit = step_limit;
  lm::Assignment empty;
  std::vector<lm::ConjunctVerdict> rows;
  for (const lm::NamedConjunct& c : art.conjuncts) {
    lm::Formula f = lm::remap_letters(c.formula, map);
    rows.push_back({c.name, lm::eval3(m, world, empty, f, bounds, art.box_mode)});
  }
  return rows;
}

bool any_false(const std::vector<lm::ConjunctVerdict>& rows) {
  return std::any_of(rows.begin(), rows.end(), [](const lm::ConjunctVerdict& r) {
    return r.verdict.truth == lm::Truth::False;
  });
}

int run_gen(Options& o) {
  lm::TileSet tiles = lm::load_tiles(o.tiles);
  lm::ReductionArtifact art = lm::gen_variant(tiles, lm::variant_from_name(o.variant));
  if (!o.out.empty()) lm::save_artifact(art, o.out);
  lm::Metrics m = lm::measure(art.conjunction(), art.sig(), art.box_mode);
  std::cout << lm::format_metrics_report(m, lm::report_mode_from_name(o.report));
  return 0;
}

int run_build(Options& o) {
  if (o.out.empty()) lm::fail(lm::ErrorKind::Input, "build needs --out for the model file");
  lm::TileSet tiles = lm::load_tiles(o.tiles);
  lm::PeriodicTiling cert = obtain_cert(tiles, o, o.out + ".cert");
  Witness w = build_witness(tiles, cert, lm::variant_from_name(o.variant), o);
  lm::spit(o.out, lm::format_model_generated(w.model, w.gen_line));
  std::cout << "model: " << o.out << " (" << w.model.frame().describe() << ")\n";
  return 0;
}

int run_check(Options& o) {
  lm::PredicateModel m = lm::load_model(o.model);
  lm::ReductionArtifact art = lm::load_artifact(o.artifact);
  int world = o.world >= 0 ? o.world : m.root();
  auto rows = check_conjuncts(m, world, art, o.step_limit);
  emit(lm::format_check_report(rows, lm::report_mode_from_name(o.report), o.traces), o.out);
  return any_false(rows) ? 3 : 0;
}

int run_props(Options& o) {
  lm::TileSet tiles = lm::load_tiles(o.tiles);
  lm::PeriodicTiling cert = obtain_cert(tiles, o, "");
  lm::FamilySignature fam = lm::family_signature(tiles.size());
  const int s = tiles.size() - 1;

  lm::ChainBounds cb;
  cb.max_w = o.max_w;
  cb.max_n = o.max_n;
  cb.max_j = o.max_j;
  lm::PredicateModel m0 = lm::build_m0(tiles, cert, lm::Frame::nat_le(o.max_w + 1),
                                       o.max_n + o.max_j + 1);
  lm::SuiteResult all = lm::mark_chain_suite(m0, fam, cb);
  all.merge(lm::step_relation_shape(m0, lm::StepGuard::PhaseLetter));

  lm::StarBounds sb;
  sb.max_m = o.max_m;
  sb.max_a = o.max_a;
  const int blocks = o.max_m + 3;
  lm::PredicateModel star = lm::build_m0_star(
      tiles, cert, lm::Frame::nat_le(blocks * (2 * s + 8)), blocks, o.max_a + 2);
  lm::PredicateModel prime = lm::build_m0_prime(tiles, cert, 2 * o.max_m + 4, o.max_a + 2);
  all.merge(lm::star_block_suite(star, prime, fam, sb));
  all.merge(lm::step_relation_shape(star, lm::StepGuard::AllMono));

  emit(lm::format_suite_report(all, lm::report_mode_from_name(o.report)), o.out);
  return all.ok() ? 0 : 3;
}

int run_extract(Options& o) {
  lm::PredicateModel m = lm::load_model(o.model);
  lm::TileSet tiles = lm::load_tiles(o.tiles);
  lm::FamilySignature fam = lm::family_signature(tiles.size());
  require_family_layout(m, fam);
  lm::Variant variant = lm::variant_from_name(o.variant);
  lm::MarkTrace trace = lm::extract_marks(m, fam, variant, std::max(o.cols, o.rows));
  lm::ExtractResult res = lm::extract_tiling(m, trace, fam, tiles, variant, o.cols, o.rows);
  if (!o.out.empty()) lm::save_grid(res.window, o.out);
  std::cout << lm::format_extract_report(res, lm::report_mode_from_name(o.report));
  return res.check.ok() ? 0 : 3;
}

int run_solve(Options& o) {
  lm::TileSet tiles = lm::load_tiles(o.tiles);
  if (o.certificate) {
    auto found = lm::find_certificate(tiles, o.cert_block, o.cert_block);
    if (!found) {
      std::cout << "certificate: none with blocks up to " << o.cert_block << "x"
                << o.cert_block << "\n";
      return 3;
    }
    if (!o.out.empty()) lm::save_grid(found->block, o.out);
    std::cout << "certificate: " << found->block.width() << "x" << found->block.height()
              << "\n"
              << lm::format_grid(found->block);
    return 0;
  }
  lm::SolveOptions sopt;
  sopt.wrap = o.wrap;
  sopt.require_tile0_col0 = o.require_tile0;
  auto grid = lm::solve(tiles, o.width, o.height, sopt);
  if (!grid) {
    std::cout << "unsatisfiable: no " << o.width << "x" << o.height << " tiling\n";
    return 3;
  }
  if (!o.out.empty()) lm::save_grid(*grid, o.out);
  std::cout << lm::format_grid(*grid);
  return 0;
}

// Rebuilds a searched countermodel as an explicit table model so it can be
// written with the standard writer.
lm::PredicateModel tabulate(const lm::Countermodel& c, const lm::Signature& sig) {
  lm::PredicateModel t(c.model.frame(), sig);
  t.set_constant_domain(c.model.domain(0));
  for (int w = 0; w < c.model.frame().world_count(); ++w) {
    for (lm::LetterId id = 0; id < static_cast<lm::LetterId>(sig.letters().size()); ++id) {
      if (sig.letters()[static_cast<size_t>(id)].arity == 0) {
        if (c.model.holds(w, id, {})) t.set_true(w, id, {});
        continue;
      }
      for (int e : c.model.domain(w)) {
        int args[] = {e};
        if (c.model.holds(w, id, args)) t.set_true(w, id, {e});
      }
    }
  }
  t.set_root(c.world);
  return t;
}

int run_sep(Options& o) {
  std::string name = o.formula;
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  lm::SeparationKind kind;
  if (name == "ref")
    kind = lm::SeparationKind::Ref;
  else if (name == "z")
    kind = lm::SeparationKind::Z;
  else if (name == "boxnref")
    kind = lm::SeparationKind::BoxNRef;
  else if (name == "xboxnz")
    kind = lm::SeparationKind::XBoxNZ;
  else
    lm::fail(lm::ErrorKind::Input, "unknown separation formula: " + o.formula);

  lm::Separation sep = lm::gen_separation(kind, o.n);
  lm::Frame frame = make_frame(o.frame, o.len).materialize();
  lm::CountermodelOptions copt;
  copt.max_domain = o.max_domain;
  if (o.world >= 0) copt.at_world = o.world;
  auto found = lm::countermodel_search(sep.formula, sep.sig, frame, copt);

  const bool json_mode = lm::report_mode_from_name(o.report) == lm::ReportMode::Structured;
  if (json_mode) {
    nlohmann::json j;
    j["formula"] = sep.name;
    j["text"] = lm::print(sep.formula, sep.sig);
    j["frame"] = frame.describe();
    j["found"] = static_cast<bool>(found);
    if (found) {
      j["world"] = found->world;
      j["domain_size"] = found->domain_size;
      j["valuation"] = found->valuation;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "formula: " << sep.name << "\n"
              << "  " << lm::print(sep.formula, sep.sig) << "\n"
              << "frame: " << frame.describe() << "\n";
    if (found)
      std::cout << "countermodel: world " << found->world << ", domain size "
                << found->domain_size << ", valuation " << found->valuation << "\n";
    else
      std::cout << "countermodel: none\n";
  }
  if (found && !o.out.empty())
    lm::save_model_tables(tabulate(*found, sep.sig), o.out);
  return 0;
}

int run_pipeline(Options& o) {
  namespace fs = std::filesystem;
  std::string dir = o.out;
  if (!dir.empty()) fs::create_directories(dir);
  auto in_dir = [&](const char* name) { return dir.empty() ? std::string() : dir + "/" + name; };

  lm::TileSet tiles = lm::load_tiles(o.tiles);
  lm::PeriodicTiling cert = obtain_cert(tiles, o, in_dir("cert.grid"));
  lm::Variant variant = lm::variant_from_name(o.variant);
  lm::ReductionArtifact art = lm::gen_variant(tiles, variant);
  if (!dir.empty()) lm::save_artifact(art, in_dir("artifact.art"));

  Witness w = build_witness(tiles, cert, variant, o);
  if (!dir.empty() && !o.cert.empty())
    lm::spit(in_dir("model.model"), lm::format_model_generated(w.model, w.gen_line));

  // The extraction prefix of the single-letter model is far deeper than the
  // check needs; unless the user pinned --blocks, check on the small one.
  const bool star = variant == lm::Variant::AStar || variant == lm::Variant::APlus;
  std::optional<Witness> small;
  if (star && o.blocks == 0) small = build_witness(tiles, cert, variant, o, o.rows + 2);
  const lm::PredicateModel& cm = small ? small->model : w.model;
  auto rows = check_conjuncts(cm, cm.root(), art, o.step_limit);

  lm::FamilySignature fam = lm::family_signature(tiles.size());
  lm::MarkTrace trace = lm::extract_marks(w.model, fam, variant, std::max(o.cols, o.rows));
  lm::ExtractResult res =
      lm::extract_tiling(w.model, trace, fam, tiles, variant, o.cols, o.rows);
  if (!dir.empty()) lm::save_grid(res.window, in_dir("window.grid"));

  lm::TilingGrid want = cert.unfold(o.cols, res.rows_certified);
  std::vector<std::array<int, 4>> diff;  // col, row, got, want
  for (int y = 0; y < res.rows_certified; ++y)
    for (int x = 0; x < o.cols; ++x)
      if (res.window.at(x, y) != want.at(x, y))
        diff.push_back({x, y, res.window.at(x, y), want.at(x, y)});

  const bool ok = !any_false(rows) && res.check.ok() && diff.empty();
  const lm::ReportMode mode = lm::report_mode_from_name(o.report);
  std::string report;
  if (mode == lm::ReportMode::Structured) {
    nlohmann::json j;
    j["metrics"] = nlohmann::json::parse(
        lm::format_metrics_report(lm::measure(art.conjunction(), art.sig(), art.box_mode),
                                  lm::ReportMode::Structured));
    j["check"] = nlohmann::json::parse(
        lm::format_check_report(rows, lm::ReportMode::Structured, false));
    j["extract"] =
        nlohmann::json::parse(lm::format_extract_report(res, lm::ReportMode::Structured));
    j["diff"] = nlohmann::json::array();
    for (const auto& d : diff)
      j["diff"].push_back({{"col", d[0]}, {"row", d[1]}, {"got", d[2]}, {"want", d[3]}});
    j["seed"] = o.seed;
    j["ok"] = ok;
    report = j.dump(2) + "\n";
  } else {
    report = "== metrics ==\n" +
             lm::format_metrics_report(lm::measure(art.conjunction(), art.sig(), art.box_mode),
                                       mode) +
             "== check ==\n" + lm::format_check_report(rows, mode, false) + "== extract ==\n" +
             lm::format_extract_report(res, mode) + "== diff ==\n";
    if (diff.empty()) {
      report += "diff: empty\n";
    } else {
      for (const auto& d : diff)
        report += "diff: cell (" + std::to_string(d[0]) + "," + std::to_string(d[1]) +
                  "): got " + std::to_string(d[2]) + " want " + std::to_string(d[3]) + "\n";
    }
    report += std::string("pipeline: ") + (ok ? "ok" : "FAILED") + "\n";
  }
  std::cout << report;
  if (!dir.empty())
    lm::spit(in_dir(mode == lm::ReportMode::Structured ? "report.json" : "report.txt"), report);
  return ok ? 0 : 3;
}

int code_for(lm::ErrorKind kind) {
  return kind == lm::ErrorKind::Guard ? 4 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"workbench for tiling reductions over linear predicate Kripke frames"};
  app.require_subcommand(1);

  auto add_tiles = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--tiles", o.tiles, "tile set file");
    if (required) opt->required();
  };
  auto add_variant = [&](CLI::App* c) {
    c->add_option("--variant", o.variant, "A, Aprime, Astar, Aplus, B, Abullet")
        ->default_val("A");
  };
  auto add_report = [&](CLI::App* c) {
    c->add_option("--report", o.report, "text or structured")->default_val("text");
  };
  auto add_bounds = [&](CLI::App* c) {
    c->add_option("--frame", o.frame,
                  "natle, natlt, natrefl:<w,..>, gn:<n>, hn:<n>, ord:<m>,<k>, dense:<pattern>")
        ->default_val("natle");
    c->add_option("--horizon", o.horizon, "prefix length (default (2s+8)*(rows+2))");
    c->add_option("--domain-bound", o.domain_bound, "domain top K (default cols+2)");
    c->add_option("--blocks", o.blocks, "block count of the single-letter model");
    c->add_option("--cols", o.cols, "window width")->default_val(8);
    c->add_option("--rows", o.rows, "window height")->default_val(8);
  };
  auto add_cert = [&](CLI::App* c) {
    c->add_option("--cert", o.cert, "periodic certificate grid (searched when absent)");
    c->add_option("--cert-block", o.cert_block, "certificate search bound")->default_val(4);
  };
  auto add_seed = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "recorded for reproducibility; all runs are deterministic");
  };

  CLI::App* gen = app.add_subcommand("gen", "emit the formula artifact of a tile set");
  add_tiles(gen, true);
  add_variant(gen);
  add_report(gen);
  gen->add_option("--out", o.out, "artifact file to write");

  CLI::App* build = app.add_subcommand("build", "build a witness model file");
  add_tiles(build, true);
  add_cert(build);
  add_variant(build);
  add_bounds(build);
  build->add_option("--out", o.out, "model file to write")->required();

  CLI::App* check = app.add_subcommand("check", "evaluate an artifact on a model");
  check->add_option("--model", o.model, "model file")->required();
  check->add_option("--artifact", o.artifact, "artifact file")->required();
  check->add_option("--world", o.world, "evaluation world (default the model root)");
  check->add_option("--step-limit", o.step_limit, "evaluator step guard");
  check->add_flag("--traces", o.traces, "include decisive traces");
  add_report(check);
  check->add_option("--out", o.out, "also write the report here");

  CLI::App* props = app.add_subcommand("props", "run the witness model property suites");
  add_tiles(props, true);
  add_cert(props);
  add_report(props);
  props->add_option("--max-w", o.max_w, "world bound of the chain suite")->default_val(100);
  props->add_option("--max-n", o.max_n, "mark bound")->default_val(10);
  props->add_option("--max-j", o.max_j, "uniqueness offset bound")->default_val(5);
  props->add_option("--max-m", o.max_m, "block bound of the block suite")->default_val(8);
  props->add_option("--max-a", o.max_a, "element bound of the block suite")->default_val(10);
  props->add_option("--out", o.out, "also write the report here");

  CLI::App* extract = app.add_subcommand("extract", "recover the tiling window of a model");
  extract->add_option("--model", o.model, "model file")->required();
  add_tiles(extract, true);
  add_variant(extract);
  add_report(extract);
  extract->add_option("--cols", o.cols, "window width")->default_val(8);
  extract->add_option("--rows", o.rows, "window height")->default_val(8);
  extract->add_option("--out", o.out, "window grid file to write");

  CLI::App* solve = app.add_subcommand("solve", "search for finite tilings");
  add_tiles(solve, true);
  solve->add_option("--width", o.width, "grid width")->default_val(4);
  solve->add_option("--height", o.height, "grid height")->default_val(4);
  solve->add_flag("--wrap", o.wrap, "require wraparound seams");
  solve->add_flag("--require-tile0", o.require_tile0, "tile 0 must appear in column 0");
  solve->add_flag("--certificate", o.certificate, "search for a periodic certificate instead");
  solve->add_option("--cert-block", o.cert_block, "certificate search bound")->default_val(4);
  add_seed(solve);
  solve->add_option("--out", o.out, "grid file to write");

  CLI::App* sep = app.add_subcommand("sep", "separation formulas and countermodel search");
  sep->add_option("--formula", o.formula, "ref, Z, boxnref, xboxnz")->default_val("Z");
  sep->add_option("--n", o.n, "iteration depth of boxnref and xboxnz")->default_val(0);
  sep->add_option("--frame", o.frame, "frame family, as in build")->default_val("natlt");
  sep->add_option("--len", o.len, "frame length")->default_val(5);
  sep->add_option("--max-domain", o.max_domain, "largest constant domain tried")
      ->default_val(1);
  sep->add_option("--world", o.world, "restrict the refuting world");
  add_report(sep);
  add_seed(sep);
  sep->add_option("--out", o.out, "witness model file to write when found");

  CLI::App* pipeline =
      app.add_subcommand("pipeline", "gen, build, check, extract, diff in one run");
  add_tiles(pipeline, true);
  add_cert(pipeline);
  add_variant(pipeline);
  add_bounds(pipeline);
  add_report(pipeline);
  add_seed(pipeline);
  pipeline->add_option("--out", o.out, "directory for the produced files");
  pipeline->add_option("--step-limit", o.step_limit, "evaluator step guard");

  try {
    app.parse(argc, argv);
    if (gen->parsed()) return run_gen(o);
    if (build->parsed()) return run_build(o);
    if (check->parsed()) return run_check(o);
    if (props->parsed()) return run_props(o);
    if (extract->parsed()) return run_extract(o);
    if (solve->parsed()) return run_solve(o);
    if (sep->parsed()) return run_sep(o);
    if (pipeline->parsed()) return run_pipeline(o);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const lm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return code_for(e.kind());
  }
  return 0;
}
