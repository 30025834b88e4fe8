#include <benchmark/benchmark.h>

#include "linmod/countermodel.hpp"
#include "linmod/eval.hpp"
#include "linmod/extraction.hpp"
#include "linmod/model.hpp"
#include "linmod/properties.hpp"
#include "linmod/reductions.hpp"
#include "linmod/tiling.hpp"

using namespace linmod;

namespace {

TileSet stripe_tiles() {
  TileSet t;
  t.tiles.push_back({0, 0, 1, 0});
  t.tiles.push_back({0, 0, 0, 1});
  return t;
}

TileSet checker_tiles() {
  TileSet t;
  t.tiles.push_back({0, 1, 1, 0});
  t.tiles.push_back({1, 0, 1, 0});
  t.tiles.push_back({0, 1, 0, 1});
  t.tiles.push_back({1, 0, 0, 1});
  return t;
}

PeriodicTiling stripe_cert() {
  TilingGrid g(1, 2);
  g.set(0, 0, 0);
  g.set(0, 1, 1);
  return {g};
}

void BM_GenBaseArtifact(benchmark::State& state) {
  TileSet tiles = stripe_tiles();
  for (auto _ : state) benchmark::DoNotOptimize(gen_variant(tiles, Variant::A));
}
BENCHMARK(BM_GenBaseArtifact);

void BM_GenSingleLetterArtifact(benchmark::State& state) {
  TileSet tiles = stripe_tiles();
  for (auto _ : state) benchmark::DoNotOptimize(gen_variant(tiles, Variant::AStar));
}
BENCHMARK(BM_GenSingleLetterArtifact);

void BM_Eval3ChainConjunction(benchmark::State& state) {
  TileSet tiles = stripe_tiles();
  ReductionArtifact art = gen_variant(tiles, Variant::A);
  PredicateModel m = build_m0(tiles, stripe_cert(), Frame::nat_le(60), 8);
  Formula f = art.conjunction();
  Assignment empty;
  for (auto _ : state) benchmark::DoNotOptimize(eval3(m, 0, empty, f));
}
BENCHMARK(BM_Eval3ChainConjunction);

void BM_ThresholdTables(benchmark::State& state) {
  TileSet tiles = stripe_tiles();
  FamilySignature fam = family_signature(2);
  PredicateModel m = build_m0_star(tiles, stripe_cert(), Frame::nat_le(80), 8, 10);
  for (auto _ : state) {
    ThresholdReader reader(m, fam);
    benchmark::DoNotOptimize(reader.beta_at(0, 0, 0));
  }
}
BENCHMARK(BM_ThresholdTables);

void BM_CountermodelChainSchema(benchmark::State& state) {
  Separation z = gen_separation(SeparationKind::Z);
  Frame frame = Frame::nat_le(5).materialize();
  for (auto _ : state) benchmark::DoNotOptimize(countermodel_search(z.formula, z.sig, frame));
}
BENCHMARK(BM_CountermodelChainSchema);

void BM_SolveCheckerWrap(benchmark::State& state) {
  TileSet tiles = checker_tiles();
  SolveOptions opt;
  opt.wrap = true;
  opt.require_tile0_col0 = true;
  for (auto _ : state) benchmark::DoNotOptimize(solve(tiles, 6, 6, opt));
}
BENCHMARK(BM_SolveCheckerWrap);

void BM_ExtractChainWindow(benchmark::State& state) {
  TileSet tiles = stripe_tiles();
  FamilySignature fam = family_signature(2);
  PredicateModel m = build_m0(tiles, stripe_cert(), Frame::nat_le(100), 10);
  for (auto _ : state) {
    MarkTrace trace = extract_marks(m, fam, Variant::A, 8);
    benchmark::DoNotOptimize(extract_tiling(m, trace, fam, tiles, Variant::A, 8, 8));
  }
}
BENCHMARK(BM_ExtractChainWindow);

}  // namespace

BENCHMARK_MAIN();
