#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <random>
#include <vector>

#include "linmod/tiling.hpp"

#include "support/fixtures.hpp"

using namespace linmod;

namespace {

// Exhaustive reference solver: every assignment of tiles to cells, checked
// through check_grid.  Only viable for tiny grids.
std::optional<TilingGrid> brute_solve(const TileSet& tiles, int w, int h, bool wrap,
                                      bool tile0_col0) {
  long long cells = static_cast<long long>(w) * h;
  long long total = 1;
  for (long long i = 0; i < cells; ++i) total *= tiles.size();
  for (long long code = 0; code < total; ++code) {
    TilingGrid g(w, h);
    long long c = code;
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) {
        g.set(x, y, static_cast<int>(c % tiles.size()));
        c /= tiles.size();
      }
    if (!check_grid(tiles, g, wrap).ok()) continue;
    if (tile0_col0) {
      bool found = false;
      for (int y = 0; y < h; ++y) found = found || g.at(0, y) == 0;
      if (!found) continue;
    }
    return g;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("grid access is bounds checked") {
  TilingGrid g(2, 3);
  CHECK(g.width() == 2);
  CHECK(g.height() == 3);
  CHECK(g.at(1, 2) == -1);
  CHECK(fixtures::error_kind([&] { g.at(2, 0); }) == ErrorKind::Input);
  CHECK(fixtures::error_kind([&] { g.at(0, -1); }) == ErrorKind::Input);
  CHECK(fixtures::error_kind([&] { TilingGrid(0, 1); }) == ErrorKind::Input);
  TileSet one = fixtures::mono_tiles();
  CHECK(fixtures::error_kind([&] { one.at(1); }) == ErrorKind::Input);
}

TEST_CASE("seam checking matches edges by orientation") {
  TileSet ts = fixtures::stripe_tiles();  // t0 up=1, t1 down=1

  SUBCASE("vertical neighbors need up of the lower row to equal down above") {
    TilingGrid ok(1, 2);
    ok.set(0, 0, 0);  // row 0
    ok.set(0, 1, 1);  // row 1
    CHECK(check_grid(ts, ok, false).ok());

    TilingGrid bad(1, 2);
    bad.set(0, 0, 0);
    bad.set(0, 1, 0);
    GridCheck c = check_grid(ts, bad, false);
    CHECK_FALSE(c.ok());
    CHECK(c.horizontal_ok);
    CHECK_FALSE(c.vertical_ok);
    REQUIRE(c.violations.size() == 1);
    CHECK_FALSE(c.violations[0].horizontal);
    CHECK(c.violations[0].y0 == 0);
    CHECK(c.violations[0].y1 == 1);
  }

  SUBCASE("horizontal neighbors need right to equal left") {
    TileSet lr;
    lr.tiles.push_back({0, 1, 0, 0});
    lr.tiles.push_back({1, 0, 0, 0});
    TilingGrid ok(2, 1);
    ok.set(0, 0, 0);
    ok.set(1, 0, 1);
    CHECK(check_grid(lr, ok, false).ok());
    TilingGrid bad(2, 1);
    bad.set(0, 0, 0);
    bad.set(1, 0, 0);
    GridCheck c = check_grid(lr, bad, false);
    CHECK_FALSE(c.horizontal_ok);
    CHECK(c.vertical_ok);
  }

  SUBCASE("out of range indices are rejected") {
    TilingGrid g(1, 1, 7);
    CHECK(fixtures::error_kind([&] { check_grid(ts, g, false); }) == ErrorKind::Input);
  }
}

TEST_CASE("wraparound closes the border seams") {
  TileSet ts = fixtures::stripe_tiles();
  TilingGrid col(1, 2);
  col.set(0, 0, 0);
  col.set(0, 1, 1);
  CHECK(check_grid(ts, col, true).ok());

  // A single stripe tile cannot wrap onto itself vertically.
  TilingGrid one(1, 1, 0);
  CHECK_FALSE(check_grid(ts, one, true).ok());
  // The blank tile can.
  CHECK(check_grid(fixtures::mono_tiles(), one, true).ok());
}

TEST_CASE("backtracking solver finds the least assignment in row-major order") {
  TileSet ts = fixtures::stripe_tiles();
  auto g = solve(ts, 3, 4);
  REQUIRE(g.has_value());
  CHECK(check_grid(ts, *g, false).ok());
  // Tiles are tried ascending, so row 0 is all t0 and parity alternates rows.
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 3; ++x) CHECK(g->at(x, y) == y % 2);

  auto c = solve(fixtures::checker_tiles(), 4, 4);
  REQUIRE(c.has_value());
  CHECK(check_grid(fixtures::checker_tiles(), *c, false).ok());
  CHECK(c->at(0, 0) == 0);
}

TEST_CASE("solver handles unsatisfiable and guarded inputs") {
  TileSet dead;  // right edge 1 can never be matched on the left
  dead.tiles.push_back({0, 1, 0, 0});
  CHECK(solve(dead, 1, 1).has_value());
  CHECK_FALSE(solve(dead, 2, 1).has_value());
  CHECK_FALSE(solve(dead, 1, 1, {.wrap = true}).has_value());

  SolveOptions tight;
  tight.cell_guard = 8;
  CHECK(fixtures::error_kind([&] { solve(fixtures::mono_tiles(), 3, 3, tight); }) ==
        ErrorKind::Guard);
}

TEST_CASE("solver agrees with exhaustive search on tiny instances") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> color(0, 1), count(1, 3), dim(1, 2);
  for (int round = 0; round < 200; ++round) {
    TileSet ts;
    int n = count(rng);
    for (int i = 0; i < n; ++i)
      ts.tiles.push_back({color(rng), color(rng), color(rng), color(rng)});
    int w = dim(rng), h = dim(rng);
    bool wrap = round % 2 == 1;
    bool t0 = round % 3 == 0;
    SolveOptions opts;
    opts.wrap = wrap;
    opts.require_tile0_col0 = t0;
    auto fast = solve(ts, w, h, opts);
    auto slow = brute_solve(ts, w, h, wrap, t0);
    CAPTURE(round);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) {
      CHECK(check_grid(ts, *fast, wrap).ok());
      if (t0) {
        bool found = false;
        for (int y = 0; y < h; ++y) found = found || fast->at(0, y) == 0;
        CHECK(found);
      }
    }
  }
}

TEST_CASE("periodic tilings unfold by coordinate reduction") {
  PeriodicTiling pt = fixtures::checker_cert();
  CHECK(pt.tile_at(0, 0) == 0);
  CHECK(pt.tile_at(1, 0) == 1);
  CHECK(pt.tile_at(2, 0) == 0);
  CHECK(pt.tile_at(0, 3) == 2);
  CHECK(pt.tile_at(5, 4) == 1);
  TilingGrid g = pt.unfold(4, 4);
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 4; ++x) CHECK(g.at(x, y) == pt.block.at(x % 2, y % 2));
  CHECK(check_grid(fixtures::checker_tiles(), g, false).ok());
}

TEST_CASE("certificate acceptance needs wraparound seams and tile 0 in column 0") {
  TileSet ts = fixtures::stripe_tiles();
  std::string why;
  CHECK(recurrent_certificate(ts, fixtures::stripe_cert(), &why));

  PeriodicTiling bad{TilingGrid(1, 1, 0)};
  CHECK_FALSE(recurrent_certificate(ts, bad, &why));
  CHECK_FALSE(why.empty());

  // Valid wraparound block without tile 0 in column 0.
  TileSet lr;
  lr.tiles.push_back({0, 1, 0, 0});
  lr.tiles.push_back({1, 0, 0, 0});
  TilingGrid b(2, 1);
  b.set(0, 0, 1);
  b.set(1, 0, 0);
  REQUIRE(check_grid(lr, b, true).ok());
  why.clear();
  CHECK_FALSE(recurrent_certificate(lr, PeriodicTiling{b}, &why));
  CHECK(why.find("tile 0") != std::string::npos);
}

TEST_CASE("certificate search returns the smallest block by area then width") {
  auto one = find_certificate(fixtures::mono_tiles(), 3, 3);
  REQUIRE(one.has_value());
  CHECK(one->block.width() == 1);
  CHECK(one->block.height() == 1);
  CHECK(one->block.at(0, 0) == 0);

  auto stripes = find_certificate(fixtures::stripe_tiles(), 4, 4);
  REQUIRE(stripes.has_value());
  CHECK(stripes->block.width() == 1);
  CHECK(stripes->block.height() == 2);
  CHECK(stripes->block.at(0, 0) == 0);
  CHECK(stripes->block.at(0, 1) == 1);

  auto cyc = find_certificate(fixtures::cycle3_tiles(), 4, 4);
  REQUIRE(cyc.has_value());
  CHECK(cyc->block.width() == 1);
  CHECK(cyc->block.height() == 3);

  auto checker = find_certificate(fixtures::checker_tiles(), 4, 4);
  REQUIRE(checker.has_value());
  CHECK(checker->block.width() == 2);
  CHECK(checker->block.height() == 2);
  CHECK(recurrent_certificate(fixtures::checker_tiles(), *checker));

  TileSet dead;
  dead.tiles.push_back({0, 1, 0, 0});
  CHECK_FALSE(find_certificate(dead, 3, 3).has_value());
}
