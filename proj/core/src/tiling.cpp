#include "linmod/tiling.hpp"

#include <algorithm>

namespace linmod {

GridCheck check_grid(const TileSet& tiles, const TilingGrid& grid, bool wrap) {
  GridCheck r;
  auto tile = [&](int x, int y) -> const Tile& { return tiles.at(grid.at(x, y)); };

  for (int y = 0; y < grid.height(); ++y) {
    for (int x = 0; x < grid.width(); ++x) {
      const Tile& t = tile(x, y);
      if (x + 1 < grid.width()) {
        if (t.right != tile(x + 1, y).left) {
          r.horizontal_ok = false;
          r.violations.push_back({x, y, x + 1, y, true});
        }
      } else if (wrap && grid.width() > 0) {
        if (t.right != tile(0, y).left) {
          r.horizontal_ok = false;
          r.violations.push_back({x, y, 0, y, true});
        }
      }
      if (y + 1 < grid.height()) {
        if (t.up != tile(x, y + 1).down) {
          r.vertical_ok = false;
          r.violations.push_back({x, y, x, y + 1, false});
        }
      } else if (wrap && grid.height() > 0) {
        if (t.up != tile(x, 0).down) {
          r.vertical_ok = false;
          r.violations.push_back({x, y, x, 0, false});
        }
      }
    }
  }
  return r;
}

namespace {

struct Search {
  const TileSet& tiles;
  TilingGrid grid;
  int width, height;
  SolveOptions opts;

  bool fits(int x, int y, int t) const {
    const Tile& c = tiles.at(t);
    if (x > 0 && tiles.at(grid.at(x - 1, y)).right != c.left) return false;
    if (y > 0 && tiles.at(grid.at(x, y - 1)).up != c.down) return false;
    // Wrap seams close against cells placed earlier in row-major order; on a
    // single-cell axis the seam closes against the candidate itself.
    if (opts.wrap && x == width - 1) {
      const Tile& first = width == 1 ? c : tiles.at(grid.at(0, y));
      if (first.left != c.right) return false;
    }
    if (opts.wrap && y == height - 1) {
      const Tile& bottom = height == 1 ? c : tiles.at(grid.at(x, 0));
      if (bottom.down != c.up) return false;
    }
    return true;
  }

  bool column0_has_tile0() const {
    for (int y = 0; y < height; ++y)
      if (grid.at(0, y) == 0) return true;
    return false;
  }

  bool place(int cell) {
    if (cell == width * height)
      return !opts.require_tile0_col0 || column0_has_tile0();
    int x = cell % width, y = cell / width;
    for (int t = 0; t < tiles.size(); ++t) {
      if (!fits(x, y, t)) continue;
      grid.set(x, y, t);
      if (place(cell + 1)) return true;
    }
    grid.set(x, y, -1);
    return false;
  }
};

}  // namespace

std::optional<TilingGrid> solve(const TileSet& tiles, int width, int height,
                                const SolveOptions& opts) {
  if (width <= 0 || height <= 0) fail(ErrorKind::Input, "grid dimensions must be positive");
  if (static_cast<long long>(width) * height > opts.cell_guard)
    fail(ErrorKind::Guard, "grid exceeds the cell bound of " + std::to_string(opts.cell_guard));
  if (tiles.size() == 0) return std::nullopt;
  Search s{tiles, TilingGrid(width, height), width, height, opts};
  if (!s.place(0)) return std::nullopt;
  return s.grid;
}

bool recurrent_certificate(const TileSet& tiles, const PeriodicTiling& pt, std::string* why) {
  GridCheck c = check_grid(tiles, pt.block, /*wrap=*/true);
  if (!c.ok()) {
    if (why) *why = "block seams do not match under wraparound";
    return false;
  }
  for (int y = 0; y < pt.block.height(); ++y)
    if (pt.block.at(0, y) == 0) return true;
  if (why) *why = "tile 0 does not appear in column 0 of the block";
  return false;
}

std::optional<PeriodicTiling> find_certificate(const TileSet& tiles, int max_width,
                                               int max_height) {
  struct Dim {
    int w, h;
  };
  std::vector<Dim> dims;
  for (int w = 1; w <= max_width; ++w)
    for (int h = 1; h <= max_height; ++h) dims.push_back({w, h});
  std::stable_sort(dims.begin(), dims.end(), [](const Dim& a, const Dim& b) {
    long long aa = static_cast<long long>(a.w) * a.h, bb = static_cast<long long>(b.w) * b.h;
    return aa != bb ? aa < bb : a.w < b.w;
  });
  SolveOptions opts;
  opts.wrap = true;
  opts.require_tile0_col0 = true;
  for (const Dim& d : dims) {
    if (static_cast<long long>(d.w) * d.h > opts.cell_guard) continue;
    if (auto g = solve(tiles, d.w, d.h, opts)) return PeriodicTiling{*g};
  }
  return std::nullopt;
}

}  // namespace linmod
