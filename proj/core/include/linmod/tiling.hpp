#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linmod/error.hpp"

namespace linmod {

// A tile carries one color per edge.  A placement of tiles on the grid is
// valid when horizontally adjacent tiles agree on right/left colors and
// vertically adjacent tiles agree on up/down colors.
struct Tile {
  int left = 0;
  int right = 0;
  int up = 0;
  int down = 0;
};

struct TileSet {
  std::vector<Tile> tiles;

  int size() const { return static_cast<int>(tiles.size()); }
  const Tile& at(int t) const {
    if (t < 0 || t >= size()) fail(ErrorKind::Input, "tile index out of range");
    return tiles[static_cast<size_t>(t)];
  }
};

// Finite rectangle of tile indices; cell (x, y) has column x and row y.
class TilingGrid {
 public:
  TilingGrid() = default;
  TilingGrid(int width, int height, int fill = -1)
      : width_(width), height_(height),
        cells_(static_cast<size_t>(width) * static_cast<size_t>(height), fill) {
    if (width <= 0 || height <= 0) fail(ErrorKind::Input, "grid dimensions must be positive");
  }

  int width() const { return width_; }
  int height() const { return height_; }

  int at(int x, int y) const { return cells_[index(x, y)]; }
  void set(int x, int y, int t) { cells_[index(x, y)] = t; }

 private:
  size_t index(int x, int y) const {
    if (x < 0 || x >= width_ || y < 0 || y >= height_)
      fail(ErrorKind::Input, "grid cell out of range");
    return static_cast<size_t>(y) * static_cast<size_t>(width_) + static_cast<size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<int> cells_;
};

struct SeamViolation {
  int x0, y0, x1, y1;   // offending neighbor pair
  bool horizontal;      // true: right/left colors differ; false: up/down
};

struct GridCheck {
  bool horizontal_ok = true;
  bool vertical_ok = true;
  std::vector<SeamViolation> violations;

  bool ok() const { return horizontal_ok && vertical_ok; }
};

// Checks every adjacent pair; with wrap also the right->leftmost and
// top->bottom seams, treating the grid as one period of a doubly periodic
// plane tiling.  Rejects out-of-range tile indices.
GridCheck check_grid(const TileSet& tiles, const TilingGrid& grid, bool wrap);

// Doubly periodic tiling presented by one block; cell (n, m) of the plane
// carries block(n mod width, m mod height).
struct PeriodicTiling {
  TilingGrid block;

  int tile_at(long long n, long long m) const {
    return block.at(static_cast<int>(n % block.width()), static_cast<int>(m % block.height()));
  }

  TilingGrid unfold(int width, int height) const {
    TilingGrid g(width, height);
    for (int y = 0; y < height; ++y)
      for (int x = 0; x < width; ++x) g.set(x, y, tile_at(x, y));
    return g;
  }
};

struct SolveOptions {
  bool wrap = false;
  bool require_tile0_col0 = false;  // tile 0 must appear in column 0
  long long cell_guard = 64;        // refuse grids with more cells than this
};

// Deterministic backtracking over cells in row-major order, trying tile
// indices in ascending order; returns the first complete valid assignment.
std::optional<TilingGrid> solve(const TileSet& tiles, int width, int height,
                                const SolveOptions& opts = {});

// Accepts a block as evidence of a periodic plane tiling in which tile 0
// keeps reappearing in column 0: seams must match with wraparound and some
// cell of column 0 must hold tile 0.
bool recurrent_certificate(const TileSet& tiles, const PeriodicTiling& pt,
                           std::string* why = nullptr);

// Searches block sizes by area, then width, for a certificate.
std::optional<PeriodicTiling> find_certificate(const TileSet& tiles, int max_width,
                                               int max_height);

}  // namespace linmod
