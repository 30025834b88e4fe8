#pragma once

#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "linmod/frame.hpp"
#include "linmod/letters.hpp"
#include "linmod/tiling.hpp"

namespace linmod {

// First order Kripke model over a Frame.  Domains are finite slices of the
// intended (possibly infinite) domains; domain_truncated records that the
// intended domain continues beyond the listed elements.  Interpretations come
// either from a total rule (generated models) or from explicit tuple tables.
class PredicateModel {
 public:
  using Rule = std::function<bool(int world, LetterId, std::span<const int> args)>;

  PredicateModel(Frame frame, Signature sig);

  const Frame& frame() const { return frame_; }
  const Signature& sig() const { return sig_; }

  int root() const { return root_; }
  void set_root(int w);

  bool domain_truncated() const { return domain_truncated_; }
  void set_domain_truncated(bool t) { domain_truncated_ = t; }

  // Constant domain shared by all worlds.
  void set_constant_domain(std::vector<int> elems);
  // Per world domains; must be expanding along the accessibility relation.
  void set_world_domain(int w, std::vector<int> elems);
  const std::vector<int>& domain(int w) const;
  bool has_constant_domain() const { return world_domains_.empty(); }

  void set_rule(Rule rule, std::string generator);
  const std::string& generator() const { return generator_; }
  bool rule_based() const { return static_cast<bool>(rule_); }

  void set_true(int w, LetterId letter, std::vector<int> args);
  bool holds(int w, LetterId letter, std::span<const int> args) const;

  // Tuples of a letter at a world, restricted to the listed domain; works for
  // rule and table models alike.  Used by writers and the extractor.
  std::vector<std::vector<int>> tuples(int w, LetterId letter) const;

  // D(w) subset of D(v) whenever w R v, and every table tuple inside D(w).
  void validate_expanding() const;

 private:
  Frame frame_;
  Signature sig_;
  int root_ = 0;
  bool domain_truncated_ = false;
  std::vector<int> const_domain_;
  std::vector<std::vector<int>> world_domains_;
  Rule rule_;
  std::string generator_;
  // [letter][world] -> set of argument tuples
  std::vector<std::vector<std::set<std::vector<int>>>> table_;
};

// ── Generated witness models ─────────────────────────────────────────────────

// Repetition sequence 0, 0 1, 0 1 2, 0 1 2 3, ...; every natural number
// appears infinitely often.
int alpha(long long k);
// First index k with alpha(k) == a, that is a(a+3)/2.
long long alpha_first_index(int a);

// Block layout of the single-letter model.  A block encodes one chain world
// of the two-letter chain: a start world, its shadow, then for each level
// n = s+2 down to 0 a level world and its shadow, 2s+8 worlds in total.
struct StarLabeling {
  int s;  // levels run 0..s+2

  enum class Role { Start, StartShadow, Level, LevelShadow };

  struct Label {
    Role role;
    int m;  // block index
    int n;  // level, only for Level / LevelShadow
  };

  int block_len() const { return 2 * s + 8; }
  int start_world(int m) const { return block_len() * m; }
  int start_shadow(int m) const { return start_world(m) + 1; }
  int level_world(int m, int n) const;
  int level_shadow(int m, int n) const { return level_world(m, n) + 1; }
  Label decode(int world) const;
};

// Chain model of a doubly periodic tiling: even worlds carry the rows, odd
// worlds flip the phase letter, element a is marked exactly at world 2a, and
// succ links a to a+1 at even worlds.  Domain is {-1, 0, .., K}.
PredicateModel build_m0(const TileSet& tiles, const PeriodicTiling& cert, Frame frame, int K);

// Same rows, with succ dropped and the edge pair letters following alpha:
// at world 2m the source tag holds of alpha(m) and the target tag of
// alpha(m)+1.
PredicateModel build_m0_prime(const TileSet& tiles, const PeriodicTiling& cert, int length,
                              int K);

// Single-letter block model per StarLabeling: q marks block starts; P holds
// of the block index at start worlds, of everything at shadow worlds, and at
// level worlds follows the tiling rows / alpha tags.
PredicateModel build_m0_star(const TileSet& tiles, const PeriodicTiling& cert, Frame frame,
                             int blocks, int K);

// Dense linear order whose chain worlds replay the chain model rows; every
// other world copies the interpretation of the nearest chain world at or
// above it, and worlds above the last chain world interpret every letter as
// empty.  Root is the first chain world.
PredicateModel build_dense_model(const TileSet& tiles, const PeriodicTiling& cert,
                                 const std::string& pattern, int K);

// Ordinal prefix of `copies` omega segments plus a tail of `tail` worlds.
// The first segment replays the chain model rows; everything beyond it
// interprets every letter as empty.
PredicateModel build_ordinal_model(const TileSet& tiles, const PeriodicTiling& cert, int copies,
                                   int tail, int copy_len, int K);

}  // namespace linmod
