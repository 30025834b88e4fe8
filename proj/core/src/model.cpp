#include "linmod/model.hpp"

#include <algorithm>

namespace linmod {

PredicateModel::PredicateModel(Frame frame, Signature sig)
    : frame_(std::move(frame)), sig_(std::move(sig)) {
  table_.resize(static_cast<size_t>(sig_.letter_count()));
  for (auto& per_world : table_) per_world.resize(static_cast<size_t>(frame_.world_count()));
}

void PredicateModel::set_root(int w) {
  if (w < 0 || w >= frame_.world_count()) fail(ErrorKind::Input, "root world out of range");
  root_ = w;
}

void PredicateModel::set_constant_domain(std::vector<int> elems) {
  if (elems.empty()) fail(ErrorKind::Input, "domains must be nonempty");
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  const_domain_ = std::move(elems);
  world_domains_.clear();
}

void PredicateModel::set_world_domain(int w, std::vector<int> elems) {
  if (w < 0 || w >= frame_.world_count()) fail(ErrorKind::Input, "world index out of range");
  if (elems.empty()) fail(ErrorKind::Input, "domains must be nonempty");
  if (world_domains_.empty())
    world_domains_.resize(static_cast<size_t>(frame_.world_count()), const_domain_);
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  world_domains_[static_cast<size_t>(w)] = std::move(elems);
}

const std::vector<int>& PredicateModel::domain(int w) const {
  if (w < 0 || w >= frame_.world_count()) fail(ErrorKind::Input, "world index out of range");
  if (!world_domains_.empty()) return world_domains_[static_cast<size_t>(w)];
  if (const_domain_.empty()) fail(ErrorKind::Internal, "model has no domain");
  return const_domain_;
}

void PredicateModel::set_rule(Rule rule, std::string generator) {
  rule_ = std::move(rule);
  generator_ = std::move(generator);
}

void PredicateModel::set_true(int w, LetterId letter, std::vector<int> args) {
  if (rule_) fail(ErrorKind::Internal, "cannot add tuples to a rule model");
  if (w < 0 || w >= frame_.world_count()) fail(ErrorKind::Input, "world index out of range");
  const Letter& l = sig_.letter(letter);
  if (static_cast<int>(args.size()) != l.arity)
    fail(ErrorKind::Arity, "tuple arity mismatch for letter " + l.name);
  table_[static_cast<size_t>(letter)][static_cast<size_t>(w)].insert(std::move(args));
}

bool PredicateModel::holds(int w, LetterId letter, std::span<const int> args) const {
  if (rule_) return rule_(w, letter, args);
  const auto& tuples = table_[static_cast<size_t>(letter)][static_cast<size_t>(w)];
  std::vector<int> key(args.begin(), args.end());
  return tuples.count(key) > 0;
}

std::vector<std::vector<int>> PredicateModel::tuples(int w, LetterId letter) const {
  const Letter& l = sig_.letter(letter);
  const std::vector<int>& dom = domain(w);
  std::vector<std::vector<int>> out;
  if (l.arity == 0) {
    if (holds(w, letter, {})) out.push_back({});
    return out;
  }
  std::vector<int> tuple(static_cast<size_t>(l.arity));
  std::vector<size_t> idx(static_cast<size_t>(l.arity), 0);
  while (true) {
    for (int i = 0; i < l.arity; ++i) tuple[static_cast<size_t>(i)] = dom[idx[static_cast<size_t>(i)]];
    if (holds(w, letter, tuple)) out.push_back(tuple);
    int pos = l.arity - 1;
    while (pos >= 0) {
      if (++idx[static_cast<size_t>(pos)] < dom.size()) break;
      idx[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

void PredicateModel::validate_expanding() const {
  for (int w = 0; w < frame_.world_count(); ++w) {
    const auto& dw = domain(w);
    frame_.for_successors(w, [&](int v) {
      const auto& dv = domain(v);
      if (!std::includes(dv.begin(), dv.end(), dw.begin(), dw.end()))
        fail(ErrorKind::Input, "domain of world " + std::to_string(w) +
                                   " is not contained in domain of successor " +
                                   std::to_string(v));
    });
  }
  if (rule_) return;
  for (LetterId l = 0; l < sig_.letter_count(); ++l) {
    for (int w = 0; w < frame_.world_count(); ++w) {
      const auto& dw = domain(w);
      for (const auto& tuple : table_[static_cast<size_t>(l)][static_cast<size_t>(w)])
        for (int e : tuple)
          if (!std::binary_search(dw.begin(), dw.end(), e))
            fail(ErrorKind::Input, "table tuple uses an element outside the world domain");
    }
  }
}

// ── Sequences and labelings ──────────────────────────────────────────────────

int alpha(long long k) {
  if (k < 0) fail(ErrorKind::Input, "alpha index must be nonnegative");
  long long j = 0;
  while ((j + 1) * (j + 2) / 2 <= k) ++j;
  return static_cast<int>(k - j * (j + 1) / 2);
}

long long alpha_first_index(int a) {
  if (a < 0) fail(ErrorKind::Input, "alpha value must be nonnegative");
  return static_cast<long long>(a) * (a + 3) / 2;
}

int StarLabeling::level_world(int m, int n) const {
  if (n < 0 || n > s + 2) fail(ErrorKind::Input, "level out of range");
  return block_len() * m + 2 + 2 * (s + 2 - n);
}

StarLabeling::Label StarLabeling::decode(int world) const {
  if (world < 0) fail(ErrorKind::Input, "world index must be nonnegative");
  int m = world / block_len();
  int r = world % block_len();
  if (r == 0) return {Role::Start, m, -1};
  if (r == 1) return {Role::StartShadow, m, -1};
  int step = (r - 2) / 2;
  int n = s + 2 - step;
  return {(r % 2 == 0) ? Role::Level : Role::LevelShadow, m, n};
}

// ── Generated models ─────────────────────────────────────────────────────────

namespace {

std::vector<int> domain_upto(int K) {
  if (K < 0) fail(ErrorKind::Input, "domain bound must be nonnegative");
  std::vector<int> d;
  d.reserve(static_cast<size_t>(K) + 2);
  for (int e = -1; e <= K; ++e) d.push_back(e);
  return d;
}

void require_nat_like(const Frame& f) {
  switch (f.kind()) {
    case Frame::Kind::NatPrefix:
    case Frame::Kind::GnPrefix:
    case Frame::Kind::HnPrefix:
      return;
    default:
      fail(ErrorKind::Input, "this generator needs a prefix frame over the naturals");
  }
}

// Interpretation of the chain rows shared by the chain, dense, and ordinal
// generators.  `row` is the position along the intended chain; negative rows
// mean "outside the chain", where every letter is empty.
struct ChainRows {
  PeriodicTiling cert;
  LetterMap map;
  int tile_count;

  bool holds(int row, LetterId letter, std::span<const int> args) const {
    if (row < 0) return false;
    if (letter == map.edge) return row % 2 == 0 && args[1] == args[0] + 1;
    if (letter == map.phase) return row % 2 == 1;
    if (letter == map.mark) return args[0] >= 0 && row == 2 * args[0];
    for (int t = 0; t < tile_count; ++t)
      if (letter == map.tile[static_cast<size_t>(t)])
        return row % 2 == 0 && args[0] >= 0 && cert.tile_at(args[0], row / 2) == t;
    return false;
  }

  bool pair_holds(int row, LetterId letter, std::span<const int> args) const {
    if (row < 0 || row % 2 != 0) return false;
    int a = alpha(row / 2);
    if (letter == map.pair_lo) return args[0] == a;
    if (letter == map.pair_hi) return args[0] == a + 1;
    return false;
  }
};

void require_certificate(const TileSet& tiles, const PeriodicTiling& cert, bool need_col0) {
  GridCheck c = check_grid(tiles, cert.block, /*wrap=*/true);
  if (!c.ok()) fail(ErrorKind::Input, "periodic block does not tile under wraparound");
  if (!need_col0) return;
  std::string why;
  if (!recurrent_certificate(tiles, cert, &why)) fail(ErrorKind::Input, why);
}

}  // namespace

PredicateModel build_m0(const TileSet& tiles, const PeriodicTiling& cert, Frame frame, int K) {
  require_nat_like(frame);
  require_certificate(tiles, cert, /*need_col0=*/true);
  FamilySignature fam = family_signature(tiles.size());
  PredicateModel m(std::move(frame), fam.sig);
  m.set_constant_domain(domain_upto(K));
  m.set_domain_truncated(true);
  ChainRows rows{cert, fam.map, tiles.size()};
  m.set_rule(
      [rows](int w, LetterId letter, std::span<const int> args) {
        return rows.holds(w, letter, args);
      },
      "M0");
  return m;
}

PredicateModel build_m0_prime(const TileSet& tiles, const PeriodicTiling& cert, int length,
                              int K) {
  require_certificate(tiles, cert, /*need_col0=*/true);
  FamilySignature fam = family_signature(tiles.size());
  PredicateModel m(Frame::nat_le(length), fam.sig);
  m.set_constant_domain(domain_upto(K));
  m.set_domain_truncated(true);
  ChainRows rows{cert, fam.map, tiles.size()};
  LetterId edge = fam.map.edge;
  m.set_rule(
      [rows, edge](int w, LetterId letter, std::span<const int> args) {
        if (letter == edge) return false;  // the edge letter is retired here
        if (letter == rows.map.pair_lo || letter == rows.map.pair_hi)
          return rows.pair_holds(w, letter, args);
        return rows.holds(w, letter, args);
      },
      "M0prime");
  return m;
}

PredicateModel build_m0_star(const TileSet& tiles, const PeriodicTiling& cert, Frame frame,
                             int blocks, int K) {
  require_nat_like(frame);
  require_certificate(tiles, cert, /*need_col0=*/true);
  StarLabeling lab{tiles.size() - 1};
  if (blocks <= 0) fail(ErrorKind::Input, "need at least one block");
  if (frame.world_count() != blocks * lab.block_len())
    fail(ErrorKind::Input, "frame length must equal blocks times the block length");
  FamilySignature fam = family_signature(tiles.size());
  PredicateModel m(std::move(frame), fam.sig);
  m.set_constant_domain(domain_upto(K));
  m.set_domain_truncated(true);
  PeriodicTiling pt = cert;
  LetterMap map = fam.map;
  int s = lab.s;
  m.set_rule(
      [lab, pt, map, s](int u, LetterId letter, std::span<const int> args) {
        StarLabeling::Label l = lab.decode(u);
        if (letter == map.block) return l.role == StarLabeling::Role::Start;
        if (letter != map.mono) return false;
        int a = args[0];
        switch (l.role) {
          case StarLabeling::Role::Start:
            return a == l.m;
          case StarLabeling::Role::StartShadow:
          case StarLabeling::Role::LevelShadow:
            return true;
          case StarLabeling::Role::Level:
            if (l.n <= s) return a >= 0 && pt.tile_at(a, l.m) == l.n;
            if (l.n == s + 1) return a == alpha(l.m);
            return a == alpha(l.m) + 1;  // n == s + 2
        }
        return false;
      },
      "M0star");
  return m;
}

PredicateModel build_dense_model(const TileSet& tiles, const PeriodicTiling& cert,
                                 const std::string& pattern, int K) {
  // Recurrence of tile 0 in column 0 is not needed for the finite chain here;
  // only the seam conditions are.
  require_certificate(tiles, cert, /*need_col0=*/false);
  Frame frame = Frame::dense(pattern);
  std::vector<int> chain = frame.chain_worlds();
  if (chain.empty()) fail(ErrorKind::Input, "dense frame needs at least one chain world");
  // Row assignment: each world plays the row of the nearest chain world at or
  // above it; worlds above the last chain world get no row.
  std::vector<int> row_of(static_cast<size_t>(frame.world_count()), -1);
  for (int w = 0; w < frame.world_count(); ++w) {
    auto it = std::lower_bound(chain.begin(), chain.end(), w);
    if (it != chain.end()) row_of[static_cast<size_t>(w)] = static_cast<int>(it - chain.begin());
  }
  FamilySignature fam = family_signature(tiles.size());
  PredicateModel m(std::move(frame), fam.sig);
  m.set_constant_domain(domain_upto(K));
  m.set_domain_truncated(true);
  m.set_root(chain.front());
  ChainRows rows{cert, fam.map, tiles.size()};
  m.set_rule(
      [rows, row_of](int w, LetterId letter, std::span<const int> args) {
        return rows.holds(row_of[static_cast<size_t>(w)], letter, args);
      },
      "dense");
  return m;
}

PredicateModel build_ordinal_model(const TileSet& tiles, const PeriodicTiling& cert, int copies,
                                   int tail, int copy_len, int K) {
  require_certificate(tiles, cert, /*need_col0=*/true);
  if (copies < 1) fail(ErrorKind::Input, "ordinal model needs at least one segment");
  Frame frame = Frame::ordinal(copies, tail, copy_len);
  FamilySignature fam = family_signature(tiles.size());
  PredicateModel m(std::move(frame), fam.sig);
  m.set_constant_domain(domain_upto(K));
  m.set_domain_truncated(true);
  ChainRows rows{cert, fam.map, tiles.size()};
  m.set_rule(
      [rows, copy_len](int w, LetterId letter, std::span<const int> args) {
        // Only the first segment carries the chain; later segments and the
        // tail interpret every letter as empty.
        return rows.holds(w < copy_len ? w : -1, letter, args);
      },
      "ordinal");
  return m;
}

}  // namespace linmod
