#pragma once

// Shared fixtures for the test executables: canned tile sets with known
// periodic certificates, a seeded random formula generator, and a seeded
// random finite model generator.  Everything is deterministic for a fixed
// seed so failures reproduce.

#include <random>
#include <vector>

#include "linmod/error.hpp"
#include "linmod/formula.hpp"
#include "linmod/frame.hpp"
#include "linmod/model.hpp"
#include "linmod/signature.hpp"
#include "linmod/tiling.hpp"

namespace fixtures {

// One tile with blank edges; tiles the plane as a 1x1 block.
inline linmod::TileSet mono_tiles() {
  linmod::TileSet ts;
  ts.tiles.push_back({0, 0, 0, 0});
  return ts;
}

// Two tiles forming alternating horizontal stripes; certificate block is the
// 1x2 column [t0; t1].
inline linmod::TileSet stripe_tiles() {
  linmod::TileSet ts;
  ts.tiles.push_back({0, 0, 1, 0});
  ts.tiles.push_back({0, 0, 0, 1});
  return ts;
}

// Three tiles cycling vertically with period three; certificate block is the
// 1x3 column [t0; t1; t2].
inline linmod::TileSet cycle3_tiles() {
  linmod::TileSet ts;
  ts.tiles.push_back({0, 0, 1, 0});
  ts.tiles.push_back({0, 0, 2, 1});
  ts.tiles.push_back({0, 0, 0, 2});
  return ts;
}

// Four tiles forming a 2x2 checkerboard block [[t0 t1]; [t2 t3]].
inline linmod::TileSet checker_tiles() {
  linmod::TileSet ts;
  ts.tiles.push_back({0, 1, 1, 0});
  ts.tiles.push_back({1, 0, 1, 0});
  ts.tiles.push_back({0, 1, 0, 1});
  ts.tiles.push_back({1, 0, 0, 1});
  return ts;
}

inline linmod::PeriodicTiling column_cert(int rows) {
  linmod::TilingGrid block(1, rows);
  for (int y = 0; y < rows; ++y) block.set(0, y, y);
  return linmod::PeriodicTiling{block};
}

inline linmod::PeriodicTiling stripe_cert() { return column_cert(2); }
inline linmod::PeriodicTiling cycle3_cert() { return column_cert(3); }

inline linmod::PeriodicTiling mono_cert() {
  linmod::TilingGrid block(1, 1, 0);
  return linmod::PeriodicTiling{block};
}

inline linmod::PeriodicTiling checker_cert() {
  linmod::TilingGrid block(2, 2);
  block.set(0, 0, 0);
  block.set(1, 0, 1);
  block.set(0, 1, 2);
  block.set(1, 1, 3);
  return linmod::PeriodicTiling{block};
}

// ── Stripe witness models ────────────────────────────────────────────────────

inline linmod::PredicateModel stripe_m0(linmod::Frame frame, int k) {
  return linmod::build_m0(stripe_tiles(), stripe_cert(), std::move(frame), k);
}

inline linmod::PredicateModel stripe_prime(int length, int k) {
  return linmod::build_m0_prime(stripe_tiles(), stripe_cert(), length, k);
}

inline linmod::PredicateModel stripe_star(linmod::Frame frame, int blocks, int k) {
  return linmod::build_m0_star(stripe_tiles(), stripe_cert(), std::move(frame), blocks, k);
}

// ── Random formulas ──────────────────────────────────────────────────────────

// Letters the generator may draw atoms from; guard ids of -1 disable the
// corresponding guarded operators.
struct FuzzVocab {
  const linmod::Signature* sig = nullptr;
  std::vector<linmod::LetterId> props;
  std::vector<linmod::LetterId> monos;
  std::vector<linmod::LetterId> binaries;
  linmod::LetterId pdia1_guard = -1;
  linmod::LetterId pdia2_guard = -1;
  linmod::LetterId xbox_guard = -1;
  std::vector<linmod::VarId> vars;
};

// Owns a standalone signature {p, q, P, Q} over variables {x, y}, matching
// the canonical guard names the parser resolves.
struct FuzzSig {
  linmod::Signature sig;
  linmod::LetterId p, q, P, Q;
  linmod::VarId x, y;

  FuzzSig() : sig(linmod::Signature::with_default_vars()) {
    p = sig.add_letter("p", 0);
    q = sig.add_letter("q", 0);
    P = sig.add_letter("P", 1);
    Q = sig.add_letter("Q", 1);
    x = sig.var_or_fail("x");
    y = sig.var_or_fail("y");
  }

  FuzzVocab vocab() const {
    FuzzVocab v;
    v.sig = &sig;
    v.props = {p, q};
    v.monos = {P, Q};
    v.pdia1_guard = p;
    v.pdia2_guard = P;
    v.xbox_guard = q;
    v.vars = {x, y};
    return v;
  }
};

struct FormulaFuzzOptions {
  int max_depth = 4;
  bool modal = true;
  bool quantifiers = true;
  int max_iter = 3;
};

inline linmod::Formula random_formula(std::mt19937& rng, const FuzzVocab& vc, int depth,
                                      const FormulaFuzzOptions& o = {}) {
  namespace mk = linmod::mk;
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  auto var = [&] { return vc.vars[static_cast<size_t>(pick(static_cast<int>(vc.vars.size())))]; };
  auto leaf = [&]() -> linmod::Formula {
    int choices = 2 + static_cast<int>(vc.props.size() + vc.monos.size() + vc.binaries.size());
    int c = pick(choices);
    if (c == 0) return mk::bottom();
    if (c == 1) return mk::top();
    c -= 2;
    if (c < static_cast<int>(vc.props.size()))
      return mk::atom(*vc.sig, vc.props[static_cast<size_t>(c)]);
    c -= static_cast<int>(vc.props.size());
    if (c < static_cast<int>(vc.monos.size()))
      return mk::atom(*vc.sig, vc.monos[static_cast<size_t>(c)], {var()});
    c -= static_cast<int>(vc.monos.size());
    return mk::atom(*vc.sig, vc.binaries[static_cast<size_t>(c)], {var(), var()});
  };
  if (depth <= 0) return leaf();
  auto sub = [&] { return random_formula(rng, vc, depth - 1, o); };
  int top = 8 + (o.modal ? 3 : 0) + (o.quantifiers ? 2 : 0);
  int c = pick(top);
  switch (c) {
    case 0: return leaf();
    case 1: return mk::negate(sub());
    case 2: return mk::implies(sub(), sub());
    case 3: return mk::conj({sub(), sub()});
    case 4: return mk::disj({sub(), sub()});
    case 5: return mk::iff(sub(), sub());
    case 6: return mk::conj({sub(), sub(), sub()});
    case 7: return mk::disj({sub(), sub(), sub()});
    default: break;
  }
  if (o.modal && c < 11) {
    if (c == 8) return mk::box(sub());
    if (c == 9) return mk::diamond(sub());
    int fancy = pick(6);
    int n = 1 + pick(o.max_iter);
    switch (fancy) {
      case 0: return mk::box_plus(sub());
      case 1:
        if (vc.pdia1_guard >= 0) return mk::pdia1(vc.pdia1_guard, sub());
        return mk::box(sub());
      case 2:
        if (vc.pdia2_guard >= 0) return mk::pdia2(vc.pdia2_guard, vc.vars[0], sub());
        return mk::diamond(sub());
      case 3:
        if (vc.xbox_guard >= 0) return mk::xbox(vc.xbox_guard, sub());
        return mk::box(sub());
      case 4: return mk::box_iter(n, sub());
      default: return mk::dia_iter(n, sub());
    }
  }
  return pick(2) == 0 ? mk::forall(var(), sub()) : mk::exists(var(), sub());
}

inline linmod::Formula random_closed_formula(std::mt19937& rng, const FuzzVocab& vc,
                                             const FormulaFuzzOptions& o = {}) {
  linmod::Formula f = random_formula(rng, vc, o.max_depth, o);
  for (linmod::VarId v : linmod::free_vars(f)) f = linmod::mk::forall(v, f);
  return f;
}

// ── Random finite models ─────────────────────────────────────────────────────

struct ModelFuzzOptions {
  int max_worlds = 4;
  int max_domain = 2;
  double edge_prob = 0.45;
  double atom_prob = 0.5;
};

// Explicit finite frame with arbitrary edges (cycles allowed), constant
// domain, table interpretation of the FuzzSig letters.
inline linmod::PredicateModel random_model(std::mt19937& rng, const FuzzSig& fs,
                                           const ModelFuzzOptions& o = {}) {
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  std::bernoulli_distribution edge(o.edge_prob), atom(o.atom_prob);
  int W = 1 + pick(o.max_worlds);
  int D = 1 + pick(o.max_domain);
  std::vector<std::pair<int, int>> edges;
  for (int w = 0; w < W; ++w)
    for (int v = 0; v < W; ++v)
      if (edge(rng)) edges.emplace_back(w, v);
  linmod::PredicateModel m(linmod::Frame::finite_explicit(W, std::move(edges)), fs.sig);
  std::vector<int> dom(static_cast<size_t>(D));
  for (int e = 0; e < D; ++e) dom[static_cast<size_t>(e)] = e;
  m.set_constant_domain(dom);
  for (int w = 0; w < W; ++w) {
    if (atom(rng)) m.set_true(w, fs.p, {});
    if (atom(rng)) m.set_true(w, fs.q, {});
    for (int e = 0; e < D; ++e) {
      if (atom(rng)) m.set_true(w, fs.P, {e});
      if (atom(rng)) m.set_true(w, fs.Q, {e});
    }
  }
  return m;
}

// Kind of a thrown linmod::Error, for assertions on failure modes.
template <typename Fn>
inline linmod::ErrorKind error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const linmod::Error& e) {
    return e.kind();
  }
  throw std::runtime_error("expected a linmod::Error");
}

}  // namespace fixtures
