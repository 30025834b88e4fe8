#include "linmod/reductions.hpp"

#include <functional>
#include <utility>

namespace linmod {

namespace {

// Copy of a node with replaced operands; kind, letter, binder, iteration
// count, and atom arguments carry over.
Formula with_kids(const Formula& f, std::vector<Formula> kids) {
  auto nd = std::make_shared<FormulaNode>(f.node());
  nd->kids = std::move(kids);
  return Formula(std::move(nd));
}

// Bottom-up rewrite: leaf_map may replace a whole subformula; nodes it
// declines are rebuilt around their rewritten operands, pointer-stable when
// nothing below changed.
Formula rewrite(const Formula& f, const std::function<Formula(const Formula&)>& leaf_map) {
  Formula mapped = leaf_map(f);
  if (mapped.raw() != f.raw()) return mapped;
  const FormulaNode& n = f.node();
  if (n.kids.empty()) return f;
  std::vector<Formula> kids;
  kids.reserve(n.kids.size());
  bool changed = false;
  for (const Formula& k : n.kids) {
    Formula m = rewrite(k, leaf_map);
    changed = changed || m.raw() != k.raw();
    kids.push_back(std::move(m));
  }
  if (!changed) return f;
  return with_kids(f, std::move(kids));
}

std::string renamed(std::string name, char old_suffix, const char* new_suffix) {
  if (!name.empty() && name.back() == old_suffix) name.pop_back();
  return name + new_suffix;
}

}  // namespace

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::A: return "A";
    case Variant::APrime: return "Aprime";
    case Variant::AStar: return "Astar";
    case Variant::APlus: return "Aplus";
    case Variant::B: return "B";
    case Variant::ABullet: return "Abullet";
  }
  fail(ErrorKind::Internal, "unknown variant");
}

Variant variant_from_name(const std::string& name) {
  for (Variant v : {Variant::A, Variant::APrime, Variant::AStar, Variant::APlus, Variant::B,
                    Variant::ABullet})
    if (name == variant_name(v)) return v;
  fail(ErrorKind::Input, "unknown variant name: " + name);
}

Formula ReductionArtifact::conjunction() const {
  if (conjuncts.empty()) fail(ErrorKind::Internal, "artifact has no conjuncts");
  std::vector<Formula> parts;
  parts.reserve(conjuncts.size());
  for (const NamedConjunct& c : conjuncts) parts.push_back(c.formula);
  return mk::conj(std::move(parts));
}

ReductionArtifact gen_base(const TileSet& tiles) {
  ReductionArtifact art;
  art.variant = Variant::A;
  art.tiles = tiles;
  art.family = family_signature(tiles.size());
  const Signature& sig = art.family.sig;
  const LetterMap& L = art.family.map;
  const VarId x = sig.var_or_fail("x");
  const VarId y = sig.var_or_fail("y");
  const int k = tiles.size();

  auto P = [&](int t, VarId v) { return mk::atom(sig, L.tile[static_cast<size_t>(t)], {v}); };
  auto M = [&](VarId v) { return mk::atom(sig, L.mark, {v}); };
  auto edge = [&](VarId u, VarId v) { return mk::atom(sig, L.edge, {u, v}); };
  auto phase = [&] { return mk::atom(sig, L.phase); };
  // untiled: no tile letter holds of v
  auto U = [&](VarId v) {
    std::vector<Formula> parts;
    for (int t = 0; t < k; ++t) parts.push_back(mk::negate(P(t, v)));
    return mk::conj(std::move(parts));
  };

  std::vector<NamedConjunct>& cs = art.conjuncts;

  // some element stays untiled forever: the spare element
  cs.push_back({"A_0", mk::exists(x, mk::box(U(x)))});

  // the marked element is tiled now
  cs.push_back({"A_1", mk::exists(x, mk::conj({mk::negate(U(x)), M(x)}))});

  // every element has a successor
  cs.push_back({"A_2", mk::forall(x, mk::exists(y, edge(x, y)))});

  // the successor relation is rigid while any mark exists
  cs.push_back({"A_3", mk::forall(x, mk::forall(y, mk::implies(edge(x, y),
      mk::box(mk::implies(mk::exists(x, M(x)), edge(x, y))))))});

  // the mark moves to the successor after exactly one phase flip
  cs.push_back({"A_4", mk::forall(x, mk::forall(y, mk::implies(edge(x, y),
      mk::box(mk::iff(M(x), mk::conj({mk::negate(phase()),
                                      mk::pdia1(L.phase, M(y)),
                                      mk::negate(mk::pdia1_iter(L.phase, 2, M(y)))}))))))});

  // tiles at or left of the mark never change
  {
    std::vector<Formula> body;
    for (int t = 0; t < k; ++t)
      body.push_back(mk::implies(mk::conj({M(x), P(t, y)}),
                                 mk::box(mk::implies(M(x), P(t, y)))));
    cs.push_back({"A_5", mk::forall(x, mk::forall(y, mk::box(mk::conj(std::move(body)))))});
  }

  // at most one tile per cell
  {
    std::vector<Formula> body;
    for (int t = 0; t < k; ++t) {
      std::vector<Formula> others;
      for (int u = 0; u < k; ++u)
        if (u != t) others.push_back(mk::negate(P(u, x)));
      body.push_back(mk::implies(P(t, x), mk::conj(std::move(others))));
    }
    cs.push_back({"A_6", mk::forall(x, mk::box(mk::conj(std::move(body))))});
  }

  // horizontal seams: right color of x matches left color of its successor
  {
    std::vector<Formula> body;
    for (int t = 0; t < k; ++t) {
      std::vector<Formula> fits;
      for (int u = 0; u < k; ++u)
        if (tiles.at(t).right == tiles.at(u).left) fits.push_back(P(u, y));
      body.push_back(mk::implies(mk::conj({edge(x, y), P(t, x)}), mk::disj(std::move(fits))));
    }
    cs.push_back({"A_7", mk::forall(x, mk::forall(y, mk::box(mk::conj(std::move(body)))))});
  }

  // vertical seams: once the mark passes x, the cell right of the new mark
  // sits above the old row
  {
    std::vector<Formula> body;
    for (int t = 0; t < k; ++t) {
      std::vector<Formula> fits;
      for (int u = 0; u < k; ++u)
        if (tiles.at(t).up == tiles.at(u).down) fits.push_back(P(u, y));
      body.push_back(mk::implies(mk::conj({M(x), P(t, y)}),
          mk::box(mk::implies(mk::exists(y, mk::conj({edge(x, y), M(y)})),
                              mk::disj(std::move(fits))))));
    }
    cs.push_back({"A_8", mk::forall(x, mk::forall(y, mk::box(mk::conj(std::move(body)))))});
  }

  // tile 0 keeps recurring on the marked diagonal
  cs.push_back({"A_9", mk::forall(x, mk::implies(M(x), mk::box(mk::pdia1(L.phase, P(0, x)))))});

  return art;
}

ReductionArtifact prime_pass(const ReductionArtifact& base) {
  if (base.variant != Variant::A)
    fail(ErrorKind::Input, "prime pass expects the full-vocabulary stage");
  const Signature& sig = base.family.sig;
  const LetterMap& L = base.family.map;

  auto leaf = [&](const Formula& f) -> Formula {
    const FormulaNode& n = f.node();
    if (n.kind == Kind::Atom && n.letter == L.edge)
      return mk::pdia1(L.phase,
                       mk::conj({mk::atom(sig, L.pair_lo, {n.args[0]}),
                                 mk::atom(sig, L.pair_hi, {n.args[1]})}));
    return f;
  };

  ReductionArtifact out;
  out.variant = Variant::APrime;
  out.tiles = base.tiles;
  out.family = base.family;
  for (const NamedConjunct& c : base.conjuncts)
    out.conjuncts.push_back({c.name + "'", rewrite(c.formula, leaf)});
  return out;
}

Formula gen_beta(const FamilySignature& family, int n, VarId target) {
  const Signature& sig = family.sig;
  const LetterMap& L = family.map;
  const int s = L.tile_count() - 1;
  if (n < 0 || n > s + 2) fail(ErrorKind::Input, "threshold level out of range");
  const VarId x = sig.var_or_fail("x");
  const VarId y = sig.var_or_fail("y");
  const VarId other = target == x ? y : x;

  auto qP = [&](VarId v) {
    return mk::conj({mk::atom(sig, L.block), mk::atom(sig, L.mono, {v})});
  };

  // The witness is the next block start (exactly s+4 steps ahead); the inner
  // step lands n+1 levels short of it, where the level-n world sits.
  return mk::exists(other, mk::conj({
      mk::pdia2_iter(L.mono, x, s + 4, qP(other)),
      mk::negate(mk::pdia2_iter(L.mono, x, s + 5, qP(other))),
      mk::pdia2(L.mono, x, mk::conj({
          mk::pdia2_iter(L.mono, x, n + 1, qP(other)),
          mk::negate(mk::pdia2_iter(L.mono, x, n + 2, qP(other))),
          mk::atom(sig, L.mono, {target})}))}));
}

ReductionArtifact star_pass(const ReductionArtifact& prime) {
  if (prime.variant != Variant::APrime)
    fail(ErrorKind::Input, "star pass expects the pair-tag stage");
  const Signature& sig = prime.family.sig;
  const LetterMap& L = prime.family.map;
  const int s = L.tile_count() - 1;
  const VarId x = sig.var_or_fail("x");
  const VarId y = sig.var_or_fail("y");

  auto qP = [&](VarId v) {
    return mk::conj({mk::atom(sig, L.block), mk::atom(sig, L.mono, {v})});
  };

  std::function<Formula(const Formula&)> leaf = [&](const Formula& f) -> Formula {
    const FormulaNode& n = f.node();
    switch (n.kind) {
      case Kind::Atom: {
        if (n.letter == L.mark) return qP(n.args[0]);
        if (n.letter == L.pair_lo) return gen_beta(prime.family, s + 1, n.args[0]);
        if (n.letter == L.pair_hi) return gen_beta(prime.family, s + 2, n.args[0]);
        for (int t = 0; t <= s; ++t)
          if (n.letter == L.tile[static_cast<size_t>(t)])
            return gen_beta(prime.family, t, n.args[0]);
        if (n.letter == L.edge)
          fail(ErrorKind::Internal, "edge atom survived the prime pass");
        if (n.letter == L.phase)
          fail(ErrorKind::Internal, "phase atom outside the replaced conjunct");
        return f;
      }
      case Kind::PDia1:
        return mk::pdia2(L.mono, x, rewrite(f.kid(0), leaf));
      case Kind::PDia1Iter:
        return mk::pdia2_iter(L.mono, x, n.iter, rewrite(f.kid(0), leaf));
      default:
        return f;
    }
  };

  ReductionArtifact out;
  out.variant = Variant::AStar;
  out.tiles = prime.tiles;
  out.family = prime.family;

  for (const NamedConjunct& c : prime.conjuncts) {
    std::string name = renamed(c.name, '\'', "*");
    if (name == "A_4*") {
      // The phase atom has no pointwise image; the whole conjunct is restated
      // against block starts, with the mark-step thresholds spelled out.
      Formula body = mk::iff(qP(x),
          mk::conj({mk::negate(mk::forall(x, mk::atom(sig, L.mono, {x}))),
                    mk::pdia2_iter(L.mono, x, s + 4, qP(y)),
                    mk::negate(mk::pdia2_iter(L.mono, x, s + 5, qP(y)))}));
      Formula guard = mk::pdia2(L.mono, x,
          mk::conj({gen_beta(prime.family, s + 1, x), gen_beta(prime.family, s + 2, y)}));
      out.conjuncts.push_back(
          {name, mk::forall(x, mk::forall(y, mk::implies(guard, mk::box(body))))});
      continue;
    }
    out.conjuncts.push_back({name, rewrite(c.formula, leaf)});
  }
  return out;
}

ReductionArtifact boxplus_pass(const ReductionArtifact& star) {
  if (star.variant != Variant::AStar)
    fail(ErrorKind::Input, "reflexive-box pass expects the single-letter stage");

  std::function<Formula(const Formula&)> go = [&](const Formula& f) -> Formula {
    const FormulaNode& n = f.node();
    std::vector<Formula> kids;
    kids.reserve(n.kids.size());
    bool changed = false;
    for (const Formula& k : n.kids) {
      Formula m = go(k);
      changed = changed || m.raw() != k.raw();
      kids.push_back(std::move(m));
    }
    if (n.kind == Kind::Box) return mk::box_plus(kids[0]);
    if (!changed) return f;
    return with_kids(f, std::move(kids));
  };

  ReductionArtifact out;
  out.variant = Variant::APlus;
  out.tiles = star.tiles;
  out.family = star.family;
  out.box_mode = BoxMode::Plus;
  for (const NamedConjunct& c : star.conjuncts)
    out.conjuncts.push_back({renamed(c.name, '*', "+"), go(c.formula)});
  return out;
}

ReductionArtifact gen_variant(const TileSet& tiles, Variant v) {
  switch (v) {
    case Variant::A:
      return gen_base(tiles);
    case Variant::APrime:
      return prime_pass(gen_base(tiles));
    case Variant::AStar:
      return star_pass(prime_pass(gen_base(tiles)));
    case Variant::APlus:
      return boxplus_pass(star_pass(prime_pass(gen_base(tiles))));
    case Variant::B: {
      ReductionArtifact art = gen_base(tiles);
      art.variant = Variant::B;
      art.conjuncts.pop_back();  // the recurrence conjunct
      return art;
    }
    case Variant::ABullet: {
      ReductionArtifact art = gen_base(tiles);
      art.variant = Variant::ABullet;
      art.conjuncts.pop_back();
      const Signature& sig = art.family.sig;
      const LetterMap& L = art.family.map;
      const VarId x = sig.var_or_fail("x");
      const VarId y = sig.var_or_fail("y");
      auto some_mark = [&] { return mk::exists(y, mk::atom(sig, L.mark, {y})); };
      // Recurrence relativized to the marked part of the order, so limit
      // worlds beyond the marked segment carry no obligation.
      art.conjuncts.push_back({"A_9b",
          mk::forall(x, mk::implies(mk::atom(sig, L.mark, {x}),
              mk::box(mk::implies(some_mark(),
                  mk::pdia1(L.phase, mk::implies(some_mark(),
                      mk::atom(sig, L.tile[0], {x})))))))});
      return art;
    }
  }
  fail(ErrorKind::Internal, "unknown variant");
}

Separation gen_separation(SeparationKind kind, int n) {
  SeparationSignature S = separation_signature();
  Formula p = mk::atom(S.sig, S.phase);
  Formula ref = mk::implies(mk::box(p), p);
  Formula z = mk::implies(mk::box(mk::implies(mk::box(p), p)),
                          mk::implies(mk::diamond(mk::box(p)), mk::box(p)));
  switch (kind) {
    case SeparationKind::Ref:
      return {"ref", std::move(S.sig), ref};
    case SeparationKind::Z:
      return {"Z", std::move(S.sig), z};
    case SeparationKind::BoxNRef:
      if (n < 0) fail(ErrorKind::Input, "iteration count must be nonnegative");
      return {"box^" + std::to_string(n) + " ref", std::move(S.sig), mk::box_iter(n, ref)};
    case SeparationKind::XBoxNZ: {
      if (n < 0) fail(ErrorKind::Input, "iteration count must be nonnegative");
      Formula f = z;
      for (int i = 0; i < n; ++i) f = mk::xbox(S.block, f);
      return {"xbox^" + std::to_string(n) + " Z", std::move(S.sig), f};
    }
  }
  fail(ErrorKind::Internal, "unknown separation kind");
}

}  // namespace linmod
