#include "linmod/formula.hpp"

#include <algorithm>
#include <unordered_map>

namespace linmod {

bool kind_is_core(Kind k) {
  switch (k) {
    case Kind::Atom:
    case Kind::Bottom:
    case Kind::Implies:
    case Kind::Box:
    case Kind::Forall:
      return true;
    default:
      return false;
  }
}

namespace {

Formula make(FormulaNode node) {
  return Formula(std::make_shared<const FormulaNode>(std::move(node)));
}

Formula unary(Kind k, Formula a) {
  FormulaNode n;
  n.kind = k;
  n.kids.push_back(std::move(a));
  return make(std::move(n));
}

void require_valid(const Formula& f, const char* what) {
  if (!f.valid()) fail(ErrorKind::Internal, std::string("null operand for ") + what);
}

void require_iter(int n) {
  if (n < 0) fail(ErrorKind::Input, "negative repetition count");
}

}  // namespace

namespace mk {

Formula atom(const Signature& sig, LetterId letter, std::vector<VarId> args) {
  const Letter& l = sig.letter(letter);
  if (static_cast<int>(args.size()) != l.arity)
    fail(ErrorKind::Arity, "letter " + l.name + " expects " + std::to_string(l.arity) +
                               " arguments, got " + std::to_string(args.size()));
  FormulaNode n;
  n.kind = Kind::Atom;
  n.letter = letter;
  n.args = std::move(args);
  return make(std::move(n));
}

Formula bottom() {
  FormulaNode n;
  n.kind = Kind::Bottom;
  return make(std::move(n));
}

Formula top() {
  FormulaNode n;
  n.kind = Kind::Top;
  return make(std::move(n));
}

Formula implies(Formula a, Formula b) {
  require_valid(a, "implies");
  require_valid(b, "implies");
  FormulaNode n;
  n.kind = Kind::Implies;
  n.kids = {std::move(a), std::move(b)};
  return make(std::move(n));
}

Formula box(Formula a) {
  require_valid(a, "box");
  return unary(Kind::Box, std::move(a));
}

Formula forall(VarId v, Formula a) {
  require_valid(a, "forall");
  FormulaNode n;
  n.kind = Kind::Forall;
  n.var = v;
  n.kids.push_back(std::move(a));
  return make(std::move(n));
}

Formula negate(Formula a) {
  require_valid(a, "not");
  return unary(Kind::Not, std::move(a));
}

Formula conj(std::vector<Formula> kids) {
  for (const auto& k : kids) require_valid(k, "and");
  if (kids.empty()) return top();
  if (kids.size() == 1) return kids.front();
  FormulaNode n;
  n.kind = Kind::And;
  n.kids = std::move(kids);
  return make(std::move(n));
}

Formula disj(std::vector<Formula> kids) {
  for (const auto& k : kids) require_valid(k, "or");
  if (kids.empty()) return bottom();
  if (kids.size() == 1) return kids.front();
  FormulaNode n;
  n.kind = Kind::Or;
  n.kids = std::move(kids);
  return make(std::move(n));
}

Formula iff(Formula a, Formula b) {
  require_valid(a, "iff");
  require_valid(b, "iff");
  FormulaNode n;
  n.kind = Kind::Iff;
  n.kids = {std::move(a), std::move(b)};
  return make(std::move(n));
}

Formula exists(VarId v, Formula a) {
  require_valid(a, "exists");
  FormulaNode n;
  n.kind = Kind::Exists;
  n.var = v;
  n.kids.push_back(std::move(a));
  return make(std::move(n));
}

Formula diamond(Formula a) {
  require_valid(a, "dia");
  return unary(Kind::Diamond, std::move(a));
}

Formula box_plus(Formula a) {
  require_valid(a, "boxp");
  return unary(Kind::BoxPlus, std::move(a));
}

Formula pdia1(LetterId guard, Formula a) {
  require_valid(a, "pdia1");
  FormulaNode n;
  n.kind = Kind::PDia1;
  n.letter = guard;
  n.kids.push_back(std::move(a));
  return make(std::move(n));
}

Formula pdia2(LetterId guard, VarId guard_var, Formula a) {
  require_valid(a, "pdia2");
  FormulaNode n;
  n.kind = Kind::PDia2;
  n.letter = guard;
  n.var = guard_var;
  n.kids.push_back(std::move(a));
  return make(std::move(n));
}

Formula xbox(LetterId guard, Formula a) {
  require_valid(a, "xbox");
  FormulaNode n;
  n.kind = Kind::XBox;
  n.letter = guard;
  n.kids.push_back(std::move(a));
  return make(std::move(n));
}

Formula box_iter(int n, Formula a) {
  require_valid(a, "boxn");
  require_iter(n);
  FormulaNode nd;
  nd.kind = Kind::BoxIter;
  nd.iter = n;
  nd.kids.push_back(std::move(a));
  return make(std::move(nd));
}

Formula dia_iter(int n, Formula a) {
  require_valid(a, "dian");
  require_iter(n);
  FormulaNode nd;
  nd.kind = Kind::DiaIter;
  nd.iter = n;
  nd.kids.push_back(std::move(a));
  return make(std::move(nd));
}

Formula pdia1_iter(LetterId guard, int n, Formula a) {
  require_valid(a, "pdia1n");
  require_iter(n);
  FormulaNode nd;
  nd.kind = Kind::PDia1Iter;
  nd.letter = guard;
  nd.iter = n;
  nd.kids.push_back(std::move(a));
  return make(std::move(nd));
}

Formula pdia2_iter(LetterId guard, VarId guard_var, int n, Formula a) {
  require_valid(a, "pdia2n");
  require_iter(n);
  FormulaNode nd;
  nd.kind = Kind::PDia2Iter;
  nd.letter = guard;
  nd.var = guard_var;
  nd.iter = n;
  nd.kids.push_back(std::move(a));
  return make(std::move(nd));
}

Formula next(Formula a) {
  require_valid(a, "next");
  return unary(Kind::Next, std::move(a));
}

}  // namespace mk

// ── Expansion ────────────────────────────────────────────────────────────────

namespace {

using mk::bottom;
using mk::box;
using mk::forall;
using mk::implies;

Formula core_not(Formula a) { return implies(std::move(a), bottom()); }

Formula core_and2(Formula a, Formula b) {
  return core_not(implies(std::move(a), core_not(std::move(b))));
}

Formula core_or2(Formula a, Formula b) {
  return implies(core_not(std::move(a)), std::move(b));
}

Formula raw_atom(LetterId letter, std::vector<VarId> args) {
  FormulaNode n;
  n.kind = Kind::Atom;
  n.letter = letter;
  n.args = std::move(args);
  return Formula(std::make_shared<const FormulaNode>(std::move(n)));
}

struct Expander {
  BoxMode mode;

  Formula run(const Formula& f) {
    const FormulaNode& n = f.node();
    switch (n.kind) {
      case Kind::Atom:
      case Kind::Bottom:
        return f;
      case Kind::Implies: {
        Formula a = run(f.kid(0));
        Formula b = run(f.kid(1));
        if (a.raw() == f.kid(0).raw() && b.raw() == f.kid(1).raw()) return f;
        return implies(std::move(a), std::move(b));
      }
      case Kind::Box: {
        Formula a = run(f.kid(0));
        if (mode == BoxMode::Plus) return core_and2(a, box(a));
        if (a.raw() == f.kid(0).raw()) return f;
        return box(std::move(a));
      }
      case Kind::Forall: {
        Formula a = run(f.kid(0));
        if (a.raw() == f.kid(0).raw()) return f;
        return forall(n.var, std::move(a));
      }
      case Kind::Top:
        return implies(bottom(), bottom());
      case Kind::Not:
        return core_not(run(f.kid(0)));
      case Kind::And: {
        Formula acc = run(f.kids().back());
        for (size_t i = f.kids().size() - 1; i-- > 0;)
          acc = core_and2(run(f.kid(i)), std::move(acc));
        return acc;
      }
      case Kind::Or: {
        Formula acc = run(f.kids().back());
        for (size_t i = f.kids().size() - 1; i-- > 0;)
          acc = core_or2(run(f.kid(i)), std::move(acc));
        return acc;
      }
      case Kind::Iff: {
        Formula a = run(f.kid(0));
        Formula b = run(f.kid(1));
        return core_and2(implies(a, b), implies(b, a));
      }
      case Kind::Exists:
        return core_not(forall(n.var, core_not(run(f.kid(0)))));
      case Kind::Diamond:
        return core_not(run_box(core_not(run(f.kid(0)))));
      case Kind::BoxPlus: {
        // Always a && box a; Plus mode reading of box coincides with this.
        Formula a = run(f.kid(0));
        return core_and2(a, box(a));
      }
      case Kind::PDia1: {
        Formula g = raw_atom(n.letter, {});
        Formula inner = core_and2(core_not(g), run(f.kid(0)));
        return run_dia(core_and2(g, run_dia(std::move(inner))));
      }
      case Kind::PDia2: {
        Formula g = forall(n.var, raw_atom(n.letter, {n.var}));
        Formula inner = core_and2(core_not(g), run(f.kid(0)));
        return run_dia(core_and2(g, run_dia(std::move(inner))));
      }
      case Kind::XBox: {
        Formula g = raw_atom(n.letter, {});
        Formula a = run(f.kid(0));
        Formula left = core_and2(g, run_box(implies(core_not(g), a)));
        Formula right = core_and2(core_not(g), run_box(implies(g, a)));
        return core_or2(std::move(left), std::move(right));
      }
      case Kind::BoxIter: {
        Formula acc = run(f.kid(0));
        for (int i = 0; i < n.iter; ++i) acc = run_box(std::move(acc));
        return acc;
      }
      case Kind::DiaIter: {
        Formula acc = run(f.kid(0));
        for (int i = 0; i < n.iter; ++i) acc = core_not(run_box(core_not(std::move(acc))));
        return acc;
      }
      case Kind::PDia1Iter: {
        Formula acc = f.kid(0);
        for (int i = 0; i < n.iter; ++i) acc = mk::pdia1(n.letter, std::move(acc));
        return run(acc);
      }
      case Kind::PDia2Iter: {
        Formula acc = f.kid(0);
        for (int i = 0; i < n.iter; ++i) acc = mk::pdia2(n.letter, n.var, std::move(acc));
        return run(acc);
      }
      case Kind::Next:
        fail(ErrorKind::Unsupported, "next is reserved and has no expansion");
    }
    fail(ErrorKind::Internal, "unreachable formula kind");
  }

  // Box over an already-expanded operand, honoring the mode.
  Formula run_box(Formula a) {
    if (mode == BoxMode::Plus) return core_and2(a, box(a));
    return box(std::move(a));
  }

  Formula run_dia(Formula a) { return core_not(run_box(core_not(std::move(a)))); }
};

}  // namespace

Formula expand(const Formula& f, BoxMode mode) {
  Expander e{mode};
  return e.run(f);
}

// ── Structural operations ────────────────────────────────────────────────────

bool structural_equal(const Formula& a, const Formula& b) {
  if (a.raw() == b.raw()) return true;
  const FormulaNode& x = a.node();
  const FormulaNode& y = b.node();
  if (x.kind != y.kind || x.letter != y.letter || x.var != y.var || x.iter != y.iter ||
      x.args != y.args || x.kids.size() != y.kids.size())
    return false;
  for (size_t i = 0; i < x.kids.size(); ++i)
    if (!structural_equal(x.kids[i], y.kids[i])) return false;
  return true;
}

namespace {

int core_depth(const Formula& f, std::unordered_map<const FormulaNode*, int>& memo) {
  auto it = memo.find(f.raw());
  if (it != memo.end()) return it->second;
  const FormulaNode& n = f.node();
  int d = 0;
  switch (n.kind) {
    case Kind::Atom:
    case Kind::Bottom:
      d = 0;
      break;
    case Kind::Box:
      d = 1 + core_depth(f.kid(0), memo);
      break;
    default:
      for (const auto& k : n.kids) d = std::max(d, core_depth(k, memo));
      break;
  }
  memo.emplace(f.raw(), d);
  return d;
}

void collect_vars(const Formula& f, std::set<VarId>& bound_agnostic) {
  const FormulaNode& n = f.node();
  for (VarId v : n.args) bound_agnostic.insert(v);
  if (n.kind == Kind::Forall || n.kind == Kind::Exists) bound_agnostic.insert(n.var);
  for (const auto& k : n.kids) collect_vars(k, bound_agnostic);
}

void collect_free(const Formula& f, std::set<VarId> bound, std::set<VarId>& out) {
  const FormulaNode& n = f.node();
  for (VarId v : n.args)
    if (!bound.count(v)) out.insert(v);
  if (n.kind == Kind::Forall || n.kind == Kind::Exists) {
    bound.insert(n.var);
    collect_free(f.kid(0), std::move(bound), out);
    return;
  }
  for (const auto& k : n.kids) collect_free(k, bound, out);
}

}  // namespace

int modal_depth(const Formula& f, BoxMode mode) {
  std::unordered_map<const FormulaNode*, int> memo;
  return core_depth(expand(f, mode), memo);
}

std::set<VarId> free_vars(const Formula& f) {
  std::set<VarId> out;
  collect_free(f, {}, out);
  return out;
}

std::set<VarId> used_vars(const Formula& f, BoxMode mode) {
  std::set<VarId> out;
  collect_vars(expand(f, mode), out);
  return out;
}

Formula remap_letters(const Formula& f, const std::vector<LetterId>& map) {
  const FormulaNode& n = f.node();
  FormulaNode out = n;
  if (n.letter >= 0) {
    if (n.letter >= static_cast<LetterId>(map.size()) || map[n.letter] < 0)
      fail(ErrorKind::Undeclared, "letter id not covered by remap");
    out.letter = map[n.letter];
  }
  bool changed = out.letter != n.letter;
  for (size_t i = 0; i < out.kids.size(); ++i) {
    Formula k = remap_letters(n.kids[i], map);
    changed = changed || k.raw() != n.kids[i].raw();
    out.kids[i] = std::move(k);
  }
  if (!changed) return f;
  return Formula(std::make_shared<const FormulaNode>(std::move(out)));
}

}  // namespace linmod
