#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <vector>

#include "linmod/signature.hpp"

namespace linmod {

// ── Node kinds ───────────────────────────────────────────────────────────────
//
// The core language is {Atom, Bottom, Implies, Box, Forall}; everything else
// is a derived operator that expand() lowers to the core.  Derived operators
// are kept as explicit nodes so unexpanded formulas print the way they were
// written.
enum class Kind : std::uint8_t {
  // core
  Atom,
  Bottom,
  Implies,
  Box,
  Forall,
  // derived
  Top,
  Not,
  And,   // n-ary, at least two operands
  Or,    // n-ary, at least two operands
  Iff,
  Exists,
  Diamond,
  BoxPlus,    // reflexive box: a && box a
  PDia1,      // phase-guarded strict diamond: dia(g && dia(!g && a)), g a proposition letter
  PDia2,      // same with guard "forall v (G v)", G a monadic letter
  XBox,       // parity box: (g && box(!g -> a)) || (!g && box(g -> a))
  BoxIter,    // box^n
  DiaIter,    // dia^n
  PDia1Iter,  // pdia1^n
  PDia2Iter,  // pdia2^n
  Next,       // reserved; expand() rejects it
};

bool kind_is_core(Kind k);

class Formula;

struct FormulaNode {
  Kind kind;
  LetterId letter = -1;        // Atom letter; guard letter of PDia1/PDia2/XBox
  VarId var = -1;              // binder of Forall/Exists; guard variable of PDia2
  int iter = 0;                // repetition count of *Iter kinds
  std::vector<VarId> args;     // Atom arguments
  std::vector<Formula> kids;   // operands
};

// Immutable formula handle.  Shared subterms stay shared, which both the
// printer and the evaluator rely on for node-identity memoization.
class Formula {
 public:
  Formula() = default;
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}

  bool valid() const { return node_ != nullptr; }
  const FormulaNode& node() const { return *node_; }
  const FormulaNode* raw() const { return node_.get(); }

  Kind kind() const { return node_->kind; }
  LetterId letter() const { return node_->letter; }
  VarId var() const { return node_->var; }
  int iter() const { return node_->iter; }
  const std::vector<VarId>& args() const { return node_->args; }
  const std::vector<Formula>& kids() const { return node_->kids; }
  const Formula& kid(size_t i) const { return node_->kids.at(i); }

 private:
  std::shared_ptr<const FormulaNode> node_;
};

// ── Constructors ─────────────────────────────────────────────────────────────
//
// mk::atom checks the argument count against the letter's declared arity;
// the other constructors only shape nodes.
namespace mk {

Formula atom(const Signature& sig, LetterId letter, std::vector<VarId> args = {});
Formula bottom();
Formula top();
Formula implies(Formula a, Formula b);
Formula box(Formula a);
Formula forall(VarId v, Formula a);

Formula negate(Formula a);
// A zero-operand conjunction collapses to top, a singleton to its operand.
Formula conj(std::vector<Formula> kids);
// A zero-operand disjunction collapses to bottom, a singleton to its operand.
Formula disj(std::vector<Formula> kids);
Formula iff(Formula a, Formula b);
Formula exists(VarId v, Formula a);
Formula diamond(Formula a);
Formula box_plus(Formula a);
Formula pdia1(LetterId guard, Formula a);
Formula pdia2(LetterId guard, VarId guard_var, Formula a);
Formula xbox(LetterId guard, Formula a);
Formula box_iter(int n, Formula a);
Formula dia_iter(int n, Formula a);
Formula pdia1_iter(LetterId guard, int n, Formula a);
Formula pdia2_iter(LetterId guard, VarId guard_var, int n, Formula a);
Formula next(Formula a);

}  // namespace mk

// ── Operations ───────────────────────────────────────────────────────────────

// Interpretation given to Box while lowering: Plain keeps box as is, Plus
// reads every box (including those synthesized by derived operators) as the
// reflexive box a && box a.
enum class BoxMode { Plain, Plus };

// Lowers to the core language.  Expansion of an already-core formula under
// Plain mode returns it unchanged (pointer-stable where possible).  Next is
// rejected with ErrorKind::Unsupported.
Formula expand(const Formula& f, BoxMode mode = BoxMode::Plain);

bool structural_equal(const Formula& a, const Formula& b);

// Maximum nesting of Box along any path of the expanded form.
int modal_depth(const Formula& f, BoxMode mode = BoxMode::Plain);

std::set<VarId> free_vars(const Formula& f);
// Every variable occurring in the expanded form, bound or free.
std::set<VarId> used_vars(const Formula& f, BoxMode mode = BoxMode::Plain);

// Rewrites every letter id through the given map (index = old id).  Used when
// a formula built against one signature is evaluated against a model whose
// signature declares the same names under different ids.
Formula remap_letters(const Formula& f, const std::vector<LetterId>& map);

}  // namespace linmod
