#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linmod/eval.hpp"
#include "linmod/model.hpp"

namespace linmod {

struct PropertyViolation {
  std::string property;  // e.g. "(3)"
  std::string detail;
};

struct SuiteResult {
  std::vector<std::string> lines;  // one per property: name, instance count
  std::vector<PropertyViolation> violations;
  std::uint64_t instances = 0;

  bool ok() const { return violations.empty(); }
  void merge(const SuiteResult& other);
};

// ── Chain model suite ────────────────────────────────────────────────────────
//
// The five facts the mark-passing argument rests on, restated as decidable
// assertions over the model's atoms and the phase-step tables, with every
// quantifier clamped to the prefix and the listed bounds.  Mark n is domain
// element n.
//
//   (1) M(a_n) holds at w iff p fails at w, some one-step world carries
//       M(a_{n+1}), and no two-step world does.
//   (2) between two p-free worlds with no p-world in between, marks agree.
//   (3) marks are unique: M(a_n) at w rules out M(a_{n+j}) for j >= 1.
//   (4) marked worlds tile every element: M(a_m) at w gives some P_t(a_n).
//   (5) two worlds marked by the same element agree on all tile atoms.
//   (min) the least world marked by a_m is 2m.
struct ChainBounds {
  int max_w = 100;
  int max_n = 10;
  int max_j = 5;
  bool cross_check_eval3 = true;  // sampled agreement of the formula route
};

SuiteResult mark_chain_suite(const PredicateModel& m0, const FamilySignature& family,
                             const ChainBounds& b = {});

// ── Block model suite ────────────────────────────────────────────────────────
//
// The three facts the single-letter argument rests on, on the block model
// (with the pair-tag chain model supplying the right-hand sides), plus the
// step-distance bullets between block starts:
//
//   (6) at block start w_m, q && P(a) holds iff a = m.
//   (7) "every element satisfies P" holds exactly at shadow worlds.
//   (8) the threshold formula beta_n(a) holds at w_m iff the pair-tag model
//       satisfies P_n(a) at 2m, computed through the step tables.
//   (step) w_{m+1} sits exactly s+4 steps from w_m and exactly n+1 steps
//       from the level-n world of block m.
struct StarBounds {
  int max_m = 8;
  int max_a = 10;
  bool cross_check_eval3 = true;
};

SuiteResult star_block_suite(const PredicateModel& star, const PredicateModel& prime,
                             const FamilySignature& family, const StarBounds& b = {});

// Irreflexivity and transitivity of the derived step relation on the prefix.
SuiteResult step_relation_shape(const PredicateModel& m, StepGuard guard);

// Arithmetic route for the threshold formulas on any single-letter model:
// precomputes the mono-guard step tables up to exponent s+5 and reads
// beta_n(a) through them instead of through the evaluator.
class ThresholdReader {
 public:
  ThresholdReader(const PredicateModel& m, const FamilySignature& family);

  int world_count() const { return W_; }
  int max_level() const { return s_ + 2; }
  const StepRelation& power(int k) const;  // 0 <= k <= s+5
  bool qp_at(int u, int a) const;          // q && P(a)
  bool beta_at(int w, int n, int a) const;

 private:
  const PredicateModel* m_;
  LetterMap L_;
  int s_;
  int W_;
  std::vector<StepRelation> pow_;
};

// min{w in prefix : M(a_m) holds at w} for m = 0..max_m; -1 when no world
// marks a_m.
std::vector<int> mark_world_minima(const PredicateModel& m0, const LetterMap& letters,
                                   int max_m);

}  // namespace linmod
