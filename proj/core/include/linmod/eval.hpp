#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linmod/formula.hpp"
#include "linmod/model.hpp"

namespace linmod {

enum class Truth : std::int8_t { False = -1, Unknown = 0, True = 1 };

const char* truth_name(Truth t);  // "FALSE" / "UNKNOWN" / "TRUE"

// Partial map from variables to domain elements.
class Assignment {
 public:
  void set(VarId v, int elem);
  void clear(VarId v);
  std::optional<int> get(VarId v) const;

 private:
  static constexpr int kUnset = INT32_MIN;
  std::vector<int> vals_;
  friend struct EvalContext;
};

struct EvalBounds {
  std::uint64_t step_limit = 200'000'000;
};

struct Verdict {
  Truth truth = Truth::Unknown;
  std::uint64_t obligations = 0;        // distinct (subformula, world, env) checks
  std::vector<std::string> trace;       // decisive path from the root, possibly empty
};

// Two-valued evaluation implementing the truth clauses literally: atoms by
// interpretation, bottom false, material implication, box over every listed
// successor, forall over D(w) with rebinding.  Requires a frame that is not
// truncated and a domain that is not truncated.
bool eval2(const PredicateModel& m, int world, const Assignment& g, const Formula& f,
           BoxMode mode = BoxMode::Plain);

// Three-valued evaluation, sound on truncated prefixes:
//   - atoms, bottom: definite;
//   - implies: strong Kleene;
//   - box: False on any in-prefix False successor; True only when the frame
//     is not truncated above the world and every successor is True; else
//     Unknown;
//   - forall: False on an in-bound counterexample; True only when the domain
//     is not truncated and every element is True; else Unknown.
// Diamond and exists inherit the dual rules through their expansions.
// A True or False verdict transfers to the intended untruncated model
// whenever the model's rules describe that model truthfully.
Verdict eval3(const PredicateModel& m, int world, const Assignment& g, const Formula& f,
              const EvalBounds& bounds = {}, BoxMode mode = BoxMode::Plain);

// ── Derived step relation ────────────────────────────────────────────────────

// w relates to v when the guard fails at v and holds somewhere in [w, v].
// With the phase letter as guard this is the step relation the pdia1 operator
// induces on chain models; with the "every element satisfies the monadic
// letter" guard, the pdia2 analogue.  Worlds are compared by index, which on
// every linear frame kind coincides with the frame order.
class StepRelation {
 public:
  explicit StepRelation(int size);

  int size() const { return size_; }
  bool at(int w, int v) const { return bits_[static_cast<size_t>(w) * size_ + v] != 0; }
  void set(int w, int v) { bits_[static_cast<size_t>(w) * size_ + v] = 1; }

  StepRelation compose(const StepRelation& other) const;
  StepRelation power(int n) const;  // n >= 0; power(0) is the identity
  bool irreflexive() const;
  bool transitive() const;

 private:
  int size_;
  std::vector<std::uint8_t> bits_;
};

enum class StepGuard {
  PhaseLetter,  // proposition letter p
  AllMono,      // forall x P(x) over the listed domain
};

StepRelation step_relation(const PredicateModel& m, StepGuard guard);

}  // namespace linmod
