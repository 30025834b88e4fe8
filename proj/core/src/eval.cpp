#include "linmod/eval.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <unordered_map>

namespace linmod {

const char* truth_name(Truth t) {
  switch (t) {
    case Truth::False:
      return "FALSE";
    case Truth::Unknown:
      return "UNKNOWN";
    case Truth::True:
      return "TRUE";
  }
  return "?";
}

void Assignment::set(VarId v, int elem) {
  if (v < 0) fail(ErrorKind::Input, "variable id out of range");
  if (static_cast<size_t>(v) >= vals_.size()) vals_.resize(static_cast<size_t>(v) + 1, kUnset);
  vals_[static_cast<size_t>(v)] = elem;
}

void Assignment::clear(VarId v) {
  if (v >= 0 && static_cast<size_t>(v) < vals_.size()) vals_[static_cast<size_t>(v)] = kUnset;
}

std::optional<int> Assignment::get(VarId v) const {
  if (v < 0 || static_cast<size_t>(v) >= vals_.size() || vals_[static_cast<size_t>(v)] == kUnset)
    return std::nullopt;
  return vals_[static_cast<size_t>(v)];
}

namespace {

// Environments track at most this many variables for memoization; formulas
// using higher variable ids are evaluated without caching.
constexpr int kMemoVars = 4;
constexpr int kUnsetVal = INT32_MIN;

using Env = std::array<int, 8>;

struct MemoKey {
  const FormulaNode* node;
  int world;
  std::array<int, kMemoVars> env;

  bool operator==(const MemoKey& o) const {
    return node == o.node && world == o.world && env == o.env;
  }
};

struct MemoKeyHash {
  size_t operator()(const MemoKey& k) const {
    size_t h = std::hash<const void*>()(k.node);
    h = h * 0x9e3779b97f4a7c15ULL + static_cast<size_t>(static_cast<unsigned>(k.world));
    for (int v : k.env) h = h * 1099511628211ULL + static_cast<size_t>(static_cast<unsigned>(v));
    return h;
  }
};

struct MemoCell {
  std::int8_t truth;  // -1 / 0 / 1
  int witness;        // refuting world (box) or element (forall); kUnsetVal if none
};

// Free-variable bitmask per node; bit 31 flags "uses a variable beyond the
// memoized range".
constexpr std::uint32_t kWideMask = 1u << 31;

std::uint32_t fv_mask(const FormulaNode* n,
                      std::unordered_map<const FormulaNode*, std::uint32_t>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::uint32_t m = 0;
  for (VarId v : n->args)
    m |= (v < kMemoVars) ? (1u << v) : kWideMask;
  for (const auto& k : n->kids) m |= fv_mask(k.raw(), cache);
  if (n->kind == Kind::Forall || n->kind == Kind::Exists)
    if (n->var >= 0 && n->var < kMemoVars) m &= ~(1u << n->var);
  cache.emplace(n, m);
  return m;
}

struct EvalCore {
  const PredicateModel& model;
  std::uint64_t step_limit;
  std::uint64_t steps = 0;
  std::uint64_t obligations = 0;
  std::unordered_map<MemoKey, MemoCell, MemoKeyHash> memo;
  std::unordered_map<const FormulaNode*, std::uint32_t> masks;

  int value_of(const Env& env, VarId v) const {
    int val = env[static_cast<size_t>(v)];
    if (val == kUnsetVal) fail(ErrorKind::Input, "free variable unassigned");
    return val;
  }

  std::int8_t run(const FormulaNode* n, int w, Env& env, int* witness_out = nullptr) {
    if (++steps > step_limit) fail(ErrorKind::Guard, "evaluation step limit exceeded");

    std::uint32_t mask = fv_mask(n, masks);
    bool cacheable = (mask & kWideMask) == 0;
    MemoKey key{};
    if (cacheable) {
      key.node = n;
      key.world = w;
      for (int i = 0; i < kMemoVars; ++i)
        key.env[static_cast<size_t>(i)] = (mask & (1u << i)) ? env[static_cast<size_t>(i)] : kUnsetVal;
      auto it = memo.find(key);
      if (it != memo.end()) {
        if (witness_out) *witness_out = it->second.witness;
        return it->second.truth;
      }
    }

    ++obligations;
    int witness = kUnsetVal;
    std::int8_t r = compute(n, w, env, witness);
    if (cacheable) memo.emplace(key, MemoCell{r, witness});
    if (witness_out) *witness_out = witness;
    return r;
  }

  std::int8_t compute(const FormulaNode* n, int w, Env& env, int& witness) {
    switch (n->kind) {
      case Kind::Atom: {
        std::array<int, 4> vals{};
        for (size_t i = 0; i < n->args.size(); ++i) vals[i] = value_of(env, n->args[i]);
        return model.holds(w, n->letter, {vals.data(), n->args.size()}) ? 1 : -1;
      }
      case Kind::Bottom:
        return -1;
      case Kind::Implies: {
        std::int8_t a = run(n->kids[0].raw(), w, env);
        if (a == -1) return 1;
        std::int8_t b = run(n->kids[1].raw(), w, env);
        if (b == 1) return 1;
        if (a == 1 && b == -1) return -1;
        return 0;
      }
      case Kind::Box: {
        bool unknown = false;
        std::int8_t out = 1;
        model.frame().for_successors(w, [&](int v) {
          if (out == -1) return;
          std::int8_t r = run(n->kids[0].raw(), v, env);
          if (r == -1) {
            out = -1;
            witness = v;
          } else if (r == 0) {
            unknown = true;
          }
        });
        if (out == -1) return -1;
        if (model.frame().truncated_above(w) || unknown) return 0;
        return 1;
      }
      case Kind::Forall: {
        if (n->var < 0 || n->var >= static_cast<VarId>(env.size()))
          fail(ErrorKind::Guard, "variable id beyond evaluator range");
        bool unknown = false;
        int saved = env[static_cast<size_t>(n->var)];
        std::int8_t out = 1;
        for (int e : model.domain(w)) {
          env[static_cast<size_t>(n->var)] = e;
          std::int8_t r = run(n->kids[0].raw(), w, env);
          if (r == -1) {
            out = -1;
            witness = e;
            break;
          }
          if (r == 0) unknown = true;
        }
        env[static_cast<size_t>(n->var)] = saved;
        if (out == -1) return -1;
        if (model.domain_truncated() || unknown) return 0;
        return 1;
      }
      default:
        fail(ErrorKind::Internal, "evaluator expects core formulas");
    }
  }
};

Env env_from(const Assignment& g, const PredicateModel& m, int w, const Formula& core) {
  Env env;
  env.fill(kUnsetVal);
  std::set<VarId> free = free_vars(core);
  for (VarId v : free) {
    auto val = g.get(v);
    if (!val) fail(ErrorKind::Input, "free variable " + m.sig().var(v) + " unassigned");
    const auto& dom = m.domain(w);
    if (!std::binary_search(dom.begin(), dom.end(), *val))
      fail(ErrorKind::Input, "assignment value outside the world domain");
    if (v >= static_cast<VarId>(env.size()))
      fail(ErrorKind::Guard, "variable id beyond evaluator range");
    env[static_cast<size_t>(v)] = *val;
  }
  return env;
}

// ── Trace reconstruction ─────────────────────────────────────────────────────

struct TraceBuilder {
  EvalCore& core;
  const Signature& sig;
  std::vector<std::string> lines;
  static constexpr size_t kMaxLines = 16;

  void descend(const FormulaNode* n, int w, Env& env) {
    if (lines.size() >= kMaxLines) return;
    int witness = kUnsetVal;
    std::int8_t r = core.run(n, w, env, &witness);
    std::ostringstream os;
    switch (n->kind) {
      case Kind::Atom: {
        os << "world " << w << ": " << sig.letter(n->letter).name;
        if (!n->args.empty()) {
          os << "(";
          for (size_t i = 0; i < n->args.size(); ++i)
            os << (i ? "," : "") << core.value_of(env, n->args[i]);
          os << ")";
        }
        os << " is " << (r == 1 ? "true" : "false");
        lines.push_back(os.str());
        return;
      }
      case Kind::Bottom:
        lines.push_back("bottom");
        return;
      case Kind::Implies: {
        std::int8_t a = core.run(n->kids[0].raw(), w, env);
        if (r == 1 && a == -1) {
          lines.push_back("implication holds: antecedent refuted");
          descend(n->kids[0].raw(), w, env);
          return;
        }
        if (r == 1) {
          lines.push_back("implication holds: consequent verified");
          descend(n->kids[1].raw(), w, env);
          return;
        }
        if (r == -1) {
          lines.push_back("implication fails: antecedent holds, consequent refuted");
          descend(n->kids[1].raw(), w, env);
          return;
        }
        lines.push_back("implication undetermined");
        return;
      }
      case Kind::Box: {
        if (r == -1) {
          os << "box fails at successor world " << witness;
          lines.push_back(os.str());
          descend(n->kids[0].raw(), witness, env);
          return;
        }
        lines.push_back(r == 1 ? "box holds at every listed successor"
                               : "box undetermined (prefix truncated above or operand unknown)");
        return;
      }
      case Kind::Forall: {
        if (r == -1) {
          os << "forall " << sig.var(n->var) << " fails at element " << witness;
          lines.push_back(os.str());
          int saved = env[static_cast<size_t>(n->var)];
          env[static_cast<size_t>(n->var)] = witness;
          descend(n->kids[0].raw(), w, env);
          env[static_cast<size_t>(n->var)] = saved;
          return;
        }
        lines.push_back(r == 1 ? "forall holds over the listed domain"
                               : "forall undetermined (domain truncated or operand unknown)");
        return;
      }
      default:
        return;
    }
  }
};

}  // namespace

bool eval2(const PredicateModel& m, int world, const Assignment& g, const Formula& f,
           BoxMode mode) {
  if (m.frame().truncated()) fail(ErrorKind::Input, "two-valued evaluation needs a finite frame");
  if (m.domain_truncated()) fail(ErrorKind::Input, "two-valued evaluation needs full domains");
  Formula core = expand(f, mode);
  Env env = env_from(g, m, world, core);
  EvalCore ec{m, EvalBounds{}.step_limit};
  std::int8_t r = ec.run(core.raw(), world, env);
  if (r == 0) fail(ErrorKind::Internal, "unknown verdict on a non-truncated model");
  return r == 1;
}

Verdict eval3(const PredicateModel& m, int world, const Assignment& g, const Formula& f,
              const EvalBounds& bounds, BoxMode mode) {
  Formula core = expand(f, mode);
  Env env = env_from(g, m, world, core);
  EvalCore ec{m, bounds.step_limit};
  std::int8_t r = ec.run(core.raw(), world, env);
  Verdict v;
  v.truth = static_cast<Truth>(r);
  v.obligations = ec.obligations;
  if (r != 0) {
    TraceBuilder tb{ec, m.sig(), {}};
    tb.descend(core.raw(), world, env);
    v.trace = std::move(tb.lines);
  }
  return v;
}

// ── Step relation ────────────────────────────────────────────────────────────

StepRelation::StepRelation(int size)
    : size_(size), bits_(static_cast<size_t>(size) * static_cast<size_t>(size), 0) {
  if (size <= 0) fail(ErrorKind::Input, "relation needs a positive world count");
}

StepRelation StepRelation::compose(const StepRelation& other) const {
  if (other.size_ != size_) fail(ErrorKind::Input, "relation size mismatch");
  StepRelation out(size_);
  for (int w = 0; w < size_; ++w)
    for (int u = 0; u < size_; ++u) {
      if (!at(w, u)) continue;
      for (int v = 0; v < size_; ++v)
        if (other.at(u, v)) out.set(w, v);
    }
  return out;
}

StepRelation StepRelation::power(int n) const {
  if (n < 0) fail(ErrorKind::Input, "relation power must be nonnegative");
  StepRelation out(size_);
  for (int w = 0; w < size_; ++w) out.set(w, w);  // identity
  StepRelation base = *this;
  while (n > 0) {
    if (n & 1) out = out.compose(base);
    n >>= 1;
    if (n) base = base.compose(base);
  }
  return out;
}

bool StepRelation::irreflexive() const {
  for (int w = 0; w < size_; ++w)
    if (at(w, w)) return false;
  return true;
}

bool StepRelation::transitive() const {
  for (int w = 0; w < size_; ++w)
    for (int u = 0; u < size_; ++u) {
      if (!at(w, u)) continue;
      for (int v = 0; v < size_; ++v)
        if (at(u, v) && !at(w, v)) return false;
    }
  return true;
}

StepRelation step_relation(const PredicateModel& m, StepGuard guard) {
  const Signature& sig = m.sig();
  LetterId letter = -1;
  if (guard == StepGuard::PhaseLetter) {
    auto id = sig.find_letter("p");
    if (!id || sig.letter(*id).arity != 0)
      fail(ErrorKind::Undeclared, "step relation needs the proposition letter p");
    letter = *id;
  } else {
    auto id = sig.find_letter("P");
    if (!id || sig.letter(*id).arity != 1)
      fail(ErrorKind::Undeclared, "step relation needs the monadic letter P");
    letter = *id;
  }

  int n = m.frame().world_count();
  std::vector<char> guard_holds(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    if (guard == StepGuard::PhaseLetter) {
      guard_holds[static_cast<size_t>(v)] = m.holds(v, letter, {}) ? 1 : 0;
    } else {
      bool all = true;
      for (int e : m.domain(v)) {
        std::array<int, 1> args{e};
        if (!m.holds(v, letter, args)) {
          all = false;
          break;
        }
      }
      guard_holds[static_cast<size_t>(v)] = all ? 1 : 0;
    }
  }

  StepRelation rel(n);
  for (int w = 0; w < n; ++w) {
    bool seen_guard = false;
    for (int v = w; v < n; ++v) {
      if (guard_holds[static_cast<size_t>(v)]) seen_guard = true;
      if (seen_guard && !guard_holds[static_cast<size_t>(v)]) rel.set(w, v);
    }
  }
  return rel;
}

}  // namespace linmod
