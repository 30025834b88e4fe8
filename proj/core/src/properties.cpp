#include "linmod/properties.hpp"

#include <algorithm>
#include <array>

#include "linmod/reductions.hpp"

namespace linmod {

namespace {

std::string fmt_line(const std::string& name, std::uint64_t n, size_t bad) {
  return "property " + name + ": " + std::to_string(n) + " instances, " +
         std::to_string(bad) + " violations";
}

}  // namespace

void SuiteResult::merge(const SuiteResult& other) {
  lines.insert(lines.end(), other.lines.begin(), other.lines.end());
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  instances += other.instances;
}

SuiteResult mark_chain_suite(const PredicateModel& m0, const FamilySignature& family,
                             const ChainBounds& b) {
  const LetterMap& L = family.map;
  const int W = m0.frame().world_count();
  const int max_w = std::min(b.max_w, W - 1);
  const std::vector<int>& dom = m0.domain(0);
  const int max_elem = dom.back();
  if (b.max_n + std::max(b.max_j, 1) > max_elem)
    fail(ErrorKind::Input, "domain bound too small for the requested mark indices");
  if (2 * (b.max_n + 1) > max_w)
    fail(ErrorKind::Input, "world bound too small for the requested mark indices");

  auto M = [&](int w, int a) { return m0.holds(w, L.mark, std::array<int, 1>{a}); };
  auto tile = [&](int w, int t, int a) {
    return m0.holds(w, L.tile[static_cast<size_t>(t)], std::array<int, 1>{a});
  };
  auto p = [&](int w) { return m0.holds(w, L.phase, {}); };

  StepRelation R = step_relation(m0, StepGuard::PhaseLetter);
  StepRelation R2 = R.power(2);

  // p-worlds in [lo, hi] counted via prefix sums
  std::vector<int> psum(static_cast<size_t>(W) + 1, 0);
  for (int w = 0; w < W; ++w) psum[static_cast<size_t>(w) + 1] = psum[static_cast<size_t>(w)] + (p(w) ? 1 : 0);
  auto p_free = [&](int lo, int hi) {
    return psum[static_cast<size_t>(hi) + 1] - psum[static_cast<size_t>(lo)] == 0;
  };

  SuiteResult out;

  // (1) the mark-step biconditional
  {
    std::uint64_t n_inst = 0;
    size_t bad0 = out.violations.size();
    for (int w = 0; w <= max_w; ++w) {
      for (int n = 0; n <= b.max_n; ++n) {
        ++n_inst;
        bool lhs = M(w, n);
        bool c1 = !p(w);
        bool c2 = false;
        for (int v = 0; v < W && !c2; ++v) c2 = R.at(w, v) && M(v, n + 1);
        bool c3 = true;
        for (int v = 0; v < W && c3; ++v)
          if (R2.at(w, v) && M(v, n + 1)) c3 = false;
        if (lhs != (c1 && c2 && c3))
          out.violations.push_back({"(1)", "w=" + std::to_string(w) + " n=" + std::to_string(n)});
      }
    }
    out.lines.push_back(fmt_line("(1)", n_inst, out.violations.size() - bad0));
    out.instances += n_inst;
  }

  // (2) marks persist across p-free stretches
  {
    std::uint64_t n_inst = 0;
    size_t bad0 = out.violations.size();
    for (int u = 0; u <= max_w; ++u) {
      if (p(u)) continue;
      for (int u2 = 0; u2 <= max_w; ++u2) {
        if (p(u2) || !p_free(std::min(u, u2), std::max(u, u2))) continue;
        for (int n = 0; n <= b.max_n; ++n) {
          ++n_inst;
          if (M(u, n) && !M(u2, n))
            out.violations.push_back({"(2)", "u=" + std::to_string(u) +
                                                 " u'=" + std::to_string(u2) +
                                                 " n=" + std::to_string(n)});
        }
      }
    }
    out.lines.push_back(fmt_line("(2)", n_inst, out.violations.size() - bad0));
    out.instances += n_inst;
  }

  // (3) mark uniqueness
  {
    std::uint64_t n_inst = 0;
    size_t bad0 = out.violations.size();
    for (int w = 0; w <= max_w; ++w)
      for (int n = 0; n <= b.max_n; ++n) {
        if (!M(w, n)) continue;
        for (int j = 1; j <= b.max_j; ++j) {
          ++n_inst;
          if (M(w, n + j))
            out.violations.push_back({"(3)", "w=" + std::to_string(w) + " n=" + std::to_string(n) +
                                                 " j=" + std::to_string(j)});
        }
      }
    out.lines.push_back(fmt_line("(3)", n_inst, out.violations.size() - bad0));
    out.instances += n_inst;
  }

  // (4) marked worlds tile every element
  {
    std::uint64_t n_inst = 0;
    size_t bad0 = out.violations.size();
    for (int w = 0; w <= max_w; ++w)
      for (int m = 0; m <= b.max_n; ++m) {
        if (!M(w, m)) continue;
        for (int n = 0; n <= b.max_n; ++n) {
          ++n_inst;
          bool tiled = false;
          for (int t = 0; t < L.tile_count() && !tiled; ++t) tiled = tile(w, t, n);
          if (!tiled)
            out.violations.push_back({"(4)", "w=" + std::to_string(w) + " m=" + std::to_string(m) +
                                                 " n=" + std::to_string(n)});
        }
      }
    out.lines.push_back(fmt_line("(4)", n_inst, out.violations.size() - bad0));
    out.instances += n_inst;
  }

  // (5) same mark, same tile atoms
  {
    std::uint64_t n_inst = 0;
    size_t bad0 = out.violations.size();
    for (int m = 0; m <= b.max_n; ++m) {
      std::vector<int> marked;
      for (int w = 0; w <= max_w; ++w)
        if (M(w, m)) marked.push_back(w);
      for (int w : marked)
        for (int v : marked)
          for (int n = 0; n <= b.max_n; ++n)
            for (int t = 0; t < L.tile_count(); ++t) {
              ++n_inst;
              if (tile(w, t, n) && !tile(v, t, n))
                out.violations.push_back({"(5)", "w=" + std::to_string(w) +
                                                     " v=" + std::to_string(v) +
                                                     " m=" + std::to_string(m) +
                                                     " n=" + std::to_string(n) +
                                                     " t=" + std::to_string(t)});
            }
    }
    out.lines.push_back(fmt_line("(5)", n_inst, out.violations.size() - bad0));
    out.instances += n_inst;
  }

  // (min) least marked world
  {
    std::uint64_t n_inst = 0;
    size_t bad0 = out.violations.size();
    std::vector<int> minima = mark_world_minima(m0, L, b.max_n);
    for (int m = 0; m <= b.max_n; ++m) {
      ++n_inst;
      if (minima[static_cast<size_t>(m)] != 2 * m)
        out.violations.push_back({"(min)", "m=" + std::to_string(m) + " got " +
                                               std::to_string(minima[static_cast<size_t>(m)])});
    }
    out.lines.push_back(fmt_line("(min)", n_inst, out.violations.size() - bad0));
    out.instances += n_inst;
  }

  // sampled agreement with the formula route: the biconditional of (1)
  // evaluated by eval3 must match the arithmetic verdict whenever definite
  if (b.cross_check_eval3) {
    std::uint64_t n_inst = 0;
    size_t bad0 = out.violations.size();
    const Signature& sig = family.sig;
    const VarId x = sig.var_or_fail("x");
    const VarId y = sig.var_or_fail("y");
    Formula body = mk::iff(
        mk::atom(sig, L.mark, {x}),
        mk::conj({mk::negate(mk::atom(sig, L.phase)),
                  mk::pdia1(L.phase, mk::atom(sig, L.mark, {y})),
                  mk::negate(mk::pdia1_iter(L.phase, 2, mk::atom(sig, L.mark, {y})))}));
    for (int w = 0; w <= std::min(30, max_w); ++w)
      for (int n = 0; n <= std::min(3, b.max_n); ++n) {
        ++n_inst;
        Assignment g;
        g.set(x, n);
        g.set(y, n + 1);
        Verdict v = eval3(m0, w, g, body);
        if (v.truth == Truth::Unknown) continue;
        bool lhs = M(w, n);
        bool c1 = !p(w);
        bool c2 = false;
        for (int u = 0; u < W && !c2; ++u) c2 = R.at(w, u) && M(u, n + 1);
        bool c3 = true;
        for (int u = 0; u < W && c3; ++u)
          if (R2.at(w, u) && M(u, n + 1)) c3 = false;
        bool arith = lhs == (c1 && c2 && c3);
        if ((v.truth == Truth::True) != arith)
          out.violations.push_back({"(1)/eval3", "w=" + std::to_string(w) +
                                                     " n=" + std::to_string(n)});
      }
    out.lines.push_back(fmt_line("(1)/eval3", n_inst, out.violations.size() - bad0));
    out.instances += n_inst;
  }

  return out;
}

ThresholdReader::ThresholdReader(const PredicateModel& m, const FamilySignature& family)
    : m_(&m), L_(family.map), s_(family.map.tile_count() - 1),
      W_(m.frame().world_count()) {
  StepRelation R = step_relation(m, StepGuard::AllMono);
  pow_.reserve(static_cast<size_t>(s_) + 6);
  pow_.push_back(R.power(0));
  for (int k = 1; k <= s_ + 5; ++k) pow_.push_back(pow_.back().compose(R));
}

const StepRelation& ThresholdReader::power(int k) const {
  if (k < 0 || k >= static_cast<int>(pow_.size()))
    fail(ErrorKind::Input, "step exponent out of range");
  return pow_[static_cast<size_t>(k)];
}

bool ThresholdReader::qp_at(int u, int a) const {
  return m_->holds(u, L_.block, {}) && m_->holds(u, L_.mono, std::array<int, 1>{a});
}

bool ThresholdReader::beta_at(int w, int n, int a) const {
  if (n < 0 || n > s_ + 2) fail(ErrorKind::Input, "threshold level out of range");
  auto reach_qp = [&](const StepRelation& rel, int from, int elem) {
    for (int u = 0; u < W_; ++u)
      if (rel.at(from, u) && qp_at(u, elem)) return true;
    return false;
  };
  for (int bb : m_->domain(w)) {
    if (!reach_qp(power(s_ + 4), w, bb)) continue;
    if (reach_qp(power(s_ + 5), w, bb)) continue;
    for (int v = 0; v < W_; ++v) {
      if (!power(1).at(w, v) || !m_->holds(v, L_.mono, std::array<int, 1>{a})) continue;
      if (reach_qp(power(n + 1), v, bb) && !reach_qp(power(n + 2), v, bb)) return true;
    }
  }
  return false;
}

SuiteResult star_block_suite(const PredicateModel& star, const PredicateModel& prime,
                             const FamilySignature& family, const StarBounds& b) {
  const LetterMap& L = family.map;
  const int s = L.tile_count() - 1;
  const StarLabeling lab{s};
  const int W = star.frame().world_count();
  if (lab.start_world(b.max_m + 1) >= W)
    fail(ErrorKind::Input, "block prefix too short for the requested bounds");
  const std::vector<int>& dom = star.domain(0);
  if (dom.back() < b.max_a)
    fail(ErrorKind::Input, "domain bound too small for the requested elements");

  auto P = [&](int u, int a) { return star.holds(u, L.mono, std::array<int, 1>{a}); };
  auto q = [&](int u) { return star.holds(u, L.block, {}); };
  auto qp = [&](int u, int a) { return q(u) && P(u, a); };
  auto level_letter = [&](int n) {
    if (n <= s) return L.tile[static_cast<size_t>(n)];
    return n == s + 1 ? L.pair_lo : L.pair_hi;
  };

  ThresholdReader reader(star, family);
  auto beta_arith = [&](int w, int n, int a) { return reader.beta_at(w, n, a); };

  SuiteResult out;

  // (6) block starts name their block
  {
    std::uint64_t n_inst = 0;
    size_t bad0 = out.violations.size();
    for (int m = 0; m <= b.max_m; ++m)
      for (int a : dom) {
        ++n_inst;
        if (qp(lab.start_world(m), a) != (a == m))
          out.violations.push_back({"(6)", "m=" + std::to_string(m) + " a=" + std::to_string(a)});
      }
    out.lines.push_back(fmt_line("(6)", n_inst, out.violations.size() - bad0));
    out.instances += n_inst;
  }

  // (7) full rows exactly at shadows
  {
    std::uint64_t n_inst = 0;
    size_t bad0 = out.violations.size();
    for (int u = 0; u < W; ++u) {
      ++n_inst;
      bool all = true;
      for (int a : dom)
        if (!P(u, a)) {
          all = false;
          break;
        }
      StarLabeling::Role role = lab.decode(u).role;
      bool shadow = role == StarLabeling::Role::StartShadow ||
                    role == StarLabeling::Role::LevelShadow;
      if (all != shadow) out.violations.push_back({"(7)", "u=" + std::to_string(u)});
    }
    out.lines.push_back(fmt_line("(7)", n_inst, out.violations.size() - bad0));
    out.instances += n_inst;
  }

  // (8) thresholds read back the pair-tag rows
  {
    std::uint64_t n_inst = 0;
    size_t bad0 = out.violations.size();
    for (int m = 0; m <= b.max_m; ++m)
      for (int n = 0; n <= s + 2; ++n)
        for (int a = -1; a <= b.max_a; ++a) {
          ++n_inst;
          bool lhs = beta_arith(lab.start_world(m), n, a);
          bool rhs = prime.holds(2 * m, level_letter(n), std::array<int, 1>{a});
          if (lhs != rhs)
            out.violations.push_back({"(8)", "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                                 " a=" + std::to_string(a)});
        }
    out.lines.push_back(fmt_line("(8)", n_inst, out.violations.size() - bad0));
    out.instances += n_inst;
  }

  // (step) block-start distances
  {
    std::uint64_t n_inst = 0;
    size_t bad0 = out.violations.size();
    for (int m = 0; m < b.max_m; ++m) {
      const int wm = lab.start_world(m);
      const int wm1 = lab.start_world(m + 1);
      ++n_inst;
      if (!reader.power(s + 4).at(wm, wm1) || reader.power(s + 5).at(wm, wm1))
        out.violations.push_back({"(step)", "m=" + std::to_string(m) + " start distance"});
      for (int n = 0; n <= s + 2; ++n) {
        ++n_inst;
        const int v = lab.level_world(m, n);
        bool ok = wm < v && reader.power(n + 1).at(v, wm1) &&
                  !reader.power(n + 2).at(v, wm1);
        if (!ok)
          out.violations.push_back(
              {"(step)", "m=" + std::to_string(m) + " n=" + std::to_string(n) + " level distance"});
      }
    }
    out.lines.push_back(fmt_line("(step)", n_inst, out.violations.size() - bad0));
    out.instances += n_inst;
  }

  // sampled agreement of eval3 on the threshold formula
  if (b.cross_check_eval3) {
    std::uint64_t n_inst = 0;
    size_t bad0 = out.violations.size();
    const VarId x = family.sig.var_or_fail("x");
    for (int m = 0; m <= std::min(2, b.max_m); ++m)
      for (int n = 0; n <= s + 2; ++n) {
        Formula beta = gen_beta(family, n, x);
        for (int a = -1; a <= std::min(4, b.max_a); ++a) {
          ++n_inst;
          Assignment g;
          g.set(x, a);
          Verdict v = eval3(star, lab.start_world(m), g, beta);
          if (v.truth == Truth::Unknown) continue;
          if ((v.truth == Truth::True) != beta_arith(lab.start_world(m), n, a))
            out.violations.push_back({"(8)/eval3", "m=" + std::to_string(m) +
                                                       " n=" + std::to_string(n) +
                                                       " a=" + std::to_string(a)});
        }
      }
    out.lines.push_back(fmt_line("(8)/eval3", n_inst, out.violations.size() - bad0));
    out.instances += n_inst;
  }

  return out;
}

SuiteResult step_relation_shape(const PredicateModel& m, StepGuard guard) {
  SuiteResult out;
  StepRelation rel = step_relation(m, guard);
  out.instances += static_cast<std::uint64_t>(rel.size()) * static_cast<std::uint64_t>(rel.size());
  if (!rel.irreflexive()) out.violations.push_back({"(irrefl)", "some w steps to itself"});
  if (!rel.transitive()) out.violations.push_back({"(trans)", "composition leaves the table"});
  out.lines.push_back(fmt_line("(irrefl)", rel.size(), rel.irreflexive() ? 0 : 1));
  out.lines.push_back(fmt_line("(trans)", out.instances, rel.transitive() ? 0 : 1));
  return out;
}

std::vector<int> mark_world_minima(const PredicateModel& m0, const LetterMap& letters,
                                   int max_m) {
  std::vector<int> out;
  const int W = m0.frame().world_count();
  for (int m = 0; m <= max_m; ++m) {
    int found = -1;
    for (int w = 0; w < W; ++w)
      if (m0.holds(w, letters.mark, std::array<int, 1>{m})) {
        found = w;
        break;
      }
    out.push_back(found);
  }
  return out;
}

}  // namespace linmod
