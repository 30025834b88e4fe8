#include "linmod/metrics.hpp"

#include <sstream>

namespace linmod {

namespace {

void count_letters(const Formula& f, std::vector<long>& counts) {
  const FormulaNode& n = f.node();
  if (n.kind == Kind::Atom) counts[static_cast<size_t>(n.letter)]++;
  for (const auto& k : n.kids) count_letters(k, counts);
}

}  // namespace

Metrics measure(const Formula& f, const Signature& sig, BoxMode mode) {
  Formula core = expand(f, mode);
  Metrics m;
  m.variable_count = static_cast<int>(used_vars(core).size());
  m.modal_depth = modal_depth(core);
  m.conjunct_count = f.kind() == Kind::And ? static_cast<int>(f.kids().size()) : 1;

  std::vector<long> counts(static_cast<size_t>(sig.letter_count()), 0);
  count_letters(core, counts);
  for (size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    const Letter& l = sig.letter(static_cast<LetterId>(i));
    m.census.push_back(LetterUse{l.name, l.arity, counts[i]});
  }
  return m;
}

std::string format_metrics(const Metrics& m) {
  std::ostringstream os;
  os << "variables=" << m.variable_count << " modal-depth=" << m.modal_depth
     << " conjuncts=" << m.conjunct_count << " letters=" << m.census.size() << "\n";
  for (const auto& u : m.census)
    os << "  " << u.name << "/" << u.arity << " x" << u.count << "\n";
  return os.str();
}

}  // namespace linmod
