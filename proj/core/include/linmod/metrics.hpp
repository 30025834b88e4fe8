#pragma once

#include <string>
#include <vector>

#include "linmod/formula.hpp"

namespace linmod {

struct LetterUse {
  std::string name;
  int arity = 0;
  long count = 0;  // occurrences in the expanded form
};

struct Metrics {
  int variable_count = 0;  // distinct variables occurring bound or free
  int modal_depth = 0;
  int conjunct_count = 1;  // operands of a top level conjunction, else 1
  std::vector<LetterUse> census;  // letters actually occurring, declaration order
};

// Measures the expanded form of f; mode selects the box reading.
Metrics measure(const Formula& f, const Signature& sig, BoxMode mode = BoxMode::Plain);

std::string format_metrics(const Metrics& m);

}  // namespace linmod
