#pragma once

#include <cstdint>
#include <optional>

#include "linmod/eval.hpp"
#include "linmod/model.hpp"

namespace linmod {

struct CountermodelOptions {
  int max_domain = 1;                        // constant domain sizes tried, 1..max
  std::optional<int> at_world;               // restrict refuting world; default any
  std::uint64_t valuation_guard = 1u << 22;  // refuse larger search spaces
  BoxMode box_mode = BoxMode::Plain;
};

struct Countermodel {
  PredicateModel model;
  int world;               // formula is false here
  int domain_size;
  std::uint64_t valuation;  // bitmask the model was decoded from
};

// Deterministic search for a refutation of a closed formula on the given
// frame: domain sizes ascending, valuation bitmasks ascending (proposition
// letters in the low bits, then monadic letters), candidate worlds ascending.
// The frame must be finite and not truncated.  Letters of arity two or more
// are not searched over.
std::optional<Countermodel> countermodel_search(const Formula& f, const Signature& sig,
                                                const Frame& frame,
                                                const CountermodelOptions& opts = {});

}  // namespace linmod
