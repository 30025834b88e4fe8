#pragma once

#include <vector>

#include "linmod/signature.hpp"

namespace linmod {

// Roles of the letters an encoding of a tile set uses.  All emitters, model
// generators, and the extractor agree on these roles and on the letter names
// produced by family_signature.
struct LetterMap {
  LetterId edge = -1;           // "succ", binary: immediate successor of elements
  LetterId mark = -1;           // "M", monadic: element currently marked
  std::vector<LetterId> tile;   // "P0".."Ps", monadic: cell carries tile t
  LetterId pair_lo = -1;        // "P{s+1}", monadic: source tag of an edge pair
  LetterId pair_hi = -1;        // "P{s+2}", monadic: target tag of an edge pair
  LetterId phase = -1;          // "p", proposition: phase flips along the chain
  LetterId mono = -1;           // "P", monadic: single letter of the star form
  LetterId block = -1;          // "q", proposition: block start of the star form

  int tile_count() const { return static_cast<int>(tile.size()); }
};

struct FamilySignature {
  Signature sig;
  LetterMap map;
};

// Declares every letter any stage of the reduction may use for a tile set of
// the given size, plus the variables x and y.  Declaration order is fixed so
// artifacts and reports are reproducible byte for byte.
FamilySignature family_signature(int tile_count);

// Letters of the two separation propositions.
struct SeparationSignature {
  Signature sig;
  LetterId phase = -1;  // "p"
  LetterId block = -1;  // "q"
};

SeparationSignature separation_signature();

}  // namespace linmod
