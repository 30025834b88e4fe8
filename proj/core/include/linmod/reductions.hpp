#pragma once

#include <string>
#include <vector>

#include "linmod/formula.hpp"
#include "linmod/letters.hpp"
#include "linmod/tiling.hpp"

namespace linmod {

// Stages of the encoding, keyed by which vocabulary they use and how boxes
// are read:
//   A        full vocabulary: edge letter, mark, tile letters, phase letter
//   APrime   edge letter eliminated through the pair-tag pattern
//   AStar    one monadic letter and one proposition letter
//   APlus    AStar with every box read reflexively
//   B        A without the recurrence conjunct
//   ABullet  A with the recurrence conjunct weakened for segmented orders
enum class Variant { A, APrime, AStar, APlus, B, ABullet };

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& name);

struct NamedConjunct {
  std::string name;  // e.g. "A_4*"
  Formula formula;
};

struct ReductionArtifact {
  Variant variant = Variant::A;
  TileSet tiles;
  FamilySignature family;
  BoxMode box_mode = BoxMode::Plain;
  std::vector<NamedConjunct> conjuncts;

  Formula conjunction() const;
  const Signature& sig() const { return family.sig; }
  const LetterMap& letters() const { return family.map; }
};

// The ten conjunct family over the full vocabulary.  Tile 0 is the
// designated recurring tile.
ReductionArtifact gen_base(const TileSet& tiles);

// Replaces every edge atom succ(u,v) by pdia1(pair_lo(u) && pair_hi(v)).
ReductionArtifact prime_pass(const ReductionArtifact& base);

// Threshold formula beta_n(target): some witness element whose block start
// lies exactly s+4 pdia2-steps ahead, such that a pdia2-step reaches a world
// exactly n+1 steps short of that block start where the mono letter holds of
// target.  Encodes "target carries letter n" in the single-letter vocabulary.
Formula gen_beta(const FamilySignature& family, int n, VarId target);

// Rewrites a prime artifact into the single-letter vocabulary: tile and pair
// atoms become their beta formulas, mark atoms become q && P(x), and every
// pdia1 becomes pdia2.  The fourth conjunct is replaced wholesale by its
// threshold form (the phase letter has no pointwise image).
ReductionArtifact star_pass(const ReductionArtifact& prime);

// Substitutes the reflexive box for every box and switches the artifact's
// box reading, preparing evaluation over relations between < and <=.
ReductionArtifact boxplus_pass(const ReductionArtifact& star);

ReductionArtifact gen_variant(const TileSet& tiles, Variant v);

// ── Separation formulas ──────────────────────────────────────────────────────

enum class SeparationKind { Ref, Z, BoxNRef, XBoxNZ };

struct Separation {
  std::string name;
  Signature sig;
  Formula formula;
};

// ref = box p -> p.  Z = box(box p -> p) -> (dia box p -> box p).
// BoxNRef iterates box n times over ref; XBoxNZ wraps Z in n parity boxes.
Separation gen_separation(SeparationKind kind, int n = 0);

}  // namespace linmod
