#include "linmod/letters.hpp"

namespace linmod {

FamilySignature family_signature(int tile_count) {
  if (tile_count <= 0) fail(ErrorKind::Input, "a tile set needs at least one tile");
  FamilySignature out;
  out.sig = Signature::with_default_vars();
  out.map.edge = out.sig.add_letter("succ", 2);
  out.map.mark = out.sig.add_letter("M", 1);
  for (int t = 0; t < tile_count + 2; ++t) {
    LetterId id = out.sig.add_letter("P" + std::to_string(t), 1);
    if (t < tile_count)
      out.map.tile.push_back(id);
    else if (t == tile_count)
      out.map.pair_lo = id;
    else
      out.map.pair_hi = id;
  }
  out.map.phase = out.sig.add_letter("p", 0);
  out.map.mono = out.sig.add_letter("P", 1);
  out.map.block = out.sig.add_letter("q", 0);
  return out;
}

SeparationSignature separation_signature() {
  SeparationSignature out;
  out.sig = Signature::with_default_vars();
  out.phase = out.sig.add_letter("p", 0);
  out.block = out.sig.add_letter("q", 0);
  return out;
}

}  // namespace linmod
