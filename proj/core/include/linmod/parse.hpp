#pragma once

#include <string>
#include <string_view>

#include "linmod/formula.hpp"

namespace linmod {

// Text grammar (UTF-8, whitespace separated):
//
//   f ::= bot | T | <letter>                      nullary atom
//       | (<letter> v ...)                        atom with arguments
//       | (-> f f) | (not f) | (and f f ...) | (or f f ...) | (iff f f)
//       | (box f) | (dia f) | (boxp f)
//       | (pdia1 f) | (pdia2 f) | (xbox f)
//       | (boxn k f) | (dian k f) | (pdia1n k f) | (pdia2n k f) | (xboxn k f)
//       | (forall v f) | (exists v f)
//       | (next f)
//
// Guard resolution: pdia1 forms use the proposition letter named "p",
// pdia2 forms the monadic letter "P" and the variable "x", xbox forms the
// proposition letter named "q"; each must be declared in the signature.
// Keywords are reserved and cannot name letters or variables.
Formula parse(std::string_view text, const Signature& sig);

// Canonical single-line rendering; parse(print(f)) is structurally equal to f.
std::string print(const Formula& f, const Signature& sig);

bool is_reserved_word(std::string_view word);

}  // namespace linmod
