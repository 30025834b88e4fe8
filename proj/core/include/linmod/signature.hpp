#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "linmod/error.hpp"

namespace linmod {

using LetterId = int;
using VarId = int;

struct Letter {
  std::string name;
  int arity = 0;  // 0 = proposition letter
};

// Declares the predicate letters and individual variables a formula may use.
// Ids are stable indices into the declaration order.
class Signature {
 public:
  Signature() = default;

  // Declares x and y, the variables every emitted formula is built from.
  static Signature with_default_vars() {
    Signature s;
    s.add_var("x");
    s.add_var("y");
    return s;
  }

  LetterId add_letter(std::string name, int arity) {
    if (arity < 0) fail(ErrorKind::Input, "negative arity for letter " + name);
    if (letter_ids_.count(name))
      fail(ErrorKind::Input, "duplicate letter " + name);
    LetterId id = static_cast<LetterId>(letters_.size());
    letter_ids_.emplace(name, id);
    letters_.push_back(Letter{std::move(name), arity});
    return id;
  }

  VarId add_var(std::string name) {
    if (var_ids_.count(name)) fail(ErrorKind::Input, "duplicate variable " + name);
    VarId id = static_cast<VarId>(vars_.size());
    var_ids_.emplace(name, id);
    vars_.push_back(std::move(name));
    return id;
  }

  std::optional<LetterId> find_letter(std::string_view name) const {
    auto it = letter_ids_.find(std::string(name));
    if (it == letter_ids_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<VarId> find_var(std::string_view name) const {
    auto it = var_ids_.find(std::string(name));
    if (it == var_ids_.end()) return std::nullopt;
    return it->second;
  }

  LetterId letter_or_fail(std::string_view name) const {
    auto id = find_letter(name);
    if (!id) fail(ErrorKind::Undeclared, "undeclared letter " + std::string(name));
    return *id;
  }

  VarId var_or_fail(std::string_view name) const {
    auto id = find_var(name);
    if (!id) fail(ErrorKind::Undeclared, "undeclared variable " + std::string(name));
    return *id;
  }

  const Letter& letter(LetterId id) const { return letters_.at(static_cast<size_t>(id)); }
  const std::string& var(VarId id) const { return vars_.at(static_cast<size_t>(id)); }

  int letter_count() const { return static_cast<int>(letters_.size()); }
  int var_count() const { return static_cast<int>(vars_.size()); }

  const std::vector<Letter>& letters() const { return letters_; }
  const std::vector<std::string>& vars() const { return vars_; }

 private:
  std::vector<Letter> letters_;
  std::vector<std::string> vars_;
  std::unordered_map<std::string, LetterId> letter_ids_;
  std::unordered_map<std::string, VarId> var_ids_;
};

}  // namespace linmod
