#pragma once

#include <string>
#include <vector>

#include "linmod/error.hpp"

namespace linmod {

// Worlds are indices 0..world_count-1.  Every kind except Explicit lists a
// finite prefix of an infinite linear order; such frames are "truncated":
// evaluation must treat the successor set of prefix worlds as incomplete.
//
// Prefix kinds over the naturals relate w to v when w < v, plus w to itself
// when w lies in the reflexive set.  This covers every relation between
// strict < and reflexive <=.
//
// Ordinal frames list m consecutive segments of length copy_len followed by
// a tail of k worlds, ordered by index and related by <=.  Each segment
// stands for an omega stretch, so worlds inside segments are truncated
// above, while the k tail worlds see their complete successor set.
//
// Dense frames list finitely many rational labels in ascending order under
// <=; some worlds are designated chain worlds.  Between any two listed
// worlds the intended order is dense, so the whole prefix is truncated.
class Frame {
 public:
  enum class Kind { Explicit, NatPrefix, GnPrefix, HnPrefix, OrdinalPrefix, DensePrefix };

  struct Rational {
    long long num = 0;
    long long den = 1;
  };

  static Frame finite_explicit(int world_count, std::vector<std::pair<int, int>> edges);
  static Frame nat_le(int length);                               // all worlds reflexive
  static Frame nat_lt(int length);                               // no world reflexive
  static Frame nat_refl(int length, std::vector<int> refl_set);  // chosen worlds reflexive
  static Frame gn(int n, int length);  // irreflexive below n, reflexive from n on
  static Frame hn(int n, int length);  // reflexive below n, irreflexive from n on
  static Frame ordinal(int copies, int tail, int copy_len);
  // pattern: one char per world, 'c' chain world, 'f' filler
  static Frame dense(const std::string& pattern);

  Kind kind() const { return kind_; }
  int world_count() const { return world_count_; }
  bool truncated() const { return truncated_; }

  bool accessible(int w, int v) const;
  bool truncated_above(int w) const;

  template <typename F>
  void for_successors(int w, F&& fn) const {
    if (kind_ == Kind::Explicit) {
      for (int v : adjacency_[static_cast<size_t>(w)]) fn(v);
      return;
    }
    for (int v = w; v < world_count_; ++v)
      if (accessible(w, v)) fn(v);
  }

  // Ordinal layout.
  int copies() const { return copies_; }
  int tail() const { return tail_; }
  int copy_len() const { return copy_len_; }
  bool in_tail(int w) const { return kind_ == Kind::OrdinalPrefix && w >= copies_ * copy_len_; }

  // Dense layout.
  bool is_chain_world(int w) const;
  std::vector<int> chain_worlds() const;
  const std::vector<Rational>& labels() const { return labels_; }

  // Reflexive set of nat-like kinds.
  bool reflexive_at(int w) const;

  // Finite reification of a prefix kind: same worlds and relation, explicit
  // edges, not truncated.  Countermodel search evaluates on the result.
  Frame materialize() const;

  // Round-trippable parameter description, e.g. "natle 20" or "gn 2 10".
  std::string describe() const;

 private:
  Frame() = default;
  void check_world(int w) const;

  Kind kind_ = Kind::Explicit;
  int world_count_ = 0;
  bool truncated_ = false;
  std::vector<std::vector<int>> adjacency_;  // Explicit
  std::vector<bool> reflexive_;              // NatPrefix
  int gn_n_ = 0;                             // GnPrefix / HnPrefix
  int copies_ = 0, tail_ = 0, copy_len_ = 0; // OrdinalPrefix
  std::vector<bool> chain_;                  // DensePrefix
  std::vector<Rational> labels_;             // DensePrefix
};

}  // namespace linmod
