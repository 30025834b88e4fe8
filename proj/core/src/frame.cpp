#include "linmod/frame.hpp"

#include <algorithm>
#include <sstream>

namespace linmod {

void Frame::check_world(int w) const {
  if (w < 0 || w >= world_count_) fail(ErrorKind::Input, "world index out of range");
}

Frame Frame::finite_explicit(int world_count, std::vector<std::pair<int, int>> edges) {
  if (world_count <= 0) fail(ErrorKind::Input, "frame needs at least one world");
  Frame f;
  f.kind_ = Kind::Explicit;
  f.world_count_ = world_count;
  f.truncated_ = false;
  f.adjacency_.resize(static_cast<size_t>(world_count));
  for (auto [a, b] : edges) {
    f.check_world(a);
    f.check_world(b);
    f.adjacency_[static_cast<size_t>(a)].push_back(b);
  }
  for (auto& row : f.adjacency_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return f;
}

Frame Frame::nat_le(int length) {
  if (length <= 0) fail(ErrorKind::Input, "prefix length must be positive");
  Frame f;
  f.kind_ = Kind::NatPrefix;
  f.world_count_ = length;
  f.truncated_ = true;
  f.reflexive_.assign(static_cast<size_t>(length), true);
  return f;
}

Frame Frame::nat_lt(int length) {
  Frame f = nat_le(length);
  f.reflexive_.assign(static_cast<size_t>(length), false);
  return f;
}

Frame Frame::nat_refl(int length, std::vector<int> refl_set) {
  Frame f = nat_lt(length);
  for (int w : refl_set) {
    f.check_world(w);
    f.reflexive_[static_cast<size_t>(w)] = true;
  }
  return f;
}

Frame Frame::gn(int n, int length) {
  if (n < 0) fail(ErrorKind::Input, "gn parameter must be nonnegative");
  Frame f = nat_lt(length);
  f.kind_ = Kind::GnPrefix;
  f.gn_n_ = n;
  for (int w = n; w < length; ++w) f.reflexive_[static_cast<size_t>(w)] = true;
  return f;
}

Frame Frame::hn(int n, int length) {
  if (n < 0) fail(ErrorKind::Input, "hn parameter must be nonnegative");
  Frame f = nat_lt(length);
  f.kind_ = Kind::HnPrefix;
  f.gn_n_ = n;
  for (int w = 0; w < std::min(n, length); ++w) f.reflexive_[static_cast<size_t>(w)] = true;
  return f;
}

Frame Frame::ordinal(int copies, int tail, int copy_len) {
  if (copies < 0 || tail < 0 || copy_len <= 0)
    fail(ErrorKind::Input, "ordinal frame parameters out of range");
  if (copies * copy_len + tail <= 0) fail(ErrorKind::Input, "ordinal frame is empty");
  Frame f;
  f.kind_ = Kind::OrdinalPrefix;
  f.world_count_ = copies * copy_len + tail;
  f.truncated_ = copies > 0;
  f.copies_ = copies;
  f.tail_ = tail;
  f.copy_len_ = copy_len;
  return f;
}

Frame Frame::dense(const std::string& pattern) {
  if (pattern.empty()) fail(ErrorKind::Input, "dense frame pattern is empty");
  Frame f;
  f.kind_ = Kind::DensePrefix;
  f.world_count_ = static_cast<int>(pattern.size());
  f.truncated_ = true;
  long long next_chain = 0;
  for (char c : pattern) {
    if (c == 'c') {
      f.chain_.push_back(true);
      f.labels_.push_back({next_chain, 1});
      ++next_chain;
    } else if (c == 'f') {
      f.chain_.push_back(false);
      // Fillers sit at the midpoint before the next chain label.
      f.labels_.push_back({2 * next_chain - 1, 2});
    } else {
      fail(ErrorKind::Input, "dense frame pattern may only contain c and f");
    }
  }
  return f;
}

bool Frame::reflexive_at(int w) const {
  check_world(w);
  switch (kind_) {
    case Kind::NatPrefix:
    case Kind::GnPrefix:
    case Kind::HnPrefix:
      return reflexive_[static_cast<size_t>(w)];
    case Kind::OrdinalPrefix:
    case Kind::DensePrefix:
      return true;
    case Kind::Explicit: {
      const auto& row = adjacency_[static_cast<size_t>(w)];
      return std::binary_search(row.begin(), row.end(), w);
    }
  }
  return false;
}

bool Frame::accessible(int w, int v) const {
  check_world(w);
  check_world(v);
  switch (kind_) {
    case Kind::Explicit: {
      const auto& row = adjacency_[static_cast<size_t>(w)];
      return std::binary_search(row.begin(), row.end(), v);
    }
    case Kind::NatPrefix:
    case Kind::GnPrefix:
    case Kind::HnPrefix:
      return w < v || (w == v && reflexive_[static_cast<size_t>(w)]);
    case Kind::OrdinalPrefix:
    case Kind::DensePrefix:
      return w <= v;
  }
  return false;
}

bool Frame::truncated_above(int w) const {
  check_world(w);
  switch (kind_) {
    case Kind::Explicit:
      return false;
    case Kind::NatPrefix:
    case Kind::GnPrefix:
    case Kind::HnPrefix:
    case Kind::DensePrefix:
      return true;
    case Kind::OrdinalPrefix:
      // Tail worlds have every successor listed; segment worlds do not.
      return w < copies_ * copy_len_;
  }
  return false;
}

bool Frame::is_chain_world(int w) const {
  check_world(w);
  return kind_ == Kind::DensePrefix && chain_[static_cast<size_t>(w)];
}

std::vector<int> Frame::chain_worlds() const {
  std::vector<int> out;
  for (int w = 0; w < world_count_; ++w)
    if (kind_ == Kind::DensePrefix && chain_[static_cast<size_t>(w)]) out.push_back(w);
  return out;
}

Frame Frame::materialize() const {
  std::vector<std::pair<int, int>> edges;
  for (int w = 0; w < world_count_; ++w)
    for (int v = 0; v < world_count_; ++v)
      if (accessible(w, v)) edges.emplace_back(w, v);
  return finite_explicit(world_count_, std::move(edges));
}

std::string Frame::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Explicit:
      os << "explicit " << world_count_;
      break;
    case Kind::NatPrefix: {
      bool all = true, none = true;
      for (int w = 0; w < world_count_; ++w)
        (reflexive_[static_cast<size_t>(w)] ? none : all) = false;
      if (all) {
        os << "natle " << world_count_;
      } else if (none) {
        os << "natlt " << world_count_;
      } else {
        os << "natrefl " << world_count_ << " ";
        bool first = true;
        for (int w = 0; w < world_count_; ++w) {
          if (!reflexive_[static_cast<size_t>(w)]) continue;
          if (!first) os << ",";
          os << w;
          first = false;
        }
      }
      break;
    }
    case Kind::GnPrefix:
      os << "gn " << gn_n_ << " " << world_count_;
      break;
    case Kind::HnPrefix:
      os << "hn " << gn_n_ << " " << world_count_;
      break;
    case Kind::OrdinalPrefix:
      os << "ord " << copies_ << " " << tail_ << " " << copy_len_;
      break;
    case Kind::DensePrefix: {
      os << "dense ";
      for (bool c : chain_) os << (c ? 'c' : 'f');
      break;
    }
  }
  return os.str();
}

}  // namespace linmod
