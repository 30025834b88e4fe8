#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "linmod/frame.hpp"
#include "linmod/io.hpp"

#include "support/fixtures.hpp"

using namespace linmod;

namespace {

std::vector<int> successors(const Frame& f, int w) {
  std::vector<int> out;
  f.for_successors(w, [&](int v) { out.push_back(v); });
  return out;
}

}  // namespace

TEST_CASE("strict and reflexive natural prefixes") {
  Frame lt = Frame::nat_lt(4);
  Frame le = Frame::nat_le(4);
  CHECK(lt.world_count() == 4);
  CHECK(lt.truncated());
  CHECK(le.truncated());
  for (int w = 0; w < 4; ++w) {
    CHECK(lt.truncated_above(w));
    CHECK_FALSE(lt.reflexive_at(w));
    CHECK(le.reflexive_at(w));
    for (int v = 0; v < 4; ++v) {
      CHECK(lt.accessible(w, v) == (w < v));
      CHECK(le.accessible(w, v) == (w <= v));
    }
  }
  CHECK(successors(lt, 2) == std::vector<int>{3});
  CHECK(successors(le, 2) == std::vector<int>{2, 3});
}

TEST_CASE("chosen reflexive points") {
  Frame f = Frame::nat_refl(5, {1, 3});
  for (int w = 0; w < 5; ++w) {
    CHECK(f.reflexive_at(w) == (w == 1 || w == 3));
    for (int v = 0; v < 5; ++v)
      CHECK(f.accessible(w, v) == (w < v || (w == v && f.reflexive_at(w))));
  }
}

TEST_CASE("switchover chains flip reflexivity at the cut") {
  // gn: irreflexive below n, reflexive from n on; hn the other way round.
  Frame g2 = Frame::gn(2, 6);
  Frame h2 = Frame::hn(2, 6);
  for (int w = 0; w < 6; ++w) {
    CHECK(g2.reflexive_at(w) == (w >= 2));
    CHECK(h2.reflexive_at(w) == (w < 2));
  }
  // gn(0) is the fully reflexive chain, hn(0) the strict one.
  Frame g0 = Frame::gn(0, 3);
  Frame h0 = Frame::hn(0, 3);
  for (int w = 0; w < 3; ++w) {
    CHECK(g0.accessible(w, w));
    CHECK_FALSE(h0.accessible(w, w));
  }
}

TEST_CASE("explicit frames list their edges verbatim") {
  Frame f = Frame::finite_explicit(3, {{0, 1}, {1, 2}, {2, 2}, {0, 0}});
  CHECK_FALSE(f.truncated());
  CHECK_FALSE(f.truncated_above(0));
  CHECK(f.accessible(0, 1));
  CHECK(f.accessible(0, 0));
  CHECK(f.accessible(2, 2));
  CHECK_FALSE(f.accessible(1, 0));
  CHECK_FALSE(f.accessible(1, 1));
  CHECK(successors(f, 0).size() == 2);
  CHECK(successors(f, 1) == std::vector<int>{2});
  CHECK(fixtures::error_kind([&] { f.accessible(3, 0); }) == ErrorKind::Input);
  CHECK(fixtures::error_kind([&] { f.accessible(0, -1); }) == ErrorKind::Input);
}

TEST_CASE("ordinal prefixes mark segment worlds as truncated and tail worlds as closed") {
  Frame f = Frame::ordinal(2, 1, 5);
  CHECK(f.world_count() == 11);
  CHECK(f.truncated());
  CHECK(f.copies() == 2);
  CHECK(f.tail() == 1);
  CHECK(f.copy_len() == 5);
  for (int w = 0; w < 11; ++w) {
    CHECK(f.in_tail(w) == (w >= 10));
    // Worlds inside a segment stand for positions of an omega stretch, so
    // their successor set is incomplete; the tail sees everything above it.
    CHECK(f.truncated_above(w) == (w < 10));
    for (int v = 0; v < 11; ++v) CHECK(f.accessible(w, v) == (w <= v));
  }
}

TEST_CASE("dense prefixes keep their chain designations and ascending labels") {
  Frame f = Frame::dense("fcfcf");
  CHECK(f.world_count() == 5);
  CHECK(f.truncated());
  CHECK(f.chain_worlds() == std::vector<int>{1, 3});
  CHECK(f.is_chain_world(1));
  CHECK_FALSE(f.is_chain_world(0));
  for (int w = 0; w < 5; ++w) {
    CHECK(f.truncated_above(w));
    for (int v = 0; v < 5; ++v) CHECK(f.accessible(w, v) == (w <= v));
  }
  const auto& labels = f.labels();
  REQUIRE(labels.size() == 5);
  for (size_t i = 1; i < labels.size(); ++i) {
    // label[i-1] < label[i] as rationals
    long long lhs = labels[i - 1].num * labels[i].den;
    long long rhs = labels[i].num * labels[i - 1].den;
    CHECK(lhs < rhs);
  }
}

TEST_CASE("materialization preserves the relation and clears truncation") {
  for (const Frame& f : {Frame::nat_lt(5), Frame::nat_le(5), Frame::gn(2, 5), Frame::hn(1, 5),
                         Frame::nat_refl(5, {0, 4})}) {
    Frame m = f.materialize();
    CHECK(m.kind() == Frame::Kind::Explicit);
    CHECK_FALSE(m.truncated());
    CHECK(m.world_count() == f.world_count());
    for (int w = 0; w < f.world_count(); ++w)
      for (int v = 0; v < f.world_count(); ++v) CHECK(m.accessible(w, v) == f.accessible(w, v));
  }
}

TEST_CASE("descriptions round trip through the frame line parser") {
  std::vector<Frame> frames = {
      Frame::nat_le(20),  Frame::nat_lt(7),          Frame::nat_refl(5, {1, 3}),
      Frame::gn(2, 10),   Frame::hn(3, 9),           Frame::ordinal(2, 1, 7),
      Frame::dense("fcfcf"),
  };
  for (const Frame& f : frames) {
    std::string line = f.describe();
    CAPTURE(line);
    Frame g = parse_frame_line(line);
    CHECK(g.describe() == line);
    CHECK(g.kind() == f.kind());
    CHECK(g.world_count() == f.world_count());
    for (int w = 0; w < f.world_count(); ++w)
      for (int v = 0; v < f.world_count(); ++v) CHECK(g.accessible(w, v) == f.accessible(w, v));
  }
  CHECK(Frame::nat_le(20).describe() == "natle 20");
  CHECK(Frame::gn(2, 10).describe() == "gn 2 10");
  CHECK(Frame::ordinal(2, 1, 7).describe() == "ord 2 1 7");
  CHECK(Frame::dense("fcf").describe() == "dense fcf");
}

TEST_CASE("degenerate frame parameters are rejected") {
  CHECK(fixtures::error_kind([] { Frame::nat_le(0); }) == ErrorKind::Input);
  CHECK(fixtures::error_kind([] { Frame::dense(""); }) == ErrorKind::Input);
  CHECK(fixtures::error_kind([] { Frame::dense("fcx"); }) == ErrorKind::Input);
  CHECK(fixtures::error_kind([] { Frame::nat_refl(3, {5}); }) == ErrorKind::Input);
  CHECK(fixtures::error_kind([] { Frame::finite_explicit(2, {{0, 5}}); }) == ErrorKind::Input);
}
