#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <optional>

#include "doctest.h"
#include "linmod/countermodel.hpp"
#include "linmod/letters.hpp"
#include "linmod/parse.hpp"
#include "linmod/reductions.hpp"
#include "support/fixtures.hpp"

using namespace linmod;

TEST_CASE("reflexivity separates: ref fails on an irreflexive point") {
  Separation ref = gen_separation(SeparationKind::Ref);
  std::optional<Countermodel> cm =
      countermodel_search(ref.formula, ref.sig, Frame::nat_lt(1).materialize());
  REQUIRE(cm);
  // First valuation already refutes: p false, box p vacuously true.
  CHECK(cm->world == 0);
  CHECK(cm->domain_size == 1);
  CHECK(cm->valuation == 0);
  CHECK(cm->model.root() == 0);
  CHECK(cm->model.generator() == "search");
  CHECK_FALSE(eval2(cm->model, cm->world, Assignment{}, ref.formula));

  // On reflexive chains ref is valid.
  CHECK_FALSE(countermodel_search(ref.formula, ref.sig, Frame::nat_le(1).materialize()));
  CHECK_FALSE(countermodel_search(ref.formula, ref.sig, Frame::nat_le(3).materialize()));
}

TEST_CASE("the chain schema fails on reflexive chains past one world") {
  Separation z = gen_separation(SeparationKind::Z);

  std::optional<Countermodel> two =
      countermodel_search(z.formula, z.sig, Frame::nat_le(2).materialize());
  REQUIRE(two);
  CHECK(two->world == 0);
  CHECK(two->domain_size == 1);
  CHECK(two->valuation == 2);  // p at world 1 only

  std::optional<Countermodel> five =
      countermodel_search(z.formula, z.sig, Frame::nat_le(5).materialize());
  REQUIRE(five);
  CHECK(five->world == 0);
  CHECK(five->valuation == 16);  // p at world 4 only

  for (int len = 2; len <= 4; ++len) {
    CAPTURE(len);
    CHECK(countermodel_search(z.formula, z.sig, Frame::nat_le(len).materialize()).has_value());
  }

  // One reflexive world cannot refute it.
  CHECK_FALSE(countermodel_search(z.formula, z.sig, Frame::nat_le(1).materialize()));
  // Nor can irreflexive chains of any tested length.
  for (int len = 1; len <= 4; ++len) {
    CAPTURE(len);
    CHECK_FALSE(countermodel_search(z.formula, z.sig, Frame::nat_lt(len).materialize()));
  }
}

TEST_CASE("iterated boxes drill down to the first irreflexive world") {
  for (int n = 0; n <= 2; ++n) {
    CAPTURE(n);
    Separation sep = gen_separation(SeparationKind::BoxNRef, n);
    CountermodelOptions at0;
    at0.at_world = 0;
    // n+1 leading irreflexive worlds: refuted at the root.
    std::optional<Countermodel> cm = countermodel_search(
        sep.formula, sep.sig, Frame::gn(n + 1, n + 3).materialize(), at0);
    CHECK(cm.has_value());
    // n leading irreflexive worlds: the n-th successor zone is reflexive.
    CHECK_FALSE(countermodel_search(sep.formula, sep.sig,
                                    Frame::gn(n, n + 3).materialize(), at0));
  }

  // The n = 0 case pins the decoded valuation: p at worlds 1 and 2.
  Separation ref = gen_separation(SeparationKind::BoxNRef, 0);
  CountermodelOptions at0;
  at0.at_world = 0;
  std::optional<Countermodel> cm =
      countermodel_search(ref.formula, ref.sig, Frame::gn(1, 3).materialize(), at0);
  REQUIRE(cm);
  CHECK(cm->valuation == 6);
}

TEST_CASE("the world restriction narrows the search") {
  Separation ref = gen_separation(SeparationKind::Ref);
  Frame frame = Frame::gn(1, 3).materialize();

  CountermodelOptions at0;
  at0.at_world = 0;
  CHECK(countermodel_search(ref.formula, ref.sig, frame, at0).has_value());

  CountermodelOptions at1;
  at1.at_world = 1;  // reflexive world, ref holds
  CHECK_FALSE(countermodel_search(ref.formula, ref.sig, frame, at1));

  CountermodelOptions out;
  out.at_world = 5;
  CHECK(fixtures::error_kind([&] { countermodel_search(ref.formula, ref.sig, frame, out); }) ==
        ErrorKind::Input);
}

TEST_CASE("monadic refutations need a second element") {
  fixtures::FuzzSig fs;
  Formula f = parse("(-> (exists x (P x)) (forall x (P x)))", fs.sig);
  Frame frame = Frame::nat_le(1).materialize();

  CountermodelOptions one;
  one.max_domain = 1;
  CHECK_FALSE(countermodel_search(f, fs.sig, frame, one));

  CountermodelOptions two;
  two.max_domain = 2;
  std::optional<Countermodel> cm = countermodel_search(f, fs.sig, frame, two);
  REQUIRE(cm);
  CHECK(cm->domain_size == 2);
  CHECK(cm->world == 0);
  CHECK(cm->model.domain(0) == std::vector<int>{0, 1});
}

TEST_CASE("search inputs are validated") {
  Separation ref = gen_separation(SeparationKind::Ref);
  Frame finite = Frame::nat_le(2).materialize();

  // Open formulas have no truth value to refute.
  fixtures::FuzzSig fs;
  Formula open = parse("(P x)", fs.sig);
  CHECK(fixtures::error_kind([&] { countermodel_search(open, fs.sig, finite); }) ==
        ErrorKind::Input);

  // Truncated frames are not searchable.
  CHECK(fixtures::error_kind([&] {
          countermodel_search(ref.formula, ref.sig, Frame::nat_le(2));
        }) == ErrorKind::Input);

  CountermodelOptions zero;
  zero.max_domain = 0;
  CHECK(fixtures::error_kind([&] {
          countermodel_search(ref.formula, ref.sig, finite, zero);
        }) == ErrorKind::Input);

  // A binary letter anywhere in the signature stops the search.
  FamilySignature fam = family_signature(2);
  Formula p = parse("(-> (box p) p)", fam.sig);
  CHECK(fixtures::error_kind([&] { countermodel_search(p, fam.sig, finite); }) ==
        ErrorKind::Unsupported);
}

TEST_CASE("the valuation guard bounds the search space") {
  Separation z = gen_separation(SeparationKind::Z);
  CountermodelOptions tight;
  tight.valuation_guard = 16;  // two letters over three worlds need 64
  CHECK(fixtures::error_kind([&] {
          countermodel_search(z.formula, z.sig, Frame::nat_le(3).materialize(), tight);
        }) == ErrorKind::Guard);

  // 63 bits overflow the mask regardless of the guard value.
  Separation ref = gen_separation(SeparationKind::Ref);
  CHECK(fixtures::error_kind([&] {
          countermodel_search(ref.formula, ref.sig, Frame::nat_lt(32).materialize());
        }) == ErrorKind::Guard);
}

TEST_CASE("search order is deterministic") {
  Separation z = gen_separation(SeparationKind::Z);
  Frame frame = Frame::nat_le(4).materialize();
  std::optional<Countermodel> a = countermodel_search(z.formula, z.sig, frame);
  std::optional<Countermodel> b = countermodel_search(z.formula, z.sig, frame);
  REQUIRE(a);
  REQUIRE(b);
  CHECK(a->world == b->world);
  CHECK(a->domain_size == b->domain_size);
  CHECK(a->valuation == b->valuation);
}
