#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "linmod/io.hpp"
#include "linmod/metrics.hpp"
#include "linmod/parse.hpp"
#include "linmod/reductions.hpp"

#include "support/fixtures.hpp"

using namespace linmod;

namespace {

std::string conjunct(const ReductionArtifact& art, const std::string& name) {
  for (const NamedConjunct& c : art.conjuncts)
    if (c.name == name) return print(c.formula, art.sig());
  FAIL("no conjunct named " << name);
  return {};
}

std::vector<std::string> names(const ReductionArtifact& art) {
  std::vector<std::string> out;
  for (const NamedConjunct& c : art.conjuncts) out.push_back(c.name);
  return out;
}

}  // namespace

TEST_CASE("variant names round trip") {
  for (Variant v : {Variant::A, Variant::APrime, Variant::AStar, Variant::APlus, Variant::B,
                    Variant::ABullet})
    CHECK(variant_from_name(variant_name(v)) == v);
  CHECK(fixtures::error_kind([] { variant_from_name("Astarplus"); }) == ErrorKind::Input);
}

TEST_CASE("base conjuncts over a two tile set") {
  ReductionArtifact art = gen_base(fixtures::stripe_tiles());
  CHECK(art.variant == Variant::A);
  CHECK(art.box_mode == BoxMode::Plain);
  CHECK(names(art) == std::vector<std::string>{"A_0", "A_1", "A_2", "A_3", "A_4", "A_5", "A_6",
                                               "A_7", "A_8", "A_9"});

  // Untiled element somewhere ahead of everything.
  CHECK(conjunct(art, "A_0") == "(exists x (box (and (not (P0 x)) (not (P1 x)))))");
  // A tiled element is marked.
  CHECK(conjunct(art, "A_1") == "(exists x (and (not (and (not (P0 x)) (not (P1 x)))) (M x)))");
  // Every element has an immediate successor.
  CHECK(conjunct(art, "A_2") == "(forall x (exists y (succ x y)))");
  // Edges are rigid wherever a mark persists.
  CHECK(conjunct(art, "A_3") ==
        "(forall x (forall y (-> (succ x y) (box (-> (exists x (M x)) (succ x y))))))");
  // The mark passes to the successor element one phase stride ahead.
  CHECK(conjunct(art, "A_4") ==
        "(forall x (forall y (-> (succ x y) (box (iff (M x) (and (not p) (pdia1 (M y)) (not "
        "(pdia1n 2 (M y)))))))))");
  // Tiles are stable while the marking element stays marked.
  CHECK(conjunct(art, "A_5") ==
        "(forall x (forall y (box (and (-> (and (M x) (P0 y)) (box (-> (M x) (P0 y)))) (-> (and "
        "(M x) (P1 y)) (box (-> (M x) (P1 y))))))))");
  // At most one tile per element.
  CHECK(conjunct(art, "A_6") ==
        "(forall x (box (and (-> (P0 x) (not (P1 x))) (-> (P1 x) (not (P0 x))))))");
  // Horizontal seams: any tile with matching left color may follow; the
  // stripes share edge colors, so both tiles qualify either way.
  CHECK(conjunct(art, "A_7") ==
        "(forall x (forall y (box (and (-> (and (succ x y) (P0 x)) (or (P0 y) (P1 y))) (-> (and "
        "(succ x y) (P1 x)) (or (P0 y) (P1 y)))))))");
  // Vertical seams, read one mark stride up.
  CHECK(conjunct(art, "A_8") ==
        "(forall x (forall y (box (and (-> (and (M x) (P0 y)) (box (-> (exists y (and (succ x y) "
        "(M y))) (P1 y)))) (-> (and (M x) (P1 y)) (box (-> (exists y (and (succ x y) (M y))) (P0 "
        "y))))))))");
  // The designated tile recurs in the marked column.
  CHECK(conjunct(art, "A_9") == "(forall x (-> (M x) (box (pdia1 (P0 x)))))");

  Metrics m = measure(art.conjunction(), art.sig());
  CHECK(m.variable_count == 2);
  CHECK(m.conjunct_count == 10);
}

TEST_CASE("vertical seams of the stripes point from each tile to the other") {
  // stripe_tiles: up(t0) = 1 = down(t1), up(t1) = 0 = down(t0); the cycle3
  // set instead chains 0 -> 1 -> 2 -> 0.
  ReductionArtifact art = gen_base(fixtures::cycle3_tiles());
  CHECK(conjunct(art, "A_8").find("(-> (and (M x) (P0 y)) (box (-> (exists y (and (succ x y) (M "
                                  "y))) (P1 y))))") != std::string::npos);
  CHECK(conjunct(art, "A_8").find("(P2 y))") != std::string::npos);
}

TEST_CASE("degenerate seam disjunctions collapse") {
  // The single blank tile matches itself in both directions, so the seam
  // conclusions are single disjuncts and the distinctness conjunct is empty.
  ReductionArtifact art = gen_base(fixtures::mono_tiles());
  CHECK(conjunct(art, "A_6") == "(forall x (box (-> (P0 x) T)))");
  CHECK(conjunct(art, "A_7") == "(forall x (forall y (box (-> (and (succ x y) (P0 x)) (P0 y)))))");
}

TEST_CASE("pair pass replaces every edge atom and renames the conjuncts") {
  ReductionArtifact base = gen_base(fixtures::stripe_tiles());
  ReductionArtifact art = prime_pass(base);
  CHECK(art.variant == Variant::APrime);
  CHECK(names(art) == std::vector<std::string>{"A_0'", "A_1'", "A_2'", "A_3'", "A_4'", "A_5'",
                                               "A_6'", "A_7'", "A_8'", "A_9'"});
  // succ(x, y) becomes a phase stride to a world tagged with the pair.
  CHECK(conjunct(art, "A_2'") == "(forall x (exists y (pdia1 (and (P2 x) (P3 y)))))");
  // Conjuncts without the edge letter are carried over unchanged.
  CHECK(conjunct(art, "A_0'") == conjunct(base, "A_0"));
  // Those with it keep their shape around the substituted guard.
  std::string rewritten = conjunct(base, "A_4");
  rewritten.replace(rewritten.find("(succ x y)"), 10, "(pdia1 (and (P2 x) (P3 y)))");
  CHECK(conjunct(art, "A_4'") == rewritten);
  // No binary letter occurs in the rewritten conjunction.
  Metrics m = measure(art.conjunction(), art.sig());
  for (const LetterUse& u : m.census) CHECK(u.arity <= 1);
  // The pass applies to the base artifact only.
  CHECK(fixtures::error_kind([&] { prime_pass(art); }) == ErrorKind::Input);
}

TEST_CASE("threshold formulas count strides to the witness block") {
  FamilySignature fam = family_signature(2);  // s = 1: thresholds 5 and 6
  VarId x = fam.sig.var_or_fail("x");
  VarId y = fam.sig.var_or_fail("y");
  CHECK(print(gen_beta(fam, 0, x), fam.sig) ==
        "(exists y (and (pdia2n 5 (and q (P y))) (not (pdia2n 6 (and q (P y)))) (pdia2 (and "
        "(pdia2n 1 (and q (P y))) (not (pdia2n 2 (and q (P y)))) (P x)))))");
  // The witness variable is the one not targeted.
  CHECK(print(gen_beta(fam, 0, y), fam.sig) ==
        "(exists x (and (pdia2n 5 (and q (P x))) (not (pdia2n 6 (and q (P x)))) (pdia2 (and "
        "(pdia2n 1 (and q (P x))) (not (pdia2n 2 (and q (P x)))) (P y)))))");
  // Level n reads thresholds n+1 and n+2.
  CHECK(print(gen_beta(fam, 3, x), fam.sig).find("(pdia2n 4 (and q (P y)))") !=
        std::string::npos);
  CHECK(free_vars(gen_beta(fam, 0, x)) == std::set<VarId>{x});
  CHECK(fixtures::error_kind([&] { gen_beta(fam, 4, x); }) == ErrorKind::Input);
  CHECK(fixtures::error_kind([&] { gen_beta(fam, -1, x); }) == ErrorKind::Input);

  // With a single tile (s = 0) the outer thresholds drop to 4 and 5 and the
  // expanded form is ten boxes deep.
  FamilySignature one = family_signature(1);
  Formula b0 = gen_beta(one, 0, one.sig.var_or_fail("x"));
  CHECK(print(b0, one.sig).find("(pdia2n 4 (and q (P y)))") != std::string::npos);
  CHECK(modal_depth(b0) == 10);
}

TEST_CASE("single letter pass rewrites atoms through thresholds") {
  ReductionArtifact prime = prime_pass(gen_base(fixtures::stripe_tiles()));
  ReductionArtifact art = star_pass(prime);
  CHECK(art.variant == Variant::AStar);
  CHECK(art.box_mode == BoxMode::Plain);
  CHECK(names(art) == std::vector<std::string>{"A_0*", "A_1*", "A_2*", "A_3*", "A_4*", "A_5*",
                                               "A_6*", "A_7*", "A_8*", "A_9*"});

  // Mark atoms become q && P(x); phase strides become mono strides; the
  // recurrence conjunct shows all three rewrites at once.
  CHECK(conjunct(art, "A_9*") ==
        "(forall x (-> (and q (P x)) (box (pdia2 (exists y (and (pdia2n 5 (and q (P y))) (not "
        "(pdia2n 6 (and q (P y)))) (pdia2 (and (pdia2n 1 (and q (P y))) (not (pdia2n 2 (and q (P "
        "y)))) (P x)))))))))");

  // The mark passing conjunct is replaced wholesale by its threshold form:
  // pair tags read through strides, the phase by the quantified guard.
  CHECK(conjunct(art, "A_4*") ==
        "(forall x (forall y (-> (pdia2 (and (exists y (and (pdia2n 5 (and q (P y))) (not (pdia2n 6 "
        "(and q (P y)))) (pdia2 (and (pdia2n 3 (and q (P y))) (not (pdia2n 4 (and q (P y)))) (P "
        "x))))) (exists x (and (pdia2n 5 (and q (P x))) (not (pdia2n 6 (and q (P x)))) (pdia2 (and "
        "(pdia2n 4 (and q (P x))) (not (pdia2n 5 (and q (P x)))) (P y))))))) (box (iff (and q (P x)) "
        "(and (not (forall x (P x))) (pdia2n 5 (and q (P y))) (not (pdia2n 6 (and q (P y))))))))))");

  // Only the mono letter and the block letter survive.
  Metrics m = measure(art.conjunction(), art.sig());
  REQUIRE(m.census.size() == 2);
  CHECK(m.census[0].name == "P");
  CHECK(m.census[0].arity == 1);
  CHECK(m.census[1].name == "q");
  CHECK(m.census[1].arity == 0);
  CHECK(m.variable_count == 2);

  CHECK(fixtures::error_kind([&] { star_pass(art); }) == ErrorKind::Input);
}

TEST_CASE("reflexive box pass switches the reading everywhere") {
  ReductionArtifact star = star_pass(prime_pass(gen_base(fixtures::stripe_tiles())));
  ReductionArtifact art = boxplus_pass(star);
  CHECK(art.variant == Variant::APlus);
  CHECK(art.box_mode == BoxMode::Plus);
  CHECK(names(art)[9] == "A_9+");
  // Every box node is replaced by its reflexive form.
  for (const NamedConjunct& c : art.conjuncts) {
    std::string text = print(c.formula, art.sig());
    CAPTURE(c.name);
    CHECK(text.find("(box ") == std::string::npos);
  }
  CHECK(conjunct(art, "A_9+").substr(0, 34) == "(forall x (-> (and q (P x)) (boxp ");
  CHECK(fixtures::error_kind([&] { boxplus_pass(prime_pass(gen_base(fixtures::stripe_tiles()))); }) ==
        ErrorKind::Input);
}

TEST_CASE("recurrence free and segment weakened variants") {
  ReductionArtifact b = gen_variant(fixtures::stripe_tiles(), Variant::B);
  CHECK(b.variant == Variant::B);
  CHECK(names(b) == std::vector<std::string>{"A_0", "A_1", "A_2", "A_3", "A_4", "A_5", "A_6",
                                             "A_7", "A_8"});
  ReductionArtifact base = gen_base(fixtures::stripe_tiles());
  for (size_t i = 0; i < b.conjuncts.size(); ++i)
    CHECK(structural_equal(b.conjuncts[i].formula, base.conjuncts[i].formula));

  ReductionArtifact ab = gen_variant(fixtures::stripe_tiles(), Variant::ABullet);
  CHECK(names(ab).back() == "A_9b");
  CHECK(conjunct(ab, "A_9b") ==
        "(forall x (-> (M x) (box (-> (exists y (M y)) (pdia1 (-> (exists y (M y)) (P0 x)))))))");
  for (size_t i = 0; i + 1 < ab.conjuncts.size(); ++i)
    CHECK(structural_equal(ab.conjuncts[i].formula, base.conjuncts[i].formula));
}

TEST_CASE("variant dispatch composes the passes") {
  TileSet ts = fixtures::stripe_tiles();
  ReductionArtifact direct = gen_variant(ts, Variant::AStar);
  ReductionArtifact composed = star_pass(prime_pass(gen_base(ts)));
  REQUIRE(direct.conjuncts.size() == composed.conjuncts.size());
  for (size_t i = 0; i < direct.conjuncts.size(); ++i) {
    CHECK(direct.conjuncts[i].name == composed.conjuncts[i].name);
    CHECK(structural_equal(direct.conjuncts[i].formula, composed.conjuncts[i].formula));
  }
}

TEST_CASE("generation is deterministic byte for byte") {
  for (Variant v : {Variant::A, Variant::APrime, Variant::AStar, Variant::APlus, Variant::B,
                    Variant::ABullet}) {
    std::string a = format_artifact(gen_variant(fixtures::checker_tiles(), v));
    std::string b = format_artifact(gen_variant(fixtures::checker_tiles(), v));
    CHECK(a == b);
  }
}

TEST_CASE("artifact conjunction shares the declared signature") {
  ReductionArtifact art = gen_variant(fixtures::cycle3_tiles(), Variant::A);
  Formula all = art.conjunction();
  CHECK(all.kind() == Kind::And);
  CHECK(all.kids().size() == art.conjuncts.size());
  CHECK(free_vars(all).empty());
  CHECK(art.letters().tile_count() == 3);
}

TEST_CASE("separation formulas") {
  Separation ref = gen_separation(SeparationKind::Ref);
  CHECK(ref.name == "ref");
  CHECK(print(ref.formula, ref.sig) == "(-> (box p) p)");

  Separation z = gen_separation(SeparationKind::Z);
  CHECK(z.name == "Z");
  CHECK(print(z.formula, z.sig) == "(-> (box (-> (box p) p)) (-> (dia (box p)) (box p)))");

  Separation bn = gen_separation(SeparationKind::BoxNRef, 2);
  CHECK(print(bn.formula, bn.sig) == "(boxn 2 (-> (box p) p))");
  CHECK(bn.name == "box^2 ref");

  Separation xz = gen_separation(SeparationKind::XBoxNZ, 1);
  CHECK(xz.name == "xbox^1 Z");
  CHECK(print(xz.formula, xz.sig) ==
        "(xbox (-> (box (-> (box p) p)) (-> (dia (box p)) (box p))))");
  Separation xz2 = gen_separation(SeparationKind::XBoxNZ, 2);
  CHECK(print(xz2.formula, xz2.sig).substr(0, 12) == "(xbox (xbox ");
}
