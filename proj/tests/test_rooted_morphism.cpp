#include "doctest.h"
#include "fixtures.hpp"
#include "seedkit/error.hpp"
#include "seedkit/rooted_morphism.hpp"

using namespace seedkit;
using namespace fixtures;

namespace {

MorphSpec identity_morphism(const Seed& s) {
  MorphSpec m{s, s, {}};
  for (const auto& v : s.ids()) m.map[v] = v;
  return m;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::Internal;
}

// x1 with frozen y1, y2 and opposite arrows
Seed opposite_pair() { return framed({{0, 1, -1}}, 1); }

// x2 -> x1, x1 -> [y1], [y2] -> x2: fine initially, conflicting after mu_x1
Seed late_conflict() { return framed({{0, -1, 1, 0}, {1, 0, 0, -1}}, 2); }

// union of x1 -> [d1] and x2 -> [d2], plus their amalgamated sum along d1 ~ d2
std::pair<Seed, Seed> union_and_sum() {
  auto s1 = new_initial_seed({"x1", "d1"}, {false, true}, ExtMatrix({"x1"}, {"x1", "d1"}, {{0, 1}}));
  auto s2 = new_initial_seed({"x2", "d2"}, {false, true}, ExtMatrix({"x2"}, {"x2", "d2"}, {{0, -2}}));
  return {amalgamated_sum(s1, s2, {}, {}, {}), amalgamated_sum(s1, s2, {"d1"}, {"d2"}, {"d"})};
}

}  // namespace

TEST_CASE("CM1 and CM2") {
  MorphSpec m{a3(), a2(), {{"x1", VarId("x1")}, {"x2", VarId("x2")}, {"x3", std::int64_t{1}}}};
  CHECK(check_cm12(m).ok());
  m.map["x3"] = VarId("x9");
  CHECK(check_cm12(m).cm1 == std::vector<VarId>{"x3"});
  MorphSpec f{framed({{0, 1}}, 1), framed({{0, 1}}, 1), {{"x1", VarId("y1")}, {"y1", VarId("y1")}}};
  CHECK(check_cm12(f).cm2 == std::vector<VarId>{"x1"});
}

TEST_CASE("identity satisfies CM3") {
  for (const auto& s : {a2(), a3(), b2(), markov()}) {
    auto v = check_cm3(identity_morphism(s), 4);
    CHECK(v.kind == CM3Verdict::Kind::VerifiedToDepth);
    CHECK(v.states > 1);
  }
}

TEST_CASE("specialisation of an acyclic seed") {
  auto sp = specialisation(a3(), {"x3"}, 4);
  CHECK(sp.surjectivity == Specialisation::Surjectivity::SurjectiveByTheorem);
  CHECK(sp.cm3.kind == CM3Verdict::Kind::VerifiedToDepth);
  CHECK(sp.morphism.target.ids() == std::vector<VarId>{"x1", "x2"});
  auto fr = specialisation(framed({{0, 1, 1}, {-1, 0, 0}}, 2), {"y1"}, 4);
  CHECK(fr.surjectivity == Specialisation::Surjectivity::SurjectiveByTheorem);
  CHECK(fr.cm3.kind == CM3Verdict::Kind::VerifiedToDepth);
}

TEST_CASE("specialisation of a cyclic seed leaves surjectivity open") {
  auto sp = specialisation(markov(), {"x3"}, 3);
  CHECK(sp.surjectivity == Specialisation::Surjectivity::Unknown);
}

TEST_CASE("glueability") {
  auto bad = glueable(opposite_pair(), "y1", "y2", 6);
  CHECK(bad.kind == GlueabilityVerdict::Kind::FailedAt);
  CHECK(bad.seq.empty());
  CHECK(bad.x == VarId("x1"));

  auto late = glueable(late_conflict(), "y1", "y2", 6);
  REQUIRE(late.kind == GlueabilityVerdict::Kind::FailedAt);
  CHECK(late.seq == MutationSeq{"x1"});
  CHECK(late.x == VarId("x2"));
  auto replay = apply_sequence(late_conflict(), late.seq);
  CHECK(replay.b(late.x, "y1") * replay.b(late.x, "y2") < 0);

  auto good = glueable(framed({{0, 1, 1, 2}, {-1, 0, 0, 0}}, 2), "y1", "y2", 6);
  CHECK(good.kind == GlueabilityVerdict::Kind::VerifiedToDepth);
  CHECK(code_of([] { glueable(a2(), "x1", "x2", 2); }) == Errc::NotFrozen);
}

TEST_CASE("canonical gluing of a non-glueable pair breaks CM3 in one step") {
  auto pi = canonical_gluing(opposite_pair(), "y1", "y2");
  CHECK(std::get<VarId>(pi.map.at("y2")) == VarId("y1~y2"));
  auto v = check_cm3(pi, 4);
  REQUIRE(v.kind == CM3Verdict::Kind::Counterexample);
  CHECK(v.seq == MutationSeq{"x1"});
  CHECK(v.variable == VarId("x1"));
  CHECK(v.lhs == "2*x1^-1*y1~y2");
  CHECK(v.rhs == "2*x1^-1");

  auto ok = canonical_gluing(framed({{0, 1, 1, 2}, {-1, 0, 0, 0}}, 2), "y1", "y2");
  CHECK(check_cm3(ok, 4).kind == CM3Verdict::Kind::VerifiedToDepth);
  CHECK(code_of([] { canonical_gluing(opposite_pair(), "y1", "y1"); }) == Errc::BadGlueSpec);
  CHECK(code_of([] { canonical_gluing(opposite_pair(), "x1", "y1"); }) == Errc::NotFrozen);
}

TEST_CASE("contraction") {
  MorphSpec one{a3(), subseed(a3(), {{}, {"x3"}}), {{"x1", VarId("x1")}, {"x2", VarId("x2")}, {"x3", std::int64_t{1}}}};
  CHECK(contraction_seed(one) == subseed(a3(), {{}, {"x3"}}));
  MorphSpec zero = one;
  zero.map["x3"] = std::int64_t{0};
  auto c = contraction_seed(zero);
  CHECK(c.matrix().to_rows() == Rows{{0, 0}, {0, 0}});
  CHECK(restricted_hom(one).map() == VarMap{{"x1", "x1"}, {"x2", "x2"}});
  CHECK(code_of([&] { restricted_hom(MorphSpec{a3(), quiver({{0, 0}, {0, 0}}), one.map}); }) == Errc::HomVerificationFailed);
}

TEST_CASE("induced morphism restricts back to the homomorphism") {
  auto g = make_seed_hom(a2(), a3(), {{"x1", "x1"}, {"x2", "x2"}});
  auto m = induce_morphism(g, 3);
  // mutating x2 in A3 sees x3, so the embedding is not rooted
  CHECK_FALSE(m);
  auto id = make_seed_hom(a3(), a3(), {{"x1", "x1"}, {"x2", "x2"}, {"x3", "x3"}});
  auto mid = induce_morphism(id, 3);
  REQUIRE(mid);
  CHECK(restricted_hom(*mid).map() == id.map());
}

TEST_CASE("surjective morphism factors through gluings") {
  auto [u, sum] = union_and_sum();
  MorphSpec m{u, sum, {{"x1", VarId("x1")}, {"x2", VarId("x2")}, {"d1", VarId("d")}, {"d2", VarId("d")}}};
  CHECK(check_cm3(m, 4).kind == CM3Verdict::Kind::VerifiedToDepth);
  auto dec = decompose_surjective(m);
  REQUIRE(dec.steps.size() == 1);
  CHECK(dec.steps[0].y1 == VarId("d1"));
  CHECK(dec.steps[0].y2 == VarId("d2"));
  CHECK(dec.steps[0].glued == VarId("d"));
  CHECK(dec.identity_iso);
  CHECK(same_labeled(dec.steps.back().seed, sum));

  MorphSpec contractible = m;
  contractible.map["d2"] = std::int64_t{1};
  CHECK(code_of([&] { decompose_surjective(contractible); }) == Errc::NotNoncontractible);
  MorphSpec partial{a2(), a3(), {{"x1", VarId("x1")}, {"x2", VarId("x2")}}};
  CHECK(code_of([&] { decompose_surjective(partial); }) == Errc::NotSurjectiveOnVariables);
}

TEST_CASE("contraction and unitary morphisms") {
  MorphSpec m{a3(), a2(), {{"x1", VarId("x1")}, {"x2", VarId("x2")}, {"x3", std::int64_t{-1}}}};
  auto c = contraction_morphism(m);
  CHECK(c.source.ids() == std::vector<VarId>{"x1", "x2"});
  auto u = unitary_morphism(m);
  CHECK(std::get<std::int64_t>(u.map.at("x3")) == 1);
  CHECK(std::get<VarId>(u.map.at("x1")) == VarId("x1"));
  CHECK(check_cm3(u, 4).kind == CM3Verdict::Kind::VerifiedToDepth);

  MorphSpec z = m;
  z.map["x3"] = std::int64_t{0};
  CHECK(code_of([&] { unitary_morphism(z); }) == Errc::ZeroImage);
  MorphSpec cyc{markov(), subseed(markov(), {{}, {"x3"}}),
                {{"x1", VarId("x1")}, {"x2", VarId("x2")}, {"x3", std::int64_t{1}}}};
  CHECK(code_of([&] { unitary_morphism(cyc); }) == Errc::NotAcyclic);
  MorphSpec thin{a3(), a3(), {{"x1", VarId("x1")}, {"x2", VarId("x2")}, {"x3", std::int64_t{1}}}};
  CHECK(code_of([&] { contraction_morphism(thin); }) == Errc::ContractionUndefined);
}
