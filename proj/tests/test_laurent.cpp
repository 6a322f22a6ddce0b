#include <random>

#include "doctest.h"
#include "seedkit/error.hpp"
#include "seedkit/laurent.hpp"

using namespace seedkit;

namespace {

LaurentPoly P(const char* s) { return parse_laurent(s); }

LaurentPoly random_poly(std::mt19937& rng, int terms, int lo, int hi) {
  std::uniform_int_distribution<int> coef(-4, 4), ex(lo, hi);
  const char* names[] = {"x1", "x2", "x3"};
  LaurentPoly p;
  for (int t = 0; t < terms; ++t) {
    std::vector<Monomial::Factor> f;
    for (auto* n : names) f.emplace_back(VarId(n), ex(rng));
    p += LaurentPoly::term(coef(rng), Monomial(f));
  }
  return p;
}

}  // namespace

TEST_CASE("natural order of identifiers") {
  CHECK(VarId("x2") < VarId("x10"));
  CHECK(VarId("x1") < VarId("x1@1"));
  CHECK(VarId("y") > VarId("x9"));
  CHECK(VarId("x1@2").base() == "x1");
  CHECK(VarId("x1@2").generation() == 2);
  CHECK(VarId("x1@2").display_name() == "x1''");
  CHECK(VarId("x1").next_generation() == VarId("x1@1"));
}

TEST_CASE("printing follows graded lex order") {
  CHECK(pow(P("x1 + 1"), 2).to_string() == "x1^2 + 2*x1 + 1");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(LaurentPoly(1).to_string() == "1");
  CHECK(P("x2 - x1").to_string() == "-x1 + x2");
  CHECK(P("-3*x1^-1*x2").to_string() == "-3*x1^-1*x2");
}

TEST_CASE("parser accepts the printed grammar and parentheses") {
  CHECK(P("(x2+1)*x1^-1") == P("x1^-1*x2 + x1^-1"));
  CHECK(P("x1^(-2)") == P("x1^-2"));
  CHECK(P("2 \xE2\x88\x92 x1") == P("2 - x1"));
  CHECK_THROWS_AS(P("x1 +"), Error);
  CHECK_THROWS_AS(P("(x1+1)^-1"), Error);
  CHECK_THROWS_AS(P("1x"), Error);
}

TEST_CASE("exact division") {
  CHECK(exact_div(P("x1^2 - 1"), P("x1 - 1")) == P("x1 + 1"));
  CHECK(exact_div(P("x2 + 1"), P("x1")).to_string() == "x1^-1*x2 + x1^-1");
  CHECK(exact_div(P("x1^-1*x2^2 + 2*x1^-1*x2 + x1^-1"), P("x1^-3*x2 + x1^-3")) == P("x1^2*x2 + x1^2"));
  CHECK(exact_div(LaurentPoly(), P("x1 + 1")).is_zero());
  CHECK_THROWS_AS(exact_div(P("x1 + 1"), P("x1 + 2")), Error);
  CHECK_THROWS_AS(exact_div(P("x1"), LaurentPoly()), Error);
  CHECK_THROWS_AS(exact_div(P("3*x1"), P("2")), Error);
  try {
    exact_div(P("x1^2 + 1"), P("x1 + 1"));
    FAIL("expected NotDivisible");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotDivisible);
  }
}

TEST_CASE("ring axioms on random Laurent polynomials") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = random_poly(rng, 4, -2, 2), b = random_poly(rng, 3, -2, 2), c = random_poly(rng, 3, -1, 2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * LaurentPoly(1) == a);
    CHECK(pow(a, 3) == a * a * a);
    CHECK(parse_laurent(a.to_string()) == a);
  }
}

TEST_CASE("division round trip") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = random_poly(rng, 4, -2, 3), b = random_poly(rng, 3, -2, 2);
    if (b.is_zero()) continue;
    CHECK(exact_div(a * b, b) == a);
  }
}

TEST_CASE("specialisation at one is a ring homomorphism") {
  std::mt19937 rng(13);
  VarId v("x2");
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_poly(rng, 4, -2, 2), b = random_poly(rng, 3, -2, 2);
    CHECK(specialize_one(a + b, v) == specialize_one(a, v) + specialize_one(b, v));
    CHECK(specialize_one(a * b, v) == specialize_one(a, v) * specialize_one(b, v));
    auto s = substitute(a, {{v, LaurentPoly(1)}});
    REQUIRE(s.status == SubstStatus::Ok);
    CHECK(s.value == specialize_one(a, v));
  }
  CHECK(specialize_one(LaurentPoly(1), v) == LaurentPoly(1));
}

TEST_CASE("substitution") {
  auto p = P("x1^-1*x2 + x1^-1");
  auto r = substitute(p, {{VarId("x1"), P("y")}, {VarId("x2"), P("y")}});
  REQUIRE(r.status == SubstStatus::Ok);
  CHECK(r.value == P("1 + y^-1"));
  CHECK(substitute(p, {{VarId("x1"), LaurentPoly(0)}}).status == SubstStatus::ZeroDivision);
  CHECK(substitute(p, {{VarId("x1"), LaurentPoly(2)}}).status == SubstStatus::NonIntegral);
  CHECK(substitute(p, {{VarId("x1"), P("y + 1")}}).status == SubstStatus::NotInvertible);
  auto half = substitute(P("2*x1^-1"), {{VarId("x1"), LaurentPoly(2)}});
  REQUIRE(half.status == SubstStatus::Ok);
  CHECK(half.value == LaurentPoly(1));
}
