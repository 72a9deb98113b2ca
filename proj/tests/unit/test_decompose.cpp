#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "tautilt/decompose.hpp"
#include "tautilt/errors.hpp"
#include "tautilt/module_ops.hpp"

using namespace tautilt;

TEST_CASE("rational roots and characteristic polynomials", "[decompose]") {
  // (x - 1/2)(x + 3) x^2 = x^4 + 5/2 x^3 - 3/2 x^2
  const auto roots = rational_roots({Rational(0), Rational(0), Rational(-3, 2), Rational(5, 2), Rational(1)});
  CHECK(roots == std::vector<Rational>{Rational(-3), Rational(0), Rational(1, 2)});
  CHECK(rational_roots({Rational(-2), Rational(0), Rational(1)}).empty());
  Mat a(2, 2);
  a << Rational(2), Rational(1), Rational(0), Rational(3);
  CHECK(characteristic_polynomial(a) == std::vector<Rational>{Rational(6), Rational(-5), Rational(1)});
}

TEST_CASE("decomposing the regular module", "[decompose]") {
  const auto q = load_corpus("a3_rel");
  const auto a = direct_sum(q, {projective(q, 2), projective(q, 0), projective(q, 1)});
  const auto parts = decompose(q, a);
  REQUIRE(parts.size() == 3);
  for (const auto& s : parts) CHECK(s.multiplicity == 1);
  for (int i = 0; i < 3; ++i) {
    int hits = 0;
    for (const auto& s : parts) hits += is_isomorphic(q, s.module, projective(q, i));
    CHECK(hits == 1);
  }
}

TEST_CASE("multiplicities and indecomposables", "[decompose]") {
  const auto q = load_corpus("a3_rel");
  const auto s1 = simple(q, 0);
  const auto parts = decompose(q, direct_sum(q, {s1, s1}));
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].multiplicity == 2);
  CHECK(is_isomorphic(q, parts[0].module, s1));
  CHECK(decompose(q, projective(q, 0)).size() == 1);
  CHECK(is_indecomposable(q, projective(q, 0)));
  CHECK_FALSE(is_indecomposable(q, zero_representation(q)));
}

TEST_CASE("decompose is complete and idempotent", "[decompose]") {
  for (const char* name : {"a3_rel", "loop", "nakayama2", "a3"}) {
    const auto q = load_corpus(name);
    std::vector<Representation> pieces;
    for (int i = 0; i < q.vertex_count(); ++i) {
      pieces.push_back(projective(q, i));
      pieces.push_back(injective(q, i));
      pieces.push_back(simple(q, i));
    }
    const auto m = direct_sum(q, pieces);
    const auto summands = indecomposable_summands(q, m);
    CHECK(summands.size() == pieces.size());
    CHECK(is_isomorphic(q, direct_sum(q, summands), m));
    for (const auto& s : summands) {
      const auto again = indecomposable_summands(q, s);
      REQUIRE(again.size() == 1);
      CHECK(is_isomorphic(q, again[0], s));
    }
  }
}

TEST_CASE("isomorphism tests", "[decompose]") {
  const auto q = load_corpus("nakayama2");
  const auto p1 = projective(q, 0);
  const auto p2 = projective(q, 1);
  CHECK(p1.dim_vector() == p2.dim_vector());
  CHECK(is_isomorphic(q, p1, p1));
  CHECK_FALSE(is_isomorphic(q, p1, p2));
  CHECK_FALSE(is_isomorphic(q, simple(q, 0), simple(q, 1)));
  // A change of basis gives an isomorphic module.
  Representation twisted = p1;
  for (auto& a : twisted.arrows) a *= Rational(7, 3);
  CHECK(is_isomorphic(q, twisted, p1));
}

TEST_CASE("endomorphism radical", "[decompose]") {
  const auto q = load_corpus("loop");
  const auto p2 = projective(q, 1);
  CHECK(hom_dimension(q, p2, p2) == 2);
  CHECK(endomorphism_radical(q, p2).size() == 1);
  CHECK(is_indecomposable(q, p2));
  CHECK_FALSE(is_brick(q, p2));
  CHECK(is_brick(q, simple(q, 1)));
}
