#include <catch_amalgamated.hpp>

#include "tautilt/algebra.hpp"
#include "tautilt/errors.hpp"

using namespace tautilt;

namespace {

std::vector<std::string> basis_names(const BoundQuiver& q) {
  std::vector<std::string> out;
  for (const Path& p : q.basis()) out.push_back(q.path_name(p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("A3 with a zero relation has a five element basis", "[algebra]") {
  const auto q = parse_algebra("vertices 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrelation a*b\n");
  CHECK(q.dimension() == 5);
  CHECK(basis_names(q) == std::vector<std::string>{"a", "b", "e1", "e2", "e3"});
  CHECK(q.loewy_bound() == 1);
  CHECK(q.reduce(Path{0, 2, {0, 1}}).empty());
}

TEST_CASE("one vertex algebra is the field", "[algebra]") {
  const auto q = parse_algebra("vertices 1\n");
  CHECK(q.dimension() == 1);
  CHECK(basis_names(q) == std::vector<std::string>{"e1"});
}

TEST_CASE("loop algebra with radical square zero", "[algebra]") {
  const auto q = parse_algebra("vertices 2\narrow a: 1 -> 2\narrow b: 2 -> 2\nrelation a*b\nrelation b*b\n");
  CHECK(q.dimension() == 4);
  CHECK(q.basis_between(1, 1).size() == 2);
}

TEST_CASE("commutativity relation keeps one composite", "[algebra]") {
  const auto q = parse_algebra(
      "vertices 4\narrow a: 1 -> 2\narrow b: 2 -> 4\narrow c: 1 -> 3\narrow d: 3 -> 4\nrelation a*b - c*d\n");
  CHECK(q.dimension() == 4 + 4 + 1);
  const Element ab = q.reduce(Path{0, 3, {0, 1}});
  const Element cd = q.reduce(Path{0, 3, {2, 3}});
  CHECK(ab == cd);
  CHECK(ab.size() == 1);
}

TEST_CASE("free loop is rejected as non-admissible", "[algebra]") {
  CHECK_THROWS_AS(parse_algebra("vertices 1\narrow x: 1 -> 1\n", AlgebraLimits{12, 20000}), InputError);
}

TEST_CASE("relation between non-parallel paths is rejected", "[algebra]") {
  CHECK_THROWS_AS(parse_algebra("vertices 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 1 -> 2\narrow d: 2 -> 2\n"
                                "relation a*b + c*d\n"),
                  InputError);
}

TEST_CASE("syntax errors carry line numbers", "[algebra]") {
  try {
    parse_algebra("vertices 2\narrow a 1 -> 2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_algebra("vertices 2\narrow a: 1 -> 2\nrelation a*z\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("arrow a: 1 -> 2\n"), ParseError);
}

TEST_CASE("multiplication follows traversal order", "[algebra]") {
  const auto q = parse_algebra("vertices 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n");
  const int a = q.arrow_index(0);
  const int b = q.arrow_index(1);
  const Element ab = q.multiply(a, b);
  REQUIRE(ab.size() == 1);
  CHECK(q.path_name(q.basis()[static_cast<std::size_t>(ab.begin()->first)]) == "a*b");
  CHECK(q.multiply(b, a).empty());
  CHECK(q.multiply(q.trivial_index(0), a) == Element{{a, Rational(1)}});
}

TEST_CASE("text round trip and opposite", "[algebra]") {
  const auto q = parse_algebra("vertices 2\narrow a: 1 -> 2\narrow b: 2 -> 2\nrelation a*b\nrelation 2 b*b\n");
  const auto again = parse_algebra(q.to_text());
  CHECK(again.to_text() == q.to_text());
  CHECK(again.fingerprint() == q.fingerprint());
  CHECK(basis_names(again) == basis_names(q));
  const auto op = q.opposite();
  CHECK(op.dimension() == q.dimension());
  CHECK(op.arrows()[0].source == 1);
  CHECK(op.opposite().to_text() == q.to_text());
}
