#include "doctest.h"

#include <random>

#include "prelie/io.hpp"

using namespace prelie;

TEST_CASE("tree vectors round-trip through text and json") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    TreeVector v;
    for (int k = 0; k < 3; ++k) {
      Rational c(static_cast<long>(rng() % 7) - 3, 1 + rng() % 4);
      c.canonicalize();
      v.add(random_tree(standard_labels(4), rng), c);
    }
    CHECK(parse_tree_vector(format_tree_vector(v)) == v);
    CHECK(tree_vector_from_json(to_json(v)) == v);
  }
  CHECK(parse_tree_vector("0").is_zero());
  CHECK(format_tree_vector(TreeVector()) == "0");
  CHECK(format_tree_vector(parse_tree_vector("3/2*(a b) - (b a)")) == "3/2*(a b) - (b a)");
}

TEST_CASE("wedge vectors round-trip") {
  for (const auto& w : wedge_basis(standard_labels(4))) {
    WedgeVector v(w);
    v.axpy(Rational(-2, 3), WedgeVector(wedge_basis(standard_labels(4)).front()));
    CHECK(parse_wedge_vector(format_wedge_vector(v)) == v);
    CHECK(wedge_vector_from_json(to_json(v)) == v);
  }
  CHECK(parse_wedge_vector("(b c) ^ a") == -parse_wedge_vector("a ^ (b c)"));
}

TEST_CASE("CycPreLie and Lie text") {
  auto x = parse_cycprelie("b | (a c)");
  CHECK(x.basepoint == "a");
  CHECK(parse_cycprelie(format_cycprelie(x)) == x);
  auto l = parse_lie_vector("[a,[b,c]] - 2*[[a,b],c]");
  CHECK(parse_lie_vector(format_lie_vector(l)) == l);
  CHECK(to_json(x)["basepoint"] == "a");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_tree_vector("(a b"), ParseError);
  CHECK_THROWS_AS(parse_tree_vector("2*"), ParseError);
  CHECK_THROWS_AS(parse_wedge_vector("a ^"), ParseError);
  CHECK_THROWS_AS(parse_cycprelie("a (b c)"), ParseError);
  CHECK_THROWS_AS(parse_lie_vector("[a,b]]"), ParseError);
}
