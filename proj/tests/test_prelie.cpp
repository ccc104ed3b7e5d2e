#include "doctest.h"

#include <random>

#include "prelie/operad.hpp"

using namespace prelie;

namespace {

// S <| T from edge lists: one new edge root(T) -> v for each vertex v of S.
TreeVector naive_product(const RootedTree& s, const RootedTree& t) {
  TreeVector out;
  for (const auto& v : s.labels()) {
    auto e = s.edges();
    auto et = t.edges();
    e.insert(e.end(), et.begin(), et.end());
    e.emplace_back(t.root_label(), v);
    out.add(RootedTree::from_edges(s.root_label(), e), 1);
  }
  return out;
}

TreeVector T(const char* s) { return tv(parse_tree(s)); }

struct Triple {
  RootedTree x, y, z;
};

Triple random_triple(std::mt19937_64& rng, std::size_t n) {
  auto splits = ordered_splits(standard_labels(n), 3);
  const auto& s = splits[rng() % splits.size()];
  return {random_tree(s[0], rng), random_tree(s[1], rng), random_tree(s[2], rng)};
}

}  // namespace

TEST_CASE("partial composition examples") {
  CHECK(compose_partial(parse_tree("(a x)"), "x", parse_tree("(c d)")) == T("(a (c d))"));
  CHECK(compose_partial(parse_tree("(x b)"), "x", parse_tree("(c d)")) == T("(c b d)") + T("(c (d b))"));
  CHECK(compose_partial(parse_tree("x"), "x", parse_tree("(c d)")) == T("(c d)"));
  CHECK_THROWS(compose_partial(parse_tree("(a x)"), "q", parse_tree("(c d)")));
  CHECK_THROWS(compose_partial(parse_tree("(a x)"), "x", parse_tree("(a d)")));
}

TEST_CASE("product agrees with edge-list grafting") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto splits = ordered_splits(standard_labels(2 + i % 5), 2);
    const auto& sp = splits[rng() % splits.size()];
    auto s = random_tree(sp[0], rng), t = random_tree(sp[1], rng);
    CHECK(prelie_product(s, t) == naive_product(s, t));
  }
  CHECK(prelie_product(T("a"), T("b")) == T("(a b)"));
  CHECK(prelie_product(T("(a b)"), T("c")) == T("(a b c)") + T("(a (b c))"));
}

TEST_CASE("pre-Lie identity and Jacobi on random triples") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 150; ++i) {
    auto [x, y, z] = random_triple(rng, 3 + i % 4);
    TreeVector X = tv(x), Y = tv(y), Z = tv(z);
    auto assoc = [](const TreeVector& a, const TreeVector& b, const TreeVector& c) {
      return prelie_product(prelie_product(a, b), c) - prelie_product(a, prelie_product(b, c));
    };
    CHECK(assoc(X, Y, Z) == assoc(X, Z, Y));
    TreeVector jac = bracket(bracket(X, Y), Z) + bracket(bracket(Y, Z), X) + bracket(bracket(Z, X), Y);
    CHECK(jac.is_zero());
  }
}

TEST_CASE("wedges are antisymmetric and normalized") {
  auto s = parse_tree("(b a)"), t = parse_tree("c");
  CHECK(wedge(s, t) == -wedge(t, s));
  CHECK(wedge(s, t).begin()->first.left.contains("a"));
  CHECK(wedge_basis(standard_labels(4)).size() == 4 * 9 + 3 * 2 * 2);  // 1+3 and 2+2 splits
  WedgeVector w;
  add_wedge(w, t, s, 2);
  CHECK(w.coeff(Wedge{s, t}) == -2);
}

TEST_CASE("wedge composition keeps the block structure") {
  WedgeVector w = wedge(parse_tree("(a x)"), parse_tree("b"));
  CHECK(wedge_compose(w, "x", T("(c d)")) == wedge(parse_tree("(a (c d))"), parse_tree("b")));
  WedgeVector v = wedge(parse_tree("a"), parse_tree("(x b)"));
  CHECK(wedge_compose(v, "x", T("(c d)")) == wedge(T("a"), T("(c b d)") + T("(c (d b))")));
}

TEST_CASE("delta2 o delta3 vanishes") {
  for (std::size_t n = 3; n <= 5; ++n)
    for (const auto& w : wedge3_basis(standard_labels(n))) CHECK(delta2(delta3(Wedge3Vector(w))).is_zero());
}

TEST_CASE("six_term is minus delta3") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    auto [x, y, z] = random_triple(rng, 3 + i % 3);
    Wedge3Vector w;
    add_wedge3(w, x, y, z, 1);
    CHECK(six_term(tv(x), tv(y), tv(z)) == -delta3(w));
  }
  // with a two-vertex block, inside the image of delta3
  Span<Wedge> im;
  for (const auto& w : wedge3_basis(standard_labels(4))) im.insert(delta3(Wedge3Vector(w)));
  CHECK(im.contains(six_term(T("a"), T("b"), T("(c d)"))));
}

TEST_CASE("six_term closure spans the image of delta3") {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto labels = standard_labels(n);
    Span<Wedge> im, six;
    for (const auto& w : wedge3_basis(labels)) {
      im.insert(delta3(Wedge3Vector(w)));
      six.insert(six_term(tv(w.a), tv(w.b), tv(w.c)));
    }
    CHECK(im.rank() == six.rank());
    for (const auto& [k, row] : six.rows()) CHECK(im.contains(row));
  }
}

TEST_CASE("root-valence-1 reduction") {
  auto r = reduce_rv1(parse_tree("(a b c)"));
  CHECK(r.result == -T("(a (b c))") + T("(c (a b))"));
  CHECK(r.witness == wedge(parse_tree("(a b)"), parse_tree("c")));

  auto already = reduce_rv1(parse_tree("(a (b c))"));
  CHECK(already.result == T("(a (b c))"));
  CHECK(already.witness.is_zero());

  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& t : enumerate_trees(standard_labels(n))) {
      auto red = reduce_rv1(t);
      for (const auto& [u, c] : red.result) CHECK(u.root_valence() == 1);
      CHECK(tv(t) - red.result == delta2(red.witness));
    }
  CHECK_THROWS(reduce_rv1(parse_tree("a")));
}

TEST_CASE("indecomposables have dimension (n-1)^(n-1)") {
  const int want[] = {0, 0, 1, 4, 27, 256};
  for (std::size_t n = 2; n <= 5; ++n) {
    IndecSpace s(standard_labels(n));
    CHECK(s.quotient_dim() == static_cast<std::size_t>(want[n]));
    // the root-valence-1 trees span the quotient
    Span<RootedTree> joint = s.image();
    for (const auto& t : enumerate_trees(standard_labels(n)))
      if (t.root_valence() == 1) joint.insert(tv(t));
    CHECK(joint.rank() == s.ambient_dim());
  }
  IndecSpace s3(standard_labels(3));
  CHECK(s3.pi_coords(delta2(wedge(parse_tree("(a b)"), parse_tree("c")))).is_zero());
}
