#include "doctest.h"

#include "prelie/anticyclic.hpp"
#include "prelie/io.hpp"

using namespace prelie;

namespace {

TreeVector T(const char* s) { return tv(parse_tree(s)); }
WedgeVector W(const char* s) { return parse_wedge_vector(s); }

}  // namespace

TEST_CASE("gamma on small wedges") {
  CHECK(gamma("z", W("x ^ (y z)")) == -T("(y x)"));
  CHECK(gamma("z", W("w ^ (x (y z))")) == -T("(y (x w))"));
  CHECK(gamma("a", W("a ^ (b c)")) == T("(b c)"));
  CHECK(gamma("b", W("a ^ b")) == -T("a"));
  CHECK_THROWS(gamma("q", W("a ^ b")));
}

TEST_CASE("b ^ gamma_b(w) is w in CycPreLie") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto labels = standard_labels(n);
    for (const auto& w : wedge_basis(labels)) {
      const auto ref = cyc_normal(WedgeVector(w), labels);
      for (const auto& b : labels) {
        WedgeVector back = wedge(tv(b), gamma(b, WedgeVector(w)));
        CHECK(cyc_normal(back, labels) == ref);
      }
    }
  }
}

TEST_CASE("relations are killed") {
  auto x = parse_tree("(a d)"), y = parse_tree("b"), z = parse_tree("(c e)");
  CHECK(cyc_normal(kp_relation_antisym(x, y, z)).body.is_zero());
  CHECK(cyc_normal(kp_relation_swap(x, y, z)).body.is_zero());
}

TEST_CASE("cyc_normal has rank (n-1)^(n-2), the codimension of K_P") {
  const std::size_t want[] = {0, 0, 1, 2, 9, 64};
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto labels = standard_labels(n);
    const auto basis = wedge_basis(labels);
    Span<RootedTree> img;
    for (const auto& w : basis) img.insert(cyc_normal(WedgeVector(w), labels).body);
    CHECK(img.rank() == want[n]);
    CHECK(cycprelie_basis(labels).size() == want[n]);
    Span<Wedge> kp = kp_oracle(labels);
    CHECK(basis.size() - kp.rank() == want[n]);
  }
}

TEST_CASE("gamma strategies agree") {
  GammaEngine lem(GammaEngine::Strategy::lemmas), rw(GammaEngine::Strategy::rewrite),
      rnd(GammaEngine::Strategy::randomized, 17);
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto labels = standard_labels(n);
    for (const auto& w : wedge_basis(labels))
      for (const auto& b : labels) {
        auto g = lem.gamma(b, WedgeVector(w));
        CHECK(rw.gamma(b, WedgeVector(w)) == g);
        CHECK(rnd.gamma(b, WedgeVector(w)) == g);
      }
  }
  CHECK(lem.cache_size() > 0);
}

TEST_CASE("psi and its inverse on root-valence-1 trees") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto labels = standard_labels(n);
    for (const auto& t : enumerate_trees(labels)) {
      if (t.root_valence() != 1) {
        CHECK_THROWS_AS(psi_inv(tv(t), labels), std::invalid_argument);
        continue;
      }
      auto p = psi_inv(tv(t), labels);
      CHECK(psi(p) == tv(t));
    }
  }
}

TEST_CASE("Perm tensor CycPreLie bookkeeping") {
  const auto labels = standard_labels(4);
  for (const auto& x : cycprelie_basis(labels)) {
    CHECK(reflex_project(iota(x)).terms.is_zero());
    CHECK(slot_sum(iota(x)).body == Rational(4) * x.body);
    TreeVector sum;
    for (const auto& j : labels) sum += prelie_product(tv(j), gamma(j, x));
    CHECK(psi(iota(x)) == sum);
    for (const auto& a : labels) {
      auto p = slot_tensor(a, x);
      CHECK(p.component(a) == x);
      CHECK(slot_sum(reflex_project(p)).body.is_zero());
      CHECK_THROWS_AS(reflex_section(p), std::invalid_argument);
    }
  }
}
