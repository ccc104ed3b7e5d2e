#include "doctest.h"

#include <random>

#include "prelie/lie.hpp"

using namespace prelie;

namespace {

LieVector L(const char* s) { return lie_normal_form(parse_lie_word(s)); }
LieVector basis_vec(std::vector<Label> letters) { return LieVector(LeftNormed{std::move(letters)}); }

// Random bracketing of a shuffled label list.
LieWord random_word(std::vector<Label> letters, std::mt19937_64& rng) {
  if (letters.size() == 1) return LieWord::leaf(letters[0]);
  std::shuffle(letters.begin(), letters.end(), rng);
  std::size_t cut = 1 + rng() % (letters.size() - 1);
  std::vector<Label> l(letters.begin(), letters.begin() + static_cast<long>(cut));
  std::vector<Label> r(letters.begin() + static_cast<long>(cut), letters.end());
  return LieWord::bracket(random_word(l, rng), random_word(r, rng));
}

CycLieElem pair_sum(const Label& i, const LieVector& v) {
  CycLieElem out;
  for (const auto& [w, c] : v) {
    auto e = cyclie_pair(LieWord::leaf(i), to_word(w));
    out.labels = e.labels;
    out.basepoint = e.basepoint;
    out.body.axpy(c, e.body);
  }
  return out;
}

}  // namespace

TEST_CASE("normal form examples") {
  CHECK(L("[b,a]") == -basis_vec({"a", "b"}));
  CHECK(L("[a,[b,c]]") == basis_vec({"a", "b", "c"}) - basis_vec({"a", "c", "b"}));
  CHECK(L("[[b,c],a]") == basis_vec({"a", "c", "b"}) - basis_vec({"a", "b", "c"}));
  CHECK((L("[[a,b],c]") + L("[[b,c],a]") + L("[[c,a],b]")).is_zero());
  CHECK(format_lie_word(parse_lie_word("[ [a,b] , c ]")) == "[[a,b],c]");
  CHECK_THROWS_AS(parse_lie_word("[a,a]"), ParseError);
  CHECK_THROWS_AS(lie_normal_form(LieWord{{}, {LieWord::leaf("a"), LieWord::leaf("a")}}), LabelError);
  CHECK_THROWS(parse_lie_word("[a,b"));
}

TEST_CASE("bases have (n-1)! elements and phi is injective") {
  std::size_t fact = 1;
  for (std::size_t n = 1; n <= 6; ++n) {
    if (n > 1) fact *= n - 1;
    const auto basis = lie_basis(standard_labels(n));
    CHECK(basis.size() == fact);
    Span<RootedTree> img;
    for (const auto& w : basis) img.insert(phi(LieVector(w)));
    CHECK(img.rank() == fact);
  }
}

TEST_CASE("phi is an operad morphism") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + i % 4;
    auto splits = ordered_splits(standard_labels(n), 2);
    const auto& sp = splits[rng() % splits.size()];
    auto u = random_word(sp[0], rng), v = random_word(sp[1], rng);
    LieVector U = lie_normal_form(u), V = lie_normal_form(v);
    // the normal form does not change the image
    CHECK(phi(u) == phi(U));
    CHECK(phi(lie_bracket(U, V)) == bracket(phi(U), phi(V)));

    // partial composition through a fresh slot
    const Label slot = "x";
    auto outer = random_word([&] {
      auto l = sp[0];
      l.push_back(slot);
      return l;
    }(), rng);
    LieVector O = lie_normal_form(outer);
    CHECK(phi(lie_compose(O, slot, V)) == compose_partial(phi(O), slot, phi(V)));
  }
}

TEST_CASE("cyclic pairing") {
  auto x = LieWord::leaf("x"), z = LieWord::leaf("z");
  auto xy = parse_lie_word("[x,y]"), yz = parse_lie_word("[y,z]");
  CycLieElem e = cyclie_pair(xy, z);
  CHECK(e.basepoint == "x");
  CHECK(e.body == L("[y,z]"));
  CHECK(cyclie_pair(x, yz).body == e.body);
  CHECK(cyclie_pair(z, xy).body == e.body);  // the pairing is symmetric
  CHECK(cyclie_basis(standard_labels(5)).size() == 6);
}

TEST_CASE("rotation recovers the element at every slot") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& e : cyclie_basis(standard_labels(n)))
      for (const auto& i : e.labels) {
        LieVector r = cyclie_rotate(e, i);
        for (const auto& [w, c] : r) CHECK(std::find(w.letters.begin(), w.letters.end(), i) == w.letters.end());
        CHECK(pair_sum(i, r).body == e.body);
      }
  CHECK_THROWS(cyclie_rotate(cyclie_basis(standard_labels(3))[0], "q"));
}
