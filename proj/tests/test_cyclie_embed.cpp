#include "doctest.h"

#include "prelie/cyclie_embed.hpp"
#include "prelie/io.hpp"
#include "prelie/verify.hpp"

using namespace prelie;

namespace {

TreeVector T(const char* s) { return tv(parse_tree(s)); }

}  // namespace

TEST_CASE("lambda of the two-label generator") {
  auto e = cyclie_pair(LieWord::leaf("x"), LieWord::leaf("y"));
  CHECK(lambda_map(e) == T("(x y)") + T("(y x)"));
}

TEST_CASE("theta on small inputs") {
  auto p = theta(lie_normal_form(parse_lie_word("x")), lie_normal_form(parse_lie_word("y")));
  // (x - y) tensor <x, y>
  auto xy = cyc_normal(wedge(parse_tree("x"), parse_tree("y")));
  CHECK(p == slot_tensor("x", xy) - slot_tensor("y", xy));
  CHECK(slot_sum(p).body.is_zero());
  CHECK_THROWS_AS(theta(lie_normal_form(parse_lie_word("x")), lie_normal_form(parse_lie_word("[x,y]"))),
                  LabelError);
}

TEST_CASE("lambda of a three-label element") {
  auto e = cyclie_pair(LieWord::leaf("x"), parse_lie_word("[y,z]"));
  TreeVector l = lambda_map(e);
  CHECK(l.size() == 6);
  for (const auto& [t, c] : l) CHECK(t.root_valence() == 1);
  // lambda factors through psi o theta
  CHECK(l == psi(theta(e)));
}

TEST_CASE("theta is well defined") {
  for (std::size_t n = 3; n <= 4; ++n) {
    CheckCount c = theta_well_defined(standard_labels(n));
    CHECK(c.checked > 0);
    CHECK(c.failures == 0);
  }
}

TEST_CASE("theta and lambda ranks") {
  std::size_t fact = 1;
  for (std::size_t n = 2; n <= 6; ++n) {
    if (n > 2) fact *= n - 2;
    ThetaRankReport r = theta_ranks(standard_labels(n));
    CHECK(r.rank_theta == fact);
    CHECK(r.rank_lambda == fact);
    CHECK(r.slot_sum_nonzero == 0);
    CHECK(r.lambda_not_v1 == 0);
  }
}

TEST_CASE("suboperad generated by lambda") {
  SuboperadTable m = generate_suboperad(4);
  CHECK(m.dim(1) == 1);
  CHECK(m.dim(2) == 1);
  CHECK(m.dim(3) == 4);
  CHECK(m.dim(4) == 27);
  // M(n) maps injectively to the indecomposables
  for (std::size_t n = 2; n <= 4; ++n) {
    IndecSpace s(standard_labels(n));
    Span<RootedTree> img;
    for (const auto& v : m.basis[n]) img.insert(s.pi_coords(v));
    CHECK(img.rank() == m.dim(n));
  }
}

TEST_CASE("conjecture report shape") {
  auto rep = conjecture_report(4);
  CHECK(rep["ok"].get<bool>());
  CHECK(rep["rows"].size() == 4);
  CHECK(rep["mismatches"].empty());
  CHECK(rep["series_residual_zero"].get<bool>());
}
