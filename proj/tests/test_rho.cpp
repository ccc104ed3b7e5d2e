#include "doctest.h"

#include "prelie/io.hpp"
#include "prelie/rho.hpp"
#include "prelie/verify.hpp"

using namespace prelie;

TEST_CASE("rho on a four-label element") {
  auto x = parse_cycprelie("a | (b (c d))");
  WedgeVector want = parse_wedge_vector("a ^ (b (c d)) - (c d) ^ (b a) - d ^ (c (b a))");
  CHECK(rho(x) == want);
  CHECK(format_wedge_vector(rho(x)) == format_wedge_vector(want));
}

TEST_CASE("rho on two and three labels") {
  CHECK(rho(parse_cycprelie("a | b")) == parse_wedge_vector("a ^ b"));
  CHECK(rho(parse_cycprelie("a | (b c)")) == parse_wedge_vector("a ^ (b c) - c ^ (b a)"));
}

TEST_CASE("rho identities for both child choices") {
  RhoEngine first(RhoEngine::SplitChild::first_child), last(RhoEngine::SplitChild::last_child);
  for (std::size_t n = 2; n <= 5; ++n) {
    Span<RootedTree> rank;
    for (const auto& x : cycprelie_basis(standard_labels(n))) {
      CHECK(verify_carre(x, first).is_zero());
      CHECK(verify_rho_n(x, first).is_zero());
      CHECK(verify_carre(x, last).is_zero());
      CHECK(verify_rho_n(x, last).is_zero());
      CHECK(delta2(first.rho(x) - last.rho(x)).is_zero());
      rank.insert(delta2(first.rho(x)));
    }
    CHECK(rank.rank() == cycprelie_basis(standard_labels(n)).size());
  }
}

TEST_CASE("rho composition property on random instances") {
  CheckCount c = rho_composition_random(5, 60, 4);
  CHECK(c.checked > 0);
  CHECK(c.failures == 0);
}

TEST_CASE("exact sequence isomorphism") {
  const std::size_t cyc[] = {0, 0, 1, 2, 9};
  const std::size_t indec[] = {0, 0, 1, 4, 27};
  for (std::size_t n = 2; n <= 4; ++n) {
    IsoReport r = verify_iso_ses(standard_labels(n));
    CHECK(r.ok);
    CHECK(r.rank_rho == cyc[n]);
    CHECK(r.dim_rela_v1 == cyc[n]);
    CHECK(r.dim_im_v1 == cyc[n]);
    CHECK(r.dim_indec == indec[n]);
    CHECK(r.dim_reflex_cyc == (n - 1) * cyc[n]);
    CHECK(r.rank_mu == indec[n]);
    CHECK(r.left_failures == 0);
    CHECK(r.right_failures == 0);
  }
}
