#include "doctest.h"

#include <random>
#include <vector>

#include "prelie/egf.hpp"
#include "prelie/operad.hpp"
#include "prelie/span.hpp"

using namespace prelie;

namespace {

// Plain dense Gaussian elimination; the reference for Span::rank.
std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || sgn(m[r][c]) == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("rationals stay canonical") {
  Rational a(6, 4);
  a.canonicalize();
  CHECK(to_string(a) == "3/2");
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(factorial(6) == 720);
  CHECK(ipow(3, 4) == 81);
}

TEST_CASE("lincomb drops zero coefficients") {
  LinComb<int> v;
  v.add(1, 2);
  v.add(2, Rational(1, 3));
  v.add(1, -2);
  CHECK(v.size() == 1);
  CHECK(v.coeff(2) == Rational(1, 3));
  CHECK((v - v).is_zero());
  CHECK((3 * v).coeff(2) == 1);
}

TEST_CASE("span rank matches dense elimination on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> val(-3, 3), zero(0, 2);
  for (int trial = 0; trial < 40; ++trial) {
    // low-rank products appear every few trials
    const int inner = trial % 4 == 0 ? 4 + trial % 5 : 10;
    std::vector<std::vector<Rational>> a(10, std::vector<Rational>(inner)), b(inner, std::vector<Rational>(10));
    for (auto& r : a)
      for (auto& x : r) x = zero(rng) ? val(rng) : 0;
    for (auto& r : b)
      for (auto& x : r) x = zero(rng) ? val(rng) : 0;
    std::vector<std::vector<Rational>> m(10, std::vector<Rational>(10));
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j)
        for (int k = 0; k < inner; ++k) m[i][j] += a[i][k] * b[k][j];

    Span<std::size_t> s(true);
    std::vector<LinComb<std::size_t>> rows;
    for (const auto& r : m) {
      LinComb<std::size_t> v;
      for (std::size_t j = 0; j < r.size(); ++j) v.add(j, r[j]);
      rows.push_back(v);
      s.insert(v);
    }
    CHECK(s.rank() == dense_rank(m));

    // coordinates reconstruct a random member of the row space
    LinComb<std::size_t> target;
    std::vector<Rational> mix(10);
    for (std::size_t i = 0; i < 10; ++i) {
      mix[i] = val(rng);
      target.axpy(mix[i], rows[i]);
    }
    auto c = s.coords(target);
    REQUIRE(c.has_value());
    LinComb<std::size_t> back;
    for (const auto& [g, x] : *c) back.axpy(x, rows[g]);
    CHECK(back == target);
  }
}

TEST_CASE("span rejects vectors outside") {
  Span<std::size_t> s(true);
  s.insert(LinComb<std::size_t>(0) + LinComb<std::size_t>(1));
  CHECK_FALSE(s.coords(LinComb<std::size_t>(0)).has_value());
  CHECK(s.contains(2 * (LinComb<std::size_t>(0) + LinComb<std::size_t>(1))));
  Span<std::size_t> plain;
  CHECK_THROWS(plain.coords(LinComb<std::size_t>(0)));
}

TEST_CASE("wedge square of PreLie on three labels is six-dimensional") {
  const auto basis = wedge_basis(standard_labels(3));
  CHECK(basis.size() == 6);
  std::vector<std::vector<Rational>> dense;
  Span<Wedge> s;
  for (const auto& w : basis) {
    // each basis wedge as a sum with a neighbour, to exercise elimination
    WedgeVector v(w);
    v.axpy(2, WedgeVector(basis[(&w - basis.data() + 1) % basis.size()]));
    s.insert(v);
    std::vector<Rational> row(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) row[j] = v.coeff(basis[j]);
    dense.push_back(row);
  }
  CHECK(s.rank() == dense_rank(dense));
  CHECK(s.rank() == 6);
}

TEST_CASE("egf arithmetic") {
  const std::size_t N = 10;
  const Egf x = Egf::x(N);
  const Egf one = Egf::constant(N, 1);

  SUBCASE("exp and log invert each other") {
    Egf g = x + Rational(1, 3) * x * x - Rational(2) * x * x * x;
    CHECK(egf_exp(egf_log1p(g)) == one + g);
    CHECK(egf_log1p(egf_exp(g) - one) == g);
    CHECK(egf_log1p_neg(g) == -egf_log1p(-g));
  }

  SUBCASE("composition with exp") {
    Egf e = egf_exp(x) - one;
    CHECK(egf_compose(egf_exp(x), e) == egf_exp(e));
  }

  SUBCASE("rooted trees satisfy f = x exp(f)") {
    Egf f = prelie_series(N);
    CHECK((f - x * egf_exp(f)).is_zero());
    for (unsigned n = 1; n <= N; ++n) CHECK(f.dim(n) == ipow(n, n - 1));
  }

  SUBCASE("indecomposables through the Lie composition") {
    Egf indec = one - egf_exp(-prelie_series(N));
    std::vector<int> want{0, 1, 1, 4, 27, 256};
    for (std::size_t n = 1; n < want.size(); ++n) CHECK(indec.dim(n) == want[n]);
    CHECK(egf_compose(lie_series(N), indec) == prelie_series(N));
  }

  SUBCASE("free operad fixed point") {
    CHECK(egf_fixed_point_free_operad(Egf(N), N) == x);
    // f = x + f^2/2: binary trees, (2n-3)!!
    Egf c(N);
    c[2] = Rational(1, 2);
    Egf f = egf_fixed_point_free_operad(c, N);
    std::vector<int> want{0, 1, 1, 3, 15, 105, 945};
    for (std::size_t n = 1; n < want.size(); ++n) CHECK(f.dim(n) == want[n]);
  }

  SUBCASE("cyclie series") {
    Egf c = cyclie_series(N);
    for (unsigned n = 2; n <= N; ++n) CHECK(c.dim(n) == factorial(n - 2));
  }

  SUBCASE("dim rejects non-integers and constants are checked") {
    Egf h(N);
    h[2] = Rational(1, 3);
    CHECK_THROWS(h.dim(2));
    CHECK_THROWS(egf_exp(one));
  }
}
