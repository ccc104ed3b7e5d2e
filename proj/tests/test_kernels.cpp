#include "doctest.h"

#include "prelie/anticyclic.hpp"
#include "prelie/kernels.hpp"

using namespace prelie;

TEST_CASE("serial and parallel paths agree") {
  const auto labels = standard_labels(6);
  CHECK(enumerate_trees(labels) == enumerate_trees_serial(labels));

  const auto basis = wedge_basis(standard_labels(5));
  auto f = [](const Wedge& w) { return delta2(WedgeVector(w)); };
  CHECK(map_kernel(basis, f, Exec::serial) == map_kernel(basis, f, Exec::parallel));

  set_default_exec(Exec::serial);
  IndecSpace s(standard_labels(4));
  auto kp = kp_oracle(standard_labels(4)).rank();
  set_default_exec(Exec::parallel);
  IndecSpace p(standard_labels(4));
  CHECK(s.quotient_dim() == p.quotient_dim());
  CHECK(kp == kp_oracle(standard_labels(4)).rank());
}

TEST_CASE("kernel exceptions propagate") {
  std::vector<int> xs{1, 2, 3, 4};
  auto bad = [](int x) {
    if (x == 3) throw std::runtime_error("boom");
    return x;
  };
  CHECK_THROWS_AS(map_kernel(xs, bad, Exec::parallel), std::runtime_error);
  CHECK_THROWS_AS(map_kernel(xs, bad, Exec::serial), std::runtime_error);
}
