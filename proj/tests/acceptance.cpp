// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "prelie/egf.hpp"
#include "prelie/io.hpp"
#include "prelie/verify.hpp"

using namespace prelie;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failed = 0;

void report(int id, const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto t0 = Clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  if (!ok) ++failed;
  std::printf("%s %2d %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(), seconds_since(t0),
              detail.empty() ? "" : ": ", detail.c_str());
  std::fflush(stdout);
}

bool ok_count(const CheckCount& c) { return c.checked > 0 && c.failures == 0; }

long ipow_l(long b, long e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

int main() {
  report(1, "tree enumeration n^(n-1), n = 1..7", [](std::string& d) {
    auto t0 = Clock::now();
    bool ok = true;
    for (long n = 1; n <= 7; ++n) {
      auto c = static_cast<long>(enumerate_trees(standard_labels(static_cast<std::size_t>(n))).size());
      d += std::to_string(c) + (n < 7 ? " " : "");
      ok = ok && c == ipow_l(n, n - 1);
    }
    return ok && seconds_since(t0) < 30;
  });

  report(2, "operad and pre-Lie axioms", [](std::string& d) {
    bool ok = true;
    for (std::size_t n : {3, 4}) ok = ok_count(operad_axioms_exhaustive(standard_labels(n))) && ok;
    for (std::size_t n : {5, 6}) {
      CheckCount c = operad_axioms_random(standard_labels(n), 500, 1000 + n);
      d += "n=" + std::to_string(n) + " " + std::to_string(c.checked) + " checks ";
      ok = ok_count(c) && ok;
    }
    return ok;
  });

  report(3, "Gamma against the K_P oracle", [](std::string& d) {
    bool ok = true;
    for (std::size_t n : {3, 4, 5}) {
      GammaOracleReport r = gamma_vs_oracle(standard_labels(n));
      const auto want = static_cast<std::size_t>(ipow_l(static_cast<long>(n) - 1, static_cast<long>(n) - 2));
      d += std::to_string(r.rank_cyc_normal) + "/" + std::to_string(r.dim_wedge - r.rank_kp) + " ";
      ok = ok && ok_count(r.count) && r.rank_cyc_normal == want && r.dim_wedge - r.rank_kp == want &&
           r.kp_not_killed == 0;
    }
    ok = ok && gamma("z", parse_wedge_vector("x ^ (y z)")) == -tv(parse_tree("(y x)"));
    ok = ok && gamma("z", parse_wedge_vector("w ^ (x (y z))")) == -tv(parse_tree("(y (x w))"));
    return ok;
  });

  report(4, "root-valence-1 reduction, n <= 5", [](std::string&) {
    bool ok = true;
    for (std::size_t n = 2; n <= 5; ++n) ok = ok_count(reduce_rv1_exhaustive(standard_labels(n))) && ok;
    return ok;
  });

  report(5, "rho identities and worked example", [](std::string& d) {
    bool ok = true;
    for (std::size_t n = 2; n <= 5; ++n) {
      RhoCheck r = rho_identities(standard_labels(n));
      d += std::to_string(r.rank) + " ";
      ok = ok_count(r.count) && ok;
    }
    WedgeVector got = rho(parse_cycprelie("a | (b (c d))"));
    WedgeVector want = parse_wedge_vector("a ^ (b (c d)) - (c d) ^ (b a) - d ^ (c (b a))");
    return ok && got == want;
  });

  report(6, "exact sequence isomorphism", [](std::string& d) {
    bool ok = true;
    for (std::size_t n : {3, 4}) {
      IsoReport r = verify_iso_ses(standard_labels(n));
      const auto want = static_cast<std::size_t>(ipow_l(static_cast<long>(n) - 1, static_cast<long>(n) - 2));
      ok = ok && r.ok && r.rank_rho == want && r.dim_rela_v1 == want;
    }
    for (std::size_t n = 2; n <= 5; ++n) {
      IndecSpace s(standard_labels(n));
      d += std::to_string(s.quotient_dim()) + " ";
      ok = ok && s.quotient_dim() ==
                     static_cast<std::size_t>(ipow_l(static_cast<long>(n) - 1, static_cast<long>(n) - 1));
    }
    return ok;
  });

  report(7, "theta well defined, rank (n-2)!", [](std::string& d) {
    bool ok = true;
    for (std::size_t n : {3, 4}) ok = ok_count(theta_well_defined(standard_labels(n))) && ok;
    std::size_t fact = 1;
    for (std::size_t n = 3; n <= 6; ++n) {
      fact *= n - 2;
      ThetaRankReport r = theta_ranks(standard_labels(n));
      d += std::to_string(r.rank_theta) + " ";
      ok = ok && r.rank_theta == fact && r.slot_sum_nonzero == 0;
    }
    return ok;
  });

  report(8, "lambda generator, root-valence 1, rank (n-2)!", [](std::string& d) {
    auto e = cyclie_pair(LieWord::leaf("x"), LieWord::leaf("y"));
    bool ok = lambda_map(e) == tv(parse_tree("(x y)")) + tv(parse_tree("(y x)"));
    std::size_t fact = 1;
    for (std::size_t n = 2; n <= 6; ++n) {
      if (n > 2) fact *= n - 2;
      ThetaRankReport r = theta_ranks(standard_labels(n));
      d += std::to_string(r.rank_lambda) + " ";
      ok = ok && r.rank_lambda == fact && r.lambda_not_v1 == 0;
    }
    return ok;
  });

  report(9, "generating series to order 10", [](std::string& d) {
    const std::size_t N = 10;
    Egf one = Egf::constant(N, 1);
    Egf f = prelie_series(N);
    Egf indec = one - egf_exp(-f);
    Egf fixed = egf_fixed_point_free_operad(cyclie_series(N), N);
    bool ok = (f - Egf::x(N) * egf_exp(f)).is_zero();
    ok = ok && ((one - fixed) * egf_log1p_neg(fixed) - Egf::x(N)).is_zero();
    ok = ok && fixed == indec;
    for (unsigned n = 1; n <= N; ++n) {
      if (n <= 7) d += fixed.dim(n).get_str() + " ";
      ok = ok && fixed.dim(n) == ipow(static_cast<long>(n) - 1, n - 1);
    }
    return ok;
  });

  report(10, "conjecture harness n <= 5", [](std::string& d) {
    auto t0 = Clock::now();
    auto rep = conjecture_report(5);
    const double secs = seconds_since(t0);
    for (const auto& r : rep["rows"]) d += r["dim_M"].dump() + " ";
    // A mismatch is evidence about an open question, not a test failure; it is
    // printed with the harness certificate.
    if (!rep["ok"].get<bool>()) d += "MISMATCH " + rep["mismatches"].dump();
    else d += "no mismatch";
    return rep["rows"].size() == 5 && secs < 600;
  });

  return failed == 0 ? 0 : 1;
}
