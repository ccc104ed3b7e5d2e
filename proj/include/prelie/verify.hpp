#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "prelie/cyclie_embed.hpp"
#include "prelie/rho.hpp"

namespace prelie {

// ------------------------------------------------------------ single checks

/// Pre-Lie identity and the sequential, parallel and unit axioms of partial
/// composition, over every admissible choice of trees on `labels`.
CheckCount operad_axioms_exhaustive(const LabelSet& labels);
/// The same identities plus equivariance on `samples` random instances.
CheckCount operad_axioms_random(const LabelSet& labels, std::size_t samples, std::uint64_t seed);

/// reduce_rv1 on every tree on `labels`: support has root-valence 1 and
/// t - result = delta2(witness).
CheckCount reduce_rv1_exhaustive(const LabelSet& labels);

struct GammaOracleReport {
  CheckCount count;
  std::size_t dim_wedge = 0;
  std::size_t rank_kp = 0;
  std::size_t rank_cyc_normal = 0;  // rank of cyc_normal on Lambda^2 PreLie(I)
  std::size_t kp_not_killed = 0;    // K_P rows with nonzero cyc_normal
};
/// For every basis wedge w and every label b: b ^ Gamma_b(w) - w lies in K_P.
GammaOracleReport gamma_vs_oracle(const LabelSet& labels);

/// The three Gamma strategies agree on every basis wedge and label.
CheckCount gamma_strategies_agree(const LabelSet& labels, std::uint64_t seed);

struct RhoCheck {
  CheckCount count;
  std::size_t rank = 0;  // rank of rho on the CycPreLie basis
};
/// delta2 o rho = sum_i i <| Gamma_i and cyc_normal o rho = (n-1) id on the
/// CycPreLie basis, for both split-child variants of rho; the variants differ
/// by a cycle of delta2.
RhoCheck rho_identities(const LabelSet& labels);

/// rho((r ^ s) o_i t) against rho(r ^ s) o_i t - rho(# ^ t) o_# Gamma_i(r ^ s)
/// + Gamma_i(r ^ s) ^ t after delta2, on random instances of total arity
/// between 3 and max_n.
CheckCount rho_composition_random(std::size_t max_n, std::size_t samples, std::uint64_t seed);

struct ThetaRankReport {
  std::size_t rank_theta = 0;
  std::size_t rank_lambda = 0;
  std::size_t slot_sum_nonzero = 0;
  std::size_t lambda_not_v1 = 0;
};
ThetaRankReport theta_ranks(const LabelSet& labels);

// ------------------------------------------------------------------ suites

struct SuiteReport {
  SuiteReport() = default;
  SuiteReport(std::string name, std::size_t n) : suite(std::move(name)), max_n(n) {}

  std::string suite;
  std::size_t max_n = 0;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  nlohmann::json dims = nlohmann::json::object();

  bool ok() const { return failures.empty(); }
  void expect(bool cond, const std::string& what) {
    ++checked;
    if (!cond) failures.push_back(what);
  }
  void merge(const SuiteReport& o);
  nlohmann::json to_json() const;  // {suite, arity, checked, failures, dims}
};

SuiteReport verify_operad(std::size_t max_n, std::uint64_t seed, std::size_t samples = 500);
SuiteReport verify_anticyclic(std::size_t max_n, std::uint64_t seed);
SuiteReport verify_rho(std::size_t max_n);
SuiteReport verify_theta(std::size_t max_n);
SuiteReport verify_conjectures(std::size_t max_n);

/// name in {operad, anticyclic, rho, theta, conjectures, all}. Throws
/// std::invalid_argument on an unknown name.
SuiteReport run_suite(const std::string& name, std::size_t max_n, std::uint64_t seed);

}  // namespace prelie
