#pragma once

#include "json.hpp"
#include <vector>

#include "prelie/anticyclic.hpp"
#include "prelie/lie.hpp"

namespace prelie {

/// sum c d (root(s) - root(t)) (x) cyc_normal(s ^ t) over s in p1, t in p2.
PermCycElem theta_trees(const TreeVector& p1, const TreeVector& p2);
/// theta on the presentation m1 . m2, through phi. Throws LabelError on a clash.
PermCycElem theta(const LieVector& m1, const LieVector& m2);
/// theta on <i0, body>.
PermCycElem theta(const CycLieElem& e);

struct CheckCount {
  std::size_t checked = 0;
  std::size_t failures = 0;
};

/// theta(m1, [m2, m3]) == theta([m1, m2], m3) over every ordered split of
/// `labels` into three blocks and every triple of basis words.
CheckCount theta_well_defined(const LabelSet& labels);

/// psi o theta.
TreeVector lambda_map(const CycLieElem& e);

struct SuboperadTable {
  std::size_t max_arity = 0;
  /// basis[n] spans M(n) on standard_labels(n); index 0 unused.
  std::vector<std::vector<TreeVector>> basis;
  std::size_t dim(std::size_t n) const { return basis.at(n).size(); }
};

/// Dimensions of the suboperad of PreLie generated by lambda(CycLie), up to
/// arity N (N <= 26).
SuboperadTable generate_suboperad(std::size_t max_arity);

/// Compares dim M(n), dim Indec(n) and the free operad on CycLie for
/// n = 1..N, plus the series identities, as JSON:
///   {max_arity, rows: [{n, dim_M, dim_indec, dim_free, rank_pi_M, match}],
///    series_residual_order, series_residual_zero, mismatches, ok}
nlohmann::json conjecture_report(std::size_t max_arity);

}  // namespace prelie
