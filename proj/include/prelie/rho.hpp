#pragma once

#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

#include "prelie/anticyclic.hpp"

namespace prelie {

/// The explicit section rho: CycPreLie(I) -> Lambda^2 PreLie(I), built by
/// recursion on the shape of s ^ t.
///
/// When t = B+_b(T1, ..., Tk) with k >= 2 the recursion splits off one child;
/// `first_child` takes the canonically first one, `last_child` the last. The
/// two give the same map, which the tests check.
class RhoEngine {
 public:
  enum class SplitChild { first_child, last_child };

  explicit RhoEngine(SplitChild choice = SplitChild::first_child) : choice_(choice) {}

  /// rho(s ^ t).
  WedgeVector rho_pair(const RootedTree& s, const RootedTree& t);
  WedgeVector rho(const WedgeVector& w);
  WedgeVector rho(const CycPreLieElem& x);

  std::size_t cache_size() const;

 private:
  WedgeVector compute(const RootedTree& s, const RootedTree& t);
  WedgeVector rho_singleton(const Label& a, const RootedTree& t);

  SplitChild choice_;
  mutable std::shared_mutex mu_;
  std::map<std::string, WedgeVector> cache_;
};

RhoEngine& default_rho();
WedgeVector rho(const CycPreLieElem& x);

/// delta2(rho(x)) - sum_i i <| Gamma_i(x); zero when the left square commutes.
TreeVector verify_carre(const CycPreLieElem& x, RhoEngine& engine = default_rho());
/// cyc_normal(rho(x)) - (n-1) x, as a body on I \ {i0}.
TreeVector verify_rho_n(const CycPreLieElem& x, RhoEngine& engine = default_rho());

/// mu: Reflex (x) CycPreLie -> Indec on the basis (i - i0) (x) <i0, T>, i != i0.
struct MuMap {
  LabelSet labels;
  std::vector<PermCycElem> domain;   // sum-zero representatives
  std::vector<TreeVector> images;    // Indec coordinates (reduced modulo im delta2)
  std::size_t rank = 0;
};
MuMap mu_map(const LabelSet& labels);

struct IsoReport {
  std::size_t arity = 0;
  std::size_t dim_cycprelie = 0;
  std::size_t rank_rho = 0;          // rank of delta2 o rho
  std::size_t dim_rela_v1 = 0;       // dim {w : delta2(w) in PreLie_{v=1}} - rank delta3
  std::size_t dim_im_v1 = 0;         // dim of im delta2 intersected with PreLie_{v=1}
  std::size_t dim_prelie_v1 = 0;
  std::size_t dim_indec = 0;
  std::size_t dim_reflex_cyc = 0;
  std::size_t rank_mu = 0;
  std::size_t rho_not_v1 = 0;        // basis elements whose delta2 o rho leaves PreLie_{v=1}
  std::size_t left_failures = 0;
  std::size_t right_failures = 0;
  bool mu_bijective = false;
  bool ok = false;
};

/// Checks the short exact sequence isomorphism at arity labels.size().
IsoReport verify_iso_ses(const LabelSet& labels);

}  // namespace prelie
