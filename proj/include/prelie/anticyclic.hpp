#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <string>
#include <vector>

#include "prelie/operad.hpp"
#include "prelie/span.hpp"

namespace prelie {

/// Element <i0, body> of CycPreLie(I), i0 = min(I), body in PreLie(I \ {i0}).
struct CycPreLieElem {
  LabelSet labels;
  Label basepoint;
  TreeVector body;

  std::size_t arity() const { return labels.size(); }
  friend bool operator==(const CycPreLieElem& a, const CycPreLieElem& b) {
    return a.labels == b.labels && a.body == b.body;
  }
};

/// Computes Gamma_b, the unique element with <b, Gamma_b(w)> = w in CycPreLie.
///
/// `lemmas` splits a non-corolla block at a top corolla and applies the two
/// composition lemmas; pairs of corollas fall back to one rewriting step with
/// the invariance rules. `rewrite` uses only the rewriting step. `randomized`
/// picks the block and the splitting vertex at random among valid choices.
/// Results are memoized on label-standardized inputs; the cache may be read
/// concurrently.
class GammaEngine {
 public:
  enum class Strategy { lemmas, rewrite, randomized };

  explicit GammaEngine(Strategy strategy = Strategy::lemmas, std::uint64_t seed = 0);

  /// Gamma_b(s ^ t).
  TreeVector gamma(const Label& b, const RootedTree& s, const RootedTree& t);
  TreeVector gamma(const Label& b, const WedgeVector& w);

  std::size_t cache_size() const;
  Strategy strategy() const { return strategy_; }

 private:
  TreeVector compute(const Label& b, const RootedTree& s, const RootedTree& t);
  TreeVector by_lemmas(const Label& b, const RootedTree& s, const RootedTree& t);
  TreeVector by_rewrite(const Label& b, const RootedTree& s, const RootedTree& t);
  std::size_t pick(std::size_t n);

  Strategy strategy_;
  std::mt19937_64 rng_;
  std::mutex rng_mu_;
  mutable std::shared_mutex cache_mu_;
  std::map<std::string, TreeVector> cache_;
};

/// Process-wide engine with the default strategy.
GammaEngine& default_gamma();

TreeVector gamma(const Label& b, const WedgeVector& w);
TreeVector gamma(const Label& b, const CycPreLieElem& x);

/// Basepoint normal form <min(I), Gamma_min(w)>.
CycPreLieElem cyc_normal(const WedgeVector& w, const LabelSet& labels);
CycPreLieElem cyc_normal(const WedgeVector& w);
/// i0 ^ body, a lift of x to Lambda^2 PreLie.
WedgeVector as_wedge(const CycPreLieElem& x);
/// <i0, T> for every tree T on I \ {i0}.
std::vector<CycPreLieElem> cycprelie_basis(const LabelSet& labels);

/// The relation x^(y<|z) + z^(y<|x) on trees.
WedgeVector kp_relation_antisym(const RootedTree& x, const RootedTree& y, const RootedTree& z);
/// The relation x^(y<|z) - y^(x<|z) + y^(z<|x) on trees.
WedgeVector kp_relation_swap(const RootedTree& x, const RootedTree& y, const RootedTree& z);

/// The right submodule K_P(I) of Lambda^2 PreLie(I) generated by the two
/// arity-3 relations, built by composing trees into the generators.
Span<Wedge> kp_oracle(const LabelSet& labels);

// ------------------------------------------------ Perm (x) CycPreLie and psi

/// Basis key i (x) <i0, T> of Perm (x) CycPreLie.
struct SlotKey {
  Label slot;
  RootedTree body;
  friend bool operator==(const SlotKey&, const SlotKey&) = default;
  friend std::strong_ordering operator<=>(const SlotKey& a, const SlotKey& b) {
    if (auto c = a.slot <=> b.slot; c != 0) return c;
    return a.body <=> b.body;
  }
};

/// Element of (Perm (x) CycPreLie)(I): slot-indexed CycPreLie components.
struct PermCycElem {
  LabelSet labels;
  LinComb<SlotKey> terms;

  CycPreLieElem component(const Label& slot) const;
  PermCycElem& operator+=(const PermCycElem& o);
  PermCycElem& operator-=(const PermCycElem& o);
  PermCycElem& operator*=(const Rational& a);
  friend PermCycElem operator+(PermCycElem a, const PermCycElem& b) { return a += b; }
  friend PermCycElem operator-(PermCycElem a, const PermCycElem& b) { return a -= b; }
  friend PermCycElem operator*(const Rational& s, PermCycElem a) { return a *= s; }
  friend bool operator==(const PermCycElem& a, const PermCycElem& b) { return a.terms == b.terms; }
};

/// slot (x) t.
PermCycElem slot_tensor(const Label& slot, const CycPreLieElem& t);
/// Sum over slots of the components, in CycPreLie(I).
CycPreLieElem slot_sum(const PermCycElem& p);
/// t |-> sum_i i (x) t.
PermCycElem iota(const CycPreLieElem& t);
/// Mean-subtracted representative: p - (1/n) iota(slot_sum(p)).
PermCycElem reflex_project(const PermCycElem& p);
/// The section Reflex (x) CycPreLie -> Perm (x) CycPreLie on sum-zero
/// representatives. Throws std::invalid_argument if the slots do not sum to zero.
PermCycElem reflex_section(const PermCycElem& sum_zero);

/// a (x) t |-> a <| Gamma_a(t).
TreeVector psi(const PermCycElem& p);
/// a <| T |-> a (x) <a, T>. Throws std::invalid_argument on root-valence != 1.
PermCycElem psi_inv(const TreeVector& v, const LabelSet& labels);

}  // namespace prelie
