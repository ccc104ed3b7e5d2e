#pragma once

#include <compare>
#include <vector>

#include "prelie/lincomb.hpp"
#include "prelie/span.hpp"
#include "prelie/tree.hpp"

namespace prelie {

/// Element of PreLie(I): a Q-combination of rooted trees on I.
using TreeVector = LinComb<RootedTree>;

inline TreeVector tv(const RootedTree& t) { return TreeVector(t); }
inline TreeVector tv(const Label& l) { return TreeVector(RootedTree::singleton(l)); }
/// Label set of the first term; empty for the zero vector.
LabelSet labels_of(const TreeVector& v);

// ------------------------------------------------------ operad structure

/// S o_pos T: children of pos reattach to every vertex of T, the edge out of
/// pos (if any) leaves from root(T).
TreeVector compose_partial(const RootedTree& s, const Label& pos, const RootedTree& t);
TreeVector compose_partial(const TreeVector& s, const Label& pos, const TreeVector& t);

/// S <| T: root(T) grafted under every vertex of S.
TreeVector prelie_product(const RootedTree& s, const RootedTree& t);
TreeVector prelie_product(const TreeVector& s, const TreeVector& t);

/// [S, T] = S <| T - T <| S.
TreeVector bracket(const TreeVector& s, const TreeVector& t);

// ---------------------------------------------------------------- wedges

/// Basis element S ^ T of Lambda^2 PreLie, stored with min(I) in `left`.
struct Wedge {
  RootedTree left;
  RootedTree right;
  friend bool operator==(const Wedge&, const Wedge&) = default;
  friend std::strong_ordering operator<=>(const Wedge& a, const Wedge& b) {
    if (auto c = a.left <=> b.left; c != 0) return c;
    return a.right <=> b.right;
  }
};
using WedgeVector = LinComb<Wedge>;

/// Adds c * (s ^ t), flipping orientation (and sign) as needed.
void add_wedge(WedgeVector& w, const RootedTree& s, const RootedTree& t, const Rational& c);
WedgeVector wedge(const RootedTree& s, const RootedTree& t);
WedgeVector wedge(const TreeVector& s, const TreeVector& t);
LabelSet labels_of(const Wedge& w);

/// Basis element r ^ s ^ t of Lambda^3 PreLie, blocks sorted by minimal label.
struct Wedge3 {
  RootedTree a;
  RootedTree b;
  RootedTree c;
  friend bool operator==(const Wedge3&, const Wedge3&) = default;
  friend std::strong_ordering operator<=>(const Wedge3& x, const Wedge3& y) {
    if (auto o = x.a <=> y.a; o != 0) return o;
    if (auto o = x.b <=> y.b; o != 0) return o;
    return x.c <=> y.c;
  }
};
using Wedge3Vector = LinComb<Wedge3>;

void add_wedge3(Wedge3Vector& w, const RootedTree& r, const RootedTree& s, const RootedTree& t,
                const Rational& c);

/// Right PreLie-module action on Lambda^2: composes T into whichever block holds pos.
WedgeVector wedge_compose(const WedgeVector& w, const Label& pos, const TreeVector& t);

/// s ^ t  |->  s <| t - t <| s.
TreeVector delta2(const WedgeVector& w);
/// r ^ s ^ t  |->  [r,s] ^ t + [s,t] ^ r - [r,t] ^ s.
WedgeVector delta3(const Wedge3Vector& w);

/// r^(s<|t) + s^(t<|r) + t^(r<|s) - s^(r<|t) - t^(s<|r) - r^(t<|s).
WedgeVector six_term(const TreeVector& r, const TreeVector& s, const TreeVector& t);

/// All oriented basis wedges of Lambda^2 PreLie(I).
std::vector<Wedge> wedge_basis(const LabelSet& labels);
/// All normalized basis elements of Lambda^3 PreLie(I).
std::vector<Wedge3> wedge3_basis(const LabelSet& labels);

// ----------------------------------------------- root-valence-1 reduction

struct Rv1Reduction {
  TreeVector result;     // supported on root-valence-1 trees
  WedgeVector witness;   // t - result == delta2(witness)
};

/// Rewrites a tree with at least two vertices modulo brackets into a
/// combination of root-valence-1 trees, with an explicit certificate.
Rv1Reduction reduce_rv1(const RootedTree& t);

// ----------------------------------------------------------------- Indec

/// PreLie(I) modulo the image of delta2, with coordinates given by the
/// remainder on non-pivot trees of the image's echelon form.
class IndecSpace {
 public:
  explicit IndecSpace(const LabelSet& labels);

  const LabelSet& labels() const { return labels_; }
  std::size_t arity() const { return labels_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t image_rank() const { return image_.rank(); }
  std::size_t quotient_dim() const { return ambient_ - image_.rank(); }
  const Span<RootedTree>& image() const { return image_; }

  /// Canonical representative of the class of v; zero iff v is in image(delta2).
  TreeVector pi_coords(const TreeVector& v) const { return image_.reduce(v); }

 private:
  LabelSet labels_;
  std::size_t ambient_;
  Span<RootedTree> image_;
};

}  // namespace prelie
