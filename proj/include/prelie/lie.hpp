#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "prelie/lincomb.hpp"
#include "prelie/operad.hpp"
#include "prelie/tree.hpp"

namespace prelie {

/// Binary bracket expression, each label used once. Grammar:
///   W := Label | "[" W "," W "]"
struct LieWord {
  Label label;                    // leaves only
  std::vector<LieWord> children;  // empty, or exactly two

  static LieWord leaf(const Label& l) { return LieWord{l, {}}; }
  static LieWord bracket(LieWord a, LieWord b);
  bool is_leaf() const { return children.empty(); }
  LabelSet labels() const;
};

LieWord parse_lie_word(std::string_view text);
std::string format_lie_word(const LieWord& w);

/// Left-normed word [...[[l0, l1], l2]..., l_{n-1}] with l0 = min of its labels.
struct LeftNormed {
  std::vector<Label> letters;
  friend bool operator==(const LeftNormed&, const LeftNormed&) = default;
  friend auto operator<=>(const LeftNormed&, const LeftNormed&) = default;
};

/// Element of Lie(I) in the left-normed basis anchored at min(I).
using LieVector = LinComb<LeftNormed>;

LieWord to_word(const LeftNormed& w);
std::string format_left_normed(const LeftNormed& w);
/// The (n-1)! basis words of Lie(I).
std::vector<LeftNormed> lie_basis(const LabelSet& labels);

/// Rewrites a bracket word into the left-normed basis using antisymmetry and
/// [X, [Y, y]] = [[X, Y], y] - [[X, y], Y]. Throws LabelError on repeated labels.
LieVector lie_normal_form(const LieWord& w);
LieVector lie_bracket(const LieVector& a, const LieVector& b);
/// u o_i v in the Lie operad.
LieVector lie_compose(const LieVector& u, const Label& i, const LieVector& v);

/// The operad morphism Lie -> PreLie, [x, y] |-> x <| y - y <| x.
TreeVector phi(const LieWord& w);
TreeVector phi(const LieVector& v);

/// Element <i0, body> of CycLie(I), i0 = min(I), body in Lie(I \ {i0}).
struct CycLieElem {
  LabelSet labels;
  Label basepoint;
  LieVector body;
};

/// Normal form of the pairing <a, b> of two bracket words.
CycLieElem cyclie_pair(const LieWord& a, const LieWord& b);
/// The (n-2)! basis elements <i0, w> of CycLie(I).
std::vector<CycLieElem> cyclie_basis(const LabelSet& labels);
/// The unique l_i in Lie(I \ {i}) with <i, l_i> = e.
LieVector cyclie_rotate(const CycLieElem& e, const Label& i);

}  // namespace prelie
