#include <algorithm>

#include "prelie/operad.hpp"

namespace prelie {

namespace {

int last_leaf_child(const RootedTree& t, int v) {
  int leaf = -1;
  for (int c : t.children(v))
    if (t.children(c).empty()) leaf = c;
  return leaf;
}

// Root has valence k >= 2 and at most one non-leaf subtree. With T' = T
// minus a leaf a_k of the root:
//   T = [T', a_k] + a_k <| T' - sum_{v != root} graft(T', v, a_k)
// and every tree in the last sum has root-valence k - 1.
Rv1Reduction remove_root_leaf(const RootedTree& t) {
  const Label ak = t.label(last_leaf_child(t, t.root()));
  const RootedTree rest = remove_subtree(t, ak);
  const RootedTree a = RootedTree::singleton(ak);
  Rv1Reduction out{prelie_product(a, rest), wedge(rest, a)};
  for (const auto& v : rest.labels()) {
    if (v == rest.root_label()) continue;
    Rv1Reduction sub = reduce_rv1(graft(rest, v, a));
    out.result -= sub.result;
    out.witness -= sub.witness;
  }
  return out;
}

// T = T' o_* C_b for a top corolla C_b below the root. Reduce T', compose
// the corolla back in, and reduce whatever lands at root-valence > 1.
Rv1Reduction through_top_corolla(const RootedTree& t) {
  const TopCorolla tc = top_corolla(t);
  const Label star = fresh_label(t.labels());
  const RootedTree outer = contract_subtree(t, tc.vertex, star);
  const Rv1Reduction inner = reduce_rv1(outer);
  Rv1Reduction out;
  out.witness = wedge_compose(inner.witness, star, tv(tc.corolla));
  for (const auto& [ta, c] : inner.result) {
    for (const auto& [x, d] : compose_partial(ta, star, tc.corolla)) {
      if (x.root_valence() == 1) {
        out.result.add(x, c * d);
      } else {
        Rv1Reduction sub = reduce_rv1(x);
        out.result.axpy(c * d, sub.result);
        out.witness.axpy(c * d, sub.witness);
      }
    }
  }
  return out;
}

}  // namespace

Rv1Reduction reduce_rv1(const RootedTree& t) {
  if (t.size() < 2) throw LabelError("reduce_rv1 needs at least two vertices");
  if (t.root_valence() == 1) return {tv(t), {}};
  const auto& kids = t.children(t.root());
  auto nonleaf = std::count_if(kids.begin(), kids.end(), [&](int c) { return !t.children(c).empty(); });
  if (nonleaf <= 1) return remove_root_leaf(t);
  return through_top_corolla(t);
}

}  // namespace prelie
