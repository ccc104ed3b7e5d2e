#include "prelie/operad.hpp"

#include <algorithm>

namespace prelie {

LabelSet labels_of(const TreeVector& v) {
  if (v.is_zero()) return {};
  return v.begin()->first.labels();
}

LabelSet labels_of(const Wedge& w) { return set_union(w.left.labels(), w.right.labels()); }

TreeVector compose_partial(const RootedTree& s, const Label& pos, const RootedTree& t) {
  if (!s.contains(pos)) throw LabelError("compose: '" + pos + "' is not a vertex of " + s.key());
  for (const auto& l : t.labels())
    if (l != pos && s.contains(l)) throw LabelError("compose: label clash on '" + l + "'");
  std::vector<RootedTree::Edge> base;
  std::vector<Label> kids;
  for (const auto& [c, par] : s.edges()) {
    if (c == pos)
      base.emplace_back(t.root_label(), par);
    else if (par == pos)
      kids.push_back(c);
    else
      base.emplace_back(c, par);
  }
  auto te = t.edges();
  base.insert(base.end(), te.begin(), te.end());
  const Label root = (pos == s.root_label()) ? t.root_label() : s.root_label();

  TreeVector out;
  const auto& targets = t.labels();
  std::vector<std::size_t> choice(kids.size(), 0);
  for (;;) {
    auto edges = base;
    for (std::size_t j = 0; j < kids.size(); ++j) edges.emplace_back(kids[j], targets[choice[j]]);
    out.add(RootedTree::from_edges(root, edges), 1);
    std::size_t j = 0;
    while (j < choice.size() && ++choice[j] == targets.size()) choice[j++] = 0;
    if (j == choice.size()) break;
  }
  return out;
}

TreeVector compose_partial(const TreeVector& s, const Label& pos, const TreeVector& t) {
  TreeVector out;
  for (const auto& [a, ca] : s)
    for (const auto& [b, cb] : t) out.axpy(ca * cb, compose_partial(a, pos, b));
  return out;
}

TreeVector prelie_product(const RootedTree& s, const RootedTree& t) {
  if (!disjoint(s.labels(), t.labels())) throw LabelError("product: label clash");
  TreeVector out;
  for (const auto& v : s.labels()) out.add(graft(s, v, t), 1);
  return out;
}

TreeVector prelie_product(const TreeVector& s, const TreeVector& t) {
  TreeVector out;
  for (const auto& [a, ca] : s)
    for (const auto& [b, cb] : t) out.axpy(ca * cb, prelie_product(a, b));
  return out;
}

TreeVector bracket(const TreeVector& s, const TreeVector& t) {
  return prelie_product(s, t) - prelie_product(t, s);
}

void add_wedge(WedgeVector& w, const RootedTree& s, const RootedTree& t, const Rational& c) {
  if (!disjoint(s.labels(), t.labels())) throw LabelError("wedge: blocks share a label");
  if (s.min_label() < t.min_label())
    w.add(Wedge{s, t}, c);
  else
    w.add(Wedge{t, s}, -c);
}

WedgeVector wedge(const RootedTree& s, const RootedTree& t) {
  WedgeVector w;
  add_wedge(w, s, t, 1);
  return w;
}

WedgeVector wedge(const TreeVector& s, const TreeVector& t) {
  WedgeVector w;
  for (const auto& [a, ca] : s)
    for (const auto& [b, cb] : t) add_wedge(w, a, b, ca * cb);
  return w;
}

void add_wedge3(Wedge3Vector& w, const RootedTree& r, const RootedTree& s, const RootedTree& t,
                const Rational& c) {
  const RootedTree* blocks[3] = {&r, &s, &t};
  if (!disjoint(r.labels(), s.labels()) || !disjoint(r.labels(), t.labels()) ||
      !disjoint(s.labels(), t.labels()))
    throw LabelError("wedge3: blocks share a label");
  int sign = 1;
  auto less = [](const RootedTree* x, const RootedTree* y) { return x->min_label() < y->min_label(); };
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 0; i + 1 < 3; ++i)
      if (less(blocks[i + 1], blocks[i])) {
        std::swap(blocks[i], blocks[i + 1]);
        sign = -sign;
      }
  w.add(Wedge3{*blocks[0], *blocks[1], *blocks[2]}, sign * c);
}

WedgeVector wedge_compose(const WedgeVector& w, const Label& pos, const TreeVector& t) {
  WedgeVector out;
  for (const auto& [wd, c] : w) {
    bool in_left = wd.left.contains(pos);
    bool in_right = wd.right.contains(pos);
    if (in_left == in_right)
      throw LabelError("wedge_compose: '" + pos + "' must occur in exactly one block");
    const RootedTree& host = in_left ? wd.left : wd.right;
    const RootedTree& other = in_left ? wd.right : wd.left;
    for (const auto& [tree, d] : t) {
      TreeVector composed = compose_partial(host, pos, tree);
      for (const auto& [u, e] : composed) {
        if (in_left)
          add_wedge(out, u, other, c * d * e);
        else
          add_wedge(out, other, u, c * d * e);
      }
    }
  }
  return out;
}

TreeVector delta2(const WedgeVector& w) {
  TreeVector out;
  for (const auto& [wd, c] : w) {
    out.axpy(c, prelie_product(wd.left, wd.right));
    out.axpy(-c, prelie_product(wd.right, wd.left));
  }
  return out;
}

WedgeVector delta3(const Wedge3Vector& w) {
  WedgeVector out;
  for (const auto& [wd, c] : w) {
    TreeVector r = tv(wd.a), s = tv(wd.b), t = tv(wd.c);
    out.axpy(c, wedge(bracket(r, s), t));
    out.axpy(c, wedge(bracket(s, t), r));
    out.axpy(-c, wedge(bracket(r, t), s));
  }
  return out;
}

WedgeVector six_term(const TreeVector& r, const TreeVector& s, const TreeVector& t) {
  WedgeVector out;
  out += wedge(r, prelie_product(s, t));
  out += wedge(s, prelie_product(t, r));
  out += wedge(t, prelie_product(r, s));
  out -= wedge(s, prelie_product(r, t));
  out -= wedge(t, prelie_product(s, r));
  out -= wedge(r, prelie_product(t, s));
  return out;
}

std::vector<Wedge> wedge_basis(const LabelSet& labels) {
  std::vector<Wedge> out;
  const std::size_t n = labels.size();
  if (n < 2) return out;
  // Block J always holds labels[0]; bit i of mask puts labels[i+1] into J.
  for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << (n - 1)); ++mask) {
    LabelSet j{labels[0]}, k;
    for (std::size_t i = 1; i < n; ++i)
      ((mask >> (i - 1)) & 1 ? j : k).push_back(labels[i]);
    auto tj = enumerate_trees(j);
    auto tk = enumerate_trees(k);
    for (const auto& a : tj)
      for (const auto& b : tk) out.push_back(Wedge{a, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Wedge3> wedge3_basis(const LabelSet& labels) {
  std::vector<Wedge3> out;
  const std::size_t n = labels.size();
  if (n < 3) return out;
  std::vector<int> block(n, 0);
  for (;;) {
    // Restricted growth strings give each unordered 3-partition once, blocks
    // ordered by their minimal labels.
    bool ok = true;
    int maxb = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (block[i] > maxb + 1) {
        ok = false;
        break;
      }
      maxb = std::max(maxb, block[i]);
    }
    if (ok && maxb == 2) {
      LabelSet parts[3];
      for (std::size_t i = 0; i < n; ++i) parts[block[i]].push_back(labels[i]);
      auto ta = enumerate_trees(parts[0]);
      auto tb = enumerate_trees(parts[1]);
      auto tc = enumerate_trees(parts[2]);
      for (const auto& a : ta)
        for (const auto& b : tb)
          for (const auto& c : tc) out.push_back(Wedge3{a, b, c});
    }
    std::size_t i = 0;
    while (i < n && ++block[i] == 3) block[i++] = 0;
    if (i == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace prelie
