#include "prelie/tree.hpp"

#include <omp.h>

#include <algorithm>
#include <cctype>
#include <functional>
#include <queue>

namespace prelie {

bool is_valid_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

LabelSet make_label_set(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw LabelError("duplicate label");
  for (const auto& l : labels)
    if (!is_valid_label(l)) throw LabelError("invalid label '" + l + "'");
  return labels;
}

LabelSet set_union(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw LabelError("label clash");
  return out;
}

LabelSet set_minus(const LabelSet& a, const Label& x) {
  LabelSet out;
  for (const auto& l : a)
    if (l != x) out.push_back(l);
  return out;
}

bool disjoint(const LabelSet& a, const LabelSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return true;
}

LabelSet standard_labels(std::size_t n) {
  if (n > 26) throw LabelError("standard label sets stop at 26");
  LabelSet out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

Label fresh_label(const LabelSet& used) {
  for (std::size_t k = 0;; ++k) {
    Label l = "_" + std::to_string(k);
    if (!std::binary_search(used.begin(), used.end(), l)) return l;
  }
}

RootedTree::RootedTree(LabelSet labels, std::vector<int> parent)
    : labels_(std::move(labels)), parent_(std::move(parent)), children_(labels_.size()) {
  const int n = static_cast<int>(labels_.size());
  for (int v = 0; v < n; ++v) {
    int p = parent_[static_cast<std::size_t>(v)];
    if (p < 0) {
      if (root_ >= 0) throw LabelError("tree has two roots");
      root_ = v;
    } else {
      children_[static_cast<std::size_t>(p)].push_back(v);
    }
  }
  if (root_ < 0) throw LabelError("tree has no root");
  // Every vertex must reach the root in fewer than n steps.
  for (int v = 0; v < n; ++v) {
    int u = v;
    for (int steps = 0; u != root_; ++steps) {
      if (steps >= n) throw LabelError("parent map has a cycle");
      u = parent_[static_cast<std::size_t>(u)];
    }
  }
  std::vector<std::string> ser(static_cast<std::size_t>(n));
  std::vector<std::size_t> sz(static_cast<std::size_t>(n), 1);
  std::function<void(int)> build = [&](int v) {
    auto& kids = children_[static_cast<std::size_t>(v)];
    for (int c : kids) {
      build(c);
      sz[static_cast<std::size_t>(v)] += sz[static_cast<std::size_t>(c)];
    }
    std::sort(kids.begin(), kids.end(), [&](int a, int b) {
      auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
      if (sz[ua] != sz[ub]) return sz[ua] < sz[ub];
      return ser[ua] < ser[ub];
    });
    auto& s = ser[static_cast<std::size_t>(v)];
    if (kids.empty()) {
      s = label(v);
      return;
    }
    s = "(" + label(v);
    for (int c : kids) {
      s += ' ';
      s += ser[static_cast<std::size_t>(c)];
    }
    s += ')';
  };
  build(root_);
  key_ = std::move(ser[static_cast<std::size_t>(root_)]);
}

RootedTree RootedTree::singleton(const Label& l) { return from_edges(l, {}); }

RootedTree RootedTree::from_edges(const Label& root, const std::vector<Edge>& edges) {
  std::vector<Label> all{root};
  for (const auto& e : edges) all.push_back(e.first);
  LabelSet labels = make_label_set(std::move(all));
  std::vector<int> parent(labels.size(), -2);
  auto idx = [&](const Label& l) {
    auto it = std::lower_bound(labels.begin(), labels.end(), l);
    if (it == labels.end() || *it != l) throw LabelError("edge endpoint '" + l + "' is not a vertex");
    return static_cast<int>(it - labels.begin());
  };
  parent[static_cast<std::size_t>(idx(root))] = -1;
  for (const auto& [child, par] : edges) parent[static_cast<std::size_t>(idx(child))] = idx(par);
  return RootedTree(std::move(labels), std::move(parent));
}

int RootedTree::index_of(const Label& l) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (it == labels_.end() || *it != l) return -1;
  return static_cast<int>(it - labels_.begin());
}

std::size_t RootedTree::subtree_size(int v) const {
  std::size_t s = 1;
  for (int c : children(v)) s += subtree_size(c);
  return s;
}

std::vector<RootedTree::Edge> RootedTree::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (std::size_t v = 0; v < size(); ++v)
    if (parent_[v] >= 0) out.emplace_back(labels_[v], labels_[static_cast<std::size_t>(parent_[v])]);
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view s) : s_(s) {}

  RootedTree parse() {
    skip_ws();
    if (pos_ == s_.size()) throw ParseError("empty tree expression");
    std::vector<RootedTree::Edge> edges;
    Label root = parse_node(edges);
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing input at offset " + std::to_string(pos_));
    try {
      return RootedTree::from_edges(root, edges);
    } catch (const LabelError& e) {
      throw ParseError(e.what());
    }
  }

 private:
  Label parse_node(std::vector<RootedTree::Edge>& edges) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      Label head = parse_label();
      int kids = 0;
      for (;;) {
        skip_ws();
        if (pos_ == s_.size()) throw ParseError("unbalanced parenthesis");
        if (s_[pos_] == ')') {
          ++pos_;
          break;
        }
        Label child = parse_node(edges);
        edges.emplace_back(child, head);
        ++kids;
      }
      if (kids == 0) throw ParseError("'(" + head + ")' needs at least one subtree");
      return head;
    }
    return parse_label();
  }

  Label parse_label() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) throw ParseError("expected a label at offset " + std::to_string(start));
    return Label(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RootedTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

// ------------------------------------------------------------ enumeration

namespace {

// Decodes the idx-th (Pruefer sequence, root) pair into a parent array.
std::vector<int> decode_rooted(std::size_t n, std::uint64_t idx) {
  std::vector<int> parent(n, -1);
  if (n == 1) return parent;
  const auto root = static_cast<int>(idx % n);
  idx /= n;
  std::vector<std::size_t> code(n - 2);
  for (auto& c : code) {
    c = idx % n;
    idx /= n;
  }
  std::vector<std::vector<int>> adj(n);
  std::vector<int> degree(n, 1);
  for (auto c : code) ++degree[c];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(static_cast<int>(v));
  for (auto c : code) {
    int leaf = leaves.top();
    leaves.pop();
    adj[static_cast<std::size_t>(leaf)].push_back(static_cast<int>(c));
    adj[c].push_back(leaf);
    if (--degree[c] == 1) leaves.push(static_cast<int>(c));
  }
  int u = leaves.top();
  leaves.pop();
  int v = leaves.top();
  adj[static_cast<std::size_t>(u)].push_back(v);
  adj[static_cast<std::size_t>(v)].push_back(u);
  // Orient every edge towards the root.
  std::vector<int> stack{root};
  std::vector<char> seen(n, 0);
  seen[static_cast<std::size_t>(root)] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[static_cast<std::size_t>(x)]) {
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      parent[static_cast<std::size_t>(y)] = x;
      stack.push_back(y);
    }
  }
  return parent;
}

std::uint64_t rooted_tree_count(std::size_t n) {
  std::uint64_t c = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) c *= n;
  return c;
}

RootedTree tree_from_parent(const LabelSet& labels, const std::vector<int>& parent) {
  std::vector<RootedTree::Edge> edges;
  Label root;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (parent[v] < 0)
      root = labels[v];
    else
      edges.emplace_back(labels[v], labels[static_cast<std::size_t>(parent[v])]);
  }
  return RootedTree::from_edges(root, edges);
}

}  // namespace

std::vector<std::vector<LabelSet>> ordered_splits(const LabelSet& labels, std::size_t k, bool allow_empty) {
  std::vector<std::vector<LabelSet>> out;
  if (k == 0) return out;
  const std::size_t n = labels.size();
  std::vector<std::size_t> block(n, 0);
  for (;;) {
    std::vector<LabelSet> parts(k);
    for (std::size_t i = 0; i < n; ++i) parts[block[i]].push_back(labels[i]);
    bool keep = allow_empty;
    if (!keep) {
      keep = true;
      for (const auto& p : parts) keep = keep && !p.empty();
    }
    if (keep) out.push_back(std::move(parts));
    std::size_t i = 0;
    while (i < n && ++block[i] == k) block[i++] = 0;
    if (i == n) break;
  }
  return out;
}

RootedTree random_tree(const LabelSet& labels, std::mt19937_64& rng) {
  if (labels.empty()) throw LabelError("cannot draw a tree on an empty label set");
  const std::size_t n = labels.size();
  std::uniform_int_distribution<std::uint64_t> dist(0, rooted_tree_count(n) - 1);
  return tree_from_parent(labels, decode_rooted(n, dist(rng)));
}

std::vector<RootedTree> enumerate_trees_serial(const LabelSet& labels) {
  if (labels.empty()) throw LabelError("cannot enumerate trees on an empty label set");
  const std::size_t n = labels.size();
  const std::uint64_t total = rooted_tree_count(n);
  std::vector<RootedTree> out;
  out.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(tree_from_parent(labels, decode_rooted(n, i)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RootedTree> enumerate_trees(const LabelSet& labels) {
  if (labels.empty()) throw LabelError("cannot enumerate trees on an empty label set");
  const std::size_t n = labels.size();
  const std::uint64_t total = rooted_tree_count(n);
  if (total < 1024) return enumerate_trees_serial(labels);
  std::vector<std::vector<RootedTree>> parts(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    auto& mine = parts[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i)
      mine.push_back(tree_from_parent(labels, decode_rooted(n, static_cast<std::uint64_t>(i))));
  }
  std::vector<RootedTree> out;
  out.reserve(total);
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end());
  return out;
}

// --------------------------------------------------------- manipulations

RootedTree bplus(const Label& root, const std::vector<RootedTree>& subtrees) {
  std::vector<RootedTree::Edge> edges;
  for (const auto& s : subtrees) {
    auto e = s.edges();
    edges.insert(edges.end(), e.begin(), e.end());
    edges.emplace_back(s.root_label(), root);
  }
  return RootedTree::from_edges(root, edges);
}

RootedTree graft(const RootedTree& s, const Label& v, const RootedTree& t) {
  if (!s.contains(v)) throw LabelError("graft: '" + v + "' is not a vertex");
  if (!disjoint(s.labels(), t.labels())) throw LabelError("graft: label clash");
  auto edges = s.edges();
  auto te = t.edges();
  edges.insert(edges.end(), te.begin(), te.end());
  edges.emplace_back(t.root_label(), v);
  return RootedTree::from_edges(s.root_label(), edges);
}

namespace {

void collect_subtree(const RootedTree& t, int v, std::vector<char>& mark) {
  mark[static_cast<std::size_t>(v)] = 1;
  for (int c : t.children(v)) collect_subtree(t, c, mark);
}

int require_vertex(const RootedTree& t, const Label& v) {
  int i = t.index_of(v);
  if (i < 0) throw LabelError("'" + v + "' is not a vertex of " + t.key());
  return i;
}

}  // namespace

RootedTree subtree(const RootedTree& t, const Label& v) {
  int i = require_vertex(t, v);
  std::vector<char> mark(t.size(), 0);
  collect_subtree(t, i, mark);
  std::vector<RootedTree::Edge> edges;
  for (std::size_t u = 0; u < t.size(); ++u)
    if (mark[u] && static_cast<int>(u) != i) edges.emplace_back(t.labels()[u], t.label(t.parent(static_cast<int>(u))));
  return RootedTree::from_edges(v, edges);
}

RootedTree remove_subtree(const RootedTree& t, const Label& v) {
  int i = require_vertex(t, v);
  if (i == t.root()) throw LabelError("remove_subtree: cannot remove the root");
  std::vector<char> mark(t.size(), 0);
  collect_subtree(t, i, mark);
  std::vector<RootedTree::Edge> edges;
  for (std::size_t u = 0; u < t.size(); ++u)
    if (!mark[u] && static_cast<int>(u) != t.root())
      edges.emplace_back(t.labels()[u], t.label(t.parent(static_cast<int>(u))));
  return RootedTree::from_edges(t.root_label(), edges);
}

RootedTree contract_subtree(const RootedTree& t, const Label& v, const Label& placeholder) {
  int i = require_vertex(t, v);
  if (i == t.root()) return RootedTree::singleton(placeholder);
  std::vector<char> mark(t.size(), 0);
  collect_subtree(t, i, mark);
  std::vector<RootedTree::Edge> edges;
  for (std::size_t u = 0; u < t.size(); ++u)
    if (!mark[u] && static_cast<int>(u) != t.root())
      edges.emplace_back(t.labels()[u], t.label(t.parent(static_cast<int>(u))));
  edges.emplace_back(placeholder, t.label(t.parent(i)));
  return RootedTree::from_edges(t.root_label(), edges);
}

RootedTree relabel(const RootedTree& t, const std::map<Label, Label>& m) {
  auto f = [&](const Label& l) -> const Label& {
    auto it = m.find(l);
    return it == m.end() ? l : it->second;
  };
  std::vector<RootedTree::Edge> edges;
  for (const auto& [c, p] : t.edges()) edges.emplace_back(f(c), f(p));
  return RootedTree::from_edges(f(t.root_label()), edges);
}

TopCorolla top_corolla(const RootedTree& t) {
  if (t.size() < 2) throw LabelError("top_corolla needs at least two vertices");
  int best = -1;
  std::size_t best_leaves = 0;
  for (int v = 0; v < static_cast<int>(t.size()); ++v) {
    const auto& kids = t.children(v);
    if (kids.empty()) continue;
    bool all_leaves = std::all_of(kids.begin(), kids.end(), [&](int c) { return t.children(c).empty(); });
    if (!all_leaves) continue;
    // Vertices are visited in label order, so strict < keeps the smallest label on ties.
    if (best < 0 || kids.size() < best_leaves) {
      best = v;
      best_leaves = kids.size();
    }
  }
  return {subtree(t, t.label(best)), t.label(best)};
}

}  // namespace prelie
