#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <random>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace prelie {

/// Vertex label: nonempty token over [A-Za-z0-9_], ordered lexicographically.
using Label = std::string;
using LabelSet = std::vector<Label>;  // sorted, unique

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LabelError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

bool is_valid_label(std::string_view s);
LabelSet make_label_set(std::vector<Label> labels);  // sorts; throws on duplicates
LabelSet set_union(const LabelSet& a, const LabelSet& b);
LabelSet set_minus(const LabelSet& a, const Label& x);
bool disjoint(const LabelSet& a, const LabelSet& b);
/// "a", "b", ... (n <= 26).
LabelSet standard_labels(std::size_t n);
/// A label not in `used` of the form "_k".
Label fresh_label(const LabelSet& used);

/// A rooted tree on a finite label set; a basis element of PreLie(I).
///
/// Immutable. Equality and order are those of the canonical serialization,
/// in which sibling subtrees are sorted by (size, serialization).
class RootedTree {
 public:
  using Edge = std::pair<Label, Label>;  // (child, parent)

  static RootedTree singleton(const Label& l);
  /// Throws LabelError unless the edges form a tree on their labels plus root.
  static RootedTree from_edges(const Label& root, const std::vector<Edge>& edges);

  std::size_t size() const { return labels_.size(); }
  const LabelSet& labels() const { return labels_; }
  const Label& min_label() const { return labels_.front(); }
  const Label& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  int index_of(const Label& l) const;  // -1 if absent
  bool contains(const Label& l) const { return index_of(l) >= 0; }

  int root() const { return root_; }
  const Label& root_label() const { return label(root_); }
  int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
  /// Children in canonical order.
  const std::vector<int>& children(int v) const { return children_[static_cast<std::size_t>(v)]; }
  int root_valence() const { return static_cast<int>(children(root_).size()); }
  std::size_t subtree_size(int v) const;

  std::vector<Edge> edges() const;
  const std::string& key() const { return key_; }

  friend bool operator==(const RootedTree& a, const RootedTree& b) { return a.key_ == b.key_; }
  friend std::strong_ordering operator<=>(const RootedTree& a, const RootedTree& b) {
    return a.key_ <=> b.key_;
  }

 private:
  RootedTree(LabelSet labels, std::vector<int> parent);

  LabelSet labels_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  int root_ = -1;
  std::string key_;
};

/// Grammar: Tree := Label | "(" Label Tree+ ")". Throws ParseError.
RootedTree parse_tree(std::string_view text);
inline const std::string& format_tree(const RootedTree& t) { return t.key(); }

/// All rooted trees on `labels` (n^(n-1) of them), sorted canonically.
std::vector<RootedTree> enumerate_trees(const LabelSet& labels);
/// Serial reference for enumerate_trees.
std::vector<RootedTree> enumerate_trees_serial(const LabelSet& labels);

/// Ordered splits of `labels` into k blocks (nonempty unless allow_empty).
std::vector<std::vector<LabelSet>> ordered_splits(const LabelSet& labels, std::size_t k, bool allow_empty = false);

/// Uniformly random rooted tree on `labels`.
RootedTree random_tree(const LabelSet& labels, std::mt19937_64& rng);

/// Grafts the subtrees onto a new root.
RootedTree bplus(const Label& root, const std::vector<RootedTree>& subtrees);
/// S with an edge from root(T) to vertex v of S.
RootedTree graft(const RootedTree& s, const Label& v, const RootedTree& t);
RootedTree subtree(const RootedTree& t, const Label& v);
/// t without the subtree hanging at v (v != root).
RootedTree remove_subtree(const RootedTree& t, const Label& v);
/// t with the subtree at v replaced by a leaf labelled `placeholder`.
RootedTree contract_subtree(const RootedTree& t, const Label& v, const Label& placeholder);
RootedTree relabel(const RootedTree& t, const std::map<Label, Label>& m);

struct TopCorolla {
  RootedTree corolla;  // b with its leaf children
  Label vertex;        // b
};

/// A vertex b with at least one child, all of them leaves, chosen with the
/// fewest leaves (ties: smallest label). Requires t.size() >= 2.
TopCorolla top_corolla(const RootedTree& t);

}  // namespace prelie
