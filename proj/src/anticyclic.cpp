#include "prelie/anticyclic.hpp"

#include <algorithm>

#include "prelie/kernels.hpp"

namespace prelie {

namespace {

const char kStdNames[] = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

// Order-preserving renaming of `labels` onto single-character names.
struct Standardizer {
  std::map<Label, Label> to_std, from_std;
  explicit Standardizer(const LabelSet& labels) {
    if (labels.size() >= sizeof(kStdNames)) throw LabelError("too many labels to standardize");
    for (std::size_t i = 0; i < labels.size(); ++i) {
      Label s(1, kStdNames[i]);
      to_std.emplace(labels[i], s);
      from_std.emplace(s, labels[i]);
    }
  }
  TreeVector back(const TreeVector& v) const {
    TreeVector out;
    for (const auto& [t, c] : v) out.add(relabel(t, from_std), c);
    return out;
  }
};

std::vector<int> non_root_internal_vertices(const RootedTree& t) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(t.size()); ++v)
    if (v != t.root() && !t.children(v).empty()) out.push_back(v);
  return out;
}

int child_towards(const RootedTree& t, int v) {
  while (t.parent(v) != t.root()) v = t.parent(v);
  return v;
}

}  // namespace

GammaEngine::GammaEngine(Strategy strategy, std::uint64_t seed) : strategy_(strategy), rng_(seed) {}

std::size_t GammaEngine::cache_size() const {
  std::shared_lock lock(cache_mu_);
  return cache_.size();
}

std::size_t GammaEngine::pick(std::size_t n) {
  std::lock_guard lock(rng_mu_);
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

TreeVector GammaEngine::gamma(const Label& b, const RootedTree& s, const RootedTree& t) {
  LabelSet all = set_union(s.labels(), t.labels());
  if (!std::binary_search(all.begin(), all.end(), b))
    throw LabelError("gamma: '" + b + "' is not a label of the wedge");
  Standardizer st(all);
  const Label& sb = st.to_std.at(b);
  RootedTree ss = relabel(s, st.to_std);
  RootedTree stt = relabel(t, st.to_std);
  std::string key = sb + "|" + ss.key() + "|" + stt.key();
  {
    std::shared_lock lock(cache_mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return st.back(it->second);
  }
  TreeVector r = compute(sb, ss, stt);
  {
    std::unique_lock lock(cache_mu_);
    cache_.emplace(key, r);
  }
  return st.back(r);
}

TreeVector GammaEngine::gamma(const Label& b, const WedgeVector& w) {
  TreeVector out;
  for (const auto& [wd, c] : w) out.axpy(c, gamma(b, wd.left, wd.right));
  return out;
}

TreeVector GammaEngine::compute(const Label& b, const RootedTree& s, const RootedTree& t) {
  if (t.contains(b)) return -gamma(b, t, s);
  if (s.size() == 1) return tv(t);
  if (strategy_ == Strategy::rewrite) return by_rewrite(b, s, t);
  return by_lemmas(b, s, t);
}

// b lies in s and |s| >= 2.
TreeVector GammaEngine::by_lemmas(const Label& b, const RootedTree& s, const RootedTree& t) {
  auto t_split = non_root_internal_vertices(t);
  auto s_split = non_root_internal_vertices(s);
  if (t_split.empty() && s_split.empty()) return by_rewrite(b, s, t);

  bool split_t;
  Label vertex;
  if (strategy_ == Strategy::randomized) {
    std::size_t k = pick(t_split.size() + s_split.size());
    split_t = k < t_split.size();
    vertex = split_t ? t.label(t_split[k]) : s.label(s_split[k - t_split.size()]);
  } else {
    split_t = !t_split.empty();
    vertex = top_corolla(split_t ? t : s).vertex;
  }

  const LabelSet all = set_union(s.labels(), t.labels());
  const Label p = fresh_label(all);
  if (split_t) {
    // t = t' o_p c with b outside c:  Gamma_b(s ^ t) = Gamma_b(s ^ t') o_p c.
    RootedTree c = subtree(t, vertex);
    RootedTree rest = contract_subtree(t, vertex, p);
    return compose_partial(gamma(b, s, rest), p, tv(c));
  }
  RootedTree c = subtree(s, vertex);
  RootedTree rest = contract_subtree(s, vertex, p);
  if (c.contains(b)) {
    // Gamma_b(s ^ t) = -Gamma_b(t ^ (rest o_p c)) = Gamma_b(# ^ c) o_# Gamma_p(t ^ rest).
    const Label hash = fresh_label(set_union(all, {p}));
    TreeVector outer = gamma(b, RootedTree::singleton(hash), c);
    return compose_partial(outer, hash, gamma(p, t, rest));
  }
  // Gamma_b(s ^ t) = -Gamma_b(t ^ rest) o_p c.
  return -compose_partial(gamma(b, t, rest), p, tv(c));
}

// One rewriting step peeling a root subtree of s, using
//   <x, y <| z> = -<z, y <| x>   and   <x, y <| z> = <y, x <| z - z <| x>.
TreeVector GammaEngine::by_rewrite(const Label& b, const RootedTree& s, const RootedTree& t) {
  const int root = s.root();
  const bool b_is_root = s.root_label() == b;
  const int peeled = b_is_root ? s.children(root).back() : child_towards(s, s.index_of(b));
  const RootedTree sk = subtree(s, s.label(peeled));
  const RootedTree rest = remove_subtree(s, s.label(peeled));
  // s = rest <| sk - sum_{v != root} graft(rest, v, sk)
  TreeVector out;
  if (b_is_root) {
    // <rest <| sk, t> = -<rest, t <| sk - sk <| t>
    out -= gamma(b, wedge(tv(rest), prelie_product(tv(t), tv(sk)) - prelie_product(tv(sk), tv(t))));
  } else {
    // <rest <| sk, t> = <sk, rest <| t>
    out += gamma(b, wedge(tv(sk), prelie_product(rest, t)));
  }
  for (const auto& v : rest.labels()) {
    if (v == s.root_label()) continue;
    out -= gamma(b, graft(rest, v, sk), t);
  }
  return out;
}

GammaEngine& default_gamma() {
  static GammaEngine engine;
  return engine;
}

TreeVector gamma(const Label& b, const WedgeVector& w) { return default_gamma().gamma(b, w); }

TreeVector gamma(const Label& b, const CycPreLieElem& x) {
  if (b == x.basepoint) return x.body;
  return default_gamma().gamma(b, as_wedge(x));
}

CycPreLieElem cyc_normal(const WedgeVector& w, const LabelSet& labels) {
  if (labels.empty()) throw LabelError("cyc_normal needs a label set");
  return CycPreLieElem{labels, labels.front(), gamma(labels.front(), w)};
}

CycPreLieElem cyc_normal(const WedgeVector& w) {
  if (w.is_zero()) throw LabelError("cyc_normal of zero needs an explicit label set");
  return cyc_normal(w, labels_of(w.begin()->first));
}

WedgeVector as_wedge(const CycPreLieElem& x) { return wedge(tv(x.basepoint), x.body); }

std::vector<CycPreLieElem> cycprelie_basis(const LabelSet& labels) {
  if (labels.size() < 2) throw LabelError("CycPreLie(I) needs |I| >= 2");
  std::vector<CycPreLieElem> out;
  for (auto& t : enumerate_trees(set_minus(labels, labels.front())))
    out.push_back(CycPreLieElem{labels, labels.front(), tv(t)});
  return out;
}

WedgeVector kp_relation_antisym(const RootedTree& x, const RootedTree& y, const RootedTree& z) {
  return wedge(tv(x), prelie_product(y, z)) + wedge(tv(z), prelie_product(y, x));
}

WedgeVector kp_relation_swap(const RootedTree& x, const RootedTree& y, const RootedTree& z) {
  return wedge(tv(x), prelie_product(y, z)) - wedge(tv(y), prelie_product(x, z)) +
         wedge(tv(y), prelie_product(z, x));
}

Span<Wedge> kp_oracle(const LabelSet& labels) {
  const std::size_t n = labels.size();
  if (n < 2) throw LabelError("kp_oracle needs |I| >= 2");
  Span<Wedge> span;
  if (n < 3) return span;
  // Generators on three fresh placeholders, then trees composed into each.
  const Label px = fresh_label(labels);
  const Label py = fresh_label(set_union(labels, {px}));
  const Label pz = fresh_label(set_union(labels, make_label_set({px, py})));
  const auto x = RootedTree::singleton(px), y = RootedTree::singleton(py), z = RootedTree::singleton(pz);
  const WedgeVector generators[2] = {kp_relation_antisym(x, y, z), kp_relation_swap(x, y, z)};

  struct Triple {
    RootedTree a, b, c;
  };
  std::vector<Triple> triples;
  for (const auto& parts : ordered_splits(labels, 3)) {
    auto ta = enumerate_trees(parts[0]);
    auto tb = enumerate_trees(parts[1]);
    auto tc = enumerate_trees(parts[2]);
    for (const auto& a : ta)
      for (const auto& b : tb)
        for (const auto& c : tc) triples.push_back(Triple{a, b, c});
  }
  auto rels = map_kernel(triples, [&](const Triple& tr) {
    std::vector<WedgeVector> out;
    for (const auto& g : generators) {
      WedgeVector w = wedge_compose(g, px, tv(tr.a));
      w = wedge_compose(w, py, tv(tr.b));
      out.push_back(wedge_compose(w, pz, tv(tr.c)));
    }
    return out;
  });
  for (const auto& rs : rels)
    for (const auto& r : rs) span.insert(r);
  return span;
}

// --------------------------------------------------------- Perm (x) CycPreLie

CycPreLieElem PermCycElem::component(const Label& slot) const {
  CycPreLieElem out{labels, labels.empty() ? Label{} : labels.front(), {}};
  for (const auto& [k, c] : terms)
    if (k.slot == slot) out.body.add(k.body, c);
  return out;
}

PermCycElem& PermCycElem::operator+=(const PermCycElem& o) {
  if (labels.empty()) labels = o.labels;
  terms += o.terms;
  return *this;
}

PermCycElem& PermCycElem::operator-=(const PermCycElem& o) {
  if (labels.empty()) labels = o.labels;
  terms -= o.terms;
  return *this;
}

PermCycElem& PermCycElem::operator*=(const Rational& a) {
  terms *= a;
  return *this;
}

PermCycElem slot_tensor(const Label& slot, const CycPreLieElem& t) {
  if (!std::binary_search(t.labels.begin(), t.labels.end(), slot))
    throw LabelError("slot '" + slot + "' is not a label");
  PermCycElem out{t.labels, {}};
  for (const auto& [tree, c] : t.body) out.terms.add(SlotKey{slot, tree}, c);
  return out;
}

CycPreLieElem slot_sum(const PermCycElem& p) {
  CycPreLieElem out{p.labels, p.labels.empty() ? Label{} : p.labels.front(), {}};
  for (const auto& [k, c] : p.terms) out.body.add(k.body, c);
  return out;
}

PermCycElem iota(const CycPreLieElem& t) {
  PermCycElem out{t.labels, {}};
  for (const auto& i : t.labels) out += slot_tensor(i, t);
  return out;
}

PermCycElem reflex_project(const PermCycElem& p) {
  PermCycElem mean = iota(slot_sum(p));
  mean *= Rational(1, static_cast<long>(p.labels.size()));
  return p - mean;
}

PermCycElem reflex_section(const PermCycElem& sum_zero) {
  if (!slot_sum(sum_zero).body.is_zero())
    throw std::invalid_argument("reflex_section: components do not sum to zero");
  return sum_zero;
}

TreeVector psi(const PermCycElem& p) {
  TreeVector out;
  const Label& i0 = p.labels.front();
  for (const auto& [k, c] : p.terms) {
    TreeVector g = k.slot == i0 ? tv(k.body) : default_gamma().gamma(k.slot, RootedTree::singleton(i0), k.body);
    out.axpy(c, prelie_product(tv(k.slot), g));
  }
  return out;
}

PermCycElem psi_inv(const TreeVector& v, const LabelSet& labels) {
  PermCycElem out{labels, {}};
  for (const auto& [t, c] : v) {
    if (t.root_valence() != 1)
      throw std::invalid_argument("psi_inv: " + t.key() + " does not have root-valence 1");
    const Label& a = t.root_label();
    RootedTree below = subtree(t, t.label(t.children(t.root()).front()));
    PermCycElem piece = slot_tensor(a, cyc_normal(wedge(RootedTree::singleton(a), below), labels));
    piece *= c;
    out += piece;
  }
  return out;
}

}  // namespace prelie
