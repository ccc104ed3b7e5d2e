#include "prelie/rho.hpp"

#include <mutex>

#include "prelie/kernels.hpp"

namespace prelie {

namespace {

const char kStdNames[] = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

WedgeVector relabel_wedges(const WedgeVector& w, const std::map<Label, Label>& m) {
  WedgeVector out;
  for (const auto& [wd, c] : w) add_wedge(out, relabel(wd.left, m), relabel(wd.right, m), c);
  return out;
}

}  // namespace

std::size_t RhoEngine::cache_size() const {
  std::shared_lock lock(mu_);
  return cache_.size();
}

WedgeVector RhoEngine::rho_pair(const RootedTree& s, const RootedTree& t) {
  LabelSet all = set_union(s.labels(), t.labels());
  if (all.size() >= sizeof(kStdNames)) throw LabelError("too many labels");
  std::map<Label, Label> to_std, from_std;
  for (std::size_t i = 0; i < all.size(); ++i) {
    to_std.emplace(all[i], Label(1, kStdNames[i]));
    from_std.emplace(Label(1, kStdNames[i]), all[i]);
  }
  RootedTree ss = relabel(s, to_std), st = relabel(t, to_std);
  std::string key = ss.key() + "^" + st.key();
  {
    std::shared_lock lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return relabel_wedges(it->second, from_std);
  }
  WedgeVector r = compute(ss, st);
  {
    std::unique_lock lock(mu_);
    cache_.emplace(key, r);
  }
  return relabel_wedges(r, from_std);
}

WedgeVector RhoEngine::rho(const WedgeVector& w) {
  WedgeVector out;
  for (const auto& [wd, c] : w) out.axpy(c, rho_pair(wd.left, wd.right));
  return out;
}

WedgeVector RhoEngine::rho(const CycPreLieElem& x) {
  WedgeVector out;
  const auto a = RootedTree::singleton(x.basepoint);
  for (const auto& [t, c] : x.body) out.axpy(c, rho_pair(a, t));
  return out;
}

WedgeVector RhoEngine::compute(const RootedTree& s, const RootedTree& t) {
  if (s.size() == 1) return rho_singleton(s.root_label(), t);
  if (t.size() == 1) return -rho_pair(t, s);

  // Both blocks have >= 2 vertices: s ^ t = (s ^ *) o_* t, and
  // rho(s ^ t) = rho(s ^ *) o_* t + rho(# ^ t) o_# s - s ^ t.
  const LabelSet all = set_union(s.labels(), t.labels());
  const Label star = fresh_label(all);
  const Label hash = fresh_label(set_union(all, {star}));
  WedgeVector out = wedge_compose(rho_pair(s, RootedTree::singleton(star)), star, tv(t));
  out += wedge_compose(rho_pair(RootedTree::singleton(hash), t), hash, tv(s));
  out -= wedge(s, t);
  return out;
}

WedgeVector RhoEngine::rho_singleton(const Label& a, const RootedTree& t) {
  const auto sa = RootedTree::singleton(a);
  if (t.size() == 1) return wedge(sa, t);
  const Label& b = t.root_label();
  if (t.size() == 2) {
    // rho(a ^ (b c)) = a ^ (b c) - c ^ (b a)
    const Label& c = t.label(t.children(t.root()).front());
    WedgeVector out = wedge(sa, t);
    add_wedge(out, RootedTree::singleton(c), bplus(b, {sa}), -1);
    return out;
  }

  const LabelSet all = set_union(t.labels(), {a});
  const Label star = fresh_label(all);
  const Label hash = fresh_label(set_union(all, {star}));
  const auto sstar = RootedTree::singleton(star);
  const auto shash = RootedTree::singleton(hash);

  if (t.root_valence() == 1) {
    // t = b <| T'', written as (b *) o_* T''.
    const RootedTree below = subtree(t, t.label(t.children(t.root()).front()));
    const RootedTree b_star = bplus(b, {sstar});
    const TreeVector g = gamma(star, wedge(sa, b_star));
    WedgeVector out = wedge_compose(rho_pair(sa, b_star), star, tv(below));
    out -= wedge_compose(rho_pair(shash, below), hash, g);
    out += wedge(g, tv(below));
    return out;
  }

  // t = B+_b(T1, ..., Tk), k >= 2. With T'' = B+_*(others):
  // t = T'' o_* (b <| T1) - sum_alpha T_alpha.
  const auto& kids = t.children(t.root());
  const int split = choice_ == SplitChild::first_child ? kids.front() : kids.back();
  const RootedTree t1 = subtree(t, t.label(split));
  const RootedTree rest = relabel(remove_subtree(t, t.label(split)), {{b, star}});
  const RootedTree b_t1 = bplus(b, {t1});
  const TreeVector others = compose_partial(tv(rest), star, tv(b_t1)) - tv(t);

  const TreeVector g = gamma(star, wedge(sa, rest));
  WedgeVector out = wedge_compose(rho_pair(sa, rest), star, tv(b_t1));
  out -= wedge_compose(rho_pair(shash, b_t1), hash, g);
  out += wedge(g, tv(b_t1));
  for (const auto& [ta, c] : others) out.axpy(-c, rho_pair(sa, ta));
  return out;
}

RhoEngine& default_rho() {
  static RhoEngine engine;
  return engine;
}

WedgeVector rho(const CycPreLieElem& x) { return default_rho().rho(x); }

TreeVector verify_carre(const CycPreLieElem& x, RhoEngine& engine) {
  TreeVector out = delta2(engine.rho(x));
  for (const auto& i : x.labels) out -= prelie_product(tv(i), gamma(i, x));
  return out;
}

TreeVector verify_rho_n(const CycPreLieElem& x, RhoEngine& engine) {
  const auto n = static_cast<long>(x.labels.size());
  CycPreLieElem back = cyc_normal(engine.rho(x), x.labels);
  return back.body - Rational(n - 1) * x.body;
}

MuMap mu_map(const LabelSet& labels) {
  MuMap m;
  m.labels = labels;
  IndecSpace indec(labels);
  const Label& i0 = labels.front();
  for (const auto& t : cycprelie_basis(labels))
    for (const auto& i : labels) {
      if (i == i0) continue;
      m.domain.push_back(slot_tensor(i, t) - slot_tensor(i0, t));
    }
  m.images = map_kernel(m.domain, [&](const PermCycElem& p) { return indec.pi_coords(psi(p)); });
  Span<RootedTree> span;
  for (const auto& v : m.images) span.insert(v);
  m.rank = span.rank();
  return m;
}

IsoReport verify_iso_ses(const LabelSet& labels) {
  IsoReport r;
  r.arity = labels.size();
  const auto basis = cycprelie_basis(labels);
  r.dim_cycprelie = basis.size();

  // Left square: delta2 o rho = psi o iota, landing in PreLie_{v=1}.
  struct Left {
    TreeVector image;
    bool v1 = true;
    bool commutes = true;
  };
  auto left = map_kernel(basis, [](const CycPreLieElem& x) {
    Left l;
    l.image = delta2(rho(x));
    for (const auto& [t, c] : l.image)
      if (t.root_valence() != 1) l.v1 = false;
    l.commutes = l.image == psi(iota(x));
    return l;
  });
  Span<RootedTree> rho_span;
  for (const auto& l : left) {
    rho_span.insert(l.image);
    if (!l.v1) ++r.rho_not_v1;
    if (!l.commutes) ++r.left_failures;
  }
  r.rank_rho = rho_span.rank();

  // Rela_{v=1} = {w in Lambda^2 : delta2(w) in PreLie_{v=1}} / im delta3.
  IndecSpace indec(labels);
  r.dim_indec = indec.quotient_dim();
  const auto wedges = wedge_basis(labels);
  auto off_v1 = map_kernel(wedges, [](const Wedge& w) {
    TreeVector d = delta2(WedgeVector(w)), keep;
    for (const auto& [t, c] : d)
      if (t.root_valence() != 1) keep.add(t, c);
    return keep;
  });
  Span<RootedTree> off_span;
  for (const auto& v : off_v1) off_span.insert(v);
  auto d3 = map_kernel(wedge3_basis(labels), [](const Wedge3& w) { return delta3(Wedge3Vector(w)); });
  Span<Wedge> d3_span;
  for (const auto& v : d3) d3_span.insert(v);
  r.dim_rela_v1 = wedges.size() - off_span.rank() - d3_span.rank();

  // Cross-check through im delta2: dim (im delta2 + PreLie_{v=1}) by inclusion-exclusion.
  Span<RootedTree> joint = indec.image();
  std::size_t v1_count = 0;
  for (const auto& t : enumerate_trees(labels))
    if (t.root_valence() == 1) {
      ++v1_count;
      joint.insert(tv(t));
    }
  r.dim_prelie_v1 = v1_count;
  r.dim_im_v1 = indec.image_rank() + v1_count - joint.rank();

  MuMap mu = mu_map(labels);
  r.dim_reflex_cyc = mu.domain.size();
  r.rank_mu = mu.rank;
  r.mu_bijective = mu.rank == mu.domain.size() && mu.rank == r.dim_indec;

  // Right square: pi o psi = mu o p on the basis a (x) <i0, T>.
  std::vector<PermCycElem> all_slots;
  for (const auto& t : basis)
    for (const auto& a : labels) all_slots.push_back(slot_tensor(a, t));
  auto right = map_kernel(all_slots, [&](const PermCycElem& z) {
    TreeVector top = indec.pi_coords(psi(z));
    TreeVector bottom = indec.pi_coords(psi(reflex_section(reflex_project(z))));
    return top == bottom;
  });
  for (bool ok : right)
    if (!ok) ++r.right_failures;

  r.ok = r.rank_rho == r.dim_cycprelie && r.rank_rho == r.dim_rela_v1 && r.dim_rela_v1 == r.dim_im_v1 &&
         r.rho_not_v1 == 0 &&
         r.left_failures == 0 && r.right_failures == 0 && r.mu_bijective;
  return r;
}

}  // namespace prelie
