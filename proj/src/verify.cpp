#include "prelie/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "prelie/egf.hpp"
#include "prelie/kernels.hpp"

namespace prelie {

namespace {

TreeVector assoc(const TreeVector& x, const TreeVector& y, const TreeVector& z) {
  return prelie_product(prelie_product(x, y), z) - prelie_product(x, prelie_product(y, z));
}

bool prelie_identity(const RootedTree& x, const RootedTree& y, const RootedTree& z) {
  return assoc(tv(x), tv(y), tv(z)) == assoc(tv(x), tv(z), tv(y));
}

bool sequential(const RootedTree& s, const Label& p, const RootedTree& t, const Label& q, const RootedTree& u) {
  return compose_partial(compose_partial(tv(s), p, tv(t)), q, tv(u)) ==
         compose_partial(tv(s), p, compose_partial(tv(t), q, tv(u)));
}

bool parallel(const RootedTree& s, const Label& p, const RootedTree& t, const Label& q, const RootedTree& u) {
  return compose_partial(compose_partial(tv(s), p, tv(t)), q, tv(u)) ==
         compose_partial(compose_partial(tv(s), q, tv(u)), p, tv(t));
}

bool units(const RootedTree& s, const Label& fresh) {
  bool ok = compose_partial(tv(RootedTree::singleton(fresh)), fresh, tv(s)) == tv(s);
  for (const auto& v : s.labels()) ok = ok && compose_partial(tv(s), v, tv(RootedTree::singleton(v))) == tv(s);
  return ok;
}

TreeVector relabel_vec(const TreeVector& v, const std::map<Label, Label>& m) {
  TreeVector out;
  for (const auto& [t, c] : v) out.add(relabel(t, m), c);
  return out;
}

void tally(CheckCount& c, const std::vector<char>& ok) {
  c.checked += ok.size();
  for (char x : ok)
    if (!x) ++c.failures;
}

std::string at(std::size_t n) { return " (n=" + std::to_string(n) + ")"; }

}  // namespace

CheckCount operad_axioms_exhaustive(const LabelSet& labels) {
  CheckCount r;
  const Label p = fresh_label(labels);
  const Label q = fresh_label(set_union(labels, {p}));

  std::vector<std::function<bool()>> jobs;
  for (const auto& parts : ordered_splits(labels, 3))
    for (const auto& x : enumerate_trees(parts[0]))
      for (const auto& y : enumerate_trees(parts[1]))
        for (const auto& z : enumerate_trees(parts[2])) jobs.push_back([=] { return prelie_identity(x, y, z); });

  for (const auto& parts : ordered_splits(labels, 3, true)) {
    const LabelSet &a = parts[0], &b = parts[1], &c = parts[2];
    if (c.empty()) continue;
    // (S o_p T) o_q U = S o_p (T o_q U), q inside T.
    for (const auto& s : enumerate_trees(set_union(a, {p})))
      for (const auto& t : enumerate_trees(set_union(b, {q})))
        for (const auto& u : enumerate_trees(c)) jobs.push_back([=] { return sequential(s, p, t, q, u); });
    // (S o_p T) o_q U = (S o_q U) o_p T, p and q both in S.
    if (!b.empty())
      for (const auto& s : enumerate_trees(set_union(a, make_label_set({p, q}))))
        for (const auto& t : enumerate_trees(b))
          for (const auto& u : enumerate_trees(c)) jobs.push_back([=] { return parallel(s, p, t, q, u); });
  }
  for (const auto& s : enumerate_trees(labels)) jobs.push_back([=] { return units(s, p); });

  auto ok = map_kernel(jobs, [](const std::function<bool()>& f) -> char { return f(); });
  tally(r, ok);
  return r;
}

CheckCount operad_axioms_random(const LabelSet& labels, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = labels.size();
  if (n < 3) throw LabelError("operad_axioms_random needs |I| >= 3");
  const Label p = fresh_label(labels);
  const Label q = fresh_label(set_union(labels, {p}));
  std::mt19937_64 rng(seed);

  // Draw every instance up front so the outcome does not depend on scheduling.
  struct Instance {
    RootedTree x, y, z;          // pre-Lie
    RootedTree s1, t1, u1;       // sequential
    RootedTree s2, t2, u2;       // parallel
    std::map<Label, Label> perm; // equivariance of s1 o_p t1
  };
  auto split = [&](std::size_t min_c, bool b_nonempty) {
    std::uniform_int_distribution<int> d(0, 2);
    for (;;) {
      std::vector<LabelSet> parts(3);
      for (const auto& l : labels) parts[static_cast<std::size_t>(d(rng))].push_back(l);
      if (parts[2].size() >= min_c && (!b_nonempty || !parts[1].empty())) return parts;
    }
  };
  std::vector<Instance> inst;
  for (std::size_t k = 0; k < samples; ++k) {
    Instance in{RootedTree::singleton(p), RootedTree::singleton(p), RootedTree::singleton(p),
                RootedTree::singleton(p), RootedTree::singleton(p), RootedTree::singleton(p),
                RootedTree::singleton(p), RootedTree::singleton(p), RootedTree::singleton(p), {}};
    std::vector<LabelSet> a;
    do a = split(1, true);
    while (a[0].empty());
    in.x = random_tree(a[0], rng);
    in.y = random_tree(a[1], rng);
    in.z = random_tree(a[2], rng);
    auto b = split(1, false);
    in.s1 = random_tree(set_union(b[0], {p}), rng);
    in.t1 = random_tree(set_union(b[1], {q}), rng);
    in.u1 = random_tree(b[2], rng);
    auto c = split(1, true);
    in.s2 = random_tree(set_union(c[0], make_label_set({p, q})), rng);
    in.t2 = random_tree(c[1], rng);
    in.u2 = random_tree(c[2], rng);
    LabelSet img = labels;
    std::shuffle(img.begin(), img.end(), rng);
    for (std::size_t i = 0; i < n; ++i) in.perm.emplace(labels[i], img[i]);
    inst.push_back(std::move(in));
  }
  auto ok = map_kernel(inst, [&](const Instance& in) -> char {
    bool good = prelie_identity(in.x, in.y, in.z);
    good = good && sequential(in.s1, p, in.t1, q, in.u1);
    good = good && parallel(in.s2, p, in.t2, q, in.u2);
    // sigma(S o_p T) = sigma(S) o_p sigma(T), with sigma fixing the placeholders.
    auto perm = in.perm;
    perm.emplace(p, p);
    perm.emplace(q, q);
    TreeVector lhs = relabel_vec(compose_partial(tv(in.s1), p, tv(in.t1)), perm);
    TreeVector rhs = compose_partial(tv(relabel(in.s1, perm)), p, tv(relabel(in.t1, perm)));
    return good && lhs == rhs;
  });
  CheckCount r;
  tally(r, ok);
  return r;
}

CheckCount reduce_rv1_exhaustive(const LabelSet& labels) {
  auto ok = map_kernel(enumerate_trees(labels), [](const RootedTree& t) -> char {
    Rv1Reduction r = reduce_rv1(t);
    for (const auto& [u, c] : r.result)
      if (u.root_valence() != 1) return false;
    return tv(t) - r.result == delta2(r.witness);
  });
  CheckCount c;
  tally(c, ok);
  return c;
}

GammaOracleReport gamma_vs_oracle(const LabelSet& labels) {
  GammaOracleReport r;
  const Span<Wedge> kp = kp_oracle(labels);
  const auto basis = wedge_basis(labels);
  r.dim_wedge = basis.size();
  r.rank_kp = kp.rank();

  auto ok = map_kernel(basis, [&](const Wedge& w) -> char {
    WedgeVector wv(w);
    for (const auto& b : labels) {
      WedgeVector diff = wedge(tv(b), gamma(b, wv)) - wv;
      if (!kp.contains(diff)) return false;
    }
    return true;
  });
  tally(r.count, ok);

  std::vector<WedgeVector> rows;
  for (const auto& [k, row] : kp.rows()) rows.push_back(row);
  auto killed = map_kernel(rows, [&](const WedgeVector& row) -> char {
    return gamma(labels.front(), row).is_zero();
  });
  for (char k : killed)
    if (!k) ++r.kp_not_killed;

  auto images = map_kernel(basis, [&](const Wedge& w) { return gamma(labels.front(), WedgeVector(w)); });
  Span<RootedTree> img;
  for (const auto& v : images) img.insert(v);
  r.rank_cyc_normal = img.rank();
  return r;
}

CheckCount gamma_strategies_agree(const LabelSet& labels, std::uint64_t seed) {
  GammaEngine rewrite(GammaEngine::Strategy::rewrite);
  GammaEngine randomized(GammaEngine::Strategy::randomized, seed);
  const auto basis = wedge_basis(labels);
  // The randomized engine draws from a shared generator, so run it serially.
  CheckCount r;
  for (const auto& w : basis)
    for (const auto& b : labels) {
      WedgeVector wv(w);
      TreeVector g = gamma(b, wv);
      ++r.checked;
      if (g != rewrite.gamma(b, wv) || g != randomized.gamma(b, wv)) ++r.failures;
    }
  return r;
}

RhoCheck rho_identities(const LabelSet& labels) {
  RhoEngine last(RhoEngine::SplitChild::last_child);
  auto basis = cycprelie_basis(labels);
  auto ok = map_kernel(basis, [&](const CycPreLieElem& x) -> char {
    return verify_carre(x).is_zero() && verify_rho_n(x).is_zero() && verify_carre(x, last).is_zero() &&
           verify_rho_n(x, last).is_zero() && delta2(rho(x) - last.rho(x)).is_zero();
  });
  RhoCheck r;
  tally(r.count, ok);
  auto images = map_kernel(basis, [](const CycPreLieElem& x) { return rho(x); });
  Span<Wedge> span;
  for (const auto& w : images) span.insert(w);
  r.rank = span.rank();
  return r;
}

CheckCount rho_composition_random(std::size_t max_n, std::size_t samples, std::uint64_t seed) {
  if (max_n < 3) throw LabelError("rho_composition_random needs max_n >= 3");
  std::mt19937_64 rng(seed);
  struct Instance {
    RootedTree r, s, t;
    Label i;
  };
  std::vector<Instance> inst;
  while (inst.size() < samples) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, max_n)(rng);
    const LabelSet labels = standard_labels(n);
    const Label i = fresh_label(labels);
    // r and s share A plus the placeholder i; t lives on B.
    std::vector<LabelSet> parts(3);
    std::uniform_int_distribution<int> d(0, 2);
    for (const auto& l : labels) parts[static_cast<std::size_t>(d(rng))].push_back(l);
    if (parts[2].empty()) continue;
    const bool i_in_r = d(rng) % 2 == 0;
    LabelSet rl = i_in_r ? set_union(parts[0], {i}) : parts[0];
    LabelSet sl = i_in_r ? parts[1] : set_union(parts[1], {i});
    if (rl.empty() || sl.empty()) continue;
    inst.push_back(Instance{random_tree(rl, rng), random_tree(sl, rng), random_tree(parts[2], rng), i});
  }
  auto ok = map_kernel(inst, [](const Instance& k) -> char {
    const WedgeVector rs = wedge(k.r, k.s);
    const TreeVector g = gamma(k.i, rs);
    const LabelSet all = set_union(set_union(k.r.labels(), k.s.labels()), k.t.labels());
    const Label hash = fresh_label(all);
    WedgeVector lhs = default_rho().rho(wedge_compose(rs, k.i, tv(k.t)));
    WedgeVector rhs = wedge_compose(default_rho().rho(rs), k.i, tv(k.t));
    rhs -= wedge_compose(default_rho().rho_pair(RootedTree::singleton(hash), k.t), hash, g);
    rhs += wedge(g, tv(k.t));
    return delta2(lhs) == delta2(rhs);
  });
  CheckCount c;
  tally(c, ok);
  return c;
}

ThetaRankReport theta_ranks(const LabelSet& labels) {
  ThetaRankReport r;
  auto basis = cyclie_basis(labels);
  auto thetas = map_kernel(basis, [](const CycLieElem& e) { return theta(e); });
  Span<SlotKey> ts;
  Span<RootedTree> ls;
  for (const auto& t : thetas) {
    ts.insert(t.terms);
    if (!slot_sum(t).body.is_zero()) ++r.slot_sum_nonzero;
    TreeVector l = psi(t);
    for (const auto& [tree, c] : l)
      if (tree.root_valence() != 1) {
        ++r.lambda_not_v1;
        break;
      }
    ls.insert(l);
  }
  r.rank_theta = ts.rank();
  r.rank_lambda = ls.rank();
  return r;
}

// ------------------------------------------------------------------ suites

void SuiteReport::merge(const SuiteReport& o) {
  checked += o.checked;
  failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  dims[o.suite] = o.dims;
}

nlohmann::json SuiteReport::to_json() const {
  return {{"suite", suite}, {"arity", max_n}, {"checked", checked}, {"failures", failures}, {"dims", dims}};
}

SuiteReport verify_operad(std::size_t max_n, std::uint64_t seed, std::size_t samples) {
  SuiteReport r{"operad", max_n};
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 7); ++n) {
    auto count = enumerate_trees(standard_labels(n)).size();
    r.dims["trees"][std::to_string(n)] = count;
    r.expect(count == ipow(static_cast<long>(n), static_cast<unsigned>(n - 1)), "tree count" + at(n));
  }
  for (std::size_t n = 3; n <= std::min<std::size_t>(max_n, 4); ++n) {
    auto c = operad_axioms_exhaustive(standard_labels(n));
    r.dims["axiom_checks"][std::to_string(n)] = c.checked;
    r.expect(c.failures == 0, "operad axioms, exhaustive" + at(n));
  }
  for (std::size_t n = 5; n <= std::min<std::size_t>(max_n, 6); ++n) {
    auto c = operad_axioms_random(standard_labels(n), samples, seed + n);
    r.dims["axiom_checks"][std::to_string(n)] = c.checked;
    r.expect(c.failures == 0, "operad axioms, random" + at(n));
  }
  for (std::size_t n = 2; n <= std::min<std::size_t>(max_n, 5); ++n) {
    auto c = reduce_rv1_exhaustive(standard_labels(n));
    r.expect(c.failures == 0, "root-valence-1 reduction" + at(n));
  }
  for (std::size_t n = 3; n <= std::min<std::size_t>(max_n, 5); ++n) {
    const auto labels = standard_labels(n);
    bool zero = true;
    for (const auto& w : wedge3_basis(labels)) zero = zero && delta2(delta3(Wedge3Vector(w))).is_zero();
    r.expect(zero, "delta2 o delta3 = 0" + at(n));
  }
  return r;
}

SuiteReport verify_anticyclic(std::size_t max_n, std::uint64_t seed) {
  SuiteReport r{"anticyclic", max_n};
  for (std::size_t n = 3; n <= std::min<std::size_t>(max_n, 5); ++n) {
    const auto labels = standard_labels(n);
    auto g = gamma_vs_oracle(labels);
    const std::size_t expect = ipow(static_cast<long>(n - 1), static_cast<unsigned>(n - 2)).get_ui();
    r.dims["cycprelie"][std::to_string(n)] = g.dim_wedge - g.rank_kp;
    r.expect(g.dim_wedge - g.rank_kp == expect, "dim Lambda^2 / K_P" + at(n));
    r.expect(g.rank_cyc_normal == expect, "rank of cyc_normal" + at(n));
    r.expect(g.kp_not_killed == 0, "cyc_normal kills K_P" + at(n));
    r.expect(g.count.failures == 0, "b ^ Gamma_b(w) = w modulo K_P" + at(n));
  }
  for (std::size_t n = 3; n <= std::min<std::size_t>(max_n, 4); ++n) {
    auto c = gamma_strategies_agree(standard_labels(n), seed + n);
    r.expect(c.failures == 0, "Gamma strategies agree" + at(n));
  }
  for (std::size_t n = 2; n <= std::min<std::size_t>(max_n, 5); ++n) {
    const auto labels = standard_labels(n);
    bool ok = true;
    for (const auto& t : enumerate_trees(labels)) {
      if (t.root_valence() != 1) continue;
      ok = ok && psi(psi_inv(tv(t), labels)) == tv(t);
    }
    r.expect(ok, "psi o psi_inv = id on PreLie_{v=1}" + at(n));
  }
  return r;
}

SuiteReport verify_rho(std::size_t max_n) {
  SuiteReport r{"rho", max_n};
  for (std::size_t n = 2; n <= max_n; ++n) {
    auto c = rho_identities(standard_labels(n));
    r.dims["rank_rho"][std::to_string(n)] = c.rank;
    r.expect(c.count.failures == 0, "rho identities on the CycPreLie basis" + at(n));
    r.expect(c.rank == ipow(static_cast<long>(n - 1), static_cast<unsigned>(n - 2)), "rho injective" + at(n));
  }
  if (max_n >= 3) {
    auto c = rho_composition_random(std::min<std::size_t>(max_n, 5), 200, 7);
    r.expect(c.failures == 0, "rho composition property, random");
  }
  for (std::size_t n = 2; n <= std::min<std::size_t>(max_n, 4); ++n) {
    auto iso = verify_iso_ses(standard_labels(n));
    auto& d = r.dims["iso"][std::to_string(n)];
    d = {{"rank_rho", iso.rank_rho}, {"dim_rela_v1", iso.dim_rela_v1}, {"dim_im_v1", iso.dim_im_v1},
         {"dim_indec", iso.dim_indec}, {"rank_mu", iso.rank_mu}, {"dim_cycprelie", iso.dim_cycprelie}};
    r.expect(iso.ok, "exact sequence isomorphism" + at(n));
  }
  for (std::size_t n = 2; n <= std::min<std::size_t>(max_n, 5); ++n) {
    IndecSpace indec(standard_labels(n));
    r.dims["indec"][std::to_string(n)] = indec.quotient_dim();
    r.expect(indec.quotient_dim() == ipow(static_cast<long>(n - 1), static_cast<unsigned>(n - 1)),
             "dim Indec" + at(n));
  }
  return r;
}

SuiteReport verify_theta(std::size_t max_n) {
  SuiteReport r{"theta", max_n};
  for (std::size_t n = 3; n <= std::min<std::size_t>(max_n, 4); ++n) {
    auto c = theta_well_defined(standard_labels(n));
    r.expect(c.failures == 0, "theta well defined" + at(n));
  }
  for (std::size_t n = 2; n <= max_n; ++n) {
    auto t = theta_ranks(standard_labels(n));
    const std::size_t expect = factorial(static_cast<unsigned>(n - 2)).get_ui();
    r.dims["rank_theta"][std::to_string(n)] = t.rank_theta;
    r.dims["rank_lambda"][std::to_string(n)] = t.rank_lambda;
    r.expect(t.rank_theta == expect, "rank theta" + at(n));
    r.expect(t.rank_lambda == expect, "rank lambda" + at(n));
    r.expect(t.slot_sum_nonzero == 0, "theta slot sums vanish" + at(n));
    r.expect(t.lambda_not_v1 == 0, "lambda lands in root-valence 1" + at(n));
  }
  if (max_n >= 2) {
    auto e = cyclie_basis(make_label_set({"x", "y"})).front();
    TreeVector want = tv(RootedTree::from_edges("x", {{"y", "x"}})) + tv(RootedTree::from_edges("y", {{"x", "y"}}));
    r.expect(lambda_map(e) == want, "lambda(<x,y>) = x<|y + y<|x");
  }
  return r;
}

SuiteReport verify_conjectures(std::size_t max_n) {
  SuiteReport r{"conjectures", max_n};
  auto rep = conjecture_report(std::max<std::size_t>(max_n, 2));
  r.dims = rep;
  r.expect(rep.at("series_residual_zero").get<bool>(), "series identities");
  for (const auto& row : rep.at("rows"))
    r.expect(row.at("match").get<bool>(), "dim M = dim Indec = dim free" + at(row.at("n").get<std::size_t>()));
  return r;
}

SuiteReport run_suite(const std::string& name, std::size_t max_n, std::uint64_t seed) {
  if (name == "operad") return verify_operad(max_n, seed);
  if (name == "anticyclic") return verify_anticyclic(max_n, seed);
  if (name == "rho") return verify_rho(max_n);
  if (name == "theta") return verify_theta(max_n);
  if (name == "conjectures") return verify_conjectures(max_n);
  if (name == "all") {
    SuiteReport all{"all", max_n};
    for (const char* s : {"operad", "anticyclic", "rho", "theta", "conjectures"}) all.merge(run_suite(s, max_n, seed));
    return all;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace prelie
