#include "prelie/cyclie_embed.hpp"

#include "prelie/egf.hpp"
#include "prelie/kernels.hpp"

namespace prelie {

namespace {

std::map<Label, Label> order_preserving(const LabelSet& from, const LabelSet& to) {
  std::map<Label, Label> m;
  for (std::size_t i = 0; i < from.size(); ++i) m.emplace(from[i], to[i]);
  return m;
}

TreeVector relabel_vec(const TreeVector& v, const std::map<Label, Label>& m) {
  TreeVector out;
  for (const auto& [t, c] : v) out.add(relabel(t, m), c);
  return out;
}

LabelSet lie_labels(const LieVector& v) {
  if (v.is_zero()) throw LabelError("zero Lie element has no label set");
  return make_label_set(v.begin()->first.letters);
}

}  // namespace

PermCycElem theta_trees(const TreeVector& p1, const TreeVector& p2) {
  const LabelSet labels = set_union(labels_of(p1), labels_of(p2));
  PermCycElem out{labels, {}};
  for (const auto& [s, c] : p1)
    for (const auto& [t, d] : p2) {
      CycPreLieElem pair = cyc_normal(wedge(s, t), labels);
      PermCycElem term = slot_tensor(s.root_label(), pair) - slot_tensor(t.root_label(), pair);
      term *= c * d;
      out += term;
    }
  out.labels = labels;
  return out;
}

PermCycElem theta(const LieVector& m1, const LieVector& m2) {
  if (!disjoint(lie_labels(m1), lie_labels(m2))) throw LabelError("theta: label clash");
  return theta_trees(phi(m1), phi(m2));
}

PermCycElem theta(const CycLieElem& e) { return theta(LieVector(LeftNormed{{e.basepoint}}), e.body); }

CheckCount theta_well_defined(const LabelSet& labels) {
  if (labels.size() < 3) throw LabelError("theta_well_defined needs |I| >= 3");
  struct Case {
    LeftNormed a, b, c;
  };
  std::vector<Case> cases;
  for (const auto& parts : ordered_splits(labels, 3))
    for (const auto& a : lie_basis(parts[0]))
      for (const auto& b : lie_basis(parts[1]))
        for (const auto& c : lie_basis(parts[2])) cases.push_back(Case{a, b, c});
  auto ok = map_kernel(cases, [](const Case& k) {
    LieVector a(k.a), b(k.b), c(k.c);
    return theta(a, lie_bracket(b, c)) == theta(lie_bracket(a, b), c);
  });
  CheckCount r;
  r.checked = ok.size();
  for (bool x : ok)
    if (!x) ++r.failures;
  return r;
}

TreeVector lambda_map(const CycLieElem& e) { return psi(theta(e)); }

SuboperadTable generate_suboperad(std::size_t max_arity) {
  if (max_arity < 1 || max_arity > 26) throw LabelError("generate_suboperad: arity out of range");
  SuboperadTable table;
  table.max_arity = max_arity;
  table.basis.resize(max_arity + 1);
  table.basis[1] = {tv(RootedTree::singleton(standard_labels(1).front()))};

  for (std::size_t n = 2; n <= max_arity; ++n) {
    const LabelSet labels = standard_labels(n);
    Span<RootedTree> span;
    auto gens = map_kernel(cyclie_basis(labels), [](const CycLieElem& e) { return lambda_map(e); });
    for (const auto& g : gens) span.insert(g);

    // u o_* v with v on a block B (2 <= |B| <= n-1) and u on the rest plus *.
    // Relabeling basis elements of M(k) by every subset covers the S_n-orbit.
    struct Job {
      LabelSet inner;
      LabelSet outer;
      Label star;
    };
    std::vector<Job> jobs;
    for (const auto& parts : ordered_splits(labels, 2)) {
      const LabelSet& b = parts[1];
      if (b.size() < 2) continue;
      Label star = fresh_label(labels);
      jobs.push_back(Job{b, set_union(parts[0], {star}), star});
    }
    auto products = map_kernel(jobs, [&](const Job& j) {
      const std::size_t m = j.inner.size(), k = j.outer.size();
      auto to_inner = order_preserving(standard_labels(m), j.inner);
      auto to_outer = order_preserving(standard_labels(k), j.outer);
      std::vector<TreeVector> out;
      for (const auto& u : table.basis[k]) {
        TreeVector uu = relabel_vec(u, to_outer);
        for (const auto& v : table.basis[m]) out.push_back(compose_partial(uu, j.star, relabel_vec(v, to_inner)));
      }
      return out;
    });
    for (const auto& ps : products)
      for (const auto& p : ps) span.insert(p);

    for (const auto& [pivot, row] : span.rows()) table.basis[n].push_back(row);
  }
  return table;
}

nlohmann::json conjecture_report(std::size_t max_arity) {
  using nlohmann::json;
  SuboperadTable table = generate_suboperad(max_arity);
  const std::size_t order = max_arity + 3;
  const Egf f_free = egf_fixed_point_free_operad(cyclie_series(order), order);
  const Egf f_prelie = prelie_series(order);
  const Egf f_indec = Egf::constant(order, 1) - egf_exp(-f_prelie);
  // x = (1 - f)(-log(1 - f)) for f = f_Indec.
  const Egf residual = (Egf::constant(order, 1) - f_indec) * egf_log1p_neg(f_indec) - Egf::x(order);
  const Egf free_gap = f_free - f_indec;

  json rows = json::array(), mismatches = json::array();
  bool ok = residual.is_zero() && free_gap.is_zero();
  for (std::size_t n = 1; n <= max_arity; ++n) {
    const LabelSet labels = standard_labels(n);
    IndecSpace indec(labels);
    Span<RootedTree> pi_m;
    for (const auto& v : table.basis[n]) pi_m.insert(indec.pi_coords(v));
    const std::size_t dim_m = table.dim(n);
    const std::size_t dim_indec = indec.quotient_dim();
    const std::size_t dim_free = f_free.dim(n).get_ui();
    const bool match = dim_m == dim_indec && dim_m == dim_free && pi_m.rank() == dim_m;
    rows.push_back({{"n", n},
                    {"dim_M", dim_m},
                    {"dim_indec", dim_indec},
                    {"dim_free", dim_free},
                    {"rank_pi_M", pi_m.rank()},
                    {"match", match}});
    if (!match) {
      ok = false;
      mismatches.push_back({{"n", n},
                            {"dim_M", dim_m},
                            {"dim_indec", dim_indec},
                            {"dim_free", dim_free},
                            {"rank_pi_M", pi_m.rank()},
                            {"ambient_dim", indec.ambient_dim()}});
    }
  }
  return json{{"max_arity", max_arity},
              {"rows", rows},
              {"series_residual_order", order},
              {"series_residual_zero", residual.is_zero() && free_gap.is_zero()},
              {"mismatches", mismatches},
              {"ok", ok}};
}

}  // namespace prelie
