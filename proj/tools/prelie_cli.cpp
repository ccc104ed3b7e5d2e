// Command-line front end. Exit codes: 0 success, 1 a check failed or a
// conjecture comparison found a mismatch, 2 usage or parse error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "prelie/cyclie_embed.hpp"
#include "prelie/egf.hpp"
#include "prelie/io.hpp"
#include "prelie/kernels.hpp"
#include "prelie/rho.hpp"
#include "prelie/verify.hpp"

using namespace prelie;
using nlohmann::json;

namespace {

struct Options {
  bool json = false;
  bool serial = false;
  std::size_t n = 3;
  std::size_t max_n = 4;
  std::size_t order = 10;
  std::uint64_t seed = 1;
  std::string suite = "all";
  std::string s, t, pos, b, wedge_text, cyc, tree, m1, m2;
};

void print_vector(const Options& o, const TreeVector& v) {
  if (o.json)
    std::cout << to_json(v).dump() << "\n";
  else
    std::cout << format_tree_vector(v) << "\n";
}

void print_wedges(const Options& o, const WedgeVector& w) {
  if (o.json)
    std::cout << to_json(w).dump() << "\n";
  else
    std::cout << format_wedge_vector(w) << "\n";
}

// "x | [y,z] - [z,y]" as a CycLie element.
CycLieElem parse_cyclie(const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos) throw ParseError("CycLie element needs 'basepoint | body'");
  std::string base = text.substr(0, bar);
  base.erase(0, base.find_first_not_of(" \t"));
  base.erase(base.find_last_not_of(" \t") + 1);
  if (!is_valid_label(base)) throw ParseError("bad basepoint label '" + base + "'");
  LieVector body = parse_lie_vector(text.substr(bar + 1));
  if (body.is_zero()) throw ParseError("CycLie body must be nonzero");
  CycLieElem out;
  for (const auto& [w, c] : body) {
    CycLieElem e = cyclie_pair(LieWord::leaf(base), to_word(w));
    if (out.labels.empty()) {
      out.labels = e.labels;
      out.basepoint = e.basepoint;
    } else if (out.labels != e.labels) {
      throw ParseError("CycLie body terms use different label sets");
    }
    out.body.axpy(c, e.body);
  }
  return out;
}

int run_series(const Options& o) {
  const std::size_t order = o.order;
  const Egf f_prelie = prelie_series(order);
  const Egf one = Egf::constant(order, 1);
  const Egf f_indec = one - egf_exp(-f_prelie);
  const Egf f_free = egf_fixed_point_free_operad(cyclie_series(order), order);
  const Egf r1 = f_prelie - Egf::x(order) * egf_exp(f_prelie);
  const Egf r2 = (one - f_indec) * egf_log1p_neg(f_indec) - Egf::x(order);
  const Egf r3 = f_free - f_indec;
  json rows = json::array();
  for (std::size_t n = 1; n <= order; ++n)
    rows.push_back({{"n", n},
                    {"prelie", f_prelie.dim(n).get_str()},
                    {"indec", f_indec.dim(n).get_str()},
                    {"free_cyclie", f_free.dim(n).get_str()}});
  const bool ok = r1.is_zero() && r2.is_zero() && r3.is_zero();
  json out{{"order", order},
           {"rows", rows},
           {"residual_prelie_fixed_point_zero", r1.is_zero()},
           {"residual_indec_identity_zero", r2.is_zero()},
           {"free_equals_indec", r3.is_zero()},
           {"ok", ok}};
  if (o.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "n\tPreLie\tIndec\tFree(CycLie)\n";
    for (const auto& r : rows)
      std::cout << r["n"] << "\t" << r["prelie"].get<std::string>() << "\t" << r["indec"].get<std::string>() << "\t"
                << r["free_cyclie"].get<std::string>() << "\n";
    std::cout << "residuals zero: " << (ok ? "yes" : "no") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the PreLie operad on labelled rooted trees"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "JSON output");
  app.add_flag("--serial", o.serial, "Disable OpenMP kernels");

  auto* enumerate = app.add_subcommand("enumerate", "List the rooted trees on n standard labels");
  enumerate->add_option("--n", o.n, "Arity")->required()->check(CLI::Range(1, 9));

  auto* compose = app.add_subcommand("compose", "Partial composition s o_pos t");
  compose->add_option("--s", o.s, "Tree or linear combination")->required();
  compose->add_option("--pos", o.pos, "Label of s to substitute")->required();
  compose->add_option("--t", o.t, "Tree or linear combination")->required();

  auto* product = app.add_subcommand("product", "Pre-Lie product s <| t");
  product->add_option("--s", o.s)->required();
  product->add_option("--t", o.t)->required();

  auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket s <| t - t <| s");
  bracket_cmd->add_option("--s", o.s)->required();
  bracket_cmd->add_option("--t", o.t)->required();

  auto* reduce = app.add_subcommand("reduce-rv1", "Reduce a tree to root-valence 1 modulo im delta2");
  reduce->add_option("--tree", o.tree)->required();

  auto* gamma_cmd = app.add_subcommand("gamma", "Gamma_b of a wedge combination");
  gamma_cmd->add_option("--b", o.b, "Label")->required();
  gamma_cmd->add_option("--wedge", o.wedge_text, "e.g. \"a ^ (b c)\"")->required();

  auto* cyc = app.add_subcommand("cyc-normal", "Basepoint normal form of a wedge combination");
  cyc->add_option("--wedge", o.wedge_text)->required();

  auto* rho_cmd = app.add_subcommand("rho", "The section rho of a CycPreLie element");
  rho_cmd->add_option("--cyc", o.cyc, "e.g. \"a | (b (c d))\"")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite)
      ->check(CLI::IsMember({"operad", "anticyclic", "rho", "theta", "conjectures", "all"}));
  verify->add_option("--max-n", o.max_n)->check(CLI::Range(2, 7));
  verify->add_option("--seed", o.seed);

  auto* theta_cmd = app.add_subcommand("theta", "theta(m1 . m2) in Perm (x) CycPreLie");
  theta_cmd->add_option("--m1", o.m1, "Lie word or combination")->required();
  theta_cmd->add_option("--m2", o.m2, "Lie word or combination")->required();

  auto* lambda_cmd = app.add_subcommand("lambda", "lambda of a CycLie element");
  lambda_cmd->add_option("--cyc", o.cyc, "e.g. \"x | [y,z]\"")->required();

  auto* conj = app.add_subcommand("conjectures", "Compare the suboperad M with Indec and the free operad");
  conj->add_option("--max-n", o.max_n)->check(CLI::Range(2, 7));

  auto* series = app.add_subcommand("series", "Generating series identities");
  series->add_option("--order", o.order)->check(CLI::Range(1, 40));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (o.serial) set_default_exec(Exec::serial);

  try {
    if (enumerate->parsed()) {
      auto trees = enumerate_trees(standard_labels(o.n));
      if (o.json) {
        json out = json::array();
        for (const auto& t : trees) out.push_back(t.key());
        std::cout << json{{"n", o.n}, {"count", trees.size()}, {"trees", out}}.dump() << "\n";
      } else {
        for (const auto& t : trees) std::cout << t.key() << "\n";
      }
      return 0;
    }
    if (compose->parsed()) {
      print_vector(o, compose_partial(parse_tree_vector(o.s), o.pos, parse_tree_vector(o.t)));
      return 0;
    }
    if (product->parsed()) {
      print_vector(o, prelie_product(parse_tree_vector(o.s), parse_tree_vector(o.t)));
      return 0;
    }
    if (bracket_cmd->parsed()) {
      print_vector(o, bracket(parse_tree_vector(o.s), parse_tree_vector(o.t)));
      return 0;
    }
    if (reduce->parsed()) {
      Rv1Reduction r = reduce_rv1(parse_tree(o.tree));
      if (o.json)
        std::cout << json{{"result", to_json(r.result)}, {"witness", to_json(r.witness)}}.dump() << "\n";
      else
        std::cout << "result:  " << format_tree_vector(r.result) << "\nwitness: " << format_wedge_vector(r.witness)
                  << "\n";
      return 0;
    }
    if (gamma_cmd->parsed()) {
      print_vector(o, gamma(o.b, parse_wedge_vector(o.wedge_text)));
      return 0;
    }
    if (cyc->parsed()) {
      WedgeVector w = parse_wedge_vector(o.wedge_text);
      CycPreLieElem x = cyc_normal(w);
      if (o.json)
        std::cout << to_json(x).dump() << "\n";
      else
        std::cout << format_cycprelie(x) << "\n";
      return 0;
    }
    if (rho_cmd->parsed()) {
      print_wedges(o, rho(parse_cycprelie(o.cyc)));
      return 0;
    }
    if (verify->parsed()) {
      SuiteReport r = run_suite(o.suite, o.max_n, o.seed);
      if (o.json) {
        std::cout << r.to_json().dump(2) << "\n";
      } else {
        std::cout << r.suite << " (max n " << r.max_n << "): " << r.checked << " checks, " << r.failures.size()
                  << " failed\n";
        for (const auto& f : r.failures) std::cout << "  FAILED " << f << "\n";
      }
      return r.ok() ? 0 : 1;
    }
    if (theta_cmd->parsed()) {
      PermCycElem p = theta(parse_lie_vector(o.m1), parse_lie_vector(o.m2));
      if (o.json)
        std::cout << to_json(p).dump() << "\n";
      else
        std::cout << format_perm_cyc(p) << "\n";
      return 0;
    }
    if (lambda_cmd->parsed()) {
      print_vector(o, lambda_map(parse_cyclie(o.cyc)));
      return 0;
    }
    if (conj->parsed()) {
      json rep = conjecture_report(o.max_n);
      if (o.json) {
        std::cout << rep.dump(2) << "\n";
      } else {
        std::cout << "n\tdim M\tdim Indec\tdim Free\trank pi(M)\tmatch\n";
        for (const auto& r : rep["rows"])
          std::cout << r["n"] << "\t" << r["dim_M"] << "\t" << r["dim_indec"] << "\t\t" << r["dim_free"] << "\t\t"
                    << r["rank_pi_M"] << "\t\t" << (r["match"].get<bool>() ? "yes" : "NO") << "\n";
        std::cout << "series identities to order " << rep["series_residual_order"] << ": "
                  << (rep["series_residual_zero"].get<bool>() ? "zero residual" : "NONZERO residual") << "\n";
      }
      return rep["ok"].get<bool>() ? 0 : 1;
    }
    if (series->parsed()) return run_series(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const LabelError& e) {
    std::cerr << "label error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
