// Command-line surface: every operation with file-based input and
// deterministic, exact output.  Exit codes: 0 success, 2 semantic
// negative (axioms fail / distinguished / fail-integrality), 1 usage or
// format error.
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hopfinv/braid.hpp"
#include "hopfinv/canonical.hpp"
#include "hopfinv/cyclotomic.hpp"
#include "hopfinv/error.hpp"
#include "hopfinv/group.hpp"
#include "hopfinv/hopf.hpp"
#include "hopfinv/indicators.hpp"
#include "hopfinv/invariants.hpp"
#include "hopfinv/io.hpp"
#include "hopfinv/tensor.hpp"

using nlohmann::json;
using namespace hopfinv;

namespace {

std::string fmt(const Cyc& x) { return x.minimized().to_string(); }

std::string label_of(const HopfStructure& h, int i) {
  if (i < (int)h.labels.size() && !h.labels[i].empty()) return h.labels[i];
  return "b" + std::to_string(i + 1);
}

std::string coeff_list(const HopfStructure& h, const std::vector<Cyc>& v) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < (int)v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) out << " ";
    out << label_of(h, i) << "=" << fmt(v[i]);
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

// Structure arguments that are plain groups get the full group context
// (both character tables); everything else gets the bare context.
EvalContext context_for(const std::string& arg) {
  if (arg.rfind("dual:", 0) != 0 && arg.rfind("double:", 0) != 0) {
    try {
      return make_group_context(resolve_group(arg));
    } catch (const HopfError&) {
      // fall through: not a group spec, treat as a structure file
    }
  }
  return make_context(resolve_hopf(arg));
}

void enforce_dim_budget(const HopfStructure& h, int max_dim, const char* flag) {
  if (h.dim > max_dim)
    throw HopfError("cli/budget", "structure dimension " + std::to_string(h.dim) +
                                      " exceeds " + flag + "=" + std::to_string(max_dim));
}

void emit(bool as_json, const json& j, const std::vector<std::string>& lines) {
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& l : lines) std::cout << l << "\n";
  }
}

json datum_json(const CanonicalInvariant& c) {
  return json{{"comps_h", c.comps_h}, {"comps_d", c.comps_d}, {"pair_of_h", c.pair_of_h}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact scalar and tensor invariants of finite-dimensional Hopf structures"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable report");
  for (auto* a : {&app}) (void)a;

  int rc = 0;

  // validate ---------------------------------------------------------
  std::string v_arg;
  auto* sc_validate = app.add_subcommand("validate", "check all structure axioms");
  sc_validate->add_option("structure", v_arg, "hopf file, group name, dual:G, double:G")
      ->required();
  sc_validate->callback([&] {
    HopfPtr h = resolve_hopf(v_arg);
    ValidationReport rep = validate(*h);
    std::vector<std::string> lines;
    json j{{"command", "validate"}, {"structure", h->name}, {"dim", h->dim}};
    lines.push_back("structure: " + h->name + " (dim " + std::to_string(h->dim) + ")");
    json ax = json::array();
    for (const auto& a : rep.axioms) {
      lines.push_back("axiom " + a.axiom + ": " +
                      (a.pass ? "pass" : "FAIL  " + a.detail));
      ax.push_back(json{{"axiom", a.axiom}, {"pass", a.pass}, {"detail", a.detail}});
    }
    j["axioms"] = std::move(ax);
    bool ok = rep.all_pass();
    j["pass"] = ok;
    lines.push_back(std::string("result: ") + (ok ? "PASS" : "FAIL"));
    emit(as_json, j, lines);
    rc = ok ? 0 : 2;
  });

  // build ------------------------------------------------------------
  auto* sc_build = app.add_subcommand("build", "construct a structure and print or save it");
  sc_build->require_subcommand(1);
  std::string b_arg, b_out;
  auto add_build = [&](const char* name, const char* help, auto make) {
    auto* sc = sc_build->add_subcommand(name, help);
    sc->add_option("source", b_arg, "group name or file")->required();
    sc->add_option("--out", b_out, "write to this file instead of stdout");
    sc->callback([&, make] {
      HopfPtr h = make(b_arg);
      if (b_out.empty()) {
        std::cout << hopf_json_text(*h);
      } else {
        save_hopf(*h, b_out);
        std::cout << "wrote " << b_out << "\n";
      }
    });
  };
  add_build("group-algebra", "group algebra of a finite group",
            [](const std::string& a) { return group_algebra(resolve_group(a)); });
  add_build("dual", "dual of a structure",
            [](const std::string& a) { return dual_hopf(*resolve_hopf(a)); });
  add_build("double", "Drinfeld double of a finite group",
            [](const std::string& a) { return drinfeld_double(resolve_group(a)); });

  // integrals ----------------------------------------------------------
  std::string i_arg;
  auto* sc_integrals = app.add_subcommand("integrals", "two-sided integral and its dual");
  sc_integrals->add_option("structure", i_arg)->required();
  sc_integrals->callback([&] {
    HopfPtr h = resolve_hopf(i_arg);
    auto ell = left_integral(*h);
    auto lam = dual_integral(*h);
    Cyc pairing = pair_el(lam, ell);
    std::vector<std::string> lines;
    lines.push_back("structure: " + h->name + " (dim " + std::to_string(h->dim) + ")");
    lines.push_back("ell: " + coeff_list(*h, ell));
    lines.push_back("lam: " + coeff_list(*h, lam));
    lines.push_back("lambda(ell) = " + fmt(pairing));
    json j{{"command", "integrals"}, {"structure", h->name}, {"dim", h->dim}};
    json je = json::array(), jl = json::array();
    for (const auto& c : ell) je.push_back(fmt(c));
    for (const auto& c : lam) jl.push_back(fmt(c));
    j["ell"] = std::move(je);
    j["lam"] = std::move(jl);
    j["lambda_of_ell"] = fmt(pairing);
    emit(as_json, j, lines);
  });

  // exponent -----------------------------------------------------------
  std::string e_arg;
  long e_bound = 1024;
  auto* sc_exponent = app.add_subcommand("exponent", "order of the identity under convolution");
  sc_exponent->add_option("structure", e_arg)->required();
  sc_exponent->add_option("--bound", e_bound, "search bound");
  sc_exponent->callback([&] {
    HopfPtr h = resolve_hopf(e_arg);
    long m = hopf_exponent(*h, e_bound);
    emit(as_json, json{{"command", "exponent"}, {"structure", h->name}, {"exponent", m}},
         {"exponent = " + std::to_string(m)});
  });

  // invariant eval -------------------------------------------------------
  auto* sc_invariant = app.add_subcommand("invariant", "expression-level operations");
  sc_invariant->require_subcommand(1);
  std::string ie_file, ie_hopf;
  auto* sc_eval = sc_invariant->add_subcommand("eval", "evaluate an expression file");
  sc_eval->add_option("expr-file", ie_file)->required();
  sc_eval->add_option("--hopf", ie_hopf, "structure to evaluate on")->required();
  sc_eval->callback([&] {
    std::string text = read_text_file(ie_file);
    ParseResult pr = parse_invariant(text);
    if (!pr.expr) {
      std::cerr << "parse error at line " << pr.error->line << ", col " << pr.error->col
                << ": " << pr.error->message << "\n";
      rc = 1;
      return;
    }
    EvalContext ctx = context_for(ie_hopf);
    TensorElement t = evaluate(ctx, *pr.expr);
    auto shape = std::make_pair(t.primal_count(), t.dual_count());
    if (shape.first == 0 && shape.second == 0) {
      std::string v = fmt(as_scalar(t));
      emit(as_json,
           json{{"command", "invariant eval"}, {"shape", {0, 0}}, {"value", v}}, {v});
    } else {
      std::string d = dump_tensor(t);
      emit(as_json,
           json{{"command", "invariant eval"},
                {"shape", {shape.first, shape.second}},
                {"dump", d}},
           {d});
    }
  });

  // enumerate ------------------------------------------------------------
  int en_i = 0, en_j = 0, en_n = 3;
  auto* sc_enumerate = app.add_subcommand("enumerate", "canonical data for a shape, in order");
  sc_enumerate->add_option("i", en_i, "unpaired primal legs")->required();
  sc_enumerate->add_option("j", en_j, "unpaired dual legs")->required();
  sc_enumerate->add_option("N", en_n, "budget")->required();
  sc_enumerate->callback([&] {
    auto data = enumerate_invariants(en_i, en_j, en_n);
    std::vector<std::string> lines;
    json arr = json::array();
    for (const auto& c : data) {
      lines.push_back(invariant_to_string(c));
      arr.push_back(datum_json(c));
    }
    lines.push_back("count = " + std::to_string(data.size()));
    emit(as_json,
         json{{"command", "enumerate"},
              {"i", en_i},
              {"j", en_j},
              {"budget", en_n},
              {"count", data.size()},
              {"data", std::move(arr)}},
         lines);
  });

  // span -------------------------------------------------------------------
  std::string sp_arg;
  int sp_i = 0, sp_j = 0, sp_budget = 3, sp_workers = 1, sp_maxdim = 24;
  auto* sc_span = app.add_subcommand("span", "span of datum values inside H^(i,j)");
  sc_span->add_option("structure", sp_arg)->required();
  sc_span->add_option("i", sp_i)->required();
  sc_span->add_option("j", sp_j)->required();
  sc_span->add_option("--budget", sp_budget, "datum budget N_max");
  sc_span->add_option("--workers", sp_workers, "parallel evaluation workers");
  sc_span->add_option("--max-order", sp_maxdim, "largest admitted structure dimension");
  sc_span->callback([&] {
    EvalContext ctx = context_for(sp_arg);
    enforce_dim_budget(*ctx.hopf, sp_maxdim, "--max-order");
    SpanResult res = span_invariants(ctx, sp_i, sp_j, sp_budget, sp_workers);
    std::vector<std::string> lines;
    json jg = json::array(), jb = json::array();
    for (const auto& [n, d] : res.growth) {
      lines.push_back("growth N=" + std::to_string(n) + ": dim " + std::to_string(d));
      jg.push_back(json{{"N", n}, {"dim", d}});
    }
    lines.push_back("dimension = " + std::to_string(res.dimension()));
    for (size_t r = 0; r < res.basis.size(); ++r) {
      std::ostringstream row;
      row << "basis[" << r << "]:";
      json jrow = json::array();
      for (size_t c = 0; c < res.basis[r].size(); ++c) {
        if (res.basis[r][c].is_zero()) continue;
        row << " " << c << ":" << fmt(res.basis[r][c]);
        jrow.push_back(json{{"index", c}, {"coeff", fmt(res.basis[r][c])}});
      }
      lines.push_back(row.str());
      jb.push_back(std::move(jrow));
    }
    emit(as_json,
         json{{"command", "span"},
              {"structure", ctx.hopf->name},
              {"i", sp_i},
              {"j", sp_j},
              {"budget", sp_budget},
              {"growth", std::move(jg)},
              {"dimension", res.dimension()},
              {"basis", std::move(jb)}},
         lines);
  });

  // saturate ------------------------------------------------------------------
  std::string sa_arg, sa_chars;
  int sa_i = 0, sa_j = 0, sa_budget = 3, sa_workers = 1, sa_maxdim = 24;
  auto* sc_saturate =
      app.add_subcommand("saturate", "compare the datum span with the automorphism fixed space");
  sc_saturate->add_option("group", sa_arg, "group name or group file")->required();
  sc_saturate->add_option("i", sa_i)->required();
  sc_saturate->add_option("j", sa_j)->required();
  sc_saturate->add_option("--budget", sa_budget, "datum budget N_max");
  sc_saturate->add_option("--workers", sa_workers);
  sc_saturate->add_option("--max-order", sa_maxdim);
  sc_saturate->add_option("--chars", sa_chars,
                          "character table file; keep only automorphisms fixing its rows");
  sc_saturate->callback([&] {
    FinGroup g = resolve_group(sa_arg);
    EvalContext ctx = make_group_context(g);
    enforce_dim_budget(*ctx.hopf, sa_maxdim, "--max-order");
    auto gens = group_induced_automorphisms(g);
    auto grp = hopf_automorphism_group(*ctx.hopf, gens);
    if (!sa_chars.empty()) {
      CharTable table = load_char_table(sa_chars);
      grp = automorphisms_fixing_characters(grp, table);
    }
    SaturationReport rep = saturation_check(ctx, grp, sa_i, sa_j, sa_budget, sa_workers);
    std::vector<std::string> lines;
    lines.push_back("automorphisms = " + std::to_string(grp.size()));
    lines.push_back("fixed_dim = " + std::to_string(rep.fixed_dim));
    lines.push_back("span_dim = " + std::to_string(rep.span_dim));
    lines.push_back("n_reached = " + std::to_string(rep.n_reached));
    lines.push_back(rep.containment_ok ? "containment: ok"
                                       : "containment: VIOLATION  " + rep.containment_detail);
    lines.push_back(std::string("saturated: ") + (rep.saturated ? "yes" : "no"));
    emit(as_json,
         json{{"command", "saturate"},
              {"group", g.name},
              {"i", sa_i},
              {"j", sa_j},
              {"budget", sa_budget},
              {"automorphisms", grp.size()},
              {"fixed_dim", rep.fixed_dim},
              {"span_dim", rep.span_dim},
              {"n_reached", rep.n_reached},
              {"containment_ok", rep.containment_ok},
              {"containment_detail", rep.containment_detail},
              {"saturated", rep.saturated}},
         lines);
    if (!rep.containment_ok) rc = 1;
  });

  // gram ---------------------------------------------------------------
  std::string gr_arg;
  int gr_i = 0, gr_j = 0, gr_budget = 3, gr_workers = 1, gr_maxdim = 24;
  auto* sc_gram = app.add_subcommand("gram", "rank of the pairing between H^(i,j) and H^(j,i)");
  sc_gram->add_option("structure", gr_arg)->required();
  sc_gram->add_option("i", gr_i)->required();
  sc_gram->add_option("j", gr_j)->required();
  sc_gram->add_option("--budget", gr_budget, "datum budget N_max");
  sc_gram->add_option("--workers", gr_workers);
  sc_gram->add_option("--max-order", gr_maxdim);
  sc_gram->callback([&] {
    EvalContext ctx = context_for(gr_arg);
    enforce_dim_budget(*ctx.hopf, gr_maxdim, "--max-order");
    GramReport rep = gram_rank(ctx, gr_i, gr_j, gr_budget, gr_workers);
    std::vector<std::string> lines;
    lines.push_back("dim(i,j) = " + std::to_string(rep.dim_ij));
    lines.push_back("dim(j,i) = " + std::to_string(rep.dim_ji));
    lines.push_back("rank = " + std::to_string(rep.rank));
    lines.push_back(std::string("full: ") + (rep.full ? "yes" : "no"));
    emit(as_json,
         json{{"command", "gram"},
              {"structure", ctx.hopf->name},
              {"i", gr_i},
              {"j", gr_j},
              {"budget", gr_budget},
              {"dim_ij", rep.dim_ij},
              {"dim_ji", rep.dim_ji},
              {"rank", rep.rank},
              {"full", rep.full}},
         lines);
  });

  // distinguish -----------------------------------------------------------
  std::string d_arg1, d_arg2;
  int d_budget = 3, d_workers = 1, d_maxdim = 24;
  auto* sc_distinguish =
      app.add_subcommand("distinguish", "first scalar datum separating two structures");
  sc_distinguish->add_option("first", d_arg1)->required();
  sc_distinguish->add_option("second", d_arg2)->required();
  sc_distinguish->add_option("--budget", d_budget, "datum budget N_max");
  sc_distinguish->add_option("--workers", d_workers);
  sc_distinguish->add_option("--max-order", d_maxdim);
  sc_distinguish->callback([&] {
    EvalContext a = context_for(d_arg1);
    EvalContext b = context_for(d_arg2);
    enforce_dim_budget(*a.hopf, d_maxdim, "--max-order");
    enforce_dim_budget(*b.hopf, d_maxdim, "--max-order");
    DistinguishResult res = distinguish(a, b, d_budget, d_workers);
    std::vector<std::string> lines;
    json j{{"command", "distinguish"},
           {"first", a.hopf->name},
           {"second", b.hopf->name},
           {"budget", d_budget},
           {"distinguished", res.distinguished}};
    if (res.distinguished) {
      lines.push_back("distinguished");
      lines.push_back("datum: " + invariant_to_string(*res.witness));
      lines.push_back("value1 = " + fmt(res.value1));
      lines.push_back("value2 = " + fmt(res.value2));
      j["datum"] = datum_json(*res.witness);
      j["datum_text"] = invariant_to_string(*res.witness);
      j["value1"] = fmt(res.value1);
      j["value2"] = fmt(res.value2);
      rc = 2;
    } else {
      lines.push_back("not distinguished (budget N=" + std::to_string(d_budget) + ")");
    }
    emit(as_json, j, lines);
  });

  // k0 ------------------------------------------------------------------
  std::string k_arg;
  int k_budget = 3, k_workers = 1, k_maxdim = 24;
  auto* sc_k0 = app.add_subcommand("k0", "distinct scalar datum values up to the budget");
  sc_k0->add_option("structure", k_arg)->required();
  sc_k0->add_option("--budget", k_budget, "datum budget N_max");
  sc_k0->add_option("--workers", k_workers);
  sc_k0->add_option("--max-order", k_maxdim);
  sc_k0->callback([&] {
    EvalContext ctx = context_for(k_arg);
    enforce_dim_budget(*ctx.hopf, k_maxdim, "--max-order");
    auto gens = scalar_generators(ctx, k_budget, k_workers);
    std::vector<std::string> lines;
    json arr = json::array();
    for (const auto& g : gens) {
      lines.push_back(fmt(g.value) + "\t" + invariant_to_string(g.inv));
      arr.push_back(json{{"value", fmt(g.value)}, {"datum", datum_json(g.inv)}});
    }
    lines.push_back("distinct = " + std::to_string(gens.size()));
    emit(as_json,
         json{{"command", "k0"},
              {"structure", ctx.hopf->name},
              {"budget", k_budget},
              {"distinct", gens.size()},
              {"values", std::move(arr)}},
         lines);
  });

  // indicators ---------------------------------------------------------------
  std::string in_arg;
  int in_maxn = 3;
  std::vector<int> in_mixed;
  auto* sc_indicators = app.add_subcommand("indicators", "order-n indicators and their ring checks");
  sc_indicators->add_option("structure", in_arg)->required();
  sc_indicators->add_option("--max-n", in_maxn, "largest order");
  sc_indicators->add_option("--mixed", in_mixed, "orders m n for the two-sided indicator")
      ->expected(2);
  sc_indicators->callback([&] {
    EvalContext ctx = context_for(in_arg);
    HopfPtr h = ctx.hopf;
    std::vector<std::string> lines;
    lines.push_back("structure: " + h->name + " (dim " + std::to_string(h->dim) + ")");
    json j{{"command", "indicators"}, {"structure", h->name}, {"max_n", in_maxn}};
    json jinv = json::array();
    for (int n = 1; n <= in_maxn; ++n) {
      IndicatorValue v = indicator_invariant(h, n);
      lines.push_back("indicator_invariant(" + std::to_string(n) + ") = " + fmt(v.value) +
                      (v.in_ring ? "  [ring: ok]" : "  [ring: VIOLATION]"));
      jinv.push_back(json{{"n", n}, {"value", fmt(v.value)}, {"in_ring", v.in_ring}});
    }
    j["indicator_invariant"] = std::move(jinv);
    if (ctx.chars_h) {
      json jfs = json::array();
      for (const auto& row : ctx.chars_h->rows) {
        for (int n = 1; n <= in_maxn; ++n) {
          IndicatorValue v = fs_indicator(h, *ctx.chars_h, n, row.name);
          lines.push_back("nu_" + std::to_string(n) + "(" + row.name + ") = " + fmt(v.value) +
                          (v.in_ring ? "  [ring: ok]" : "  [ring: VIOLATION]"));
          jfs.push_back(
              json{{"irrep", row.name}, {"n", n}, {"value", fmt(v.value)}, {"in_ring", v.in_ring}});
        }
      }
      j["fs"] = std::move(jfs);
    }
    if (in_mixed.size() == 2) {
      Cyc mv = mixed_indicator(h, in_mixed[0], in_mixed[1]);
      lines.push_back("mixed(" + std::to_string(in_mixed[0]) + "," + std::to_string(in_mixed[1]) +
                      ") = " + fmt(mv));
      j["mixed"] = json{{"m", in_mixed[0]}, {"n", in_mixed[1]}, {"value", fmt(mv)}};
      if (ctx.chars_h && ctx.chars_d) {
        Cyc tv = mixed_indicator_table_formula(h, *ctx.chars_h, *ctx.chars_d, in_mixed[0],
                                               in_mixed[1]);
        bool match = tv == mv;
        lines.push_back("mixed_table(" + std::to_string(in_mixed[0]) + "," +
                        std::to_string(in_mixed[1]) + ") = " + fmt(tv) +
                        (match ? "  [match]" : "  [MISMATCH]"));
        j["mixed_table"] = json{{"value", fmt(tv)}, {"match", match}};
      }
    }
    emit(as_json, j, lines);
  });

  // kaplansky -------------------------------------------------------------
  std::string ka_arg;
  int ka_probes = 3;
  auto* sc_kaplansky =
      app.add_subcommand("kaplansky", "dimension divisibility plus integrality probes");
  sc_kaplansky->add_option("structure", ka_arg)->required();
  sc_kaplansky->add_option("--probes", ka_probes, "number of central-element powers probed");
  sc_kaplansky->callback([&] {
    HopfPtr h = resolve_hopf(ka_arg);
    KaplanskyReport rep = kaplansky_check(h, ka_probes);
    std::vector<std::string> lines;
    std::ostringstream ds;
    ds << "dims =";
    for (int d : rep.dims) ds << " " << d;
    lines.push_back(ds.str());
    lines.push_back(std::string("dims divide dim: ") + (rep.dims_divide ? "yes" : "no"));
    json jp = json::array();
    for (const auto& p : rep.probes) {
      lines.push_back("probe lambda(c^" + std::to_string(p.n) + ") = " + fmt(p.value) +
                      (p.verdict.algebraic_integer ? "  [algebraic integer: yes]"
                                                   : "  [algebraic integer: no]"));
      jp.push_back(json{{"n", p.n},
                        {"value", fmt(p.value)},
                        {"rational", p.verdict.rational},
                        {"rational_integer", p.verdict.rational_integer},
                        {"algebraic_integer", p.verdict.algebraic_integer}});
    }
    bool ok = rep.pass();
    lines.push_back(std::string("verdict: ") + (ok ? "pass" : "fail-integrality"));
    emit(as_json,
         json{{"command", "kaplansky"},
              {"structure", h->name},
              {"dims", rep.dims},
              {"dims_divide", rep.dims_divide},
              {"probes", std::move(jp)},
              {"probes_integral", rep.probes_integral},
              {"pass", ok}},
         lines);
    rc = ok ? 0 : 2;
  });

  // homs ---------------------------------------------------------------------
  std::string ho_pres, ho_group;
  auto* sc_homs = app.add_subcommand("homs", "count homomorphisms from a presented group");
  sc_homs->add_option("presentation", ho_pres, "e.g. \"gens: x; rels: x^2;\"")->required();
  sc_homs->add_option("group", ho_group, "target group name or file")->required();
  sc_homs->callback([&] {
    FpGroup p = parse_presentation(ho_pres);
    FinGroup g = resolve_group(ho_group);
    long n = count_homs(p, g);
    emit(as_json,
         json{{"command", "homs"},
              {"presentation", presentation_to_string(p)},
              {"group", g.name},
              {"homs", n}},
         {std::to_string(n)});
  });

  // braid-trace ------------------------------------------------------------
  std::string br_arg, br_word, br_crosscheck;
  int br_strands = 0, br_workers = 1, br_maxgroup = 4, br_normexp = 1;
  bool br_relations = false;
  std::size_t br_states = 1000000;
  auto* sc_braid = app.add_subcommand("braid-trace", "trace of a braid word on the R-matrix action");
  sc_braid->add_option("structure", br_arg, "structure with an R-matrix, e.g. double:C2")
      ->required();
  sc_braid->add_option("word", br_word, "braid word, e.g. \"s1 s2' s1\"")->required();
  sc_braid->add_option("--strands", br_strands, "strand count (default: from the word)");
  sc_braid->add_option("--workers", br_workers);
  sc_braid->add_option("--max-group", br_maxgroup, "largest admitted base group order");
  sc_braid->add_option("--state-budget", br_states, "basis states visited at most");
  sc_braid->add_flag("--check-relations", br_relations, "verify braid relations first");
  sc_braid->add_option("--crosscheck", br_crosscheck,
                       "presentation whose homomorphism count is compared against the trace");
  sc_braid->add_option("--norm-exp", br_normexp, "exponent a in |G|^a * homs for --crosscheck");
  sc_braid->callback([&] {
    HopfPtr h = resolve_hopf(br_arg);
    enforce_dim_budget(*h, br_maxgroup * br_maxgroup, "--max-group squared");
    Braiding b = make_braiding(h);
    std::optional<int> strands;
    if (br_strands > 0) strands = br_strands;
    BraidWord w = parse_braid(br_word, strands);
    std::vector<std::string> lines;
    json j{{"command", "braid-trace"},
           {"structure", h->name},
           {"word", braid_to_string(w)},
           {"strands", w.strands}};
    lines.push_back("strands = " + std::to_string(w.strands));
    bool relations_ok = true;
    if (br_relations) {
      BraidRelationReport rep = check_braid_relations(b, w.strands, br_states);
      json jr = json::array();
      for (const auto& c : rep.checks) {
        lines.push_back("relation " + c.relation + ": " + (c.pass ? "pass" : "FAIL"));
        jr.push_back(json{{"relation", c.relation}, {"pass", c.pass}});
      }
      relations_ok = rep.all_pass();
      j["relations"] = std::move(jr);
      j["relations_pass"] = relations_ok;
    }
    Cyc tr = braid_trace(b, w, br_workers, br_states);
    lines.push_back("trace = " + fmt(tr));
    j["trace"] = fmt(tr);
    if (!br_crosscheck.empty()) {
      std::string base = br_arg;
      if (base.rfind("double:", 0) == 0) base = base.substr(7);
      FinGroup g = resolve_group(base);
      FpGroup p = parse_presentation(br_crosscheck);
      HomcountReport hr = homcount_crosscheck(g, w, p, br_normexp, br_workers);
      lines.push_back("homs = " + std::to_string(hr.homs));
      lines.push_back("predicted = " + fmt(hr.predicted));
      lines.push_back(std::string("match: ") + (hr.match ? "yes" : "no"));
      j["crosscheck"] = json{{"homs", hr.homs},
                             {"predicted", fmt(hr.predicted)},
                             {"norm_exp", br_normexp},
                             {"match", hr.match}};
    }
    emit(as_json, j, lines);
    if (!relations_ok) rc = 2;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const HopfError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
