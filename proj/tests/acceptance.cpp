// Acceptance battery: one line per criterion, exit 0 only when every
// criterion passes.  Tolerances do not exist here; every comparison is
// exact, and the wall-clock limits are part of the criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hopfinv/braid.hpp"
#include "hopfinv/canonical.hpp"
#include "hopfinv/error.hpp"
#include "hopfinv/group.hpp"
#include "hopfinv/hopf.hpp"
#include "hopfinv/indicators.hpp"
#include "hopfinv/invariants.hpp"
#include "hopfinv/tensor.hpp"

using namespace hopfinv;

namespace {

const std::vector<std::string> kGroups = {"C2", "C3", "C4",   "C2xC2", "C5",
                                          "S3", "D8", "Q8", "C2xC4", "S4"};
const std::vector<std::string> kDoubleGroups = {"C2", "C3", "C4", "C2xC2"};
const std::vector<std::string> kSmallGroups = {"C2", "C3", "C4", "C2xC2",
                                               "C5", "S3", "D8", "Q8", "C2xC4"};

struct Checker {
  bool ok = true;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

// every bundled structure: 10 group algebras, their duals, 4 doubles
std::vector<HopfPtr> bundled_structures() {
  std::vector<HopfPtr> out;
  for (const auto& name : kGroups) {
    HopfPtr h = group_algebra(*named_group(name));
    out.push_back(h);
    out.push_back(dual_hopf(*h));
  }
  for (const auto& name : kDoubleGroups)
    out.push_back(drinfeld_double(*named_group(name)));
  return out;
}

void check_identities(Checker& c, HopfPtr h) {
  const std::string& tag = h->name;
  auto ell = left_integral(*h);
  auto lam = dual_integral(*h);
  int dim = h->dim;

  // integral comultiplication slides across the two legs
  TensorElement dl = comult_at(TensorElement::from_primal(h, ell), Side::H, 1);
  for (int i = 0; i < dim; ++i) {
    auto x = basis_el(*h, i);
    auto sx = antipode_el(*h, x);
    c.expect(apply_matrix_at(dl, Side::H, 1, left_mult_matrix(*h, x)) ==
                 apply_matrix_at(dl, Side::H, 2, left_mult_matrix(*h, sx)),
             tag + ": left slide fails on basis " + std::to_string(i));
    c.expect(apply_matrix_at(dl, Side::H, 1, right_mult_matrix(*h, x)) ==
                 apply_matrix_at(dl, Side::H, 2, right_mult_matrix(*h, sx)),
             tag + ": right slide fails on basis " + std::to_string(i));
  }

  // paired integral legs produce dim S and dim Id
  TensorElement t = tensor_product(TensorElement::from_primal(h, ell),
                                   TensorElement::from_dual(h, lam));
  t = comult_at(comult_at(t, Side::H, 1), Side::D, 1);
  TensorElement paired = pair_legs(t, 1, 1);
  TensorElement want_s(h, 1, 1), want_id(h, 1, 1);
  for (int r = 0; r < dim; ++r) {
    want_id.add({r, r}, Cyc(dim));
    for (int col = 0; col < dim; ++col)
      if (!h->antipode.at(r, col).is_zero())
        want_s.add({r, col}, Cyc(dim) * h->antipode.at(r, col));
  }
  c.expect(paired == want_s, tag + ": paired legs miss dim*S");
  c.expect(apply_matrix_at(paired, Side::H, 1, h->antipode) == want_id,
           tag + ": antipode fold misses dim*Id");

  // mu . rho = dim S
  c.expect(mu_matrix(*h) * rho_matrix(*h) == h->antipode.scaled(Cyc(dim)),
           tag + ": mu.rho differs from dim*S");

  // central projection is idempotent with the center as image
  Mat p = central_projection_matrix(*h);
  c.expect(p * p == p, tag + ": central projection not idempotent");
  c.expect(rank(p) == center_basis(*h).cols, tag + ": projection rank differs from center");

  // canonical central element: central, consistent with the two-leg fold
  auto ch = canonical_central_element(*h);
  c.expect(left_mult_matrix(*h, ch) == right_mult_matrix(*h, ch),
           tag + ": canonical central element not central");
  c.expect(mult_at(canonical_tensor(h), Side::H, 1) ==
               TensorElement::from_primal(h, ch),
           tag + ": folded canonical tensor differs");

  // dimension spectrum squares to dim
  long sum = 0;
  for (int d : irrep_dimensions(*h)) sum += (long)d * d;
  c.expect(sum == dim, tag + ": irrep dimension squares miss dim");
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::string span_fingerprint(const SpanResult& r) {
  std::ostringstream out;
  for (const auto& [n, d] : r.growth) out << "N" << n << ":" << d << ";";
  for (const auto& row : r.basis) {
    for (const auto& v : row) out << v.to_string() << ",";
    out << "|";
  }
  return out.str();
}

std::string distinguish_fingerprint(const DistinguishResult& r) {
  std::ostringstream out;
  out << (r.distinguished ? "yes" : "no") << ";";
  if (r.witness) out << invariant_to_string(*r.witness) << ";";
  out << r.value1.to_string() << ";" << r.value2.to_string();
  return out.str();
}

using Criterion = std::function<void(Checker&)>;

struct Entry {
  int number;
  std::string name;
  double limit_seconds;  // 0 = no limit
  Criterion run;
};

}  // namespace

int main() {
  std::vector<Entry> entries;

  entries.push_back({1, "validation and structural identities", 60.0, [](Checker& c) {
    for (HopfPtr h : bundled_structures()) {
      ValidationReport r = validate(*h);
      if (!r.all_pass()) {
        for (const auto& ax : r.axioms)
          c.expect(ax.pass, h->name + ": axiom " + ax.axiom + " fails (" + ax.detail + ")");
      }
      check_identities(c, h);
    }
  }});

  entries.push_back({2, "integral normalization", 0.0, [](Checker& c) {
    for (HopfPtr h : bundled_structures()) {
      auto ell = left_integral(*h);
      auto lam = dual_integral(*h);
      c.expect(pair_el(lam, ell) == Cyc(h->dim),
               h->name + ": lambda(l) differs from dim");
    }
  }});

  entries.push_back({3, "scalar data count homomorphisms", 600.0, [](Checker& c) {
    auto data = enumerate_invariants(0, 0, 4);
    c.expect(data.size() == 1641, "expected 1641 data up to four legs");
    for (const auto& gname : kSmallGroups) {
      auto g = *named_group(gname);
      EvalContext ctx = make_group_context(g);
      std::vector<long long> want(data.size());
      for (size_t k = 0; k < data.size(); ++k) {
        FpGroup p = invariant_to_presentation(data[k]);
        want[k] = ipow(g.n, (int)data[k].comps_d.size()) * count_homs(p, g);
      }
      auto got = parallel_values(data.size(), 4, [&](size_t k) {
        return as_scalar(evaluate_invariant(ctx, data[k]));
      });
      for (size_t k = 0; k < data.size(); ++k)
        c.expect(got[k] == Cyc((long)want[k]),
                 gname + ": datum " + invariant_to_string(data[k]) + " value " +
                     got[k].to_string() + " differs from " + std::to_string(want[k]));
    }
  }});

  entries.push_back({4, "separating pairs of equal dimension", 0.0, [](Checker& c) {
    DistinguishResult a =
        distinguish(make_group_context(*named_group("C4")),
                    make_group_context(*named_group("C2xC2")), 2);
    c.expect(a.distinguished, "C4 vs C2xC2 not separated");
    c.expect(a.value1 == Cyc(8) && a.value2 == Cyc(16),
             "C4 vs C2xC2 values differ from 8 and 16");
    DistinguishResult b = distinguish(make_group_context(*named_group("Q8")),
                                      make_group_context(*named_group("D8")), 2);
    c.expect(b.distinguished, "Q8 vs D8 not separated");
    c.expect(b.value1 == Cyc(16) && b.value2 == Cyc(48),
             "Q8 vs D8 values differ from 16 and 48");
    c.expect(b.witness && b.witness->comps_h == std::vector<int>{2},
             "Q8 vs D8 witness is not the two-leg datum");
  }});

  entries.push_back({5, "gram pairings have full rank", 0.0, [](Checker& c) {
    for (const auto& gname : {"C2", "C3", "C5", "S3"}) {
      EvalContext ctx = make_group_context(*named_group(gname));
      for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}}) {
        GramReport r = gram_rank(ctx, i, j, 4, 4);
        c.expect(r.full, std::string(gname) + ": rank " + std::to_string(r.rank) +
                             " not full for shape (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
      }
    }
  }});

  entries.push_back({6, "span saturates the fixed space", 0.0, [](Checker& c) {
    const std::vector<std::pair<std::string, size_t>> expected = {
        {"C2", 2}, {"C3", 2}, {"C5", 2}, {"S3", 3}};
    for (const auto& [gname, dim] : expected) {
      auto g = *named_group(gname);
      EvalContext ctx = make_group_context(g);
      auto auts = hopf_automorphism_group(*ctx.hopf, group_induced_automorphisms(g));
      SaturationReport r = saturation_check(ctx, auts, 1, 0, 5, 4);
      c.expect(r.containment_ok, gname + ": containment violated: " + r.containment_detail);
      c.expect(r.saturated, gname + ": span does not reach the fixed space");
      c.expect(r.fixed_dim == dim, gname + ": fixed dim " + std::to_string(r.fixed_dim) +
                                       " differs from " + std::to_string(dim));
      c.expect(r.span_dim == dim, gname + ": span dim " + std::to_string(r.span_dim) +
                                      " differs from " + std::to_string(dim));
    }
  }});

  entries.push_back({7, "indicators", 0.0, [](Checker& c) {
    for (const auto& gname : kGroups) {
      auto g = *named_group(gname);
      auto table = character_table(g);
      if (!table) {
        c.expect(false, gname + ": no bundled character table");
        continue;
      }
      HopfPtr h = group_algebra(g);
      for (const auto& row : table->rows)
        for (int n = 1; n <= 6; ++n) {
          IndicatorValue v = fs_indicator(h, *table, n, row.name);
          c.expect(v.value == classical_indicator(g, row, n),
                   gname + ": indicator " + std::to_string(n) + " of " + row.name +
                       " differs from the classical value");
          c.expect(v.in_ring, gname + ": indicator " + std::to_string(n) + " of " +
                                  row.name + " leaves its cyclotomic ring");
        }
    }
    IndicatorValue ks3 = indicator_invariant(group_algebra(*named_group("S3")), 2);
    c.expect(ks3.value == Cyc(24) && ks3.in_ring,
             "second indicator invariant differs from 24");
    HopfPtr c2 = group_algebra(*named_group("C2"));
    c.expect(mixed_indicator(c2, 2, 2) == Cyc(4), "mixed (2,2) differs from 4");
    for (const auto& gname : {"C2", "C3", "S3"}) {
      auto g = *named_group(gname);
      EvalContext ctx = make_group_context(g);
      for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 2; ++n)
          c.expect(mixed_indicator_table_formula(ctx.hopf, *ctx.chars_h, *ctx.chars_d,
                                                 m, n) == mixed_indicator(ctx.hopf, m, n),
                   std::string(gname) + ": table formula differs at (" +
                       std::to_string(m) + "," + std::to_string(n) + ")");
    }
  }});

  entries.push_back({8, "dimension divisibility and integrality probes", 0.0, [](Checker& c) {
    for (const auto& gname : kGroups) {
      HopfPtr h = group_algebra(*named_group(gname));
      c.expect(kaplansky_check(h).pass(), gname + ": group algebra check fails");
      c.expect(kaplansky_check(dual_hopf(*h)).pass(), gname + ": dual check fails");
    }
    KaplanskyReport s3 = kaplansky_check(group_algebra(*named_group("S3")));
    c.expect(s3.dims == std::vector<int>{1, 1, 2}, "S3 dimension spectrum wrong");
    c.expect(!s3.probes.empty() && s3.probes[0].value == Cyc(108),
             "S3 first probe differs from 108");
    c.expect(kaplansky_check(group_algebra(*named_group("Q8"))).dims ==
                 std::vector<int>{1, 1, 1, 1, 2},
             "Q8 dimension spectrum wrong");
    c.expect(kaplansky_check(group_algebra(*named_group("D8"))).dims ==
                 std::vector<int>{1, 1, 1, 1, 2},
             "D8 dimension spectrum wrong");
  }});

  entries.push_back({9, "braidings", 300.0, [](Checker& c) {
    Braiding b2 = make_braiding(drinfeld_double(*named_group("C2")));
    Braiding b3 = make_braiding(drinfeld_double(*named_group("C3")));
    BraidRelationReport r2 = check_braid_relations(b2, 3);
    BraidRelationReport r3 = check_braid_relations(b3, 3);
    for (const auto& check : r2.checks)
      c.expect(check.pass, "two-element double: relation " + check.relation + " fails");
    for (const auto& check : r3.checks)
      c.expect(check.pass, "three-element double: relation " + check.relation + " fails");
    for (int n = 1; n <= 3; ++n) {
      c.expect(braid_trace(b2, parse_braid("", n), 4) == Cyc(ipow(4, n)),
               "identity trace on " + std::to_string(n) + " strands differs (dim 4)");
      c.expect(braid_trace(b3, parse_braid("", n), 4) == Cyc(ipow(9, n)),
               "identity trace on " + std::to_string(n) + " strands differs (dim 9)");
    }
    c.expect(braid_trace(b2, parse_braid("s1")) == Cyc(2),
             "one-crossing trace differs from 2");
  }});

  entries.push_back({10, "reports are reproducible", 0.0, [](Checker& c) {
    EvalContext s3 = make_group_context(*named_group("S3"));
    std::string base = span_fingerprint(span_invariants(s3, 0, 0, 3, 1));
    c.expect(span_fingerprint(span_invariants(s3, 0, 0, 3, 4)) == base,
             "span differs between one and four workers");
    c.expect(span_fingerprint(span_invariants(s3, 0, 0, 3, 1)) == base,
             "span differs between repeated runs");
    EvalContext q8 = make_group_context(*named_group("Q8"));
    EvalContext d8 = make_group_context(*named_group("D8"));
    std::string dist = distinguish_fingerprint(distinguish(q8, d8, 3, 1));
    c.expect(distinguish_fingerprint(distinguish(q8, d8, 3, 4)) == dist,
             "distinguish differs between one and four workers");
    c.expect(distinguish_fingerprint(distinguish(q8, d8, 3, 1)) == dist,
             "distinguish differs between repeated runs");
  }});

  int failures = 0;
  for (const auto& entry : entries) {
    Checker c;
    auto start = std::chrono::steady_clock::now();
    try {
      entry.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (entry.limit_seconds > 0 && elapsed >= entry.limit_seconds)
      c.expect(false, "exceeded the " + std::to_string((int)entry.limit_seconds) +
                          "s limit");
    std::printf("criterion %2d (%s): %s (%.2f s)\n", entry.number, entry.name.c_str(),
                c.ok ? "PASS" : "FAIL", elapsed);
    if (!c.ok) {
      std::printf("  first failure: %s\n", c.first_failure.c_str());
      ++failures;
    }
  }
  if (failures) std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
