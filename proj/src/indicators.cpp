#include "hopfinv/indicators.hpp"

#include "hopfinv/error.hpp"

namespace hopfinv {

namespace {

std::vector<Cyc> sweedler_power(HopfPtr h, Side side, const std::vector<Cyc>& x, int n) {
  if (n < 1) throw HopfError("indicators/bad-order", "power index must be at least 1");
  TensorElement t =
      side == Side::H ? TensorElement::from_primal(h, x) : TensorElement::from_dual(h, x);
  for (int k = 1; k < n; ++k) t = comult_at(t, side, 1);
  for (int k = 1; k < n; ++k) t = mult_at(t, side, 1);
  std::vector<Cyc> out(h->dim);
  for (const auto& [key, c] : t.coeffs()) out[key[0]] += c;
  return out;
}

void verify_central(const HopfStructure& h, const std::vector<Cyc>& x, bool dual_side) {
  for (int b = 0; b < h.dim; ++b) {
    auto e = basis_el(h, b);
    auto lhs = dual_side ? mult_dual(h, x, e) : mult_el(h, x, e);
    auto rhs = dual_side ? mult_dual(h, e, x) : mult_el(h, e, x);
    if (lhs != rhs)
      throw HopfError("indicators/power-not-central",
                      "power element fails to commute with basis element " + std::to_string(b + 1));
  }
}

}  // namespace

std::vector<Cyc> power_integral_element(HopfPtr h, int n) {
  auto out = sweedler_power(h, Side::H, left_integral(*h), n);
  verify_central(*h, out, false);
  return out;
}

std::vector<Cyc> dual_power_integral_element(HopfPtr h, int n) {
  auto out = sweedler_power(h, Side::D, dual_integral(*h), n);
  verify_central(*h, out, true);
  return out;
}

IndicatorValue fs_indicator(HopfPtr h, const CharTable& chars, int n, const std::string& irrep) {
  const auto* row = chars.find(irrep);
  if (!row) throw HopfError("indicators/unknown-irrep", "no character named '" + irrep + "'");
  if (static_cast<int>(row->values.size()) != h->dim)
    throw HopfError("indicators/table-mismatch", "character length differs from dimension");
  auto p = power_integral_element(h, n);
  Cyc v = pair_el(row->values, p) * Cyc(Rat(1, h->dim));
  return {v, in_integer_ring(v, n)};
}

Cyc classical_indicator(const FinGroup& g, const CharTable::Row& chi, int n) {
  Cyc sum;
  for (int x = 0; x < g.n; ++x) {
    int p = g.identity;
    for (int k = 0; k < n; ++k) p = g.mul(p, x);
    sum += chi.values[p];
  }
  return sum * Cyc(Rat(1, g.n));
}

IndicatorValue indicator_invariant(HopfPtr h, int n) {
  auto p = power_integral_element(h, n);
  Cyc v = pair_el(dual_integral(*h), p);
  return {v, in_integer_ring(v, n)};
}

Cyc mixed_indicator(HopfPtr h, int m, int n) {
  auto lampow = dual_power_integral_element(h, m);
  auto ellpow = power_integral_element(h, n);
  return pair_el(lampow, ellpow);
}

Cyc mixed_indicator_table_formula(HopfPtr h, const CharTable& chars_h, const CharTable& chars_d,
                                  int m, int n) {
  auto ellpow = power_integral_element(h, n);
  auto lampow = dual_power_integral_element(h, m);
  Cyc inv_dim(Rat(1, h->dim));
  Cyc sum;
  for (const auto& psi : chars_h.rows) {
    Cyc nu_n = pair_el(psi.values, ellpow) * inv_dim;
    if (nu_n.is_zero()) continue;
    for (const auto& phi : chars_d.rows) {
      Cyc nu_m = pair_el(lampow, phi.values) * inv_dim;
      if (nu_m.is_zero()) continue;
      sum += nu_n * nu_m * pair_el(psi.values, antipode_el(*h, phi.values));
    }
  }
  return sum * Cyc(static_cast<long>(h->dim));
}

KaplanskyReport kaplansky_check(HopfPtr h, int n_probe) {
  KaplanskyReport report;
  report.dims = irrep_dimensions(*h);
  report.dims_divide = true;
  for (int d : report.dims)
    if (h->dim % d != 0) report.dims_divide = false;
  auto c = canonical_central_element(*h);
  auto lam = dual_integral(*h);
  std::vector<Cyc> pow = h->unit;
  report.probes_integral = true;
  for (int k = 1; k <= n_probe; ++k) {
    pow = mult_el(*h, pow, c);
    KaplanskyProbe probe;
    probe.n = k;
    probe.value = pair_el(lam, pow);
    probe.verdict = classify(probe.value);
    if (!probe.verdict.rational_integer) report.probes_integral = false;
    report.probes.push_back(std::move(probe));
  }
  return report;
}

}  // namespace hopfinv
