#pragma once

#include <string>
#include <vector>

#include "hopfinv/group.hpp"
#include "hopfinv/hopf.hpp"
#include "hopfinv/tensor.hpp"

namespace hopfinv {

/// The n-fold Sweedler power of the integral: split n-1 times, fold the
/// legs back with multiplication left to right.  Central; verified.
std::vector<Cyc> power_integral_element(HopfPtr h, int n);

/// Same construction on the dual side, starting from the dual integral.
std::vector<Cyc> dual_power_integral_element(HopfPtr h, int n);

/// A scalar indicator together with its ring-membership verdict: the
/// value must lie in Z[zeta_n] for the order-n construction.
struct IndicatorValue {
  Cyc value;
  bool in_ring = false;
};

/// nu_n(psi) = (1/dim) psi(power_integral_element(n)) for a character
/// row of the attached table.
IndicatorValue fs_indicator(HopfPtr h, const CharTable& chars, int n, const std::string& irrep);

/// (1/|G|) sum_g chi(g^n); the independent group-theoretic form.
Cyc classical_indicator(const FinGroup& g, const CharTable::Row& chi, int n);

/// lambda applied to the n-th power element; character-free.
IndicatorValue indicator_invariant(HopfPtr h, int n);

/// The m-th dual power element evaluated on the n-th power element.
Cyc mixed_indicator(HopfPtr h, int m, int n);

/// dim * sum_{i,j} nu_n(psi_i) nu_m(phi_j) psi_i(S(phi_j)) over the two
/// attached tables (rows of chars_d are elements of H).  Equals
/// mixed_indicator when the tables are complete.
Cyc mixed_indicator_table_formula(HopfPtr h, const CharTable& chars_h,
                                  const CharTable& chars_d, int m, int n);

struct KaplanskyProbe {
  int n = 0;
  Cyc value;
  Classification verdict;
};

struct KaplanskyReport {
  std::vector<int> dims;
  bool dims_divide = false;
  std::vector<KaplanskyProbe> probes;
  bool probes_integral = false;
  bool pass() const { return dims_divide && probes_integral; }
};

/// Two tiers: the exact divisibility decision from the dimension
/// spectrum, and the integrality probes of the dual integral on powers
/// of the canonical central element.
KaplanskyReport kaplansky_check(HopfPtr h, int n_probe = 3);

}  // namespace hopfinv
