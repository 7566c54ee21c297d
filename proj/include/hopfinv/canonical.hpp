#pragma once

#include "hopfinv/hopf.hpp"
#include "hopfinv/tensor.hpp"

namespace hopfinv {

/// canonical_element_tensor as a two-primal-leg tensor element.
TensorElement canonical_tensor(HopfPtr h);

/// sum of e_i^(x)n over the irreducible blocks of dimension d, realized
/// by Lagrange interpolation on the canonical two-leg element inside the
/// algebra H (x) H and chained adjacent products; d absent from the
/// dimension spectrum yields the zero element.  n = 1 folds the two
/// legs with multiplication.
TensorElement dimension_selector(HopfPtr h, int d, int n);

/// sum of e_{i_1}^(x)a_1 (x) ... (x) e_{i_n}^(x)a_n over tuples of n
/// pairwise DISTINCT blocks of dimension d; inclusion-exclusion by
/// multiplying out same-block components pair by pair.
TensorElement ekses_tensor(HopfPtr h, int d, const std::vector<int>& a);

}  // namespace hopfinv
