#include "hopfinv/canonical.hpp"

#include <algorithm>
#include <set>

#include "hopfinv/error.hpp"

namespace hopfinv {

namespace {

TensorElement unit_tensor(HopfPtr h, int legs) {
  TensorElement t = TensorElement::scalar(h, Cyc(1));
  for (int k = 0; k < legs; ++k)
    t = tensor_product(t, TensorElement::from_primal(h, h->unit));
  return t;
}

// t2 (two primal legs) placed at positions p < q of a #legs block, unit
// everywhere else.
TensorElement embed_pair(HopfPtr h, const TensorElement& t2, int p, int q, int legs) {
  TensorElement wide = tensor_product(t2, unit_tensor(h, legs - 2));
  std::vector<int> image(legs);
  image[0] = p;
  image[1] = q;
  int next = 1;
  for (int k = 2; k < legs; ++k) {
    while (next == p || next == q) next++;
    image[k] = next++;
  }
  return permute(wide, Side::H, image);
}

}  // namespace

TensorElement canonical_tensor(HopfPtr h) {
  TensorElement t(h, 2, 0);
  for (const auto& term : canonical_element_tensor(*h)) t.add({term.i, term.j}, term.c);
  return t;
}

TensorElement dimension_selector(HopfPtr h, int d, int n) {
  if (d < 1 || n < 1) throw HopfError("canonical/bad-argument", "d and n must be positive");
  auto dims = irrep_dimensions(*h);
  std::set<int> distinct(dims.begin(), dims.end());
  if (!distinct.count(d)) return TensorElement(h, n, 0);
  auto eigenvalue = [&](int k) {
    return Cyc(rat(static_cast<long>(h->dim) * h->dim, static_cast<long>(k) * k));
  };
  // Lagrange basis polynomial through the eigenvalue nodes plus a root
  // at zero (the span of positive powers of the canonical element misses
  // the off-diagonal part of 1 (x) 1).
  std::vector<Cyc> other_nodes = {Cyc(0)};
  for (int k : distinct)
    if (k != d) other_nodes.push_back(eigenvalue(k));
  TensorElement ch = canonical_tensor(h);
  TensorElement one = unit_tensor(h, 2);
  Cyc denom(1);
  for (const auto& t : other_nodes) denom *= eigenvalue(d) - t;
  TensorElement acc = one.scaled(denom.inverse());
  for (const auto& t : other_nodes) {
    TensorElement shifted = ch;
    shifted -= one.scaled(t);
    acc = algebra_product(acc, shifted);
  }
  if (n == 1) return mult_at(acc, Side::H, 1);
  if (n == 2) return acc;
  TensorElement out = embed_pair(h, acc, 1, 2, n);
  for (int k = 2; k < n; ++k) out = algebra_product(out, embed_pair(h, acc, k, k + 1, n));
  return out;
}

TensorElement ekses_tensor(HopfPtr h, int d, const std::vector<int>& a) {
  if (a.empty()) throw HopfError("canonical/bad-argument", "empty exponent list");
  for (int v : a)
    if (v < 1) throw HopfError("canonical/bad-argument", "exponents must be positive");
  TensorElement same_block = dimension_selector(h, d, 2);
  TensorElement y = dimension_selector(h, d, a[0]);
  std::vector<int> group_start = {1};
  int legs = a[0];
  for (size_t t = 1; t < a.size(); ++t) {
    group_start.push_back(legs + 1);
    legs += a[t];
    y = tensor_product(y, dimension_selector(h, d, a[t]));
    TensorElement one = unit_tensor(h, legs);
    for (size_t s = 0; s < t; ++s) {
      TensorElement filter = one;
      filter -= embed_pair(h, same_block, group_start[s], group_start[t], legs);
      y = algebra_product(y, filter);
    }
  }
  return y;
}

}  // namespace hopfinv
