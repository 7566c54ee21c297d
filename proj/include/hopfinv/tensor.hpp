#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfinv/hopf.hpp"

namespace hopfinv {

/// Which tensor leg block an operation addresses: primal factors (H) or
/// dual factors (D).
enum class Side { H, D };

/// Element of H^(x)i (x) (H*)^(x)j for one fixed structure.  Keys hold
/// the i primal basis indices followed by the j dual ones; zero terms
/// are pruned eagerly.  Term counts are capped by a global budget so a
/// runaway expansion aborts cleanly instead of exhausting memory.
class TensorElement {
 public:
  using Key = std::vector<int>;

  TensorElement(HopfPtr owner, int primal, int dual);

  static TensorElement scalar(HopfPtr owner, const Cyc& c);
  static TensorElement from_primal(HopfPtr owner, const std::vector<Cyc>& v);
  static TensorElement from_dual(HopfPtr owner, const std::vector<Cyc>& v);

  const HopfPtr& owner() const { return owner_; }
  int primal_count() const { return nh_; }
  int dual_count() const { return nd_; }
  const std::map<Key, Cyc>& coeffs() const { return coeffs_; }

  void add(const Key& key, const Cyc& c);
  bool is_zero() const { return coeffs_.empty(); }
  size_t term_count() const { return coeffs_.size(); }

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement scaled(const Cyc& s) const;
  bool operator==(const TensorElement& o) const;

 private:
  HopfPtr owner_;
  int nh_, nd_;
  std::map<Key, Cyc> coeffs_;
};

/// Applies the comultiplication of the k-th factor (1-based) on the
/// given side; the factor splits into positions k, k+1 of its block.
TensorElement comult_at(const TensorElement& t, Side side, int k);

/// Multiplies factors k and k+1 (1-based) of the given side into one.
TensorElement mult_at(const TensorElement& t, Side side, int k);

/// Reorders a block: factor at position p moves to image[p-1] (1-based
/// image notation).  The image must be a permutation.
TensorElement permute(const TensorElement& t, Side side, const std::vector<int>& image);

/// Evaluates dual factor dpos on primal factor hpos and removes both;
/// remaining factors keep their relative order.
TensorElement pair_legs(const TensorElement& t, int hpos, int dpos);

TensorElement tensor_product(const TensorElement& a, const TensorElement& b);

/// Componentwise algebra product on equal shapes (multiplication in
/// every primal factor, dual-algebra multiplication in every dual one).
TensorElement algebra_product(const TensorElement& a, const TensorElement& b);

/// Coordinate change on one factor: the factor's coefficient vector is
/// replaced by m times it.
TensorElement apply_matrix_at(const TensorElement& t, Side side, int k, const Mat& m);

Cyc as_scalar(const TensorElement& t);

/// One line per term: "b1 .. bi | c1 .. cj : coeff", 1-based indices in
/// key order.  Deterministic.
std::string dump_tensor(const TensorElement& t);

/// Dense coordinate vector of length dim^(i+j), ordered by key.
std::vector<Cyc> tensor_to_dense(const TensorElement& t);

size_t tensor_term_budget();
void set_tensor_term_budget(size_t budget);

}  // namespace hopfinv
