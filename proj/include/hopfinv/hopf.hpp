#pragma once

#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hopfinv/cyclotomic.hpp"
#include "hopfinv/group.hpp"
#include "hopfinv/linalg.hpp"

namespace hopfinv {

/// One term of an element of H (x) H.
struct PairTerm {
  int i = 0, j = 0;
  Cyc c;
};

/// Finite-dimensional Hopf algebra given by structure constants on a
/// fixed basis e_1..e_dim (0-based internally).
///
///   mult[i*dim+j]   holds (k, c) with  e_i e_j = sum c e_k
///   comult[i]       holds (j, k, c) with  Delta(e_i) = sum c e_j (x) e_k
///   antipode.at(r, c)  is the coefficient of e_r in S(e_c)
///
/// Immutable after finalize(); every operation below is pure.
struct HopfStructure {
  std::string name;
  int dim = 0;
  long conductor = 1;
  std::vector<std::string> labels;

  std::vector<std::vector<std::pair<int, Cyc>>> mult;
  std::vector<Cyc> unit;
  std::vector<std::vector<std::tuple<int, int, Cyc>>> comult;
  std::vector<Cyc> counit;
  Mat antipode;
  std::vector<PairTerm> rmatrix;
  bool has_rmatrix = false;

  // joins derived by finalize(): mult indexed by output, comult indexed
  // by output pair; these back the dual-side tensor operations.
  std::vector<std::vector<std::tuple<int, int, Cyc>>> mult_by_out;
  std::vector<std::vector<std::pair<int, Cyc>>> comult_by_pair;

  /// Checks index bounds, prunes zero terms, builds the joins, and sets
  /// the conductor to the lcm of the content (at least the declared
  /// value).  Must be called exactly once, before any use.
  void finalize(std::optional<long> declared_conductor = std::nullopt);
};

using HopfPtr = std::shared_ptr<const HopfStructure>;

struct AxiomResult {
  std::string axiom;
  bool pass = false;
  std::string detail;  // first violation, empty when pass
};

struct ValidationReport {
  std::vector<AxiomResult> axioms;
  bool all_pass() const;
};

/// Checks associativity, unit, coassociativity, counit, bialgebra
/// compatibility, both antipode laws, involutivity of the antipode, and
/// (when an R-matrix is present) the quasitriangularity axioms.
ValidationReport validate(const HopfStructure& h);

HopfPtr group_algebra(const FinGroup& g);
HopfPtr dual_hopf(const HopfStructure& h);
HopfPtr drinfeld_double(const FinGroup& g);

/// Element helpers.  Primal elements are coordinate vectors in the
/// basis e_i; dual elements are coordinate vectors in the dual basis.
std::vector<Cyc> mult_el(const HopfStructure& h, const std::vector<Cyc>& x,
                         const std::vector<Cyc>& y);
std::vector<Cyc> mult_dual(const HopfStructure& h, const std::vector<Cyc>& f,
                           const std::vector<Cyc>& g);
Cyc counit_el(const HopfStructure& h, const std::vector<Cyc>& x);
Cyc pair_el(const std::vector<Cyc>& f, const std::vector<Cyc>& x);  // f(x)
std::vector<Cyc> antipode_el(const HopfStructure& h, const std::vector<Cyc>& x);
std::vector<Cyc> antipode_dual(const HopfStructure& h, const std::vector<Cyc>& f);
std::vector<std::tuple<int, int, Cyc>> comult_el(const HopfStructure& h,
                                                 const std::vector<Cyc>& x);
std::vector<Cyc> basis_el(const HopfStructure& h, int i);

Mat left_mult_matrix(const HopfStructure& h, const std::vector<Cyc>& x);
Mat right_mult_matrix(const HopfStructure& h, const std::vector<Cyc>& x);

/// Two-sided integral of a semisimple Hopf algebra, normalized so the
/// counit takes value dim on it.  Throws when the left-integral space is
/// not one-dimensional, when the normalization degenerates, or when the
/// result is not also a right integral.
std::vector<Cyc> left_integral(const HopfStructure& h);

/// Integral of the dual, as a dual-basis coordinate vector, normalized
/// so its value on the unit is dim.
std::vector<Cyc> dual_integral(const HopfStructure& h);

/// Convolution power of the identity map (m-fold, m >= 1).
Mat convolution_identity_power(const HopfStructure& h, long m);

/// Least m >= 1 with the m-th convolution power of the identity equal
/// to unit . counit.  Throws past the safety bound.
long hopf_exponent(const HopfStructure& h, long bound = 1024);

/// The antipode recovered as the (exponent-1)-th convolution power of
/// the identity; equals the stored antipode for involutive structures.
Mat antipode_from_exponent(const HopfStructure& h, long bound = 1024);

/// x -> (1/dim) l_(1) x S(l_(2)); a projection onto the center.
std::vector<Cyc> central_projection(const HopfStructure& h, const std::vector<Cyc>& x);
Mat central_projection_matrix(const HopfStructure& h);

/// Basis of the center, as matrix columns (deterministic rref basis).
Mat center_basis(const HopfStructure& h);

/// The canonical two-leg element in H (x) H built from two comultiplied
/// copies of the integral, first legs kept, second legs folded back
/// through the antipode.  Equals sum_i (dim/d_i)^2 e_i (x) e_i over the
/// central block idempotents.
std::vector<PairTerm> canonical_element_tensor(const HopfStructure& h);

/// The canonical central element: the product of the two legs of
/// canonical_element_tensor.  Acts on each irreducible block with
/// scalar (dim/d_i)^2.
std::vector<Cyc> canonical_central_element(const HopfStructure& h);

/// rho(x) = lambda(x . -) as a matrix H -> H* in the paired bases, and
/// mu(f) = f on the first integral leg, second leg kept, as H* -> H.
/// Their composition mu . rho equals dim times the antipode.
Mat rho_matrix(const HopfStructure& h);
Mat mu_matrix(const HopfStructure& h);

/// Irreducible-representation dimensions (sorted, with multiplicity),
/// recovered from the eigenvalue decomposition of the canonical central
/// element.  No integer factorization is involved.
std::vector<int> irrep_dimensions(const HopfStructure& h);

}  // namespace hopfinv
