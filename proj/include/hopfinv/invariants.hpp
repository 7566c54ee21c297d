#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hopfinv/group.hpp"
#include "hopfinv/tensor.hpp"

namespace hopfinv {

/// Generators and operations of the invariant expression language.
///
///   expr := "gens:" gen ("," gen)* ";" op*
///   gen  := "L" | "Lam" | "charH" IDENT | "charD" IDENT
///   op   := "op:" body ";"
///   body := "comultH" INT | "comultD" INT | "permH" PERM
///         | "permD" PERM | "pair" INT INT
///   PERM := "[" INT (" " INT)* "]"        (1-based image notation)
struct InvariantExpr {
  struct Gen {
    enum class Kind { L, Lam, CharH, CharD } kind;
    std::string name;  // character name for CharH/CharD
  };
  struct Op {
    enum class Kind { ComultH, ComultD, PermH, PermD, Pair } kind;
    int arg1 = 0, arg2 = 0;
    std::vector<int> perm;
  };
  std::vector<Gen> gens;
  std::vector<Op> ops;
};

struct ParseError {
  int line = 0, col = 0;
  std::string message;
};

struct ParseResult {
  std::optional<InvariantExpr> expr;
  std::optional<ParseError> error;
};

/// Parses and shape-checks an expression (every op position must be in
/// range when applied in sequence).
ParseResult parse_invariant(std::string_view text);

/// Canonical text form; parses back to the same expression.
std::string pretty_print(const InvariantExpr& e);

/// Final shape after all ops.  Requires a shape-valid expression.
std::pair<int, int> expr_shape(const InvariantExpr& e);

/// Everything evaluation needs, computed once per structure: the
/// integral, the dual integral, and optional character tables for the
/// primal and dual sides.
struct EvalContext {
  HopfPtr hopf;
  std::vector<Cyc> ell;   // integral of H
  std::vector<Cyc> lam;   // integral of H*, dual coordinates
  std::optional<CharTable> chars_h;  // characters of H-modules (elements of H*)
  std::optional<CharTable> chars_d;  // characters of H*-modules (elements of H)
};

EvalContext make_context(HopfPtr hopf);
EvalContext make_group_context(const FinGroup& g);  // bundles both tables for K[G]

/// Applies the ops in the written order; no reassociation across the
/// user's op list.
TensorElement evaluate(const EvalContext& ctx, const InvariantExpr& e);

/// Canonical datum: a copies of the integral and b copies of the dual
/// integral, comultiplied into comps_h / comps_d many legs, with a
/// bijection between some legs on the two sides.  pair_of_h[t] is the
/// 1-based dual leg matched to primal leg t+1, or 0 when unpaired.
struct CanonicalInvariant {
  std::vector<int> comps_h;
  std::vector<int> comps_d;
  std::vector<int> pair_of_h;

  int legs_h() const;
  int legs_d() const;
  int paired() const;
  std::pair<int, int> shape() const;  // (unpaired primal, unpaired dual)
};

/// Deterministic order: by N = max(total legs per side), then by
/// (a, b, comps_h, comps_d, pairing).
std::vector<CanonicalInvariant> enumerate_invariants(int i, int j, int n_max);

/// Expression whose evaluation is the datum's value; evaluation of the
/// compiled expression is the reference semantics.
InvariantExpr compile(const CanonicalInvariant& c);

std::string invariant_to_string(const CanonicalInvariant& c);

TensorElement evaluate_invariant(const EvalContext& ctx, const CanonicalInvariant& c);

/// Presentation counterpart of a scalar datum on a group algebra: one
/// generator per integral copy, one relator per dual-integral copy.
/// The scalar value on K[G] equals |G|^(number of relators) times the
/// number of homomorphisms from the presented group to G.
FpGroup invariant_to_presentation(const CanonicalInvariant& c);

struct SpanResult {
  std::vector<std::vector<Cyc>> basis;  // rref rows over the dense space
  std::vector<std::pair<int, size_t>> growth;  // (N, dim after exhausting N)
  size_t dimension() const { return basis.size(); }
};

/// Spans the values of all data up to n_max inside H^(i,j), exactly.
SpanResult span_invariants(const EvalContext& ctx, int i, int j, int n_max, int workers = 1);

/// True when m commutes with unit, counit, mult and comult.
bool is_hopf_automorphism(const HopfStructure& h, const Mat& m);

/// Group closure of validated generators; throws when the closure
/// exceeds the bound.
std::vector<Mat> hopf_automorphism_group(const HopfStructure& h, const std::vector<Mat>& gens,
                                         size_t bound = 10000);

/// Automorphisms of K[G] induced by group automorphisms.
std::vector<Mat> group_induced_automorphisms(const FinGroup& g);

/// Subset of mats whose pullback fixes every row of the table (the
/// generator filter for character-aware saturation runs).
std::vector<Mat> automorphisms_fixing_characters(const std::vector<Mat>& mats,
                                                 const CharTable& table);

/// The action of an automorphism on H^(i,j): m on primal factors, the
/// inverse transpose on dual factors.
TensorElement apply_automorphism(const TensorElement& t, const Mat& m);

/// Basis (rref rows) of the subspace of H^(i,j) fixed by the whole
/// group generated by gens, via the averaging projector.
SpanResult automorphism_fixed_space(HopfPtr h, const std::vector<Mat>& group, int i, int j);

struct SaturationReport {
  size_t span_dim = 0;
  size_t fixed_dim = 0;
  int n_reached = 0;
  bool saturated = false;
  bool containment_ok = true;
  std::string containment_detail;
};

/// Checks span(data up to n_max) against the automorphism fixed space.
/// Containment of the span in the fixed space must always hold; its
/// failure is reported as an implementation bug by the caller.  Stops
/// early once saturated.
SaturationReport saturation_check(const EvalContext& ctx, const std::vector<Mat>& group, int i,
                                  int j, int n_max, int workers = 1);

struct GramReport {
  size_t dim_ij = 0, dim_ji = 0;
  size_t rank = 0;
  bool full = false;
};

/// Rank of the natural pairing between span(i,j) and span(j,i): primal
/// factor t of the left meets dual factor t of the right and vice versa.
GramReport gram_rank(const EvalContext& ctx, int i, int j, int n_max, int workers = 1);

struct DistinguishResult {
  bool distinguished = false;
  std::optional<CanonicalInvariant> witness;
  Cyc value1, value2;
  int n_max = 0;
};

/// Streams scalar data in canonical order and stops at the first value
/// that differs.  Never claims isomorphism.
DistinguishResult distinguish(const EvalContext& a, const EvalContext& b, int n_max,
                              int workers = 1);

struct ScalarDatum {
  CanonicalInvariant inv;
  Cyc value;
};

/// All scalar data values up to the budget, deduplicated by value
/// (first witness kept), in enumeration order.
std::vector<ScalarDatum> scalar_generators(const EvalContext& ctx, int n_max, int workers = 1);

/// Ordered parallel map helper used by the batteries: applies fn to
/// 0..count-1 with the given worker count, results in index order.
std::vector<Cyc> parallel_values(size_t count, int workers,
                                 const std::function<Cyc(size_t)>& fn);

}  // namespace hopfinv
