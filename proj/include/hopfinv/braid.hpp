#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopfinv/group.hpp"
#include "hopfinv/hopf.hpp"
#include "hopfinv/tensor.hpp"

namespace hopfinv {

/// Word in the braid group B_n: letters are (generator index, inverse
/// flag), generator k braids strands k and k+1.
struct BraidWord {
  int strands = 1;
  std::vector<std::pair<int, bool>> letters;
};

/// Text form "s1 s2' s1" (apostrophe marks the inverse).  The strand
/// count is taken from the parameter when present, otherwise one more
/// than the largest generator index (minimum 1).
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);
std::string braid_to_string(const BraidWord& w);

/// R-matrix data with a verified two-sided inverse in H (x) H.
struct Braiding {
  HopfPtr hopf;
  std::vector<PairTerm> r;
  std::vector<PairTerm> r_inv;
};

/// Requires an attached R-matrix; inverts it by an exact linear solve
/// and checks both inverse laws.
Braiding make_braiding(HopfPtr h);

/// One braid generator (or its inverse) acting on an all-primal tensor
/// element: multiply by the (inverse) R-matrix across factors k, k+1,
/// then swap them.
TensorElement apply_braid_generator(const Braiding& b, const TensorElement& t, int k,
                                    bool inverse);
TensorElement apply_braid_word(const Braiding& b, const TensorElement& t, const BraidWord& w);

/// Exact trace on the strands-fold regular module, one basis state at a
/// time; never materializes the operator.  state_budget caps the number
/// of basis states visited.
Cyc braid_trace(const Braiding& b, const BraidWord& w, int workers = 1,
                size_t state_budget = 1000000);

struct RelationCheck {
  std::string relation;
  bool pass = false;
};

struct BraidRelationReport {
  std::vector<RelationCheck> checks;
  bool all_pass() const;
};

/// Verifies inverse laws, the adjacent braid relation, and (from four
/// strands up) far commutation, by applying both sides to every basis
/// state of the strands-fold module.
BraidRelationReport check_braid_relations(const Braiding& b, int strands,
                                          size_t state_budget = 1000000);

/// Compares the braid trace against |G|^a times the homomorphism count
/// of a user-supplied presentation.  Informational; the normalization
/// exponent is the caller's claim.
struct HomcountReport {
  Cyc trace;
  Cyc predicted;
  long long homs = 0;
  bool match = false;
};

HomcountReport homcount_crosscheck(const FinGroup& g, const BraidWord& w, const FpGroup& p,
                                   int a, int workers = 1);

}  // namespace hopfinv
