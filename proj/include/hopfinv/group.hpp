#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfinv/cyclotomic.hpp"

namespace hopfinv {

/// Finite group given by its full multiplication table.  Elements are
/// 0-based internally; element 0 need not be the identity (the identity
/// is located during validation).
struct FinGroup {
  std::string name;
  int n = 0;
  std::vector<int> table;  // table[a*n + b] = a*b
  int identity = 0;
  std::vector<int> inv;
  std::vector<std::string> labels;

  int mul(int a, int b) const { return table[a * n + b]; }
  int invof(int a) const { return inv[a]; }
  int order_of(int g) const;
  long exponent() const;
  int conjugacy_class_count() const;

  /// Validates totals: closure/range, identity, inverses, associativity.
  /// Throws HopfError on failure.
  static FinGroup from_table(std::string name, int n, std::vector<int> table,
                             std::vector<std::string> labels = {});
};

/// Builds a group from a name: "C1".."Cn" cyclic, "S3", "S4", "D8"
/// (dihedral of ORDER 8), "Q8", and direct products joined with "x"
/// such as "C2xC2" or "C2xC4".  Empty when the name is not recognized.
std::optional<FinGroup> named_group(const std::string& name);

FinGroup direct_product(const FinGroup& a, const FinGroup& b);

/// One irreducible character: its dimension and value on each element
/// (in element order, not by class).
struct CharTable {
  long conductor = 1;
  struct Row {
    std::string name;
    int dim = 1;
    std::vector<Cyc> values;
  };
  std::vector<Row> rows;

  const Row* find(const std::string& name) const;
};

/// Full complex character table for the groups named_group supports.
/// Row 0 is the trivial character.  Verified against orthogonality at
/// construction.  Empty when no table is bundled for this group.
std::optional<CharTable> character_table(const FinGroup& g);

/// All automorphisms, each as the image vector perm[g].  Found by
/// backtracking over images of a small generating set; every candidate
/// is verified to be a bijective homomorphism.
std::vector<std::vector<int>> automorphisms(const FinGroup& g);

/// Finitely presented group.  Relator letters are +k (generator k,
/// 1-based) and -k (its inverse).
struct FpGroup {
  std::vector<std::string> gen_names;
  std::vector<std::vector<int>> relators;

  int rank() const { return static_cast<int>(gen_names.size()); }
};

/// Parses "gens: x,y; rels: x y y x y y y, y x^4 y x^5;".  A caret
/// repeats the preceding letter, an apostrophe inverts it.  The rels
/// block may be empty or absent.  Throws HopfError with position info.
FpGroup parse_presentation(std::string_view text);
std::string presentation_to_string(const FpGroup& p);

/// Number of homomorphisms P -> G by brute force over generator images.
long count_homs(const FpGroup& p, const FinGroup& g);

/// Number of homomorphisms A -> B between table groups (images of a
/// generating set of A, verified on all products).
long count_homs_tables(const FinGroup& a, const FinGroup& b);

/// Number of injective homomorphisms A -> B, by inclusion-exclusion
/// over quotients of A:  inj(A,B) = hom(A,B) - sum over proper normal
/// subgroups N of inj(A/N, B).
long count_injective_homs(const FinGroup& a, const FinGroup& b);

/// Isomorphism test for equal-order groups via injective hom counting.
bool isomorphic(const FinGroup& a, const FinGroup& b);

/// Subgroup enumeration (each subgroup as a sorted element list) and
/// quotient construction; exposed for tests.
std::vector<std::vector<int>> all_subgroups(const FinGroup& g);
bool is_normal(const FinGroup& g, const std::vector<int>& sub);
FinGroup quotient_group(const FinGroup& g, const std::vector<int>& normal_sub);

/// A small generating set, greedily chosen (deterministic).
std::vector<int> generating_set(const FinGroup& g);

}  // namespace hopfinv
