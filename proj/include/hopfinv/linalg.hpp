#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hopfinv/cyclotomic.hpp"

namespace hopfinv {

/// Dense matrix over the cyclotomic field.  All elimination is exact;
/// pivoting picks the first nonzero entry so results are deterministic.
struct Mat {
  size_t rows = 0, cols = 0;
  std::vector<Cyc> a;

  Mat() = default;
  Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

  Cyc& at(size_t r, size_t c) { return a[r * cols + c]; }
  const Cyc& at(size_t r, size_t c) const { return a[r * cols + c]; }

  static Mat identity(size_t n);
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Cyc& s) const;
  Mat transposed() const;
  bool operator==(const Mat& o) const;
  bool is_zero() const;

  std::vector<Cyc> apply(const std::vector<Cyc>& v) const;  // matrix * column
};

/// Reduced row echelon form in place; returns the rank and (optionally)
/// the pivot columns in order.
size_t rref(Mat& m, std::vector<size_t>* pivot_cols = nullptr);

size_t rank(Mat m);

/// Basis of the right nullspace, as columns.  Free variables are set to 1
/// in ascending column order.
Mat nullspace(const Mat& m);

/// Solves A x = b for a single column b; empty when inconsistent.  When
/// the solution is not unique the free variables are set to zero.
std::optional<std::vector<Cyc>> solve(const Mat& A, const std::vector<Cyc>& b);

std::optional<Mat> inverse(const Mat& m);

}  // namespace hopfinv
