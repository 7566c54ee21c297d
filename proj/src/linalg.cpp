#include "hopfinv/linalg.hpp"

#include "hopfinv/error.hpp"

namespace hopfinv {

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Cyc(1);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols != o.rows) throw HopfError("linalg/shape", "product shape mismatch");
  Mat out(rows, o.cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < cols; ++k) {
      const Cyc& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < o.cols; ++j) {
        const Cyc& bkj = o.at(k, j);
        if (bkj.is_zero()) continue;
        out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows != o.rows || cols != o.cols) throw HopfError("linalg/shape", "sum shape mismatch");
  Mat out(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] + o.a[i];
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows != o.rows || cols != o.cols) throw HopfError("linalg/shape", "diff shape mismatch");
  Mat out(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] - o.a[i];
  return out;
}

Mat Mat::scaled(const Cyc& s) const {
  Mat out(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] * s;
  return out;
}

Mat Mat::transposed() const {
  Mat out(cols, rows);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool Mat::operator==(const Mat& o) const {
  if (rows != o.rows || cols != o.cols) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == o.a[i])) return false;
  return true;
}

bool Mat::is_zero() const {
  for (const auto& c : a)
    if (!c.is_zero()) return false;
  return true;
}

std::vector<Cyc> Mat::apply(const std::vector<Cyc>& v) const {
  if (v.size() != cols) throw HopfError("linalg/shape", "apply shape mismatch");
  std::vector<Cyc> out(rows);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] += at(i, j) * v[j];
    }
  return out;
}

size_t rref(Mat& m, std::vector<size_t>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  size_t row = 0;
  for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
    size_t pr = row;
    while (pr < m.rows && m.at(pr, col).is_zero()) pr++;
    if (pr == m.rows) continue;
    if (pr != row)
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
    Cyc inv = m.at(row, col).inverse();
    for (size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (size_t r2 = 0; r2 < m.rows; ++r2) {
      if (r2 == row || m.at(r2, col).is_zero()) continue;
      Cyc f = m.at(r2, col);
      for (size_t j = col; j < m.cols; ++j) m.at(r2, j) -= f * m.at(row, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    row++;
  }
  return row;
}

size_t rank(Mat m) { return rref(m); }

Mat nullspace(const Mat& m) {
  Mat r = m;
  std::vector<size_t> pivots;
  size_t rk = rref(r, &pivots);
  std::vector<bool> is_pivot(m.cols, false);
  for (size_t p : pivots) is_pivot[p] = true;
  size_t nfree = m.cols - rk;
  Mat out(m.cols, nfree);
  size_t col_out = 0;
  for (size_t free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    out.at(free_col, col_out) = Cyc(1);
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      out.at(pivots[pi], col_out) = -r.at(pi, free_col);
    col_out++;
  }
  return out;
}

std::optional<std::vector<Cyc>> solve(const Mat& A, const std::vector<Cyc>& b) {
  if (b.size() != A.rows) throw HopfError("linalg/shape", "solve shape mismatch");
  Mat aug(A.rows, A.cols + 1);
  for (size_t i = 0; i < A.rows; ++i) {
    for (size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  // Eliminate on the coefficient columns only.
  size_t row = 0;
  std::vector<size_t> pivots;
  for (size_t col = 0; col < A.cols && row < A.rows; ++col) {
    size_t pr = row;
    while (pr < A.rows && aug.at(pr, col).is_zero()) pr++;
    if (pr == A.rows) continue;
    if (pr != row)
      for (size_t j = 0; j <= A.cols; ++j) std::swap(aug.at(pr, j), aug.at(row, j));
    Cyc inv = aug.at(row, col).inverse();
    for (size_t j = col; j <= A.cols; ++j) aug.at(row, j) *= inv;
    for (size_t r2 = 0; r2 < A.rows; ++r2) {
      if (r2 == row || aug.at(r2, col).is_zero()) continue;
      Cyc f = aug.at(r2, col);
      for (size_t j = col; j <= A.cols; ++j) aug.at(r2, j) -= f * aug.at(row, j);
    }
    pivots.push_back(col);
    row++;
  }
  for (size_t r2 = row; r2 < A.rows; ++r2)
    if (!aug.at(r2, A.cols).is_zero()) return std::nullopt;
  std::vector<Cyc> x(A.cols);
  for (size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug.at(pi, A.cols);
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows != m.cols) throw HopfError("linalg/shape", "inverse of non-square");
  Mat aug(m.rows, 2 * m.cols);
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols + i) = Cyc(1);
  }
  std::vector<size_t> pivots;
  size_t rk = rref(aug, &pivots);
  if (rk != m.rows || (rk > 0 && pivots.back() >= m.cols)) return std::nullopt;
  Mat out(m.rows, m.cols);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) out.at(i, j) = aug.at(i, m.cols + j);
  return out;
}

}  // namespace hopfinv
