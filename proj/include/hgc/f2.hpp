#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hgc/base.hpp"

namespace hgc {

// Dense matrix over F2. Rows are vectors of 0/1 bytes; sizes in this
// project stay small (a few hundred at most), so no bit packing.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

  static F2Matrix identity(int n) {
    F2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  uint8_t& operator()(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  uint8_t operator()(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  bool operator==(const F2Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const F2Matrix& o) const { return !(*this == o); }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  bool is_zero() const {
    for (uint8_t v : a_)
      if (v) return false;
    return true;
  }

  F2Matrix operator*(const F2Matrix& o) const {
    require(cols_ == o.rows_, "matrix-shape", "F2 product shape mismatch");
    F2Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k)
        if ((*this)(i, k))
          for (int j = 0; j < o.cols_; ++j) r(i, j) ^= o(k, j);
    return r;
  }

  F2Matrix operator+(const F2Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix-shape", "F2 sum shape mismatch");
    F2Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] ^= o.a_[i];
    return r;
  }

  F2Matrix transposed() const {
    F2Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  std::vector<uint8_t> apply(const std::vector<uint8_t>& v) const {
    require(int(v.size()) == cols_, "matrix-shape", "F2 apply shape mismatch");
    std::vector<uint8_t> out(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
      uint8_t s = 0;
      for (int j = 0; j < cols_; ++j) s ^= (*this)(i, j) & v[j];
      out[i] = s;
    }
    return out;
  }

  // Row echelon form; returns rank. Operates on a copy unless in place.
  int rank() const {
    F2Matrix m = *this;
    return m.reduce_in_place();
  }

  int reduce_in_place() {
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int piv = -1;
      for (int i = r; i < rows_; ++i)
        if ((*this)(i, c)) { piv = i; break; }
      if (piv < 0) continue;
      swap_rows(piv, r);
      for (int i = 0; i < rows_; ++i)
        if (i != r && (*this)(i, c))
          for (int j = c; j < cols_; ++j) (*this)(i, j) ^= (*this)(r, j);
      ++r;
    }
    return r;
  }

  bool invertible() const { return rows_ == cols_ && rank() == rows_; }

  F2Matrix inverse() const {
    require(rows_ == cols_, "matrix-shape", "inverse of non-square F2 matrix");
    F2Matrix m = *this;
    F2Matrix inv = identity(rows_);
    int r = 0;
    for (int c = 0; c < cols_; ++c) {
      int piv = -1;
      for (int i = r; i < rows_; ++i)
        if (m(i, c)) { piv = i; break; }
      if (piv < 0) throw Error("F2 matrix not invertible");
      m.swap_rows(piv, r);
      inv.swap_rows(piv, r);
      for (int i = 0; i < rows_; ++i)
        if (i != r && m(i, c)) {
          for (int j = 0; j < cols_; ++j) {
            m(i, j) ^= m(r, j);
            inv(i, j) ^= inv(r, j);
          }
        }
      ++r;
    }
    if (r != rows_) throw Error("F2 matrix not invertible");
    return inv;
  }

  // Basis of the null space (as column vectors collected in a matrix whose
  // columns are kernel generators).
  F2Matrix kernel_basis() const {
    F2Matrix m = *this;
    std::vector<int> pivot_col;
    int r = 0;
    std::vector<int> where(cols_, -1);
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int piv = -1;
      for (int i = r; i < rows_; ++i)
        if (m(i, c)) { piv = i; break; }
      if (piv < 0) continue;
      m.swap_rows(piv, r);
      for (int i = 0; i < rows_; ++i)
        if (i != r && m(i, c))
          for (int j = c; j < cols_; ++j) m(i, j) ^= m(r, j);
      where[c] = r;
      pivot_col.push_back(c);
      ++r;
    }
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
      if (where[c] < 0) free_cols.push_back(c);
    F2Matrix out(cols_, int(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
      int fc = free_cols[k];
      out(fc, int(k)) = 1;
      for (int c = 0; c < cols_; ++c)
        if (where[c] >= 0) out(c, int(k)) = m(where[c], fc);
    }
    return out;
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

  std::string to_string() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) s += (*this)(i, j) ? '1' : '0';
      s += '\n';
    }
    return s;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<uint8_t> a_;
};

// Quotient-space helper: given cycle vectors Z (columns) and boundary
// vectors B (columns) with B <= span(Z), produce representatives of a basis
// of span(Z)/span(B). Used for homology over F2.
struct F2Quotient {
  std::vector<std::vector<uint8_t>> reps;  // ambient-coordinates representatives
  int dim = 0;
};

inline F2Quotient f2_quotient(const F2Matrix& cycles, const F2Matrix& boundaries) {
  // Greedy: extend an echelon basis of span(B) by columns of Z.
  int n = cycles.rows();
  F2Quotient q;
  std::vector<std::vector<uint8_t>> ech;   // echelon rows (vectors in ambient space)
  std::vector<int> pivot_of;               // pivot index per echelon row
  auto reduce = [&](std::vector<uint8_t> v) {
    for (size_t i = 0; i < ech.size(); ++i)
      if (v[pivot_of[i]])
        for (int j = 0; j < n; ++j) v[j] ^= ech[i][j];
    return v;
  };
  auto insert = [&](const std::vector<uint8_t>& v) -> bool {
    std::vector<uint8_t> w = reduce(v);
    for (int j = 0; j < n; ++j)
      if (w[j]) {
        ech.push_back(w);
        pivot_of.push_back(j);
        return true;
      }
    return false;
  };
  for (int c = 0; c < boundaries.cols(); ++c) {
    std::vector<uint8_t> v(n);
    for (int i = 0; i < n; ++i) v[i] = boundaries(i, c);
    insert(v);
  }
  for (int c = 0; c < cycles.cols(); ++c) {
    std::vector<uint8_t> v(n);
    for (int i = 0; i < n; ++i) v[i] = cycles(i, c);
    if (insert(v)) {
      q.reps.push_back(v);
      ++q.dim;
    }
  }
  return q;
}

}  // namespace hgc
