#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "hgc/base.hpp"

namespace hgc {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;

// Small dense integer matrix with exact arithmetic. All homology and
// periodic-domain computations go through this; nothing here is
// performance-critical at desk scale.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& operator()(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Int& operator()(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    require(cols_ == o.rows_, "matrix-shape", "product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k)
        if ((*this)(i, k) != 0)
          for (int j = 0; j < o.cols_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
    return r;
  }

  IntVec apply(const IntVec& v) const {
    require(int(v.size()) == cols_, "matrix-shape", "apply shape mismatch");
    IntVec out(rows_, Int(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// Smith normal form A = U * D * V with U, V unimodular; returns the diagonal
// d1 | d2 | ... (nonnegative, divisibility chain) plus the transforms.
struct SmithResult {
  std::vector<Int> diagonal;  // length min(rows, cols), trailing zeros kept
  IntMatrix u, v;             // D = u * A * v
};

inline SmithResult smith_normal_form(IntMatrix a) {
  int n = a.rows(), m = a.cols();
  SmithResult res;
  res.u = IntMatrix::identity(n);
  res.v = IntMatrix::identity(m);
  int t = 0;
  auto add_row = [&](int dst, int src, const Int& k) {  // row dst += k*src
    for (int c = 0; c < m; ++c) a(dst, c) += k * a(src, c);
    for (int c = 0; c < n; ++c) res.u(dst, c) += k * res.u(src, c);
  };
  auto add_col = [&](int dst, int src, const Int& k) {
    for (int r = 0; r < n; ++r) a(r, dst) += k * a(r, src);
    for (int r = 0; r < m; ++r) res.v(r, dst) += k * res.v(r, src);
  };
  while (t < n && t < m) {
    // find smallest nonzero entry in the remaining block
    int pr = -1, pc = -1;
    for (int i = t; i < n; ++i)
      for (int j = t; j < m; ++j)
        if (a(i, j) != 0 && (pr < 0 || cmp(abs(a(i, j)), abs(a(pr, pc))) < 0)) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    a.swap_rows(t, pr);
    res.u.swap_rows(t, pr);
    a.swap_cols(t, pc);
    res.v.swap_cols(t, pc);
    bool clean = true;
    for (int i = t + 1; i < n; ++i)
      if (a(i, t) != 0) {
        Int q = a(i, t) / a(t, t);
        // round toward zero; fine, loop repeats until clean
        add_row(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
    for (int j = t + 1; j < m; ++j)
      if (a(t, j) != 0) {
        Int q = a(t, j) / a(t, t);
        add_col(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
    if (!clean) continue;
    // check divisibility of the rest; if some entry is not divisible by the
    // pivot, mix its row in and repeat
    bool redo = false;
    for (int i = t + 1; i < n && !redo; ++i)
      for (int j = t + 1; j < m && !redo; ++j)
        if (a(i, j) % a(t, t) != 0) {
          add_row(t, i, 1);
          redo = true;
        }
    if (redo) continue;
    if (a(t, t) < 0) {
      for (int j = 0; j < m; ++j) a(t, j) = -a(t, j);
      for (int j = 0; j < n; ++j) res.u(t, j) = -res.u(t, j);
    }
    ++t;
  }
  int k = std::min(n, m);
  res.diagonal.assign(k, Int(0));
  for (int i = 0; i < t; ++i) res.diagonal[i] = a(i, i);
  return res;
}

// Basis of the integer kernel {x : A x = 0}, returned as columns.
inline IntMatrix integer_kernel(const IntMatrix& a) {
  SmithResult s = smith_normal_form(a);
  int m = a.cols();
  int r = 0;
  for (const Int& d : s.diagonal)
    if (d != 0) ++r;
  // Columns r..m-1 of V generate the kernel: A*V has D-shape columns.
  IntMatrix out(m, m - r);
  for (int j = r; j < m; ++j)
    for (int i = 0; i < m; ++i) out(i, j - r) = s.v(i, j);
  return out;
}

inline int integer_rank(const IntMatrix& a) {
  SmithResult s = smith_normal_form(a);
  int r = 0;
  for (const Int& d : s.diagonal)
    if (d != 0) ++r;
  return r;
}

// Solve A x = b over the integers; returns true and writes one solution if
// solvable (solution exact, not unique).
inline bool solve_integer(const IntMatrix& a, const IntVec& b, IntVec& x) {
  SmithResult s = smith_normal_form(a);
  IntVec c = s.u.apply(b);  // D y = c with x = V y
  int n = a.rows(), m = a.cols();
  IntVec y(m, Int(0));
  int k = std::min(n, m);
  for (int i = 0; i < k; ++i) {
    if (s.diagonal[i] == 0) {
      if (c[i] != 0) return false;
    } else {
      if (c[i] % s.diagonal[i] != 0) return false;
      y[i] = c[i] / s.diagonal[i];
    }
  }
  for (int i = k; i < n; ++i)
    if (c[i] != 0) return false;
  x = s.v.apply(y);
  return true;
}

// Exact feasibility of {x : sum of rows... } via Fourier–Motzkin: does there
// exist c with B c >= 0 (componentwise) and 1^T (B c) = 1?  Used for
// weak-admissibility: such c exists iff some nonzero nonnegative vector lies
// in the rational span of the lattice.
//
// We eliminate the variables of c one by one from the system
//   B c >= 0,  s^T c = 1   where s = column sums of B.
inline bool cone_has_nonneg_nonzero(const IntMatrix& basis_cols) {
  int n = basis_cols.rows(), k = basis_cols.cols();
  if (k == 0) return false;
  // Constraints: for each row i: sum_j B(i,j) c_j >= 0.
  // Normalization: sum_i sum_j B(i,j) c_j = 1 (an equality).
  std::vector<std::vector<Rat>> ge;  // each: coeffs[k] with ... >= coeffs[k] ... store as a*x >= rhs
  std::vector<Rat> eq(k + 1, Rat(0));
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> row(k + 1, Rat(0));
    for (int j = 0; j < k; ++j) {
      row[j] = Rat(basis_cols(i, j));
      eq[j] += Rat(basis_cols(i, j));
    }
    ge.push_back(row);
  }
  eq[k] = 1;  // sum = 1
  // Remove the equality by solving for one variable with nonzero coefficient.
  std::vector<std::vector<Rat>> sys = ge;
  int pivot = -1;
  for (int j = 0; j < k; ++j)
    if (eq[j] != 0) { pivot = j; break; }
  if (pivot < 0) return false;  // all column sums zero: positive total impossible
  // c_pivot = (1 - sum_{j!=pivot} eq_j c_j) / eq_pivot ; substitute.
  for (auto& row : sys) {
    Rat f = row[pivot] / eq[pivot];
    row[k] -= f;  // rhs contribution: row[k] is rhs (>=): a.x >= rhs ; initially 0
    for (int j = 0; j < k; ++j) row[j] -= f * eq[j];
    row[pivot] = 0;
  }
  // Now eliminate remaining variables by Fourier–Motzkin.
  std::vector<int> vars;
  for (int j = 0; j < k; ++j)
    if (j != pivot) vars.push_back(j);
  for (int v : vars) {
    std::vector<std::vector<Rat>> lower, upper, rest;
    for (auto& row : sys) {
      if (row[v] > 0) lower.push_back(row);       // c_v >= (rhs - others)/coef
      else if (row[v] < 0) upper.push_back(row);  // c_v <= ...
      else rest.push_back(row);
    }
    std::vector<std::vector<Rat>> next = rest;
    for (auto& lo : lower)
      for (auto& up : upper) {
        // combine: lo: a c >= r with a_v>0 ; up: b c >= s with b_v<0
        // a_v * up - b_v * lo eliminates v and must remain >= a_v*s - b_v*r
        std::vector<Rat> comb(k + 1, Rat(0));
        for (int j = 0; j <= k; ++j) comb[j] = lo[v] * up[j] - up[v] * lo[j];
        next.push_back(comb);
      }
    // Normalize and dedupe to keep the row count in check.
    std::vector<std::vector<Rat>> kept;
    std::vector<std::string> seen;
    for (auto& row : next) {
      Rat scale(0);
      for (int j = 0; j < k; ++j)
        if (row[j] != 0 && cmp(abs(row[j]), abs(scale)) > 0) scale = abs(row[j]);
      if (scale == 0) {
        if (row[k] > 0) return false;  // 0 >= positive: infeasible
        continue;                      // trivially satisfied
      }
      std::vector<Rat> norm(k + 1);
      std::string key;
      for (int j = 0; j <= k; ++j) {
        norm[j] = row[j] / scale;
        key += norm[j].get_str() + ";";
      }
      if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
        seen.push_back(key);
        kept.push_back(norm);
      }
    }
    sys = std::move(kept);
  }
  // All variables eliminated: rows are 0 >= rhs; feasible iff all rhs <= 0.
  for (auto& row : sys)
    if (row[k] > 0) return false;
  return true;
}

// Enumerate all integer combinations P = sum c_i * basis_i whose entries,
// added to `base`, land in {0, 1}.  Visits each solution once.  The basis
// columns are first brought to column HNF-like staircase so coefficient
// ranges can be bounded exactly from the pivot rows.
inline void enumerate_zero_one_translates(const IntMatrix& basis_cols, const IntVec& base,
                                          const std::function<void(const IntVec&)>& emit) {
  int n = basis_cols.rows(), k = basis_cols.cols();
  if (k == 0) {
    bool ok = true;
    for (const Int& x : base)
      if (x != 0 && x != 1) { ok = false; break; }
    if (ok) emit(base);
    return;
  }
  // Column echelon over Z (integer staircase): find pivot rows.
  IntMatrix b = basis_cols;
  std::vector<int> pivot_row(k, -1);
  int col = 0;
  for (int row = 0; row < n && col < k; ++row) {
    // make entries b(row, col..k-1) have a single nonzero via gcd sweeps
    int nz = -1;
    for (int j = col; j < k; ++j)
      if (b(row, j) != 0) { nz = j; break; }
    if (nz < 0) continue;
    b.swap_cols(col, nz);
    for (int j = col + 1; j < k; ++j) {
      while (b(row, j) != 0) {
        Int q = b(row, col) / b(row, j);
        for (int i = 0; i < n; ++i) b(i, col) -= q * b(i, j);
        b.swap_cols(col, j);
      }
    }
    pivot_row[col] = row;
    ++col;
  }
  int rank = col;
  // After the sweep, column d has its pivot at pivot_row[d], pivot rows
  // strictly increasing, and every column right of d vanishes at
  // pivot_row[d]. Scanning coefficients left to right therefore pins each
  // one to at most two exact values (entry at the pivot row must land on 0
  // or 1), giving a finite complete search.
  IntVec current = base;
  std::function<void(int)> rec = [&](int d) {
    if (d == rank) {
      for (const Int& x : current)
        if (x != 0 && x != 1) return;
      emit(current);
      return;
    }
    int pr = pivot_row[d];
    const Int& piv = b(pr, d);
    for (int target = 0; target <= 1; ++target) {
      Int delta = Int(target) - current[pr];
      if (delta % piv != 0) continue;
      Int c = delta / piv;
      for (int i = 0; i < n; ++i) current[i] += c * b(i, d);
      rec(d + 1);
      for (int i = 0; i < n; ++i) current[i] -= c * b(i, d);
    }
  };
  rec(0);
}

}  // namespace hgc
