#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "msr/rational.hpp"

namespace msr {

// Dense rational matrix, row-major. Systems at desk scale stay below
// ~(n-1) x (d+n), so no sparsity machinery.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  }

  static RationalMatrix identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  bool symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

struct RrefResult {
  RationalMatrix rref;
  std::vector<int> pivot_cols;  // ascending
  std::vector<int> free_cols;   // ascending
  int rank = 0;
};

// Exact Gauss-Jordan: leftmost pivot column, topmost nonzero row, full
// reduction. Deterministic, so outputs are reproducible.
RrefResult rref(const RationalMatrix& m);

// Basis of {w : M w = 0}, one generator per free column, in free-column order.
std::vector<RationalVector> solve_parametric(const RationalMatrix& m);

// Symmetric matrix of pairwise inner products. Throws on mixed dimensions.
RationalMatrix gram_matrix(const std::vector<RationalVector>& vectors);

int rank(const RationalMatrix& m);

struct PsdResult {
  bool psd = false;
  // Diagonal pivots of the congruence reduction, elimination order first,
  // then one zero per remaining row. All >= 0 exactly when psd.
  std::vector<Rational> pivots;
  // When not psd: x with x^T M x < 0, plus the (negative) value itself.
  std::optional<RationalVector> witness;
  Rational witness_value;
};

// Exact LDL^T-style congruence reduction with diagonal pivoting.
// Throws std::invalid_argument on asymmetric input.
PsdResult psd_pivots(const RationalMatrix& m);

struct PairwiseResult {
  bool ok = false;
  // 1-based indices of the offending pair (zero vector reported as (i, i)).
  int first = 0;
  int second = 0;
};

// True iff no vector is zero and no two are rational multiples of each other.
PairwiseResult pairwise_independent(const std::vector<RationalVector>& vectors);

Rational inner_product(const RationalVector& a, const RationalVector& b);

RationalMatrix matrix_from_rows(const std::vector<RationalVector>& rows);

}  // namespace msr
