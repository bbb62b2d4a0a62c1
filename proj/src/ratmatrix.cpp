#include "msr/ratmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace msr {

RrefResult rref(const RationalMatrix& m) {
  RrefResult res;
  res.rref = m;
  RationalMatrix& a = res.rref;
  int pivot_row = 0;
  for (int col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    int sel = -1;
    for (int r = pivot_row; r < a.rows(); ++r) {
      if (!is_zero(a.at(r, col))) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != pivot_row) {
      for (int c = 0; c < a.cols(); ++c) std::swap(a.at(sel, c), a.at(pivot_row, c));
    }
    Rational inv = a.at(pivot_row, col);
    for (int c = col; c < a.cols(); ++c) a.at(pivot_row, c) /= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || is_zero(a.at(r, col))) continue;
      Rational f = a.at(r, col);
      for (int c = col; c < a.cols(); ++c) a.at(r, c) -= f * a.at(pivot_row, c);
    }
    res.pivot_cols.push_back(col);
    ++pivot_row;
  }
  res.rank = static_cast<int>(res.pivot_cols.size());
  int next = 0;
  for (int c = 0; c < a.cols(); ++c) {
    if (next < static_cast<int>(res.pivot_cols.size()) && res.pivot_cols[next] == c) {
      ++next;
    } else {
      res.free_cols.push_back(c);
    }
  }
  return res;
}

std::vector<RationalVector> solve_parametric(const RationalMatrix& m) {
  RrefResult r = rref(m);
  std::vector<RationalVector> basis;
  basis.reserve(r.free_cols.size());
  for (int f : r.free_cols) {
    RationalVector w(m.cols());
    w[f] = 1;
    for (size_t i = 0; i < r.pivot_cols.size(); ++i) {
      w[r.pivot_cols[i]] = -r.rref.at(static_cast<int>(i), f);
    }
    basis.push_back(std::move(w));
  }
  return basis;
}

Rational inner_product(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner product dimension mismatch");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalMatrix gram_matrix(const std::vector<RationalVector>& vectors) {
  int n = static_cast<int>(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != vectors.front().size())
      throw std::invalid_argument("gram_matrix: mixed vector dimensions");
  }
  RationalMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Rational p = inner_product(vectors[i], vectors[j]);
      g.at(i, j) = p;
      g.at(j, i) = p;
    }
  }
  return g;
}

RationalMatrix matrix_from_rows(const std::vector<RationalVector>& rows) {
  int r = static_cast<int>(rows.size());
  int c = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("matrix_from_rows: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

int rank(const RationalMatrix& m) { return rref(m).rank; }

namespace {

Rational quadratic_form(const RationalMatrix& m, const RationalVector& x) {
  Rational s = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) s += x[i] * m.at(i, j) * x[j];
  return s;
}

}  // namespace

PsdResult psd_pivots(const RationalMatrix& input) {
  if (!input.symmetric()) throw std::invalid_argument("psd_pivots: matrix not symmetric");
  int n = input.rows();
  RationalMatrix m = input;
  // Congruence transform tracker: reduced = T * input * T^T, so a bad spot in
  // the reduced matrix maps back through rows of T.
  RationalMatrix t = RationalMatrix::identity(n);
  std::vector<char> done(n, 0);
  PsdResult res;

  auto emit_witness = [&](RationalVector x, const char* what) {
    Rational val = quadratic_form(input, x);
    if (sgn(val) >= 0) throw std::logic_error(std::string("psd_pivots: bad witness from ") + what);
    res.psd = false;
    res.witness = std::move(x);
    res.witness_value = val;
  };

  int remaining = n;
  while (remaining > 0) {
    int neg = -1, pos = -1;
    for (int i = 0; i < n && neg < 0; ++i)
      if (!done[i] && sgn(m.at(i, i)) < 0) neg = i;
    if (neg >= 0) {
      RationalVector x(n);
      for (int c = 0; c < n; ++c) x[c] = t.at(neg, c);
      emit_witness(std::move(x), "negative diagonal");
      return res;
    }
    for (int i = 0; i < n && pos < 0; ++i)
      if (!done[i] && sgn(m.at(i, i)) > 0) pos = i;
    if (pos < 0) {
      // All remaining diagonals are zero: any nonzero off-diagonal entry in
      // the remaining block refutes psd.
      for (int i = 0; i < n; ++i) {
        if (done[i]) continue;
        for (int j = i + 1; j < n; ++j) {
          if (done[j] || is_zero(m.at(i, j))) continue;
          int s = sgn(m.at(i, j));
          RationalVector x(n);
          for (int c = 0; c < n; ++c) x[c] = t.at(i, c) - Rational(s) * t.at(j, c);
          emit_witness(std::move(x), "zero diagonal with nonzero off-diagonal");
          return res;
        }
      }
      for (int i = 0; i < n; ++i)
        if (!done[i]) res.pivots.push_back(0);
      break;
    }
    Rational d = m.at(pos, pos);
    res.pivots.push_back(d);
    std::vector<Rational> factor(n, Rational(0));
    for (int j = 0; j < n; ++j)
      if (!done[j] && j != pos) factor[j] = m.at(j, pos) / d;
    for (int j = 0; j < n; ++j) {
      if (done[j] || j == pos || is_zero(factor[j])) continue;
      for (int k = 0; k < n; ++k) {
        if (done[k] || k == pos) continue;
        m.at(j, k) -= factor[j] * m.at(pos, k);
      }
      for (int c = 0; c < n; ++c) t.at(j, c) -= factor[j] * t.at(pos, c);
    }
    for (int j = 0; j < n; ++j) {
      m.at(j, pos) = 0;
      m.at(pos, j) = 0;
    }
    done[pos] = 1;
    --remaining;
  }
  res.psd = true;
  return res;
}

PairwiseResult pairwise_independent(const std::vector<RationalVector>& vectors) {
  PairwiseResult res;
  int n = static_cast<int>(vectors.size());
  auto first_nonzero = [](const RationalVector& v) {
    for (size_t i = 0; i < v.size(); ++i)
      if (!is_zero(v[i])) return static_cast<int>(i);
    return -1;
  };
  for (int i = 0; i < n; ++i) {
    if (first_nonzero(vectors[i]) < 0) {
      res.ok = false;
      res.first = res.second = i + 1;
      return res;
    }
  }
  for (int i = 0; i < n; ++i) {
    int p = first_nonzero(vectors[i]);
    for (int j = i + 1; j < n; ++j) {
      if (vectors[i].size() != vectors[j].size()) continue;
      if (is_zero(vectors[j][p])) continue;
      Rational c = vectors[j][p] / vectors[i][p];
      bool multiple = true;
      for (size_t k = 0; k < vectors[i].size() && multiple; ++k)
        if (vectors[j][k] != c * vectors[i][k]) multiple = false;
      if (multiple) {
        res.ok = false;
        res.first = i + 1;
        res.second = j + 1;
        return res;
      }
    }
  }
  res.ok = true;
  return res;
}

}  // namespace msr
