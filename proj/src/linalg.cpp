#include "interpcat/linalg.hpp"

#include <utility>

namespace interpcat {

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows, m.cols);
  for (size_t i = 0; i < m.data.size(); ++i) r.data[i] = Rational(static_cast<long>(m.data[i]));
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RationalMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    const Rational inv = 1 / m.at(row, col);
    for (int j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      const Rational f = m.at(i, col);
      for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(RationalMatrix m) {
  // Forward elimination only.
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = col; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    for (int i = row + 1; i < m.rows; ++i) {
      if (m.at(i, col) == 0) continue;
      const Rational f = m.at(i, col) / m.at(row, col);
      for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    ++row;
  }
  return row;
}

std::vector<std::vector<Rational>> nullspace(RationalMatrix m) {
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    std::vector<Rational> v(static_cast<size_t>(m.cols), Rational(0));
    v[static_cast<size_t>(free)] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(RationalMatrix m) {
  if (m.rows != m.cols) throw DomainError("determinant of a non-square matrix");
  Rational det = 1;
  const int n = m.rows;
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (m.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (m.at(i, col) == 0) continue;
      const Rational f = m.at(i, col) / m.at(col, col);
      for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return det;
}

RatFunc determinant(DenseMatrix<RatFunc> m) {
  if (m.rows != m.cols) throw DomainError("determinant of a non-square matrix");
  // Bareiss elimination keeps intermediate entries polynomial when the input is.
  const int n = m.rows;
  RatFunc sign(1), prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k).is_zero()) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m.at(i, k).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) return RatFunc(0);
      for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    }
    prev = m.at(k, k);
  }
  if (n == 0) return RatFunc(1);
  return sign * m.at(n - 1, n - 1);
}

bool EchelonBasis::add(std::vector<Rational> v) {
  if (static_cast<int>(v.size()) != dim_) throw DomainError("EchelonBasis: wrong vector length");
  for (size_t r = 0; r < rows_.size(); ++r) {
    const int p = pivots_[r];
    if (v[static_cast<size_t>(p)] == 0) continue;
    const Rational f = v[static_cast<size_t>(p)];
    const auto& row = rows_[r];
    for (int j = p; j < dim_; ++j)
      if (row[static_cast<size_t>(j)] != 0) v[static_cast<size_t>(j)] -= f * row[static_cast<size_t>(j)];
  }
  int p = -1;
  for (int j = 0; j < dim_; ++j)
    if (v[static_cast<size_t>(j)] != 0) {
      p = j;
      break;
    }
  if (p < 0) return false;
  const Rational inv = 1 / v[static_cast<size_t>(p)];
  for (int j = p; j < dim_; ++j) v[static_cast<size_t>(j)] *= inv;
  // Keep earlier rows reduced at the new pivot so reduction stays one pass.
  for (auto& row : rows_) {
    if (row[static_cast<size_t>(p)] == 0) continue;
    const Rational f = row[static_cast<size_t>(p)];
    for (int j = p; j < dim_; ++j) row[static_cast<size_t>(j)] -= f * v[static_cast<size_t>(j)];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

}  // namespace interpcat
