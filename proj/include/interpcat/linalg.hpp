#pragma once

#include <cstddef>
#include <vector>

#include "interpcat/exactnum.hpp"

namespace interpcat {

template <class T>
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<T> data;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, T(0)) {}

  T& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  const T& at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
};

using RationalMatrix = DenseMatrix<Rational>;
using IntMatrix = DenseMatrix<long long>;

template <class T>
DenseMatrix<T> matmul(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.cols != b.rows) throw DomainError("matrix product: dimension mismatch");
  DenseMatrix<T> c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const T& x = a.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += x * b.at(k, j);
    }
  return c;
}

RationalMatrix to_rational(const IntMatrix& m);

// Rank over Q by Gaussian elimination.
int rank(RationalMatrix m);
// Basis of the right nullspace {x : m x = 0}.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m);
Rational determinant(RationalMatrix m);
RatFunc determinant(DenseMatrix<RatFunc> m);

// Incremental row-echelon basis: add vectors one by one and track the rank.
class EchelonBasis {
 public:
  explicit EchelonBasis(int dim) : dim_(dim) {}
  // Returns true when v was independent of the vectors seen so far.
  bool add(std::vector<Rational> v);
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> pivots_;
};

}  // namespace interpcat
