#pragma once

#include <vector>

#include "interpcat/homspaces.hpp"
#include "interpcat/linalg.hpp"
#include "interpcat/partition.hpp"

namespace interpcat {

// Trace pairing between Hom(X, Y) and Hom(Y, X) in the e-basis:
// gram(i, j) = Tr(f_i o g_j), f_i in Hom(X, Y), g_j in Hom(Y, X).
struct GramReport {
  ObjectSignature source;
  ObjectSignature target;
  Rational t0;
  std::vector<Diagram> row_basis;  // Hom(source, target)
  std::vector<Diagram> col_basis;  // Hom(target, source)
  RationalMatrix gram;
  int rank = 0;
  int nullity = 0;
};

GramReport gram(const ObjectSignature& x, const ObjectSignature& y, const Rational& t0);
GramReport gram(int l, int m, const Rational& t0, Flavor f = Flavor::S);

// Symbolic version, only for l + m <= kSymbolicGramBudget.
constexpr int kSymbolicGramBudget = 4;
DenseMatrix<RatFunc> gram_symbolic(const ObjectSignature& x, const ObjectSignature& y);
RatFunc gram_determinant(const ObjectSignature& x, const ObjectSignature& y);

bool is_negligible(const Morphism& f, const Rational& t0);
bool is_negligible(const PointMorphism& f);
// Basis of the negligible morphisms X -> Y at t0 (the left radical of the pairing).
std::vector<PointMorphism> negligible_basis(const ObjectSignature& x, const ObjectSignature& y,
                                            const Rational& t0);

int quotient_dim(int l, int m, int n, Flavor f = Flavor::S);
std::vector<Partition> annihilated_simples(int n, int max_size);

}  // namespace interpcat
