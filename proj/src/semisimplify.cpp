#include "interpcat/semisimplify.hpp"

namespace interpcat {

namespace {

// Tr(p o q) at t0 for single diagrams.
Rational pair_trace(const Diagram& p, const Diagram& q, const Rational& t0) {
  Composite c = compose(p, q);
  const Flavor f = c.diagram.flavor;
  Rational v = rational_pow(loop_value(f, t0), c.middle + closure_components(c.diagram));
  if (f == Flavor::Sp && c.diagram.top % 2) v = -v;
  return v;
}

RatFunc pair_trace(const Diagram& p, const Diagram& q) {
  Composite c = compose(p, q);
  const Flavor f = c.diagram.flavor;
  const int k = c.middle + closure_components(c.diagram);
  RatFunc v = f == Flavor::Sp ? RatFunc(k % 2 ? -1 : 1) * RatFunc::t_power(k) : RatFunc::t_power(k);
  if (f == Flavor::Sp && c.diagram.top % 2) v = -v;
  return v;
}

RationalMatrix transpose(const RationalMatrix& m) {
  RationalMatrix t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

}  // namespace

GramReport gram(const ObjectSignature& x, const ObjectSignature& y, const Rational& t0) {
  if (x.flavor != y.flavor) throw DomainError("gram: objects of different flavors");
  GramReport r{x, y, t0, enumerate_basis(x.flavor, x, y), enumerate_basis(x.flavor, y, x), {}, 0, 0};
  const int n = static_cast<int>(r.row_basis.size());
  r.gram = RationalMatrix(n, static_cast<int>(r.col_basis.size()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < r.gram.cols; ++j)
      r.gram.at(i, j) = pair_trace(r.row_basis[static_cast<size_t>(i)], r.col_basis[static_cast<size_t>(j)], t0);
  r.rank = rank(r.gram);
  r.nullity = n - r.rank;
  return r;
}

GramReport gram(int l, int m, const Rational& t0, Flavor f) {
  return gram(ObjectSignature::make(f, l), ObjectSignature::make(f, m), t0);
}

DenseMatrix<RatFunc> gram_symbolic(const ObjectSignature& x, const ObjectSignature& y) {
  if (x.size + y.size > kSymbolicGramBudget)
    throw DomainError("symbolic Gram matrices are limited to l + m <= " + std::to_string(kSymbolicGramBudget));
  auto rows = enumerate_basis(x.flavor, x, y), cols = enumerate_basis(x.flavor, y, x);
  DenseMatrix<RatFunc> g(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) g.at(static_cast<int>(i), static_cast<int>(j)) = pair_trace(rows[i], cols[j]);
  return g;
}

RatFunc gram_determinant(const ObjectSignature& x, const ObjectSignature& y) {
  return determinant(gram_symbolic(x, y));
}

bool is_negligible(const PointMorphism& f) {
  if (f.is_zero()) return true;
  for (const Diagram& g : enumerate_basis(f.source.flavor, f.target, f.source)) {
    Rational s = 0;
    for (const auto& [d, c] : f.terms) s += c * pair_trace(d, g, f.t0);
    if (s != 0) return false;
  }
  return true;
}

bool is_negligible(const Morphism& f, const Rational& t0) { return is_negligible(specialize(f, t0)); }

std::vector<PointMorphism> negligible_basis(const ObjectSignature& x, const ObjectSignature& y,
                                            const Rational& t0) {
  GramReport r = gram(x, y, t0);
  std::vector<PointMorphism> out;
  for (const auto& v : nullspace(transpose(r.gram))) {
    PointMorphism f{x, y, t0, {}};
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) f.add_term(r.row_basis[i], v[i]);
    out.push_back(std::move(f));
  }
  return out;
}

int quotient_dim(int l, int m, int n, Flavor f) {
  if (n < 0) throw DomainError("quotient_dim needs n >= 0");
  GramReport r = gram(l, m, Rational(n), f);
  return r.rank;
}

std::vector<Partition> annihilated_simples(int n, int max_size) {
  std::vector<Partition> out;
  for (int k = 0; k <= max_size; ++k)
    for (const auto& p : partitions_of(k))
      if (k + p.part(0) > n) out.push_back(p);
  return out;
}

}  // namespace interpcat
