#include "interpcat/oracle.hpp"

namespace interpcat {

namespace {

void check_budget(int n, int k) {
  if (n < 1) throw DomainError("oracle needs n >= 1");
  long double entries = 1;
  for (int i = 0; i < k; ++i) entries *= n;
  if (entries > kOracleEntryBudget)
    throw DomainError("budget exceeded: n^" + std::to_string(k) + " entries exceed " +
                      std::to_string(kOracleEntryBudget));
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_oracle_flavor(Flavor f) {
  if (f == Flavor::Sp) throw DomainError("no classical oracle for the Sp flavor");
}

// Fills m(row, col) = 1 for every index assignment matching the pattern.
IntMatrix pattern_matrix(const Diagram& p, int n, bool strict) {
  check_oracle_flavor(p.flavor);
  const int l = p.top, m = p.bottom;
  check_budget(n, l + m);
  IntMatrix out(static_cast<int>(ipow(n, m)), static_cast<int>(ipow(n, l)));
  const int blocks = p.block_count();
  if (strict && blocks > n) return out;
  // Assign one index per block; enumerate all block assignments.
  std::vector<int> value(static_cast<size_t>(blocks), 0);
  while (true) {
    bool ok = true;
    if (strict)
      for (int a = 0; a < blocks && ok; ++a)
        for (int b = a + 1; b < blocks && ok; ++b)
          if (value[static_cast<size_t>(a)] == value[static_cast<size_t>(b)]) ok = false;
    if (ok) {
      long long col = 0, row = 0;
      for (int e = 0; e < l; ++e) col = col * n + value[p.label[static_cast<size_t>(e)]];
      for (int e = l; e < l + m; ++e) row = row * n + value[p.label[static_cast<size_t>(e)]];
      out.at(static_cast<int>(row), static_cast<int>(col)) = 1;
    }
    int i = blocks - 1;
    while (i >= 0 && ++value[static_cast<size_t>(i)] == n) value[static_cast<size_t>(i--)] = 0;
    if (i < 0) break;
  }
  return out;
}

IntMatrix int_matmul(const IntMatrix& a, const IntMatrix& b) { return matmul(a, b); }

}  // namespace

IntMatrix e_matrix(const Diagram& p, int n) { return pattern_matrix(p, n, false); }
IntMatrix delta_matrix(const Diagram& p, int n) { return pattern_matrix(p, n, true); }

RationalMatrix morphism_matrix(const Morphism& f, int n) {
  check_oracle_flavor(f.flavor());
  check_budget(n, f.source.size + f.target.size);
  RationalMatrix out(static_cast<int>(ipow(n, f.target.size)), static_cast<int>(ipow(n, f.source.size)));
  for (const auto& [d, c] : f.terms) {
    if (c.has_pole_at(Rational(n)))
      throw DomainError("idempotent not defined at this integer: pole at t = " + std::to_string(n));
    const Rational v = c.eval(Rational(n));
    IntMatrix m = e_matrix(d, n);
    for (size_t i = 0; i < m.data.size(); ++i)
      if (m.data[i]) out.data[i] += v;
  }
  return out;
}

StructureReport verify_structure_constants(const ObjectSignature& x, const ObjectSignature& y,
                                           const ObjectSignature& z, int n) {
  check_oracle_flavor(x.flavor);
  check_budget(n, x.size + y.size);
  check_budget(n, y.size + z.size);
  check_budget(n, x.size + z.size);
  StructureReport rep;
  auto qs = enumerate_basis(x.flavor, x, y), ps = enumerate_basis(x.flavor, y, z);
  std::vector<IntMatrix> qm, pm;
  for (const auto& q : qs) qm.push_back(e_matrix(q, n));
  for (const auto& p : ps) pm.push_back(e_matrix(p, n));
  for (size_t i = 0; i < ps.size(); ++i)
    for (size_t j = 0; j < qs.size(); ++j) {
      Composite c = compose(ps[i], qs[j]);
      IntMatrix lhs = int_matmul(pm[i], qm[j]);
      IntMatrix rhs = e_matrix(c.diagram, n);
      const long long scale = ipow(n, c.middle);
      for (auto& v : rhs.data) v *= scale;
      ++rep.pairs;
      const std::string name = ps[i].to_string() + " ; " + qs[j].to_string();
      rep.results.emplace_back(name, lhs == rhs);
      if (lhs == rhs)
        ++rep.passed;
      else
        rep.violations.push_back(name);
    }
  return rep;
}

StructureReport verify_structure_constants(int l, int m, int k, int n, Flavor f) {
  return verify_structure_constants(ObjectSignature::make(f, l), ObjectSignature::make(f, m),
                                    ObjectSignature::make(f, k), n);
}

int hom_dim_classical(const ObjectSignature& x, const ObjectSignature& y, int n) {
  check_oracle_flavor(x.flavor);
  // The zero space: only the empty tensor power survives.
  if (n == 0) return x.size + y.size == 0 ? 1 : 0;
  check_budget(n, x.size + y.size);
  const int len = static_cast<int>(ipow(n, x.size + y.size));
  EchelonBasis span(len);
  for (const auto& d : enumerate_basis(x.flavor, x, y)) {
    IntMatrix m = x.flavor == Flavor::S ? delta_matrix(d, n) : e_matrix(d, n);
    std::vector<Rational> v;
    v.reserve(m.data.size());
    for (long long e : m.data) v.emplace_back(static_cast<long>(e));
    span.add(std::move(v));
  }
  return span.rank();
}

int hom_dim_classical(int l, int m, int n, Flavor f) {
  return hom_dim_classical(ObjectSignature::make(f, l), ObjectSignature::make(f, m), n);
}

int functor_image_rank(const KaroubiObject& x, int n) { return rank(morphism_matrix(x.idem, n)); }

}  // namespace interpcat
