#include "interpcat/homspaces.hpp"

#include <numeric>
#include <unordered_map>

namespace interpcat {

namespace {

void require_e_basis(const Morphism& f, const char* op) {
  if (f.basis != Basis::E) throw DomainError(std::string(op) + " expects a morphism in the e basis");
}

template <class V>
void accumulate(std::map<Diagram, V>& terms, const Diagram& d, const V& c) {
  if (c == 0) return;
  auto it = terms.find(d);
  if (it == terms.end()) {
    terms.emplace(d, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

// Cache of loop-value powers; small exponents dominate.
template <class V>
class PowerTable {
 public:
  explicit PowerTable(V base) : pows_{V(1), std::move(base)} {}
  const V& operator()(int k) {
    while (static_cast<int>(pows_.size()) <= k) pows_.push_back(pows_.back() * pows_[1]);
    return pows_[static_cast<size_t>(k)];
  }

 private:
  std::vector<V> pows_;
};

template <class V>
std::map<Diagram, V> compose_terms(const std::map<Diagram, V>& f, const std::map<Diagram, V>& g,
                                   PowerTable<V>& pow) {
  std::map<Diagram, V> out;
  for (const auto& [df, cf] : f)
    for (const auto& [dg, cg] : g) {
      Composite c = compose(df, dg);
      V coeff = cf * cg;
      if (c.middle) coeff *= pow(c.middle);
      accumulate(out, c.diagram, coeff);
    }
  return out;
}

template <class V>
std::map<Diagram, V> tensor_terms(const std::map<Diagram, V>& f, const std::map<Diagram, V>& g) {
  std::map<Diagram, V> out;
  for (const auto& [df, cf] : f)
    for (const auto& [dg, cg] : g) accumulate(out, tensor_diagram(df, dg), V(cf * cg));
  return out;
}

void check_composable(const ObjectSignature& f_source, const ObjectSignature& g_target) {
  if (f_source != g_target)
    throw DomainError("signature mismatch in compose: " + g_target.to_string() + " vs " +
                      f_source.to_string());
}

}  // namespace

// ---------------------------------------------------------------- Morphism

Morphism Morphism::identity(const ObjectSignature& sig) {
  return from_diagram(identity_diagram(sig));
}

Morphism Morphism::from_diagram(const Diagram& d, const RatFunc& coeff) {
  Morphism m(d.source(), d.target());
  m.add_term(d, coeff);
  return m;
}

RatFunc Morphism::coeff(const Diagram& d) const {
  auto it = terms.find(d);
  return it == terms.end() ? RatFunc(0) : it->second;
}

void Morphism::add_term(const Diagram& d, const RatFunc& c) {
  if (d.source() != source || d.target() != target)
    throw DomainError("diagram " + d.to_string() + " does not lie in Hom(" + source.to_string() +
                      ", " + target.to_string() + ")");
  accumulate(terms, d, c);
}

Morphism& Morphism::operator+=(const Morphism& o) {
  if (o.source != source || o.target != target || o.basis != basis)
    throw DomainError("adding morphisms from different Hom spaces");
  for (const auto& [d, c] : o.terms) accumulate(terms, d, c);
  return *this;
}

Morphism& Morphism::operator-=(const Morphism& o) {
  if (o.source != source || o.target != target || o.basis != basis)
    throw DomainError("subtracting morphisms from different Hom spaces");
  for (const auto& [d, c] : o.terms) accumulate(terms, d, RatFunc(-c));
  return *this;
}

Morphism& Morphism::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto& [d, v] : terms) v *= c;
  return *this;
}

void PointMorphism::add_term(const Diagram& d, const Rational& c) { accumulate(terms, d, c); }

Rational PointMorphism::coeff(const Diagram& d) const {
  auto it = terms.find(d);
  return it == terms.end() ? Rational(0) : it->second;
}

// ---------------------------------------------------------------- operations

RatFunc loop_value(Flavor f) { return f == Flavor::Sp ? -RatFunc::t() : RatFunc::t(); }

Rational loop_value(Flavor f, const Rational& t0) { return f == Flavor::Sp ? Rational(-t0) : t0; }

Morphism compose(const Morphism& f, const Morphism& g) {
  require_e_basis(f, "compose");
  require_e_basis(g, "compose");
  check_composable(f.source, g.target);
  Morphism out(g.source, f.target);
  PowerTable<RatFunc> pow(loop_value(f.flavor()));
  out.terms = compose_terms(f.terms, g.terms, pow);
  return out;
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  require_e_basis(f, "tensor");
  require_e_basis(g, "tensor");
  if (f.flavor() != g.flavor()) throw DomainError("tensor of morphisms of different flavors");
  Morphism out(tensor(f.source, g.source), tensor(f.target, g.target));
  out.terms = tensor_terms(f.terms, g.terms);
  return out;
}

PointMorphism specialize(const Morphism& f, const Rational& t0) {
  require_e_basis(f, "specialize");
  PointMorphism p;
  p.source = f.source;
  p.target = f.target;
  p.t0 = t0;
  for (const auto& [d, c] : f.terms) p.add_term(d, c.eval(t0));
  return p;
}

PointMorphism compose(const PointMorphism& f, const PointMorphism& g) {
  check_composable(f.source, g.target);
  if (f.t0 != g.t0) throw DomainError("composing morphisms specialised at different points");
  PointMorphism out;
  out.source = g.source;
  out.target = f.target;
  out.t0 = f.t0;
  PowerTable<Rational> pow(loop_value(f.source.flavor, f.t0));
  out.terms = compose_terms(f.terms, g.terms, pow);
  return out;
}

PointMorphism tensor(const PointMorphism& f, const PointMorphism& g) {
  if (f.t0 != g.t0) throw DomainError("tensoring morphisms specialised at different points");
  PointMorphism out;
  out.source = tensor(f.source, g.source);
  out.target = tensor(f.target, g.target);
  out.t0 = f.t0;
  out.terms = tensor_terms(f.terms, g.terms);
  return out;
}

Integer moebius(const Diagram& p, const Diagram& p2) {
  if (!refines(p, p2)) return 0;
  // For set partitions: product over blocks B of p2 of (-1)^(k-1) (k-1)!,
  // k = number of blocks of p inside B.
  std::vector<int> inside(static_cast<size_t>(p2.block_count()), 0);
  std::vector<bool> seen(static_cast<size_t>(p.block_count()), false);
  for (int e = 0; e < p.size(); ++e) {
    const int b = p.label[static_cast<size_t>(e)];
    if (seen[static_cast<size_t>(b)]) continue;
    seen[static_cast<size_t>(b)] = true;
    ++inside[p2.label[static_cast<size_t>(e)]];
  }
  Integer mu = 1;
  for (int k : inside) {
    for (int i = 2; i < k; ++i) mu *= i;
    if ((k - 1) % 2) mu = -mu;
  }
  return mu;
}

Morphism e_to_delta(const Morphism& f) {
  if (f.flavor() != Flavor::S) throw DomainError("basis change is defined for the S flavor only");
  require_e_basis(f, "e_to_delta");
  Morphism out(f.source, f.target);
  out.basis = Basis::Delta;
  for (const auto& [d, c] : f.terms)
    for (const Diagram& coarse : coarsenings(d)) accumulate(out.terms, coarse, c);
  return out;
}

Morphism delta_to_e(const Morphism& f) {
  if (f.flavor() != Flavor::S) throw DomainError("basis change is defined for the S flavor only");
  if (f.basis != Basis::Delta) throw DomainError("delta_to_e expects a morphism in the delta basis");
  Morphism out(f.source, f.target);
  for (const auto& [d, c] : f.terms)
    for (const Diagram& coarse : coarsenings(d))
      accumulate(out.terms, coarse, RatFunc(c * RatFunc(Rational(moebius(d, coarse)))));
  return out;
}

Morphism ev(const ObjectSignature& sig) {
  const ObjectSignature src = tensor(sig.dual(), sig);
  const int n = sig.size;
  std::vector<std::vector<int>> pairs;
  for (int i = 1; i <= n; ++i) pairs.push_back({i, 2 * n + 1 - i});
  return Morphism::from_diagram(make_diagram(sig.flavor, 2 * n, 0, pairs, src.colors, ""));
}

Morphism coev(const ObjectSignature& sig) {
  const ObjectSignature tgt = tensor(sig, sig.dual());
  const int n = sig.size;
  std::vector<std::vector<int>> pairs;
  for (int i = 1; i <= n; ++i) pairs.push_back({-i, -(2 * n + 1 - i)});
  return Morphism::from_diagram(make_diagram(sig.flavor, 0, 2 * n, pairs, "", tgt.colors));
}

Morphism swap(const ObjectSignature& a, const ObjectSignature& b) {
  if (a.flavor != b.flavor) throw DomainError("swap of objects of different flavors");
  std::vector<int> perm(static_cast<size_t>(a.size + b.size));
  for (int i = 0; i < a.size; ++i) perm[static_cast<size_t>(i)] = b.size + i;
  for (int j = 0; j < b.size; ++j) perm[static_cast<size_t>(a.size + j)] = j;
  return Morphism::from_diagram(permutation_diagram(tensor(a, b), perm));
}

Morphism sort_colors(const ObjectSignature& sig) {
  if (sig.flavor != Flavor::GL) return Morphism::identity(sig);
  std::vector<int> perm(static_cast<size_t>(sig.size));
  int next_black = 0, next_white = sig.blacks();
  for (int i = 0; i < sig.size; ++i)
    perm[static_cast<size_t>(i)] = sig.colors[static_cast<size_t>(i)] == '1' ? next_black++ : next_white++;
  return Morphism::from_diagram(permutation_diagram(sig, perm));
}

RatFunc trace(const Morphism& f) {
  require_e_basis(f, "trace");
  if (!f.is_endomorphism()) throw DomainError("trace of a non-endomorphism");
  RatFunc sum(0);
  if (f.flavor() == Flavor::Sp) {
    // Rep(Sp) is Rep(O) at -t with the parity-twisted braiding; the twist
    // contributes (-1)^m on End([m]).
    for (const auto& [d, c] : f.terms) {
      const int k = closure_components(d);
      RatFunc term = c * RatFunc(Poly::monomial(Rational((k % 2) ? -1 : 1), k));
      sum += (f.source.size % 2) ? -term : term;
    }
    return sum;
  }
  for (const auto& [d, c] : f.terms) sum += c * RatFunc::t_power(closure_components(d));
  return sum;
}

Rational trace(const PointMorphism& f) {
  if (f.source != f.target) throw DomainError("trace of a non-endomorphism");
  Rational sum(0);
  const Rational base = loop_value(f.source.flavor, f.t0);
  const bool twist = f.source.flavor == Flavor::Sp && f.source.size % 2;
  for (const auto& [d, c] : f.terms) sum += c * rational_pow(base, closure_components(d));
  return twist ? Rational(-sum) : sum;
}

RatFunc dimension(const ObjectSignature& sig) { return trace(Morphism::identity(sig)); }

}  // namespace interpcat
