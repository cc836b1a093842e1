#pragma once

#include <map>
#include <string>

#include "interpcat/diagrams.hpp"
#include "interpcat/exactnum.hpp"

namespace interpcat {

enum class Basis { E, Delta };

// Finite RatFunc-combination of diagrams between two fixed objects.
class Morphism {
 public:
  ObjectSignature source;
  ObjectSignature target;
  Basis basis = Basis::E;
  std::map<Diagram, RatFunc> terms;

  Morphism() = default;
  Morphism(ObjectSignature src, ObjectSignature tgt) : source(std::move(src)), target(std::move(tgt)) {}

  static Morphism identity(const ObjectSignature& sig);
  static Morphism from_diagram(const Diagram& d, const RatFunc& coeff = RatFunc(1));

  Flavor flavor() const { return source.flavor; }
  bool is_zero() const { return terms.empty(); }
  bool is_endomorphism() const { return source == target; }
  RatFunc coeff(const Diagram& d) const;
  void add_term(const Diagram& d, const RatFunc& c);

  Morphism& operator+=(const Morphism& o);
  Morphism& operator-=(const Morphism& o);
  Morphism& operator*=(const RatFunc& c);
  friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
  friend Morphism operator-(Morphism a, const Morphism& b) { return a -= b; }
  friend Morphism operator*(const RatFunc& c, Morphism a) { return a *= c; }
  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.source == b.source && a.target == b.target && a.basis == b.basis && a.terms == b.terms;
  }
};

// The same data with coefficients specialised at a rational point t0.
class PointMorphism {
 public:
  ObjectSignature source;
  ObjectSignature target;
  Rational t0;
  std::map<Diagram, Rational> terms;

  void add_term(const Diagram& d, const Rational& c);
  Rational coeff(const Diagram& d) const;
  bool is_zero() const { return terms.empty(); }
};

// Scalar a removed middle component (loop) contributes: t, or -t for Sp.
RatFunc loop_value(Flavor f);
Rational loop_value(Flavor f, const Rational& t0);

// compose(f, g) = f o g; g acts first.
Morphism compose(const Morphism& f, const Morphism& g);
Morphism tensor(const Morphism& f, const Morphism& g);
PointMorphism specialize(const Morphism& f, const Rational& t0);
PointMorphism compose(const PointMorphism& f, const PointMorphism& g);
PointMorphism tensor(const PointMorphism& f, const PointMorphism& g);

Morphism e_to_delta(const Morphism& f);
Morphism delta_to_e(const Morphism& f);
// Moebius function of the refinement order between p and a coarsening p2.
Integer moebius(const Diagram& p, const Diagram& p2);

// ev_X : X* (x) X -> 1 and coev_X : 1 -> X (x) X*, nested arcs.
Morphism ev(const ObjectSignature& sig);
Morphism coev(const ObjectSignature& sig);
Morphism swap(const ObjectSignature& a, const ObjectSignature& b);
// Permutation isomorphism from a GL colour word to its sorted form 1^r 0^s.
Morphism sort_colors(const ObjectSignature& sig);

RatFunc trace(const Morphism& f);
Rational trace(const PointMorphism& f);
RatFunc dimension(const ObjectSignature& sig);

}  // namespace interpcat
