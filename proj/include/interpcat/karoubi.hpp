#pragma once

#include <map>
#include <utility>
#include <vector>

#include "interpcat/homspaces.hpp"
#include "interpcat/partition.hpp"

namespace interpcat {

// Object (sig, e) of the Karoubian envelope; e must be idempotent.
struct KaroubiObject {
  ObjectSignature sig;
  Morphism idem;

  static KaroubiObject make(Morphism e);  // checks idempotency exactly
  static KaroubiObject whole(const ObjectSignature& sig) { return {sig, Morphism::identity(sig)}; }
};

// Label of an indecomposable L(lambda). S and O use `black` only.
using SimpleLabel = BiPartition;

inline SimpleLabel label_of(const Partition& p) { return {p, {}}; }
std::string label_string(Flavor f, const SimpleLabel& l);
// The object [|lambda|] or [|black|, |white|] whose top layer carries L(lambda).
ObjectSignature label_object(Flavor f, const SimpleLabel& l);

bool is_idempotent(const Morphism& f);

// Normalised Young symmetrizer on an object whose strands all carry the same colour.
Morphism young_symmetrizer(const Partition& lambda, const ObjectSignature& sig);
Morphism young_symmetrizer(const Partition& lambda, Flavor f = Flavor::S);
// y_black (x) y_white on [r,s].
Morphism young_symmetrizer(const BiPartition& lambda);
Morphism label_idempotent(Flavor f, const SimpleLabel& l);

Morphism special_p(int n);

// phi: small -> big, phi_prime: big -> small, with phi_prime o phi = (1/scale) id,
// so that promote(f) = scale * phi o f o phi_prime.
struct PromotionMaps {
  Morphism phi;
  Morphism phi_prime;
  RatFunc scale;
};
PromotionMaps promotion_maps(const ObjectSignature& small, bool t_is_zero);
Morphism promote(const Morphism& f, bool t_is_zero = false);

// Base case in End([1]) for t != 0: pi/t and 1 - pi/t.
std::pair<Morphism, Morphism> end1_primitive_idempotents();

// dim f Hom(Y, X) e at t0: trace of g -> f o g o e, which is idempotent.
Rational hom_dimension_at(const KaroubiObject& y, const KaroubiObject& x, const Rational& t0);

// Default generic evaluation points (large prime numerators/denominators).
std::pair<Rational, Rational> generic_points();

int multiplicity(const KaroubiObject& x, const SimpleLabel& lambda, const Rational& t0);
RatFunc dim_simple(const SimpleLabel& lambda, Flavor f);
inline RatFunc dim_simple(const Partition& lambda, Flavor f = Flavor::S) {
  return dim_simple(label_of(lambda), f);
}
std::vector<std::pair<SimpleLabel, int>> decompose(const KaroubiObject& x);

// Labels that can occur in an object of the given signature.
std::vector<SimpleLabel> labels_below(const ObjectSignature& sig);

constexpr int kKaroubiSizeBudget = 4;

}  // namespace interpcat
