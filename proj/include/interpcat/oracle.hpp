#pragma once

#include <string>
#include <vector>

#include "interpcat/karoubi.hpp"
#include "interpcat/linalg.hpp"

namespace interpcat {

// Matrices of diagrams acting on tensor powers of the natural n-dimensional
// representation. Index tuples are row-major with the first tensor factor most
// significant; rows index the target, columns the source.
constexpr long long kOracleEntryBudget = 1000000;

// Relaxed pattern: indices within a block agree.
IntMatrix e_matrix(const Diagram& p, int n);
// Strict pattern: additionally distinct blocks carry distinct indices.
IntMatrix delta_matrix(const Diagram& p, int n);
// Sum of c(n) e_matrix(P, n); throws when a coefficient has a pole at n.
RationalMatrix morphism_matrix(const Morphism& f, int n);

struct StructureReport {
  int pairs = 0;
  int passed = 0;
  std::vector<std::string> violations;  // "P ; Q" for failing pairs
  std::vector<std::pair<std::string, bool>> results;  // every pair, in enumeration order
};
// For all Q: X -> Y and P: Y -> Z, checks M(P) M(Q) = n^N M(P o Q).
StructureReport verify_structure_constants(const ObjectSignature& x, const ObjectSignature& y,
                                           const ObjectSignature& z, int n);
StructureReport verify_structure_constants(int l, int m, int k, int n, Flavor f = Flavor::S);

// Rank of the span of the classical diagram maps [l] -> [m].
int hom_dim_classical(const ObjectSignature& x, const ObjectSignature& y, int n);
int hom_dim_classical(int l, int m, int n, Flavor f = Flavor::S);

int functor_image_rank(const KaroubiObject& x, int n);

}  // namespace interpcat
