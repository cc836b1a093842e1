#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "interpcat/exactnum.hpp"

namespace interpcat {

// Sp is Brauer combinatorics with the parameter sign-flipped; see homspaces.
enum class Flavor { S, GL, O, Sp };

std::string flavor_name(Flavor f);
Flavor parse_flavor(const std::string& s);
inline bool is_brauer_flavor(Flavor f) { return f == Flavor::O || f == Flavor::Sp; }

// Objects: [m] for S/O/Sp, a colour word for GL ('1' = V, '0' = V*).
// The standard GL object [r,s] is the word 1^r 0^s.
struct ObjectSignature {
  Flavor flavor = Flavor::S;
  int size = 0;
  std::string colors;

  static ObjectSignature make(Flavor f, int m);
  static ObjectSignature gl(int r, int s);
  static ObjectSignature gl_word(const std::string& colors);

  int blacks() const;
  int whites() const;
  ObjectSignature dual() const;
  std::string to_string() const;

  auto operator<=>(const ObjectSignature&) const = default;
};

ObjectSignature tensor(const ObjectSignature& a, const ObjectSignature& b);

// A diagram from `top` source endpoints to `bottom` target endpoints.
// Endpoint e < top is source endpoint e+1; endpoint top+j is target (j+1)'.
// `label` is the restricted growth string of the block partition, which is
// the canonical form: blocks numbered by first endpoint, top before bottom.
class Diagram {
 public:
  Flavor flavor = Flavor::S;
  int top = 0;
  int bottom = 0;
  std::vector<std::uint8_t> label;
  std::string top_colors;
  std::string bottom_colors;

  int size() const { return top + bottom; }
  int block_count() const;
  std::vector<std::vector<int>> blocks() const;
  // Blocks in the signed notation: +i for source i, -j for target j'.
  std::vector<std::vector<int>> signed_blocks() const;
  ObjectSignature source() const;
  ObjectSignature target() const;
  char color(int endpoint) const;
  std::string to_string() const;

  auto operator<=>(const Diagram&) const = default;
};

struct Composite {
  Diagram diagram;
  int middle = 0;  // components removed with the middle row (loops for matchings)
};

// Build a partition diagram from signed blocks; validates coverage.
Diagram canonicalize_partition(int l, int m, const std::vector<std::vector<int>>& raw_blocks);
Diagram make_brauer(Flavor f, int l, int m, const std::vector<std::vector<int>>& pairs);
Diagram make_walled(const std::string& top_colors, const std::string& bottom_colors,
                    const std::vector<std::vector<int>>& pairs);
// Generic constructor used by the JSON reader; dispatches on flavor.
Diagram make_diagram(Flavor f, int l, int m, const std::vector<std::vector<int>>& blocks,
                     const std::string& top_colors = "", const std::string& bottom_colors = "");
void validate(const Diagram& d);

// compose(P, Q) = P o Q: Q acts first, so Q.target must equal P.source.
Composite compose(const Diagram& p, const Diagram& q);
Composite compose_partition(const Diagram& p, const Diagram& q);
Composite compose_brauer(const Diagram& p, const Diagram& q);
Composite compose_walled(const Diagram& p, const Diagram& q);

Diagram tensor_diagram(const Diagram& p, const Diagram& q);
Diagram flip(const Diagram& p);
bool refines(const Diagram& p, const Diagram& p2);
std::vector<Diagram> coarsenings(const Diagram& p);
int closure_components(const Diagram& p);

Diagram identity_diagram(const ObjectSignature& sig);
// Permutation diagram sending source i to target perm[i] (0-based).
Diagram permutation_diagram(const ObjectSignature& source, const std::vector<int>& perm);

std::vector<Diagram> enumerate_basis(Flavor f, const ObjectSignature& source,
                                     const ObjectSignature& target);

Integer bell_number(int n);
Integer double_factorial(int n);

}  // namespace interpcat
