#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "interpcat/exactnum.hpp"
#include "interpcat/partition.hpp"

namespace interpcat {

enum class LieFlavor { gl, osp };
std::string lie_flavor_name(LieFlavor f);
LieFlavor parse_lie_flavor(const std::string& s);  // "gl"; "osp", "o", "sp"

// c^lambda_{mu,nu}: LR tableaux of shape lambda/mu with content nu.
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);
// (s_{lambda/nu}, s_{mu/nubar}) = sum_eta c^lambda_{nu,eta} c^mu_{nubar,eta}.
long long skew_schur_pairing(const Partition& lambda, const Partition& nu, const Partition& mu,
                             const Partition& nubar);
long long gl_mixed_multiplicity(const Partition& lambda, const Partition& mu, const Partition& nu,
                                const Partition& nubar);
long long osp_multiplicity(const Partition& lambda, const Partition& mu, const Partition& nu);

// Partitions inside lambda with exactly `boxes` fewer cells.
std::vector<Partition> remove_boxes(const Partition& lambda, int boxes);

// lambda = [alpha, beta, gamma] cut under row k and right of column l.
struct TriplePartition {
  Partition alpha;
  Partition beta;
  Partition gamma;
  int k = 0;
  int l = 0;
};
TriplePartition triple_encode(const Partition& lambda, int k, int l);
// Strict decode: all five constraints must hold.
Partition triple_decode(const TriplePartition& tp);
// Glues the pieces without the length/constraint checks; alpha and beta may have
// trailing zero parts. Throws when the result is not a partition.
Partition triple_glue(const std::vector<int>& alpha, const std::vector<int>& beta, const Partition& gamma);

struct ShiftData {
  std::vector<int> a;  // length k
  std::vector<int> b;  // length l
  Partition gamma;
  Partition delta;
  int k() const { return static_cast<int>(a.size()); }
  int l() const { return static_cast<int>(b.size()); }
};

// Stable multiplicity of V_nu (osp) or V_(nu, nubar) (gl) in Hom(mu^(n), lambda^(n)).
long long stable_hc_multiplicity(const ShiftData& s, const Partition& nu, const Partition& nubar,
                                 LieFlavor f);
// lambda^(n), mu^(n) built from the shift data with gaps of at least `spacing`.
std::pair<Partition, Partition> shifted_pair(const ShiftData& s, int spacing);
// Minimal spacing for which the direct computation is in the stable range.
int stable_spacing(const Partition& nu, const Partition& nubar);
// Brylinski/King formula evaluated at the explicit pair.
long long direct_hc_multiplicity(const ShiftData& s, const Partition& nu, const Partition& nubar, LieFlavor f,
                                 int spacing);

Rational pk(const Rational& x, int k);
Rational pbark(const Rational& x, int k);

struct MomentSequence {
  LieFlavor flavor = LieFlavor::gl;
  std::map<int, Rational> values;  // k -> chi_k - psi_k, k = 1..K
  int max_k() const { return values.empty() ? 0 : values.rbegin()->first; }
  friend bool operator==(const MomentSequence&, const MomentSequence&) = default;
};

MomentSequence char_difference_forward(const std::vector<Rational>& b, const std::vector<Rational>& c, LieFlavor f,
                                       int K);
// Coefficients of z^k in the exponential central character difference.
std::vector<Rational> exponential_coefficients(const MomentSequence& m);
// mu_i shifted up for i in `up`, down for j in `down` (1-based indices).
MomentSequence weight_moment_difference(const std::vector<Rational>& mu, const std::vector<int>& up,
                                        const std::vector<int>& down, int K);

struct Decomposition {
  std::vector<int> b;
  std::vector<int> c;
};
std::optional<Decomposition> search_decomposition(const MomentSequence& m, int r, int s, int bound);
// Drops pairs b_i = c_j - 1, whose contributions cancel in every moment, and sorts.
Decomposition reduce_cancelling(Decomposition d);

}  // namespace interpcat
