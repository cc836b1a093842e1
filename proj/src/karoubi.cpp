#include "interpcat/karoubi.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

namespace interpcat {

namespace {

int label_size(const SimpleLabel& l) { return l.black.size() + l.white.size(); }

void check_budget(const ObjectSignature& sig) {
  if (sig.size > kKaroubiSizeBudget)
    throw DomainError("size budget exceeded: objects of size " + std::to_string(sig.size) +
                      " > " + std::to_string(kKaroubiSizeBudget));
}

// All permutations of {0..n-1} preserving each of the given index groups.
std::vector<std::vector<int>> group_elements(int n, const std::vector<std::vector<int>>& groups) {
  std::vector<std::vector<int>> out;
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::function<void(size_t)> rec = [&](size_t g) {
    if (g == groups.size()) {
      out.push_back(perm);
      return;
    }
    std::vector<int> images = groups[g];
    std::sort(images.begin(), images.end());
    do {
      for (size_t i = 0; i < images.size(); ++i) perm[static_cast<size_t>(groups[g][i])] = images[i];
      rec(g + 1);
    } while (std::next_permutation(images.begin(), images.end()));
    for (int i : groups[g]) perm[static_cast<size_t>(i)] = i;
  };
  rec(0);
  return out;
}

int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    size_t len = 0;
    for (size_t j = i; !seen[j]; j = static_cast<size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

struct Memo {
  std::mutex mu;
  // (flavor, label) -> multiplicities of every L(rho) in ([|label|], y_label).
  std::map<std::pair<Flavor, SimpleLabel>, std::map<SimpleLabel, int>> lower;
  std::map<std::pair<Flavor, SimpleLabel>, RatFunc> dims;
};

Memo& memo() {
  static Memo m;
  return m;
}

int to_count(const Rational& q, const std::string& what) {
  if (q.get_den() != 1 || q < 0 || q > 1000000)
    throw DomainError("non-generic evaluation point: " + what + " evaluated to " + q.get_str());
  return static_cast<int>(q.get_num().get_si());
}

std::map<SimpleLabel, int> counts_at(const KaroubiObject& x, const Rational& t0, int below = -1);

const std::map<SimpleLabel, int>& lower_counts(Flavor f, const SimpleLabel& nu) {
  auto key = std::make_pair(f, nu);
  {
    std::lock_guard<std::mutex> lock(memo().mu);
    auto it = memo().lower.find(key);
    if (it != memo().lower.end()) return it->second;
  }
  KaroubiObject y{label_object(f, nu), label_idempotent(f, nu)};
  auto [p1, p2] = generic_points();
  // L(nu) sits in Y_nu once; the same-size labels are killed by y_nu.
  const int n = label_size(nu);
  auto c1 = counts_at(y, p1, n);
  if (counts_at(y, p2, n) != c1) throw DomainError("non-generic evaluation point while peeling " + nu.to_string());
  c1[nu] = 1;
  std::lock_guard<std::mutex> lock(memo().mu);
  return memo().lower.emplace(key, std::move(c1)).first->second;
}

// Multiplicities b_nu(X) at t0, optionally only for |nu| < below.
std::map<SimpleLabel, int> counts_at(const KaroubiObject& x, const Rational& t0, int below) {
  check_budget(x.sig);
  const Flavor f = x.sig.flavor;
  std::map<SimpleLabel, int> result;
  for (const SimpleLabel& nu : labels_below(x.sig)) {
    if (below >= 0 && label_size(nu) >= below) continue;
    KaroubiObject y{label_object(f, nu), label_idempotent(f, nu)};
    int h = to_count(hom_dimension_at(y, x, t0), "Hom dimension");
    if (label_size(nu) > 0) {
      for (const auto& [rho, a] : lower_counts(f, nu)) {
        if (rho == nu) continue;
        auto it = result.find(rho);
        if (it != result.end()) h -= a * it->second;
      }
    }
    if (h < 0) throw DomainError("negative multiplicity while peeling " + nu.to_string());
    result[nu] = h;
  }
  return result;
}

}  // namespace

// ---------------------------------------------------------------- objects

KaroubiObject KaroubiObject::make(Morphism e) {
  if (!is_idempotent(e)) throw DomainError("KaroubiObject needs an idempotent");
  ObjectSignature s = e.source;
  return {s, std::move(e)};
}

std::string label_string(Flavor f, const SimpleLabel& l) {
  if (f == Flavor::GL) return l.to_string();
  return l.black.to_string();
}

ObjectSignature label_object(Flavor f, const SimpleLabel& l) {
  if (f == Flavor::GL) return ObjectSignature::gl(l.black.size(), l.white.size());
  if (!l.white.empty()) throw DomainError(flavor_name(f) + " labels are single partitions");
  return ObjectSignature::make(f, l.black.size());
}

bool is_idempotent(const Morphism& f) {
  if (!f.is_endomorphism()) throw DomainError("is_idempotent needs an endomorphism");
  return compose(f, f) == f;
}

Morphism young_symmetrizer(const Partition& lambda, const ObjectSignature& sig) {
  const int n = lambda.size();
  if (sig.size != n) throw DomainError("Young symmetrizer: |lambda| must equal the object size");
  if (sig.flavor == Flavor::GL && sig.colors.find_first_not_of(sig.colors.substr(0, 1)) != std::string::npos)
    throw DomainError("Young symmetrizer on a GL object needs strands of one colour");
  if (n == 0) return Morphism::identity(sig);
  std::vector<std::vector<int>> rows, cols(static_cast<size_t>(lambda.part(0)));
  int idx = 0;
  for (int i = 0; i < lambda.length(); ++i) {
    rows.emplace_back();
    for (int j = 0; j < lambda.part(i); ++j) {
      rows.back().push_back(idx);
      cols[static_cast<size_t>(j)].push_back(idx);
      ++idx;
    }
  }
  Morphism a(sig, sig), b(sig, sig);
  for (const auto& p : group_elements(n, rows)) a.add_term(permutation_diagram(sig, p), RatFunc(1));
  for (const auto& p : group_elements(n, cols))
    b.add_term(permutation_diagram(sig, p), RatFunc(permutation_sign(p)));
  Integer nfact = 1;
  for (int k = 2; k <= n; ++k) nfact *= k;
  Rational norm(standard_tableaux_count(lambda), nfact);
  norm.canonicalize();
  return RatFunc(norm) * compose(a, b);
}

Morphism young_symmetrizer(const Partition& lambda, Flavor f) {
  if (f == Flavor::GL) return young_symmetrizer(lambda, ObjectSignature::gl(lambda.size(), 0));
  return young_symmetrizer(lambda, ObjectSignature::make(f, lambda.size()));
}

Morphism young_symmetrizer(const BiPartition& lambda) {
  return tensor(young_symmetrizer(lambda.black, ObjectSignature::gl(lambda.black.size(), 0)),
                young_symmetrizer(lambda.white, ObjectSignature::gl(0, lambda.white.size())));
}

Morphism label_idempotent(Flavor f, const SimpleLabel& l) {
  if (f == Flavor::GL) return young_symmetrizer(l);
  if (!l.white.empty()) throw DomainError(flavor_name(f) + " labels are single partitions");
  return young_symmetrizer(l.black, f);
}

Morphism special_p(int n) {
  if (n <= 1) throw DomainError("special_p needs n > 1");
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= n - 2; ++i) blocks.push_back({i, -i});
  blocks.push_back({n - 1, n, -(n - 1), -n});
  return Morphism::from_diagram(canonicalize_partition(n, n, blocks));
}

// ---------------------------------------------------------------- promotion

PromotionMaps promotion_maps(const ObjectSignature& small, bool t_is_zero) {
  const Flavor f = small.flavor;
  if (f == Flavor::S) {
    const int n = small.size + 1;
    if (n == 1) {
      if (t_is_zero) throw DomainError("promotion from [0] divides by t and is undefined at t = 0");
      return {Morphism::from_diagram(canonicalize_partition(0, 1, {{-1}})),
              Morphism::from_diagram(canonicalize_partition(1, 0, {{1}})), RatFunc(1) / RatFunc::t()};
    }
    std::vector<std::vector<int>> up, down;
    for (int i = 1; i <= n - 2; ++i) {
      up.push_back({i, -i});
      down.push_back({i, -i});
    }
    up.push_back({n - 1, -(n - 1), -n});
    down.push_back({n - 1, n, -(n - 1)});
    return {Morphism::from_diagram(canonicalize_partition(n - 1, n, up)),
            Morphism::from_diagram(canonicalize_partition(n, n - 1, down)), RatFunc(1)};
  }
  if (is_brauer_flavor(f)) {
    if (t_is_zero) throw DomainError("Brauer promotion divides by t and is undefined at t = 0");
    const int n = small.size + 2;
    std::vector<std::vector<int>> up;
    for (int i = 1; i <= n - 2; ++i) up.push_back({i, -i});
    up.push_back({-(n - 1), -n});
    Diagram phi = make_brauer(f, n - 2, n, up);
    return {Morphism::from_diagram(phi), Morphism::from_diagram(flip(phi)), RatFunc(1) / loop_value(f)};
  }
  // GL: small must be the standard word [r-1, s-1].
  const int r = small.blacks() + 1, s = small.whites() + 1;
  if (small != ObjectSignature::gl(r - 1, s - 1))
    throw DomainError("GL promotion expects a standard object [r,s] = 1^r 0^s");
  const std::string big = ObjectSignature::gl(r, s).colors;
  auto src_white = [&](int j) { return r - 1 + j; };
  auto tgt_black = [&](int i) { return -i; };
  auto tgt_white = [&](int j) { return -(r + j); };
  std::vector<std::vector<int>> standard;
  for (int i = 1; i <= r - 1; ++i) standard.push_back({i, tgt_black(i)});
  for (int j = 1; j <= s - 1; ++j) standard.push_back({src_white(j), tgt_white(j + 1)});
  standard.push_back({tgt_black(r), tgt_white(1)});
  Diagram phi_std = make_walled(small.colors, big, standard);
  Morphism phi_prime = Morphism::from_diagram(flip(phi_std));
  if (!t_is_zero) return {Morphism::from_diagram(phi_std), phi_prime, RatFunc(1) / RatFunc::t()};
  std::vector<std::vector<int>> zero;
  if (s >= 2) {
    for (int i = 1; i <= r - 1; ++i) zero.push_back({i, tgt_black(i)});
    zero.push_back({src_white(1), tgt_white(1)});
    for (int j = 2; j <= s - 1; ++j) zero.push_back({src_white(j), tgt_white(j + 1)});
    zero.push_back({tgt_black(r), tgt_white(2)});
  } else if (r >= 2) {
    for (int i = 1; i <= r - 2; ++i) zero.push_back({i, tgt_black(i)});
    zero.push_back({r - 1, tgt_black(r)});
    zero.push_back({tgt_black(r - 1), tgt_white(1)});
    for (int j = 1; j <= s - 1; ++j) zero.push_back({src_white(j), tgt_white(j + 1)});
  } else {
    throw DomainError("GL promotion from [0,0] is undefined at t = 0");
  }
  return {Morphism::from_diagram(make_walled(small.colors, big, zero)), phi_prime, RatFunc(1)};
}

Morphism promote(const Morphism& f, bool t_is_zero) {
  if (!is_idempotent(f)) throw DomainError("promote needs an idempotent input");
  PromotionMaps maps = promotion_maps(f.source, t_is_zero);
  return maps.scale * compose(maps.phi, compose(f, maps.phi_prime));
}

std::pair<Morphism, Morphism> end1_primitive_idempotents() {
  ObjectSignature one = ObjectSignature::make(Flavor::S, 1);
  Morphism f = Morphism::from_diagram(canonicalize_partition(1, 1, {{1}, {-1}}), RatFunc(1) / RatFunc::t());
  return {f, Morphism::identity(one) - f};
}

// ---------------------------------------------------------------- multiplicities

std::pair<Rational, Rational> generic_points() {
  return {ratio(1000003, 999983), ratio(1000033, 999979)};
}

Rational hom_dimension_at(const KaroubiObject& y, const KaroubiObject& x, const Rational& t0) {
  const Flavor f = x.sig.flavor;
  if (y.sig.flavor != f) throw DomainError("Hom between objects of different flavors");
  PointMorphism fx = specialize(x.idem, t0), ey = specialize(y.idem, t0);
  std::vector<std::pair<const Diagram*, Rational>> fterms, eterms;
  for (const auto& [d, c] : fx.terms) fterms.emplace_back(&d, c);
  for (const auto& [d, c] : ey.terms) eterms.emplace_back(&d, c);
  const Rational loop = loop_value(f, t0);
  std::vector<Rational> pows{Rational(1)};
  auto power = [&](int k) -> const Rational& {
    while (static_cast<int>(pows.size()) <= k) pows.push_back(pows.back() * loop);
    return pows[static_cast<size_t>(k)];
  };
  Rational sum = 0;
  for (const Diagram& g : enumerate_basis(f, y.sig, x.sig)) {
    for (const auto& [b, eb] : eterms) {
      Composite gb = compose(g, *b);
      for (const auto& [a, fa] : fterms) {
        Composite agb = compose(*a, gb.diagram);
        if (agb.diagram == g) sum += fa * eb * power(gb.middle + agb.middle);
      }
    }
  }
  return sum;
}

std::vector<SimpleLabel> labels_below(const ObjectSignature& sig) {
  std::vector<SimpleLabel> out;
  if (sig.flavor == Flavor::GL) {
    const int r = sig.blacks(), s = sig.whites();
    for (int i = std::min(r, s); i >= 0; --i)
      for (const auto& b : partitions_of(r - i))
        for (const auto& w : partitions_of(s - i)) out.push_back({b, w});
    return out;
  }
  const int n = sig.size;
  const int step = sig.flavor == Flavor::S ? 1 : 2;
  for (int k = n % step; k <= n; k += step)
    for (const auto& p : partitions_of(k)) out.push_back(label_of(p));
  return out;
}

int multiplicity(const KaroubiObject& x, const SimpleLabel& lambda, const Rational& t0) {
  auto [p1, p2] = generic_points();
  const Rational other = t0 == p2 ? p1 : p2;
  auto c0 = counts_at(x, t0);
  auto c1 = counts_at(x, other);
  if (c0 != c1)
    throw DomainError("non-generic evaluation point t0 = " + t0.get_str() +
                      ": multiplicities disagree with an independent point");
  auto it = c0.find(lambda);
  return it == c0.end() ? 0 : it->second;
}

RatFunc dim_simple(const SimpleLabel& lambda, Flavor f) {
  if (f == Flavor::Sp) throw DomainError("dim_simple is not provided for the Sp flavor");
  auto key = std::make_pair(f, lambda);
  {
    std::lock_guard<std::mutex> lock(memo().mu);
    auto it = memo().dims.find(key);
    if (it != memo().dims.end()) return it->second;
  }
  check_budget(label_object(f, lambda));
  RatFunc d = trace(label_idempotent(f, lambda));
  if (label_size(lambda) > 0)
    for (const auto& [rho, a] : lower_counts(f, lambda))
      if (!(rho == lambda) && a) d -= RatFunc(a) * dim_simple(rho, f);
  std::lock_guard<std::mutex> lock(memo().mu);
  memo().dims.emplace(key, d);
  return d;
}

std::vector<std::pair<SimpleLabel, int>> decompose(const KaroubiObject& x) {
  auto [p1, p2] = generic_points();
  auto c1 = counts_at(x, p1);
  if (counts_at(x, p2) != c1) throw DomainError("non-generic evaluation point in decompose");
  std::vector<std::pair<SimpleLabel, int>> out;
  RatFunc total(0);
  for (const auto& nu : labels_below(x.sig)) {
    const int m = c1[nu];
    if (!m) continue;
    out.emplace_back(nu, m);
    total += RatFunc(m) * dim_simple(nu, x.sig.flavor);
  }
  if (!(total == trace(x.idem)))
    throw DomainError("accounting identity failed: sum of dimensions " + total.to_string() +
                      " != trace " + trace(x.idem).to_string());
  return out;
}

}  // namespace interpcat
