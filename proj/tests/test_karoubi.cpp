#include <numeric>

#include "dim_oracles.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "interpcat/karoubi.hpp"

using namespace interpcat;

namespace {

RatFunc t() { return RatFunc::t(); }
ObjectSignature obj(Flavor f, int m) { return ObjectSignature::make(f, m); }
Diagram S(int l, int m, std::vector<std::vector<int>> b) { return canonicalize_partition(l, m, b); }

KaroubiObject yobj(const Partition& p, Flavor f = Flavor::S) {
  return KaroubiObject::make(young_symmetrizer(p, f));
}

std::map<SimpleLabel, int> as_map(const std::vector<std::pair<SimpleLabel, int>>& v) {
  return {v.begin(), v.end()};
}

using oracle::hook_dim;
using oracle::weyl_b;
using oracle::weyl_gl;

}  // namespace

TEST_CASE("idempotent basics") {
  Morphism pi = Morphism::from_diagram(S(1, 1, {{1}, {-1}}));
  CHECK_FALSE(is_idempotent(pi));
  CHECK(is_idempotent(RatFunc(1) / t() * pi));
  CHECK(is_idempotent(Morphism::identity(obj(Flavor::S, 3))));
  CHECK_THROWS_AS(is_idempotent(Morphism::from_diagram(S(1, 2, {{1, -1, -2}}))), DomainError);
  CHECK_THROWS_AS(KaroubiObject::make(pi), DomainError);
  auto [f, g] = end1_primitive_idempotents();
  CHECK(is_idempotent(f));
  CHECK(is_idempotent(g));
  CHECK(compose(f, g) == Morphism(obj(Flavor::S, 1), obj(Flavor::S, 1)));
}

TEST_CASE("Young symmetrizers") {
  ObjectSignature two = obj(Flavor::S, 2);
  Morphism id2 = Morphism::identity(two), sw = swap(obj(Flavor::S, 1), obj(Flavor::S, 1));
  Rational half = ratio(1, 2);
  CHECK(young_symmetrizer(Partition{2}) == RatFunc(half) * (id2 + sw));
  CHECK(young_symmetrizer(Partition{1, 1}) == RatFunc(half) * (id2 - sw));
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : partitions_of(n)) {
      Morphism y = young_symmetrizer(p);
      CHECK(is_idempotent(y));
      // Trace equals the content polynomial prod (t + c) / hook.
      RatFunc content(1);
      auto hooks = hook_lengths(p);
      size_t k = 0;
      for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p.part(i); ++j) content *= (t() + RatFunc(j - i)) / RatFunc(hooks[k++]);
      CHECK(trace(y) == content);
      CHECK(is_idempotent(young_symmetrizer(p, Flavor::O)));
    }
  }
  CHECK(trace(young_symmetrizer(Partition{2, 1})) == (t() * t() * t() - t()) / RatFunc(3));
  // Distinct shapes are orthogonal.
  CHECK(compose(young_symmetrizer(Partition{2}), young_symmetrizer(Partition{1, 1})) == Morphism(two, two));
  Morphism yb = young_symmetrizer(BiPartition{Partition{1, 1}, Partition{2}});
  CHECK(yb.source == ObjectSignature::gl(2, 2));
  CHECK(is_idempotent(yb));
  CHECK_THROWS_AS(young_symmetrizer(Partition{2}, ObjectSignature::gl_word("10")), DomainError);
  CHECK_THROWS_AS(young_symmetrizer(Partition{2}, obj(Flavor::S, 3)), DomainError);
}

TEST_CASE("special p") {
  CHECK(special_p(2) == Morphism::from_diagram(S(2, 2, {{1, 2, -1, -2}})));
  for (int n = 2; n <= 4; ++n) CHECK(is_idempotent(special_p(n)));
  CHECK_THROWS_AS(special_p(1), DomainError);
  // p e_sigma p: every term has n-1, n joined on top and on bottom.
  const int n = 3;
  Morphism p = special_p(n);
  std::vector<int> perm{0, 1, 2};
  do {
    Morphism m = compose(p, compose(Morphism::from_diagram(permutation_diagram(obj(Flavor::S, n), perm)), p));
    for (const auto& [d, c] : m.terms) {
      CHECK(d.label[n - 2] == d.label[n - 1]);
      CHECK(d.label[2 * n - 2] == d.label[2 * n - 1]);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("promotion") {
  Morphism f0 = promote(Morphism::identity(obj(Flavor::S, 0)));
  CHECK(f0 == RatFunc(1) / t() * Morphism::from_diagram(S(1, 1, {{1}, {-1}})));
  CHECK_THROWS_AS(promote(Morphism::identity(obj(Flavor::S, 0)), true), DomainError);
  CHECK_THROWS_AS(promote(Morphism::from_diagram(S(1, 1, {{1}, {-1}}))), DomainError);
  auto [pi_t, one_minus] = end1_primitive_idempotents();
  CHECK(trace(promote(one_minus)) == t() - RatFunc(1));

  Morphism gl0 = promote(Morphism::identity(ObjectSignature::gl(0, 0)));
  CHECK(gl0 == RatFunc(1) / t() * compose(coev(ObjectSignature::gl(1, 0)), ev(ObjectSignature::gl(0, 1))));

  auto check_iso = [](const Morphism& f, bool zero) {
    PromotionMaps m = promotion_maps(f.source, zero);
    Morphism ft = promote(f, zero);
    CHECK(is_idempotent(ft));
    Morphism u = compose(m.phi, f), v = m.scale * compose(f, m.phi_prime);
    CHECK(compose(v, u) == f);
    CHECK(compose(u, v) == ft);
    CHECK(trace(ft) == trace(f));
    CHECK(compose(m.phi_prime, m.phi) == (RatFunc(1) / m.scale) * Morphism::identity(f.source));
  };
  for (int n = 0; n <= 3; ++n)
    for (const auto& p : partitions_of(n)) {
      check_iso(young_symmetrizer(p), false);
      if (n) check_iso(young_symmetrizer(p), true);
      check_iso(young_symmetrizer(p, Flavor::O), false);
    }
  check_iso(one_minus, false);
  for (int r = 0; r <= 2; ++r)
    for (int s = 0; s <= 2; ++s) {
      Morphism id = Morphism::identity(ObjectSignature::gl(r, s));
      check_iso(id, false);
      if (r + s >= 1 && (s + 1 >= 2 || r + 1 >= 2)) check_iso(id, true);
    }
  check_iso(young_symmetrizer(BiPartition{Partition{1, 1}, Partition{1}}), true);
  CHECK_THROWS_AS(promote(Morphism::identity(ObjectSignature::gl(0, 0)), true), DomainError);
}

TEST_CASE("dim_simple examples") {
  CHECK(dim_simple(Partition{}) == RatFunc(1));
  CHECK(dim_simple(Partition{1}) == t() - RatFunc(1));
  CHECK(dim_simple(Partition{2}) == t() * (t() - RatFunc(3)) / RatFunc(2));
  CHECK(dim_simple(Partition{1, 1}) == (t() - RatFunc(1)) * (t() - RatFunc(2)) / RatFunc(2));
  CHECK(dim_simple(BiPartition{Partition{1}, Partition{1}}, Flavor::GL) == t() * t() - RatFunc(1));
  CHECK(dim_simple(Partition{1}, Flavor::O) == t());
  CHECK(dim_simple(Partition{2}, Flavor::O) == (t() * t() + t() - RatFunc(2)) / RatFunc(2));
  CHECK(dim_simple(Partition{1, 1}, Flavor::O) == t() * (t() - RatFunc(1)) / RatFunc(2));
  CHECK(rf_eval(dim_simple(Partition{2}), 2) == -1);
  CHECK_THROWS_AS(dim_simple(Partition{5}), DomainError);
  CHECK_THROWS_AS(dim_simple(Partition{1}, Flavor::Sp), DomainError);
}

TEST_CASE("dim_simple against hook lengths") {
  for (int k = 0; k <= 4; ++k) {
    for (const auto& lam : partitions_of(k)) {
      RatFunc d = dim_simple(lam);
      REQUIRE(d.is_polynomial());
      const Poly& num = d.num();
      CHECK(num.degree() == k);
      Integer hooks = 1;
      for (int h : hook_lengths(lam)) hooks *= h;
      CHECK(num.lead() == Rational(Integer(1), hooks));
      for (int n = k + lam.part(0); n <= 12; ++n) {
        if (n - k < lam.part(0)) continue;
        std::vector<int> padded{n - k};
        padded.insert(padded.end(), lam.parts.begin(), lam.parts.end());
        CHECK(rf_eval(d, n) == static_cast<long>(hook_dim(padded)));
      }
    }
  }
}

TEST_CASE("GL dim_simple against Weyl") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; a + b <= 3; ++b)
      for (const auto& lb : partitions_of(a))
        for (const auto& lw : partitions_of(b)) {
          RatFunc d = dim_simple(BiPartition{lb, lw}, Flavor::GL);
          for (int n = lb.length() + lw.length(); n <= 9; ++n) {
            if (n == 0) continue;
            std::vector<int> w(static_cast<size_t>(n), 0);
            for (int i = 0; i < lb.length(); ++i) w[static_cast<size_t>(i)] = lb.part(i);
            for (int i = 0; i < lw.length(); ++i) w[static_cast<size_t>(n - 1 - i)] = -lw.part(i);
            CHECK(rf_eval(d, n) == weyl_gl(w));
          }
        }
}

TEST_CASE("O dim_simple against Weyl") {
  for (int k = 0; k <= 3; ++k)
    for (const auto& lam : partitions_of(k)) {
      RatFunc d = dim_simple(lam, Flavor::O);
      for (int r = std::max(1, lam.length()); r <= 5; ++r) CHECK(rf_eval(d, 2 * r + 1) == weyl_b(lam, r));
    }
}

TEST_CASE("decompose examples") {
  auto l = [](Partition p) { return label_of(std::move(p)); };
  CHECK(as_map(decompose(yobj(Partition{2}))) ==
        std::map<SimpleLabel, int>{{l({}), 2}, {l({1}), 2}, {l({2}), 1}});
  CHECK(as_map(decompose(yobj(Partition{1, 1}))) == std::map<SimpleLabel, int>{{l({1}), 1}, {l({1, 1}), 1}});
  CHECK(as_map(decompose(KaroubiObject::whole(obj(Flavor::S, 0)))) == std::map<SimpleLabel, int>{{l({}), 1}});
  CHECK(as_map(decompose(KaroubiObject::whole(obj(Flavor::O, 2)))) ==
        std::map<SimpleLabel, int>{{l({}), 1}, {l({2}), 1}, {l({1, 1}), 1}});
  CHECK(as_map(decompose(KaroubiObject::whole(ObjectSignature::gl(1, 1)))) ==
        std::map<SimpleLabel, int>{{{Partition{}, Partition{}}, 1}, {{Partition{1}, Partition{1}}, 1}});
  CHECK(multiplicity(yobj(Partition{2}), l({1}), generic_points().first) == 2);
  CHECK(multiplicity(yobj(Partition{2}), l({}), generic_points().first) == 2);
  CHECK(multiplicity(yobj(Partition{2, 1}), l({2, 1}), generic_points().first) == 1);
  CHECK(multiplicity(yobj(Partition{2}), l({3}), generic_points().first) == 0);
  CHECK_THROWS_AS(decompose(KaroubiObject::whole(obj(Flavor::S, 5))), DomainError);
  // Evaluation pole: an idempotent with 1/t at t0 = 0.
  CHECK_THROWS_AS(multiplicity(KaroubiObject::make(promote(Morphism::identity(obj(Flavor::S, 0)))), l({}), 0),
                  DomainError);
}

TEST_CASE("decomposition properties") {
  // Sum of squared multiplicities is dim End(X); whole objects give the basis size.
  for (int n = 0; n <= 3; ++n) {
    int sq = 0;
    for (const auto& [lam, m] : decompose(KaroubiObject::whole(obj(Flavor::S, n)))) sq += m * m;
    CHECK(Integer(sq) == bell_number(2 * n));
    sq = 0;
    for (const auto& [lam, m] : decompose(KaroubiObject::whole(obj(Flavor::O, n)))) sq += m * m;
    CHECK(Integer(sq) == (n ? double_factorial(2 * n - 1) : Integer(1)));
  }
  for (const char* w : {"10", "110", "1100", "101"}) {
    ObjectSignature x = ObjectSignature::gl_word(w);
    int sq = 0;
    for (const auto& [lam, m] : decompose(KaroubiObject::whole(x))) sq += m * m;
    CHECK(static_cast<size_t>(sq) == enumerate_basis(Flavor::GL, x, x).size());
  }
  // Each y_lambda contains L(lambda) exactly once.
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : partitions_of(n)) CHECK(as_map(decompose(yobj(p)))[label_of(p)] == 1);

  // Point independence at random generic points.
  std::mt19937_64 rng(17);
  const long primes[] = {1000003, 1000033, 1000037, 1000039, 999983, 999979, 999961};
  for (int i = 0; i < 4; ++i) {
    Rational t0 = ratio(primes[rng() % 7], primes[rng() % 7] + 2);
    KaroubiObject x = KaroubiObject::make(promote(young_symmetrizer(Partition{1, 1})));
    for (const auto& [lam, m] : decompose(x)) CHECK(multiplicity(x, lam, t0) == m);
  }
}
