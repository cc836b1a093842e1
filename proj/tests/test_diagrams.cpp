#include <random>

#include "doctest.h"
#include "interpcat/diagrams.hpp"

using namespace interpcat;

namespace {

Diagram S(int l, int m, std::vector<std::vector<int>> b) { return canonicalize_partition(l, m, b); }
ObjectSignature obj(int m) { return ObjectSignature::make(Flavor::S, m); }

// Independent composition: explicit graph search instead of union-find.
std::pair<std::vector<std::vector<int>>, int> naive_compose(const Diagram& p, const Diagram& q) {
  const int k = q.top, l = q.bottom, m = p.bottom, n = k + l + m;
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  auto link_blocks = [&](const Diagram& d, int offset) {
    for (const auto& b : d.blocks())
      for (size_t i = 1; i < b.size(); ++i) {
        adj[static_cast<size_t>(offset + b[0])].push_back(offset + b[i]);
        adj[static_cast<size_t>(offset + b[i])].push_back(offset + b[0]);
      }
  };
  link_blocks(q, 0);
  link_blocks(p, k);
  std::vector<int> comp(static_cast<size_t>(n), -1);
  int nc = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<size_t>(s)] >= 0) continue;
    std::vector<int> stack{s};
    comp[static_cast<size_t>(s)] = nc;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<size_t>(v)])
        if (comp[static_cast<size_t>(w)] < 0) {
          comp[static_cast<size_t>(w)] = nc;
          stack.push_back(w);
        }
    }
    ++nc;
  }
  std::vector<std::vector<int>> blocks(static_cast<size_t>(nc));
  for (int i = 0; i < k; ++i) blocks[static_cast<size_t>(comp[static_cast<size_t>(i)])].push_back(i + 1);
  for (int j = 0; j < m; ++j) blocks[static_cast<size_t>(comp[static_cast<size_t>(k + l + j)])].push_back(-(j + 1));
  std::vector<std::vector<int>> outer;
  int middle = 0;
  for (auto& b : blocks) {
    if (b.empty())
      ++middle;
    else
      outer.push_back(b);
  }
  return {outer, middle};
}

}  // namespace

TEST_CASE("canonicalize_partition") {
  Diagram id = S(1, 1, {{1, -1}});
  CHECK(id == identity_diagram(obj(1)));
  Diagram p = S(3, 6, {{1, 3, -2}, {2, -4, -5}, {-1}, {-3, -6}});
  Diagram p2 = S(3, 6, {{-6, -3}, {-1}, {-5, 2, -4}, {-2, 3, 1}});
  CHECK(p == p2);
  CHECK(p.signed_blocks() == std::vector<std::vector<int>>{{1, 3, -2}, {2, -4, -5}, {-1}, {-3, -6}});
  Diagram empty = S(0, 0, {});
  CHECK(empty.size() == 0);
  CHECK_THROWS_AS(S(1, 1, {{1}, {1, -1}}), DomainError);
  CHECK_THROWS_AS(S(1, 1, {{1}}), DomainError);
}

TEST_CASE("worked composition example") {
  Diagram p = S(3, 6, {{1, 3, -2}, {2, -4, -5}, {-1}, {-3, -6}});
  Diagram q = S(6, 2, {{1, 3}, {2, -2}, {4, -1}, {5}, {6}});
  // p acts first (top), q stacked below it.
  Composite c = compose_partition(q, p);
  CHECK(c.diagram == S(3, 2, {{1, 3, -2}, {2, -1}}));
  CHECK(c.middle == 1);
  CHECK_THROWS_AS(compose_partition(p, q), DomainError);
}

TEST_CASE("small compositions") {
  Diagram id2 = identity_diagram(obj(2));
  Composite c = compose(id2, id2);
  CHECK(c.diagram == id2);
  CHECK(c.middle == 0);
  Diagram pi = S(1, 1, {{1}, {-1}});
  c = compose(pi, pi);
  CHECK(c.diagram == pi);
  CHECK(c.middle == 1);

  Diagram e = make_brauer(Flavor::O, 2, 2, {{1, 2}, {-1, -2}});
  c = compose_brauer(e, e);
  CHECK(c.diagram == e);
  CHECK(c.middle == 1);
  Diagram idO = identity_diagram(ObjectSignature::make(Flavor::O, 2));
  c = compose_brauer(idO, e);
  CHECK(c.diagram == e);
  CHECK(c.middle == 0);
  Diagram sw = make_brauer(Flavor::O, 2, 2, {{1, -2}, {2, -1}});
  c = compose_brauer(sw, sw);
  CHECK(c.diagram == idO);
  CHECK(c.middle == 0);

  Diagram ew = make_walled("10", "10", {{1, 2}, {-1, -2}});
  c = compose_walled(ew, ew);
  CHECK(c.diagram == ew);
  CHECK(c.middle == 1);
  // Zig-zag on [1,0]: (id (x) ev) o (coev (x) id) with nested arcs.
  Diagram coev_id = make_walled("1", "101", {{-1, -2}, {1, -3}});
  Diagram id_ev = make_walled("101", "1", {{2, 3}, {1, -1}});
  c = compose_walled(id_ev, coev_id);
  CHECK(c.diagram == identity_diagram(ObjectSignature::gl(1, 0)));
  CHECK(c.middle == 0);
  CHECK_THROWS_AS(make_walled("1", "0", {{1, -1}}), DomainError);
  CHECK_THROWS_AS(make_walled("11", "", {{1, 2}}), DomainError);
}

TEST_CASE("tensor and flip") {
  Diagram id1 = identity_diagram(obj(1));
  CHECK(tensor_diagram(id1, id1) == identity_diagram(obj(2)));
  Diagram pi = S(1, 1, {{1}, {-1}});
  CHECK(tensor_diagram(pi, id1) == S(2, 2, {{1}, {-1}, {2, -2}}));
  Diagram empty = S(0, 0, {});
  Diagram p = S(3, 6, {{1, 3, -2}, {2, -4, -5}, {-1}, {-3, -6}});
  CHECK(tensor_diagram(empty, p) == p);
  CHECK(flip(id1) == id1);
  CHECK(flip(p) == S(6, 3, {{-1, -3, 2}, {-2, 4, 5}, {1}, {3, 6}}));
  CHECK(flip(flip(p)) == p);
  CHECK_THROWS_AS(tensor_diagram(id1, identity_diagram(ObjectSignature::make(Flavor::O, 1))), DomainError);
}

TEST_CASE("refines and coarsenings") {
  Diagram a = S(2, 3, {{1, 2}, {-1, -3}, {-2}});
  Diagram b = S(2, 3, {{1, 2, -1, -3}, {-2}});
  CHECK(refines(a, b));
  CHECK_FALSE(refines(b, a));
  CHECK(refines(a, a));
  CHECK_FALSE(refines(S(1, 1, {{1, -1}}), S(1, 1, {{1}, {-1}})));
  CHECK_THROWS_AS(refines(a, S(1, 1, {{1, -1}})), DomainError);

  auto c2 = coarsenings(S(1, 1, {{1}, {-1}}));
  REQUIRE(c2.size() == 2);
  CHECK(c2[0] == S(1, 1, {{1}, {-1}}));
  CHECK(c2[1] == S(1, 1, {{1, -1}}));
  CHECK(coarsenings(S(2, 1, {{1}, {2}, {-1}})).size() == 5);
  CHECK(coarsenings(S(1, 1, {{1, -1}})).size() == 1);
}

TEST_CASE("closure components") {
  CHECK(closure_components(identity_diagram(obj(3))) == 3);
  CHECK(closure_components(S(1, 1, {{1}, {-1}})) == 1);
  CHECK(closure_components(S(2, 2, {{1, -2}, {2, -1}})) == 1);
  CHECK_THROWS_AS(closure_components(S(1, 2, {{1, -1, -2}})), DomainError);
}

TEST_CASE("basis enumeration sizes") {
  CHECK(enumerate_basis(Flavor::S, obj(1), obj(1)).size() == 2);
  auto O = [](int m) { return ObjectSignature::make(Flavor::O, m); };
  CHECK(enumerate_basis(Flavor::O, O(2), O(2)).size() == 3);
  CHECK(enumerate_basis(Flavor::GL, ObjectSignature::gl(1, 1), ObjectSignature::gl(1, 1)).size() == 2);
  CHECK(enumerate_basis(Flavor::GL, ObjectSignature::gl(1, 0), ObjectSignature::gl(0, 1)).empty());
  CHECK(enumerate_basis(Flavor::O, O(1), O(2)).empty());
  for (int l = 0; l <= 3; ++l)
    for (int m = 0; m <= 3; ++m) {
      CHECK(Integer(static_cast<long>(enumerate_basis(Flavor::S, obj(l), obj(m)).size())) == bell_number(l + m));
      if ((l + m) % 2 == 0)
        CHECK(Integer(static_cast<long>(enumerate_basis(Flavor::O, O(l), O(m)).size())) ==
              double_factorial(l + m - 1));
    }
  // Walled Brauer: Hom([r1,s1],[r2,s2]) has (r1+s2)! elements when balanced.
  CHECK(enumerate_basis(Flavor::GL, ObjectSignature::gl(2, 1), ObjectSignature::gl(2, 1)).size() == 6);
  CHECK(enumerate_basis(Flavor::GL, ObjectSignature::gl(2, 2), ObjectSignature::gl(1, 1)).size() == 6);
}

TEST_CASE("exhaustive associativity for small S diagrams") {
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l <= 2; ++l)
      for (int m = 0; m <= 2; ++m)
        for (int j = 0; j <= 2; ++j)
          for (const auto& a : enumerate_basis(Flavor::S, obj(m), obj(j)))
            for (const auto& b : enumerate_basis(Flavor::S, obj(l), obj(m)))
              for (const auto& c : enumerate_basis(Flavor::S, obj(k), obj(l))) {
                Composite ab = compose(a, b), bc = compose(b, c);
                Composite left = compose(ab.diagram, c), right = compose(a, bc.diagram);
                CHECK(left.diagram == right.diagram);
                CHECK(left.middle + ab.middle == right.middle + bc.middle);
              }
}

TEST_CASE("compose agrees with graph search") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    int k = static_cast<int>(rng() % 4), l = static_cast<int>(rng() % 4), m = static_cast<int>(rng() % 4);
    auto bq = enumerate_basis(Flavor::S, obj(k), obj(l));
    auto bp = enumerate_basis(Flavor::S, obj(l), obj(m));
    const Diagram& q = bq[rng() % bq.size()];
    const Diagram& p = bp[rng() % bp.size()];
    auto [blocks, middle] = naive_compose(p, q);
    Composite c = compose(p, q);
    CHECK(c.diagram == S(k, m, blocks));
    CHECK(c.middle == middle);
  }
}

TEST_CASE("interchange and flip invariants") {
  std::mt19937_64 rng(5);
  auto pick = [&](Flavor f, int a, int b) {
    auto basis = enumerate_basis(f, ObjectSignature::make(f, a), ObjectSignature::make(f, b));
    return basis[rng() % basis.size()];
  };
  for (int trial = 0; trial < 200; ++trial) {
    Flavor f = trial % 2 ? Flavor::S : Flavor::O;
    int x = static_cast<int>(rng() % 3), y = static_cast<int>(rng() % 3), z = static_cast<int>(rng() % 3);
    int u = static_cast<int>(rng() % 3), v = static_cast<int>(rng() % 3), w = static_cast<int>(rng() % 3);
    if (f == Flavor::O) {
      y = x;
      z = x;
      v = u;
      w = u;
    }
    Diagram a = pick(f, y, z), c = pick(f, x, y), b = pick(f, v, w), d = pick(f, u, v);
    Composite lhs = compose(tensor_diagram(a, b), tensor_diagram(c, d));
    Composite ac = compose(a, c), bd = compose(b, d);
    CHECK(lhs.diagram == tensor_diagram(ac.diagram, bd.diagram));
    CHECK(lhs.middle == ac.middle + bd.middle);
    Diagram sq = pick(f, x, x);
    CHECK(closure_components(flip(sq)) == closure_components(sq));
  }
}

TEST_CASE("refines is a partial order") {
  auto basis = enumerate_basis(Flavor::S, obj(2), obj(2));
  for (const auto& a : basis)
    for (const auto& b : basis) {
      if (refines(a, b) && refines(b, a)) CHECK(a == b);
      for (const auto& c : basis)
        if (refines(a, b) && refines(b, c)) CHECK(refines(a, c));
    }
}
