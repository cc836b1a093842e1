// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "dim_oracles.hpp"
#include "interpcat/karoubi.hpp"
#include "interpcat/oracle.hpp"
#include "interpcat/semisimplify.hpp"
#include "interpcat/symfun.hpp"
#include "symfun_oracles.hpp"

using namespace interpcat;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

RatFunc t() { return RatFunc::t(); }
ObjectSignature obj(Flavor f, int m) { return ObjectSignature::make(f, m); }

std::vector<Partition> all_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (const auto& p : partitions_of(k)) out.push_back(p);
  return out;
}

// ---------------------------------------------------------------- 1

void composition_law(Outcome& o) {
  auto t0 = Clock::now();
  Diagram p = canonicalize_partition(3, 6, {{1, 3, -2}, {2, -4, -5}, {-1}, {-3, -6}});
  Diagram q = canonicalize_partition(6, 2, {{1, 3}, {2, -2}, {4, -1}, {5}, {6}});
  Morphism pq = compose(Morphism::from_diagram(q), Morphism::from_diagram(p));
  o.require(pq == Morphism::from_diagram(canonicalize_partition(3, 2, {{1, 3, -2}, {2, -1}}), t()),
            "worked example");
  long triples = 0;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d) {
          auto h = enumerate_basis(Flavor::S, obj(Flavor::S, a), obj(Flavor::S, b));
          auto g = enumerate_basis(Flavor::S, obj(Flavor::S, b), obj(Flavor::S, c));
          auto k = enumerate_basis(Flavor::S, obj(Flavor::S, c), obj(Flavor::S, d));
          for (const auto& x : h)
            for (const auto& y : g)
              for (const auto& z : k) {
                Morphism mx = Morphism::from_diagram(x), my = Morphism::from_diagram(y), mz = Morphism::from_diagram(z);
                o.require(compose(compose(mz, my), mx) == compose(mz, compose(my, mx)),
                          z.to_string() + " o " + y.to_string() + " o " + x.to_string());
                ++triples;
              }
        }
  const double secs = seconds_since(t0);
  o.require(secs < 5, "runtime");
  o.detail << "example t^1 e_{{1,3,2''},{2,1''}}; " << triples << " associativity triples; " << secs << " s";
}

// ---------------------------------------------------------------- 2

void trace_dimension(Outcome& o) {
  for (int m = 0; m <= 5; ++m)
    for (Flavor f : {Flavor::S, Flavor::O})
      o.require(trace(Morphism::identity(obj(f, m))) == RatFunc::t_power(m), "Tr id_[" + std::to_string(m) + "]");
  for (int r = 0; r <= 5; ++r)
    for (int s = 0; r + s <= 5; ++s) {
      o.require(dimension(ObjectSignature::gl(r, s)) == RatFunc::t_power(r + s), "dim [r,s]");
      o.require(trace(Morphism::identity(ObjectSignature::gl(r, s))) == RatFunc::t_power(r + s), "Tr id_[r,s]");
    }
  int zigzags = 0;
  auto zigzag = [&](const ObjectSignature& x) {
    auto idx = Morphism::identity(x), idd = Morphism::identity(x.dual());
    o.require(compose(tensor(idx, ev(x)), tensor(coev(x), idx)) == idx, "zig " + x.to_string());
    o.require(compose(tensor(ev(x), idd), tensor(idd, coev(x))) == idd, "zag " + x.to_string());
    zigzags += 2;
  };
  for (int m = 0; m <= 3; ++m)
    for (Flavor f : {Flavor::S, Flavor::O, Flavor::Sp}) zigzag(obj(f, m));
  for (int len = 0; len <= 3; ++len)
    for (int bits = 0; bits < (1 << len); ++bits) {
      std::string w;
      for (int i = 0; i < len; ++i) w += (bits >> i & 1) ? '1' : '0';
      zigzag(ObjectSignature::gl_word(w));
    }
  o.detail << "traces m <= 5, GL dims r+s <= 5, " << zigzags << " zig-zag identities";
}

// ---------------------------------------------------------------- 3

void oracle_homomorphism(Outcome& o) {
  auto t0 = Clock::now();
  long pairs = 0, violations = 0;
  for (int n = 2; n <= 4; ++n)
    for (int l = 0; l <= 4; ++l)
      for (int m = 0; l + m <= 4; ++m)
        for (int k = 0; m + k <= 4; ++k) {
          StructureReport r = verify_structure_constants(l, m, k, n);
          pairs += r.pairs;
          violations += static_cast<long>(r.violations.size());
          o.require(r.violations.empty(), r.violations.empty() ? "" : r.violations.front());
        }
  const double secs = seconds_since(t0);
  o.require(secs < 120, "runtime");
  o.detail << pairs << " pairs, " << violations << " violations, " << secs << " s";
}

// ---------------------------------------------------------------- 4

void simple_dimensions(Outcome& o) {
  o.require(dim_simple(Partition{1}) == t() - RatFunc(1), "(1)");
  o.require(dim_simple(Partition{2}) == t() * (t() - RatFunc(3)) / RatFunc(2), "(2)");
  o.require(dim_simple(Partition{1, 1}) == (t() - RatFunc(1)) * (t() - RatFunc(2)) / RatFunc(2), "(1,1)");
  RatFunc gl = dim_simple(BiPartition{{1}, {1}}, Flavor::GL);
  o.require(gl == t() * t() - RatFunc(1), "GL ((1),(1))");
  int points = 0;
  for (const Partition& lam : {Partition{1}, Partition{2}, Partition{1, 1}}) {
    RatFunc d = dim_simple(lam);
    for (int n = lam.size() + lam.part(0); n <= 12; ++n) {
      std::vector<int> padded{n - lam.size()};
      padded.insert(padded.end(), lam.parts.begin(), lam.parts.end());
      o.require(rf_eval(d, n) == static_cast<long>(oracle::hook_dim(padded)), lam.to_string() + " at " + std::to_string(n));
      ++points;
    }
  }
  for (int n = 2; n <= 12; ++n) {
    std::vector<int> w(static_cast<size_t>(n), 0);
    w.front() = 1;
    w.back() = -1;
    o.require(rf_eval(gl, n) == oracle::weyl_gl(w), "GL at " + std::to_string(n));
    ++points;
  }
  o.detail << "4 symbolic identities, " << points << " integer points vs hook-length/Weyl";
}

// ---------------------------------------------------------------- 5

void decomposition_accounting(Outcome& o) {
  using M = std::map<SimpleLabel, int>;
  auto check = [&](const Partition& y, const M& want) {
    KaroubiObject x = KaroubiObject::make(young_symmetrizer(y));
    auto got = decompose(x);
    o.require(M(got.begin(), got.end()) == want, "decompose y_" + y.to_string());
    RatFunc total(0);
    for (const auto& [nu, m] : got) total += RatFunc(m) * dim_simple(nu, Flavor::S);
    o.require(total == trace(x.idem), "accounting y_" + y.to_string());
    o.detail << "y_" << y.to_string() << ": trace " << trace(x.idem).to_string() << "; ";
  };
  check({2}, {{label_of({}), 2}, {label_of({1}), 2}, {label_of({2}), 1}});
  check({1, 1}, {{label_of({1}), 1}, {label_of({1, 1}), 1}});
}

// ---------------------------------------------------------------- 6

void semisimplification(Outcome& o) {
  auto t0 = Clock::now();
  const ObjectSignature one = obj(Flavor::S, 1);
  RatFunc det = gram_determinant(one, one);
  o.require(det == t() * t() * (t() - RatFunc(1)), "det End([1])");
  int comparisons = 0, nondegenerate = 0;
  for (int l = 0; l <= 4; ++l)
    for (int m = 0; l + m <= 4; ++m) {
      for (int n = 0; n <= 4; ++n) {
        o.require(quotient_dim(l, m, n) == hom_dim_classical(l, m, n),
                  "quotient_dim(" + std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(n) + ")");
        ++comparisons;
      }
      for (const Rational& q : {ratio(5, 2), ratio(7, 3)}) {
        o.require(gram(l, m, q).nullity == 0, "nullity at " + to_string(q));
        ++nondegenerate;
      }
    }
  const double secs = seconds_since(t0);
  o.require(secs < 120, "runtime");
  o.detail << "det = " << det.to_string() << "; " << comparisons << " quotient/classical comparisons; " << nondegenerate
           << " nondegenerate pairings; " << secs << " s";
}

// ---------------------------------------------------------------- 7

PointMorphism random_point(std::mt19937_64& rng, const ObjectSignature& s, const ObjectSignature& tg, const Rational& t0) {
  PointMorphism m{s, tg, t0, {}};
  for (const auto& d : enumerate_basis(Flavor::S, s, tg))
    if (rng() % 2) m.add_term(d, ratio(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 3) + 1));
  return m;
}

void negligible_ideal(Outcome& o) {
  std::mt19937_64 rng(2024);
  int instances = 0, failures = 0;
  while (instances < 200) {
    const Rational t0 = static_cast<long>(instances % 3);
    auto rnd = [&](int hi) { return obj(Flavor::S, static_cast<int>(rng() % static_cast<unsigned>(hi + 1))); };
    ObjectSignature x = rnd(3), y = rnd(3), z = rnd(2), w = rnd(1);
    if (x.size + y.size > 4) continue;
    auto basis = negligible_basis(x, y, t0);
    if (basis.empty()) continue;
    // A random nonzero element of the negligible space.
    PointMorphism f{x, y, t0, {}};
    for (const auto& b : basis) {
      const Rational c = static_cast<long>(rng() % 7) - 3;
      for (const auto& [d, v] : b.terms) f.add_term(d, c * v);
    }
    if (f.is_zero()) f = basis.front();
    bool ok = is_negligible(f);
    ok = ok && is_negligible(compose(random_point(rng, y, z, t0), f));
    ok = ok && is_negligible(compose(f, random_point(rng, z, x, t0)));
    ok = ok && is_negligible(tensor(f, random_point(rng, w, z, t0)));
    ok = ok && is_negligible(tensor(random_point(rng, w, z, t0), f));
    if (!ok) ++failures;
    o.require(ok, x.to_string() + " -> " + y.to_string() + " at t = " + to_string(t0));
    ++instances;
  }
  o.detail << instances << " instances at t = 0,1,2; " << failures << " failures";
}

// ---------------------------------------------------------------- 8

void symmetric_functions(Outcome& o) {
  auto t0 = Clock::now();
  long lr_checks = 0, pair_checks = 0;
  for (const auto& lam : all_up_to(6))
    for (const auto& mu : subpartitions(lam))
      for (const auto& nu : partitions_of(lam.size() - mu.size())) {
        o.require(lr_coefficient(lam, mu, nu) == oracle::lr_brute(lam, mu, nu),
                  "lr " + lam.to_string() + mu.to_string() + nu.to_string());
        ++lr_checks;
      }
  for (const auto& lam : all_up_to(4))
    for (const auto& mu : all_up_to(4))
      for (const auto& nu : subpartitions(lam))
        for (const auto& nb : subpartitions(mu)) {
          o.require(skew_schur_pairing(lam, nu, mu, nb) == oracle::hall_pairing(lam, nu, mu, nb),
                    "pairing " + lam.to_string() + nu.to_string() + mu.to_string() + nb.to_string());
          ++pair_checks;
        }
  std::map<Partition, long long> osp;
  for (const auto& nu : all_up_to(2)) osp[nu] = osp_multiplicity({1}, {1}, nu);
  o.require(osp == std::map<Partition, long long>{{{}, 1}, {{1}, 0}, {{2}, 1}, {{1, 1}, 1}}, "osp (1)x(1)");
  const double secs = seconds_since(t0);
  o.require(secs < 60, "runtime");
  o.detail << lr_checks << " LR coefficients, " << pair_checks << " pairings, osp (1)x(1) = {(1,1):1,(2):1,():1,(1):0}; "
           << secs << " s";
}

// ---------------------------------------------------------------- 9

void stabilization(Outcome& o) {
  const std::vector<ShiftData> shifts{
      {{0}, {}, {}, {}},       {{1}, {}, {}, {}},       {{-1}, {}, {1}, {}},   {{1, -1}, {}, {1}, {1}},
      {{}, {1}, {}, {}},       {{0}, {0}, {1}, {1}},    {{1}, {-1}, {2}, {1, 1}}, {{2, 0}, {1}, {1}, {2}},
      {{}, {}, {2, 1}, {1}}};
  int agreements = 0, nonzero = 0;
  for (const auto& s : shifts)
    for (LieFlavor f : {LieFlavor::gl, LieFlavor::osp})
      for (const auto& nu : all_up_to(2))
        for (const auto& nb : f == LieFlavor::gl ? all_up_to(2) : std::vector<Partition>{Partition{}}) {
          const long long st = stable_hc_multiplicity(s, nu, nb, f);
          const int sp = stable_spacing(nu, nb);
          for (int spacing : {sp, sp + 4}) {
            o.require(direct_hc_multiplicity(s, nu, nb, f, spacing) == st,
                      lie_flavor_name(f) + " " + nu.to_string() + nb.to_string() + " spacing " + std::to_string(spacing));
            ++agreements;
          }
          if (st) ++nonzero;
        }
  o.detail << shifts.size() << " shift data, gl and osp, " << agreements << " agreements at two spacings (" << nonzero
           << " nonzero multiplicities)";
}

// ---------------------------------------------------------------- 10

void central_characters(Outcome& o) {
  std::mt19937_64 rng(77);
  int reduced_ok = 0, strict_ok = 0, with_cancelling = 0;
  for (int i = 0; i < 100; ++i) {
    const int r = static_cast<int>(rng() % 3), s = static_cast<int>(rng() % 3);
    Decomposition orig;
    for (int j = 0; j < r; ++j) orig.b.push_back(static_cast<int>(rng() % 11) - 5);
    for (int j = 0; j < s; ++j) orig.c.push_back(static_cast<int>(rng() % 11) - 5);
    std::vector<Rational> b(orig.b.begin(), orig.b.end()), c(orig.c.begin(), orig.c.end());
    const int K = r + s + 3;
    MomentSequence m = char_difference_forward(b, c, LieFlavor::gl, K);
    auto found = search_decomposition(m, r, s, 5);
    o.require(found.has_value(), "no decomposition found");
    if (!found) continue;
    std::vector<Rational> fb(found->b.begin(), found->b.end()), fc(found->c.begin(), found->c.end());
    o.require(char_difference_forward(fb, fc, LieFlavor::gl, K) == m, "found moments differ");
    Decomposition x = reduce_cancelling(orig), y = reduce_cancelling(*found);
    const bool red = x.b == y.b && x.c == y.c;
    o.require(red, "reduced decomposition differs");
    reduced_ok += red;
    auto sorted = [](std::vector<int> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    strict_ok += sorted(orig.b) == sorted(found->b) && sorted(orig.c) == sorted(found->c);
    with_cancelling += x.b.size() != orig.b.size();
  }
  int tele = 0;
  for (int m = 0; m <= 8; ++m)
    for (int k = 1; k <= 8; ++k) {
      Rational s = 0;
      for (int i = 0; i < m; ++i) s += pk(Rational(i), k);
      o.require(s == rational_pow(Rational(m), k), "telescoping m=" + std::to_string(m) + " k=" + std::to_string(k));
      ++tele;
    }
  o.detail << reduced_ok << "/100 recovered up to permutation and cancelling pairs (" << strict_ok
           << " literally; " << with_cancelling << " inputs contained a cancelling pair b_i = c_j - 1); " << tele
           << " telescoping identities";
}

// ---------------------------------------------------------------- 11

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  status = pclose(p);
  return out;
}

void cli_determinism(Outcome& o) {
  auto t0 = Clock::now();
  const std::string cmd = std::string("INTERPCAT_SEED=42 '") + INTERPCAT_CLI_PATH + "' selftest full";
  int s1 = 0, s2 = 0;
  const std::string a = run_capture(cmd, s1);
  const double first = seconds_since(t0);
  const std::string b = run_capture(cmd, s2);
  o.require(s1 == 0 && s2 == 0, "selftest full exited nonzero");
  o.require(!a.empty() && a == b, "reports differ");
  o.require(first < 600, "runtime");
  o.detail << "two runs, " << a.size() << " bytes each, identical = " << (a == b ? "yes" : "no") << "; " << first
           << " s per run";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"composition law fidelity", composition_law},
      {"trace/dimension interpolation", trace_dimension},
      {"oracle homomorphism", oracle_homomorphism},
      {"simple dimensions", simple_dimensions},
      {"decomposition accounting", decomposition_accounting},
      {"semisimplification", semisimplification},
      {"negligible ideal", negligible_ideal},
      {"symmetric functions", symmetric_functions},
      {"stabilization", stabilization},
      {"central characters", central_characters},
      {"CLI determinism", cli_determinism},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": " << o.detail.str()
              << std::endl;
  }
  std::cout << (criteria.size() - static_cast<size_t>(failed)) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
