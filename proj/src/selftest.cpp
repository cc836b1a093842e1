#include "interpcat/selftest.hpp"

#include <cstdlib>
#include <optional>
#include <random>

namespace interpcat {

namespace {

using Rng = std::mt19937_64;
using Check = std::function<std::optional<std::string>(Rng&)>;

// FNV-1a, so each property gets its own stream and adding one does not shift the others.
std::uint64_t stream_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL ^ seed;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

int pick(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

Rational small_rational(Rng& rng) { return ratio(pick(rng, -6, 6), pick(rng, 1, 5)); }

RatFunc small_ratfunc(Rng& rng) {
  const int deg = pick(rng, 0, 2);
  std::vector<Rational> c;
  for (int i = 0; i <= deg; ++i) c.push_back(small_rational(rng));
  RatFunc r = RatFunc(Poly(c));
  if (rng() % 3 == 0) {
    Poly den({small_rational(rng), Rational(1)});
    r /= RatFunc(den);
  }
  return r;
}

ObjectSignature random_object(Rng& rng, Flavor f, int max_size) {
  const int n = pick(rng, 0, max_size);
  if (f != Flavor::GL) return ObjectSignature::make(f, n);
  std::string w;
  for (int i = 0; i < n; ++i) w += (rng() % 2) ? '1' : '0';
  return ObjectSignature::gl_word(w);
}

ObjectSignature compatible(Rng& rng, const ObjectSignature& src, int max_size) {
  for (;;) {
    ObjectSignature t = random_object(rng, src.flavor, max_size);
    if (!enumerate_basis(src.flavor, src, t).empty()) return t;
  }
}

Morphism random_morphism(Rng& rng, const ObjectSignature& src, const ObjectSignature& tgt) {
  Morphism m(src, tgt);
  auto basis = enumerate_basis(src.flavor, src, tgt);
  if (basis.empty()) return m;
  const int terms = pick(rng, 1, 3);
  for (int i = 0; i < terms; ++i) m.add_term(basis[rng() % basis.size()], small_ratfunc(rng));
  return m;
}

PointMorphism random_point(Rng& rng, const ObjectSignature& src, const ObjectSignature& tgt, const Rational& t0) {
  PointMorphism m{src, tgt, t0, {}};
  auto basis = enumerate_basis(src.flavor, src, tgt);
  for (const auto& d : basis)
    if (rng() % 2) m.add_term(d, small_rational(rng));
  return m;
}

Flavor random_flavor(Rng& rng) {
  static const Flavor fs[] = {Flavor::S, Flavor::O, Flavor::Sp, Flavor::GL};
  return fs[rng() % 4];
}

Partition random_partition(Rng& rng, int max_size) {
  auto all = partitions_of(pick(rng, 0, max_size));
  return all[rng() % all.size()];
}

std::optional<std::string> fail_if(bool bad, const std::string& what) {
  if (bad) return what;
  return std::nullopt;
}

struct Sizes {
  int reps;       // generic repetition count
  int diag;       // max object size for category laws
  int karoubi;    // max |lambda| for idempotent checks
  int sym;        // max |lambda| for LR checks
};

class Runner {
 public:
  Runner(const SelftestOptions& o, SelftestReport& r) : opts_(o), report_(r) {}

  void property(const std::string& module, const std::string& name, int cases, const Check& check) {
    PropertyResult res{module, name, 0, 0, ""};
    Rng rng(stream_seed(opts_.seed, module + "/" + name));
    for (int i = 0; i < cases; ++i) {
      std::optional<std::string> bad;
      try {
        bad = check(rng);
      } catch (const std::exception& e) {
        bad = std::string("exception: ") + e.what();
      }
      ++res.cases;
      if (bad) {
        if (!res.failures) res.first_failure = "case " + std::to_string(i) + ": " + *bad;
        ++res.failures;
      }
    }
    report_.properties.push_back(res);
  }

 private:
  const SelftestOptions& opts_;
  SelftestReport& report_;
};

void exactnum_props(Runner& run, const Sizes& z) {
  run.property("exactnum", "ratfunc_field_axioms", 10 * z.reps, [](Rng& rng) {
    RatFunc a = small_ratfunc(rng), b = small_ratfunc(rng), c = small_ratfunc(rng);
    if (!((a + b) * c == a * c + b * c)) return fail_if(true, "distributivity");
    if (!(a - a).is_zero()) return fail_if(true, "a - a != 0");
    if (!b.is_zero() && !(a * b / b == a)) return fail_if(true, "(a*b)/b != a for a = " + a.to_string());
    return fail_if(!(a * (b * c) == (a * b) * c), "associativity");
  });
  run.property("exactnum", "ratfunc_text_roundtrip", 10 * z.reps, [](Rng& rng) {
    RatFunc a = small_ratfunc(rng);
    return fail_if(!(RatFunc::parse(a.to_string()) == a), a.to_string());
  });
  run.property("exactnum", "evaluation_homomorphism", 10 * z.reps, [](Rng& rng) {
    RatFunc a = small_ratfunc(rng), b = small_ratfunc(rng);
    Rational x = small_rational(rng);
    if (a.has_pole_at(x) || b.has_pole_at(x)) return fail_if(false, "");
    if ((a * b).eval(x) != a.eval(x) * b.eval(x)) return fail_if(true, "product at " + to_string(x));
    return fail_if((a + b).eval(x) != a.eval(x) + b.eval(x), "sum at " + to_string(x));
  });
  run.property("exactnum", "interpolation_recovers_polynomial", 5 * z.reps, [](Rng& rng) {
    const int deg = pick(rng, 0, 6);
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.push_back(small_rational(rng));
    Poly p(c);
    std::vector<std::pair<Rational, Rational>> pts;
    for (int i = 0; i <= deg; ++i) pts.emplace_back(Rational(i * 3 - 4), p.eval(Rational(i * 3 - 4)));
    return fail_if(!(poly_interpolate(pts) == p), p.to_string());
  });
}

void diagram_props(Runner& run, const Sizes& z) {
  run.property("diagrams", "composition_associative", 6 * z.reps, [&](Rng& rng) {
    Flavor f = random_flavor(rng);
    auto a = random_object(rng, f, z.diag);
    auto b = compatible(rng, a, z.diag), c = compatible(rng, b, z.diag), d = compatible(rng, c, z.diag);
    auto pick_diag = [&](const ObjectSignature& s, const ObjectSignature& t) {
      auto bs = enumerate_basis(f, s, t);
      return bs[rng() % bs.size()];
    };
    Diagram r = pick_diag(a, b), q = pick_diag(b, c), p = pick_diag(c, d);
    Composite qr = compose(q, r), pq = compose(p, q);
    Composite left = compose(p, qr.diagram), right = compose(pq.diagram, r);
    return fail_if(!(left.diagram == right.diagram) || left.middle + qr.middle != right.middle + pq.middle,
                   p.to_string() + " ; " + q.to_string() + " ; " + r.to_string());
  });
  run.property("diagrams", "flip_reverses_composition", 6 * z.reps, [&](Rng& rng) {
    Flavor f = random_flavor(rng);
    auto a = random_object(rng, f, z.diag);
    auto b = compatible(rng, a, z.diag), c = compatible(rng, b, z.diag);
    auto q = enumerate_basis(f, a, b), p = enumerate_basis(f, b, c);
    Diagram dq = q[rng() % q.size()], dp = p[rng() % p.size()];
    Composite fwd = compose(dp, dq), back = compose(flip(dq), flip(dp));
    return fail_if(!(flip(fwd.diagram) == back.diagram) || fwd.middle != back.middle, dp.to_string());
  });
  run.property("diagrams", "basis_counts", z.diag + 3, [](Rng& rng) {
    const int n = pick(rng, 0, 6);
    const int l = pick(rng, 0, n);
    auto s = enumerate_basis(Flavor::S, ObjectSignature::make(Flavor::S, l), ObjectSignature::make(Flavor::S, n - l));
    if (Integer(static_cast<long>(s.size())) != bell_number(n)) return fail_if(true, "bell " + std::to_string(n));
    auto o = enumerate_basis(Flavor::O, ObjectSignature::make(Flavor::O, l), ObjectSignature::make(Flavor::O, n - l));
    const Integer want = n % 2 ? Integer(0) : double_factorial(n - 1);
    return fail_if(Integer(static_cast<long>(o.size())) != want, "brauer " + std::to_string(n));
  });
}

void homspace_props(Runner& run, const Sizes& z, const SelftestOptions& opts) {
  run.property("homspaces", "e_delta_roundtrip", 6 * z.reps, [&](Rng& rng) {
    auto a = random_object(rng, Flavor::S, z.diag + 1);
    auto b = random_object(rng, Flavor::S, z.diag + 1);
    Morphism f = random_morphism(rng, a, b);
    if (!(opts.to_e(opts.to_delta(f)) == f)) return fail_if(true, "e -> delta -> e on " + a.to_string() + " -> " + b.to_string());
    Morphism g = opts.to_delta(random_morphism(rng, a, b));
    return fail_if(!(opts.to_delta(opts.to_e(g)) == g), "delta -> e -> delta");
  });
  run.property("homspaces", "category_laws", 4 * z.reps, [&](Rng& rng) {
    Flavor f = random_flavor(rng);
    auto a = random_object(rng, f, z.diag);
    auto b = compatible(rng, a, z.diag), c = compatible(rng, b, z.diag);
    Morphism h = random_morphism(rng, a, b), g = random_morphism(rng, b, c), k = random_morphism(rng, c, a);
    if (!(compose(compose(k, g), h) == compose(k, compose(g, h)))) return fail_if(true, "associativity");
    if (!(compose(Morphism::identity(b), h) == h) || !(compose(h, Morphism::identity(a)) == h))
      return fail_if(true, "identity");
    return fail_if(!(trace(compose(compose(k, g), h)) == trace(compose(h, compose(k, g)))), "trace cyclicity");
  });
  run.property("homspaces", "interchange_law", 3 * z.reps, [&](Rng& rng) {
    Flavor f = random_flavor(rng);
    auto a = random_object(rng, f, 2), b = compatible(rng, a, 2), c = compatible(rng, b, 2);
    auto x = random_object(rng, f, 2), y = compatible(rng, x, 2), w = compatible(rng, y, 2);
    Morphism h = random_morphism(rng, a, b), g = random_morphism(rng, b, c);
    Morphism u = random_morphism(rng, x, y), v = random_morphism(rng, y, w);
    if (!(dimension(tensor(a, x)) == dimension(a) * dimension(x))) return fail_if(true, "dimension");
    return fail_if(!(compose(tensor(g, v), tensor(h, u)) == tensor(compose(g, h), compose(v, u))), "interchange");
  });
  run.property("homspaces", "zigzag", 2 * z.reps, [&](Rng& rng) {
    Flavor f = random_flavor(rng);
    auto x = random_object(rng, f, 3);
    auto idx = Morphism::identity(x), idd = Morphism::identity(x.dual());
    Morphism one = compose(tensor(idx, ev(x)), tensor(coev(x), idx));
    Morphism two = compose(tensor(ev(x), idd), tensor(idd, coev(x)));
    return fail_if(!(one == idx) || !(two == idd), x.to_string());
  });
}

void karoubi_props(Runner& run, const Sizes& z) {
  run.property("karoubi", "young_idempotent", 2 * z.reps, [&](Rng& rng) {
    Flavor f = random_flavor(rng);
    if (f == Flavor::GL) {
      BiPartition l{random_partition(rng, z.karoubi / 2 + 1), random_partition(rng, z.karoubi / 2)};
      return fail_if(!is_idempotent(young_symmetrizer(l)), l.to_string());
    }
    Partition l = random_partition(rng, z.karoubi);
    return fail_if(!is_idempotent(young_symmetrizer(l, f)), l.to_string());
  });
  run.property("karoubi", "decomposition_accounting", z.reps, [&](Rng& rng) {
    static const Flavor fs[] = {Flavor::S, Flavor::O, Flavor::GL};
    Flavor f = fs[rng() % 3];
    SimpleLabel l;
    if (f == Flavor::GL)
      l = {random_partition(rng, 1 + z.karoubi / 3), random_partition(rng, z.karoubi / 3)};
    else
      l = label_of(random_partition(rng, z.karoubi - 1));
    KaroubiObject x = KaroubiObject::make(label_idempotent(f, l));
    RatFunc total(0);
    for (const auto& [nu, m] : decompose(x)) total += RatFunc(m) * dim_simple(nu, f);
    return fail_if(!(total == trace(x.idem)), label_string(f, l));
  });
  run.property("karoubi", "promotion_preserves_trace", z.reps, [&](Rng& rng) {
    static const Flavor fs[] = {Flavor::S, Flavor::O, Flavor::GL};
    Flavor f = fs[rng() % 3];
    Morphism e = f == Flavor::GL ? young_symmetrizer(BiPartition{random_partition(rng, 2), {}})
                                 : young_symmetrizer(random_partition(rng, 2), f);
    Morphism p = promote(e);
    return fail_if(!is_idempotent(p) || !(trace(p) == trace(e)), e.source.to_string());
  });
}

void semisimplify_props(Runner& run, const Sizes& z) {
  run.property("semisimplify", "negligible_absorption", 3 * z.reps, [&](Rng& rng) {
    const Rational t0 = pick(rng, 0, 2);
    auto x = random_object(rng, Flavor::S, 2), y = random_object(rng, Flavor::S, 2);
    auto w = random_object(rng, Flavor::S, 2), v = random_object(rng, Flavor::S, 1);
    for (const auto& f : negligible_basis(x, y, t0)) {
      if (!is_negligible(compose(random_point(rng, y, w, t0), f))) return fail_if(true, "left composition");
      if (!is_negligible(compose(f, random_point(rng, w, x, t0)))) return fail_if(true, "right composition");
      if (!is_negligible(tensor(f, random_point(rng, v, w, t0)))) return fail_if(true, "tensor");
    }
    return fail_if(false, "");
  });
  run.property("semisimplify", "quotient_matches_classical", 2 * z.reps, [&](Rng& rng) {
    const int l = pick(rng, 0, z.diag), m = pick(rng, 0, z.diag + 1 - l), n = pick(rng, 0, 4);
    Flavor f = rng() % 2 ? Flavor::S : Flavor::O;
    return fail_if(quotient_dim(l, m, n, f) != hom_dim_classical(l, m, n, f),
                   flavor_name(f) + " " + std::to_string(l) + "," + std::to_string(m) + " n=" + std::to_string(n));
  });
  run.property("semisimplify", "nondegenerate_off_integers", 2 * z.reps, [&](Rng& rng) {
    Rational t0 = ratio(pick(rng, -20, 20) * 2 + 1, 2 * pick(rng, 1, 4) + 1);
    if (t0.get_den() == 1) t0 += ratio(1, 2);
    Flavor f = random_flavor(rng);
    auto x = random_object(rng, f, 2);
    auto y = compatible(rng, x, 2);
    return fail_if(gram(x, y, t0).nullity != 0, x.to_string() + " -> " + y.to_string() + " at " + to_string(t0));
  });
}

void oracle_props(Runner& run, const Sizes& z) {
  run.property("oracle", "structure_constants", z.reps, [&](Rng& rng) {
    Flavor f = rng() % 2 ? Flavor::S : Flavor::O;
    const int l = pick(rng, 0, 2), m = pick(rng, 0, 2), k = pick(rng, 0, 2), n = pick(rng, 1, 3);
    StructureReport r = verify_structure_constants(l, m, k, n, f);
    return fail_if(r.passed != r.pairs, r.violations.empty() ? "?" : r.violations.front());
  });
  run.property("oracle", "diagram_matrix_agrees_with_morphism", 2 * z.reps, [&](Rng& rng) {
    auto a = random_object(rng, Flavor::S, 2), b = random_object(rng, Flavor::S, 2);
    const int n = pick(rng, 1, 3);
    Morphism f = random_morphism(rng, a, b);
    for (const auto& [diag, c] : f.terms)
      if (c.has_pole_at(Rational(n))) return fail_if(false, "");
    RationalMatrix sum = morphism_matrix(f, n);
    // The same map through the delta basis, assembled from strict patterns.
    Morphism d = e_to_delta(f);
    RationalMatrix alt = morphism_matrix(Morphism(a, b), n);
    for (const auto& [diag, c] : d.terms) {
      IntMatrix dm = delta_matrix(diag, n);
      const Rational cv = c.eval(Rational(n));
      for (int i = 0; i < dm.rows; ++i)
        for (int k = 0; k < dm.cols; ++k) alt.at(i, k) += cv * Rational(static_cast<long>(dm.at(i, k)));
    }
    return fail_if(!(sum == alt), a.to_string() + " -> " + b.to_string());
  });
}

void symfun_props(Runner& run, const Sizes& z) {
  run.property("symfun", "lr_symmetries", 4 * z.reps, [&](Rng& rng) {
    Partition mu = random_partition(rng, z.sym / 2), nu = random_partition(rng, z.sym / 2);
    auto lams = partitions_of(mu.size() + nu.size());
    Partition lam = lams[rng() % lams.size()];
    const long long c = lr_coefficient(lam, mu, nu);
    if (c != lr_coefficient(lam, nu, mu)) return fail_if(true, "swap " + lam.to_string());
    return fail_if(c != lr_coefficient(lam.conjugate(), mu.conjugate(), nu.conjugate()), "conjugate " + lam.to_string());
  });
  run.property("symfun", "lr_dimension_count", 2 * z.reps, [&](Rng& rng) {
    // f^mu f^nu binom(n, |mu|) = sum_lambda c f^lambda.
    Partition mu = random_partition(rng, z.sym / 2), nu = random_partition(rng, z.sym / 2);
    const int n = mu.size() + nu.size();
    Integer lhs = standard_tableaux_count(mu) * standard_tableaux_count(nu), rhs = 0;
    Integer binom = 1;
    for (int i = 0; i < mu.size(); ++i) binom = binom * (n - i) / (i + 1);
    lhs *= binom;
    for (const auto& lam : partitions_of(n)) rhs += Integer(static_cast<long>(lr_coefficient(lam, mu, nu))) * standard_tableaux_count(lam);
    return fail_if(lhs != rhs, mu.to_string() + nu.to_string());
  });
  run.property("symfun", "triple_roundtrip", 6 * z.reps, [&](Rng& rng) {
    Partition lam = random_partition(rng, z.sym + 2);
    const int k = pick(rng, 0, lam.length()), l = pick(rng, 0, lam.part(0));
    TriplePartition t;
    try {
      t = triple_encode(lam, k, l);
    } catch (const DomainError&) {
      return fail_if(false, "");
    }
    return fail_if(!(triple_decode(t) == lam), lam.to_string());
  });
  run.property("symfun", "stable_equals_direct", z.reps, [&](Rng& rng) {
    ShiftData s;
    for (int i = pick(rng, 0, 2); i > 0; --i) s.a.push_back(pick(rng, -1, 2));
    for (int i = pick(rng, 0, 1); i > 0; --i) s.b.push_back(pick(rng, -1, 1));
    s.gamma = random_partition(rng, 2);
    s.delta = random_partition(rng, 2);
    LieFlavor f = rng() % 2 ? LieFlavor::gl : LieFlavor::osp;
    Partition nu = random_partition(rng, 2), nb = f == LieFlavor::gl ? random_partition(rng, 2) : Partition{};
    const long long st = stable_hc_multiplicity(s, nu, nb, f);
    const int sp = stable_spacing(nu, nb);
    return fail_if(st != direct_hc_multiplicity(s, nu, nb, f, sp) || st != direct_hc_multiplicity(s, nu, nb, f, sp + 3),
                   lie_flavor_name(f) + " " + nu.to_string() + nb.to_string());
  });
  run.property("symfun", "telescoping", 2 * z.reps, [&](Rng& rng) {
    const int m = pick(rng, 0, 10), k = pick(rng, 1, 8);
    Rational s = 0;
    for (int i = 0; i < m; ++i) s += pk(Rational(i), k);
    return fail_if(s != rational_pow(Rational(m), k), std::to_string(m) + "^" + std::to_string(k));
  });
  run.property("symfun", "char_search_roundtrip", 2 * z.reps, [&](Rng& rng) {
    const int r = pick(rng, 0, 2), s = pick(rng, 0, 1);
    Decomposition orig;
    for (int j = 0; j < r; ++j) orig.b.push_back(pick(rng, -4, 4));
    for (int j = 0; j < s; ++j) orig.c.push_back(pick(rng, -4, 4));
    std::vector<Rational> b(orig.b.begin(), orig.b.end()), c(orig.c.begin(), orig.c.end());
    auto m = char_difference_forward(b, c, LieFlavor::gl, r + s + 3);
    auto found = search_decomposition(m, r, s, 4);
    if (!found) return fail_if(true, "no decomposition found");
    Decomposition x = reduce_cancelling(orig), y = reduce_cancelling(*found);
    return fail_if(x.b != y.b || x.c != y.c, "recovered a different reduced decomposition");
  });
}

void cli_props(Runner& run, const Sizes& z) {
  run.property("cli", "json_roundtrip", 4 * z.reps, [&](Rng& rng) {
    Flavor f = random_flavor(rng);
    auto a = random_object(rng, f, z.diag);
    auto b = compatible(rng, a, z.diag);
    Morphism m = random_morphism(rng, a, b);
    if (f == Flavor::S && rng() % 2) m = e_to_delta(m);
    const std::string text = to_json(m).dump();
    Morphism back = morphism_from_json(Json::parse(text));
    if (!(back == m)) return fail_if(true, "morphism " + text);
    if (to_json(back).dump() != text) return fail_if(true, "re-emitted text differs");
    Partition p = random_partition(rng, 6);
    return fail_if(!(partition_from_json(Json::parse(to_json(p).dump())) == p), p.to_string());
  });
}

}  // namespace

bool SelftestReport::passed() const {
  for (const auto& p : properties)
    if (p.failures) return false;
  return true;
}

std::vector<std::string> SelftestReport::failing() const {
  std::vector<std::string> out;
  for (const auto& p : properties)
    if (p.failures) out.push_back(p.name);
  return out;
}

std::uint64_t selftest_seed_from_env() {
  const char* s = std::getenv("INTERPCAT_SEED");
  if (!s || !*s) return 42;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (*end) throw DomainError(std::string("INTERPCAT_SEED is not a number: ") + s);
  return v;
}

SelftestReport run_selftest(const SelftestOptions& opts) {
  SelftestReport report;
  report.level = opts.level;
  report.seed = opts.seed;
  const Sizes z = opts.level == SelftestLevel::quick ? Sizes{4, 2, 3, 4} : Sizes{300, 4, 4, 7};
  Runner run(opts, report);
  exactnum_props(run, z);
  diagram_props(run, z);
  homspace_props(run, z, opts);
  karoubi_props(run, z);
  semisimplify_props(run, z);
  oracle_props(run, z);
  symfun_props(run, z);
  cli_props(run, z);
  return report;
}

Json to_json(const SelftestReport& r) {
  Json props = Json::array();
  for (const auto& p : r.properties) {
    Json j{{"module", p.module}, {"name", p.name}, {"cases", p.cases}, {"failures", p.failures}};
    if (p.failures) j["first_failure"] = p.first_failure;
    props.push_back(j);
  }
  return {{"level", r.level == SelftestLevel::quick ? "quick" : "full"},
          {"seed", r.seed},
          {"passed", r.passed()},
          {"failing", r.failing()},
          {"properties", props}};
}

}  // namespace interpcat
