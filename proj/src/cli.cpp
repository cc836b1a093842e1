#include "interpcat/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "interpcat/json_io.hpp"
#include "interpcat/selftest.hpp"

namespace interpcat {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raw option values; each subcommand reads the ones it registered.
struct Opts {
  std::string flavor, p, q, f, to, lambda, mu, nu, nubar, object, t, shift, moments, triple, b, c, mu_w, up, down;
  std::string source_colors, target_colors, level;
  int l = -1, m = -1, k = -1, n = -1, r = -1, s = -1, size = -1, bound = 5, K = -1, upto = -1, spacing = -1;
  bool symbolic = false, t_zero = false, decode = false, check_direct = false;
  std::optional<std::uint64_t> seed;
};

template <class T>
void need(const T& v, const T& unset, const std::string& flag) {
  if (v == unset) throw UsageError("missing required option " + flag);
}

Flavor flavor_opt(const Opts& o) {
  need(o.flavor, std::string(), "--flavor");
  try {
    return parse_flavor(o.flavor);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

LieFlavor lie_opt(const Opts& o, LieFlavor dflt) {
  if (o.flavor.empty()) return dflt;
  try {
    return parse_lie_flavor(o.flavor);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

Rational t_opt(const Opts& o) {
  need(o.t, std::string(), "--t");
  try {
    return parse_rational(o.t);
  } catch (const DomainError& e) {
    throw SchemaError("--t", e.what());
  }
}

Json payload(const std::string& v, const std::string& flag) {
  need(v, std::string(), flag);
  return load_payload(v, flag);
}

Partition part_opt(const std::string& v, const std::string& flag) { return partition_from_json(payload(v, flag), flag); }

void check_flavor(const Opts& o, Flavor got, const std::string& where) {
  if (!o.flavor.empty() && flavor_opt(o) != got)
    throw SchemaError(where + ".flavor", "payload flavor " + flavor_name(got) + " does not match --flavor " + o.flavor);
}

Morphism morph_opt(const Opts& o, const std::string& v, const std::string& flag) {
  Morphism f = morphism_or_diagram(payload(v, flag), flag);
  check_flavor(o, f.flavor(), flag);
  return f;
}

bool is_diagram_payload(const Json& j) { return j.is_object() && !j.contains("terms"); }

ObjectSignature object_opt(const Opts& o) {
  if (!o.object.empty()) return object_from_json(payload(o.object, "--object"), "--object");
  const Flavor f = flavor_opt(o);
  if (f == Flavor::GL) {
    need(o.source_colors, std::string(), "--colors");
    return ObjectSignature::gl_word(o.source_colors);
  }
  need(o.size, -1, "--size");
  return ObjectSignature::make(f, o.size);
}

Json label_json(Flavor f, const SimpleLabel& l) { return to_json(f, l); }

// Idempotent given either as a payload (-f) or by a label (--flavor, --lambda).
Morphism idempotent_opt(const Opts& o) {
  if (!o.f.empty()) return morph_opt(o, o.f, "-f");
  const Flavor fl = flavor_opt(o);
  return label_idempotent(fl, label_from_json(fl, payload(o.lambda, "--lambda"), "--lambda"));
}

using Handler = std::function<Json(const Opts&)>;

struct Command {
  std::string help;
  std::function<void(CLI::App&, Opts&)> setup;
  Handler run;
};

void flavor_flag(CLI::App& a, Opts& o) { a.add_option("--flavor", o.flavor, "S, GL, O or Sp"); }

std::map<std::string, Command> commands() {
  std::map<std::string, Command> c;

  c["compose"] = {"stack -P on top of -Q (P acts first)",
                  [](CLI::App& a, Opts& o) {
                    flavor_flag(a, o);
                    a.add_option("-P", o.p, "diagram or morphism payload (top)");
                    a.add_option("-Q", o.q, "diagram or morphism payload (below)");
                  },
                  [](const Opts& o) -> Json {
                    Json pj = payload(o.p, "-P"), qj = payload(o.q, "-Q");
                    if (is_diagram_payload(pj) && is_diagram_payload(qj)) {
                      Diagram p = diagram_from_json(pj, "-P"), q = diagram_from_json(qj, "-Q");
                      check_flavor(o, p.flavor, "-P");
                      check_flavor(o, q.flavor, "-Q");
                      Composite r = compose(q, p);
                      RatFunc coeff(1);
                      for (int i = 0; i < r.middle; ++i) coeff *= loop_value(p.flavor);
                      return {{"diagram", to_json(r.diagram)}, {"t_power", r.middle}, {"coeff", coeff.to_string()}};
                    }
                    Morphism p = morph_opt(o, o.p, "-P"), q = morph_opt(o, o.q, "-Q");
                    return {{"morphism", to_json(compose(q, p))}};
                  }};

  c["tensor"] = {"P (x) Q",
                 [](CLI::App& a, Opts& o) {
                   flavor_flag(a, o);
                   a.add_option("-P", o.p, "left factor");
                   a.add_option("-Q", o.q, "right factor");
                 },
                 [](const Opts& o) -> Json {
                   Json pj = payload(o.p, "-P"), qj = payload(o.q, "-Q");
                   if (is_diagram_payload(pj) && is_diagram_payload(qj)) {
                     Diagram p = diagram_from_json(pj, "-P"), q = diagram_from_json(qj, "-Q");
                     check_flavor(o, p.flavor, "-P");
                     check_flavor(o, q.flavor, "-Q");
                     if (p.flavor != q.flavor) throw DomainError("tensor of different flavors");
                     return {{"diagram", to_json(tensor_diagram(p, q))}};
                   }
                   return {{"morphism", to_json(tensor(morph_opt(o, o.p, "-P"), morph_opt(o, o.q, "-Q")))}};
                 }};

  c["trace"] = {"categorical trace of an endomorphism",
                [](CLI::App& a, Opts& o) {
                  flavor_flag(a, o);
                  a.add_option("-f", o.f, "endomorphism payload");
                  a.add_option("--t", o.t, "evaluate at this rational t");
                },
                [](const Opts& o) -> Json {
                  RatFunc tr = trace(morph_opt(o, o.f, "-f"));
                  Json j{{"trace", tr.to_string()}};
                  if (!o.t.empty()) j["value"] = to_string(rf_eval(tr, t_opt(o)));
                  return j;
                }};

  c["dim"] = {"dimension of an object",
              [](CLI::App& a, Opts& o) {
                flavor_flag(a, o);
                a.add_option("--object", o.object, "object payload");
                a.add_option("--size", o.size, "object size for S, O, Sp");
                a.add_option("--colors", o.source_colors, "colour word for GL");
                a.add_option("--t", o.t, "evaluate at this rational t");
              },
              [](const Opts& o) -> Json {
                ObjectSignature x = object_opt(o);
                RatFunc d = dimension(x);
                Json j{{"object", to_json(x)}, {"dimension", d.to_string()}};
                if (!o.t.empty()) j["value"] = to_string(rf_eval(d, t_opt(o)));
                return j;
              }};

  c["basis-change"] = {"convert between e and delta bases (S only)",
                       [](CLI::App& a, Opts& o) {
                         flavor_flag(a, o);
                         a.add_option("-f", o.f, "morphism payload");
                         a.add_option("--to", o.to, "e or delta");
                       },
                       [](const Opts& o) -> Json {
                         Morphism f = morph_opt(o, o.f, "-f");
                         if (o.to == "delta") return to_json(f.basis == Basis::Delta ? f : e_to_delta(f));
                         if (o.to == "e") return to_json(f.basis == Basis::E ? f : delta_to_e(f));
                         throw UsageError("--to must be e or delta");
                       }};

  c["idem-check"] = {"is the endomorphism idempotent",
                     [](CLI::App& a, Opts& o) {
                       flavor_flag(a, o);
                       a.add_option("-f", o.f, "endomorphism payload");
                     },
                     [](const Opts& o) -> Json { return {{"idempotent", is_idempotent(morph_opt(o, o.f, "-f"))}}; }};

  c["young"] = {"normalised Young symmetrizer",
                [](CLI::App& a, Opts& o) {
                  flavor_flag(a, o);
                  a.add_option("--lambda", o.lambda, "partition, or {black,white} for GL");
                },
                [](const Opts& o) -> Json {
                  const Flavor f = flavor_opt(o);
                  SimpleLabel l = label_from_json(f, payload(o.lambda, "--lambda"), "--lambda");
                  if (f == Flavor::GL) return to_json(young_symmetrizer(l));
                  return to_json(young_symmetrizer(l.black, f));
                }};

  c["promote"] = {"lift an endomorphism of [n] (or a GL word) one step up",
                  [](CLI::App& a, Opts& o) {
                    flavor_flag(a, o);
                    a.add_option("-f", o.f, "endomorphism payload");
                    a.add_flag("--t-zero", o.t_zero, "use the t = 0 maps");
                  },
                  [](const Opts& o) -> Json { return to_json(promote(morph_opt(o, o.f, "-f"), o.t_zero)); }};

  c["simple-dim"] = {"dimension of the indecomposable L(lambda)",
                     [](CLI::App& a, Opts& o) {
                       flavor_flag(a, o);
                       a.add_option("--lambda", o.lambda, "partition, or {black,white} for GL");
                       a.add_option("--t", o.t, "evaluate at this rational t");
                     },
                     [](const Opts& o) -> Json {
                       const Flavor f = flavor_opt(o);
                       RatFunc d = dim_simple(label_from_json(f, payload(o.lambda, "--lambda"), "--lambda"), f);
                       if (!o.t.empty()) return {{"dim", d.to_string()}, {"value", to_string(rf_eval(d, t_opt(o)))}};
                       return d.to_string();
                     }};

  c["decompose"] = {"multiplicities of indecomposables in (X, e)",
                    [](CLI::App& a, Opts& o) {
                      flavor_flag(a, o);
                      a.add_option("-f", o.f, "idempotent payload");
                      a.add_option("--lambda", o.lambda, "or: the Young idempotent of this label");
                    },
                    [](const Opts& o) -> Json {
                      KaroubiObject x = KaroubiObject::make(idempotent_opt(o));
                      const Flavor f = x.sig.flavor;
                      Json parts = Json::array();
                      for (const auto& [nu, mult] : decompose(x))
                        parts.push_back({{"label", label_json(f, nu)},
                                         {"multiplicity", mult},
                                         {"dim", dim_simple(nu, f).to_string()}});
                      return {{"object", to_json(x.sig)}, {"trace", trace(x.idem).to_string()}, {"summands", parts}};
                    }};

  auto gram_objects = [](const Opts& o) {
    const Flavor f = flavor_opt(o);
    if (f == Flavor::GL) {
      need(o.source_colors, std::string(), "--source-colors");
      need(o.target_colors, std::string(), "--target-colors");
      return std::pair{ObjectSignature::gl_word(o.source_colors), ObjectSignature::gl_word(o.target_colors)};
    }
    need(o.l, -1, "-l");
    need(o.m, -1, "-m");
    return std::pair{ObjectSignature::make(f, o.l), ObjectSignature::make(f, o.m)};
  };
  auto gram_setup = [](CLI::App& a, Opts& o) {
    flavor_flag(a, o);
    a.add_option("-l", o.l, "source size");
    a.add_option("-m", o.m, "target size");
    a.add_option("--source-colors", o.source_colors, "GL source colour word");
    a.add_option("--target-colors", o.target_colors, "GL target colour word");
  };

  c["gram"] = {"trace-pairing Gram matrix on Hom([l],[m])",
               [gram_setup](CLI::App& a, Opts& o) {
                 gram_setup(a, o);
                 a.add_option("--t", o.t, "rational evaluation point");
                 a.add_flag("--symbolic", o.symbolic, "RatFunc entries instead of values at --t");
               },
               [gram_objects](const Opts& o) -> Json {
                 auto [x, y] = gram_objects(o);
                 if (o.symbolic) {
                   if (x.size + y.size > kSymbolicGramBudget)
                     throw DomainError("symbolic Gram limited to l + m <= " + std::to_string(kSymbolicGramBudget));
                   auto g = gram_symbolic(x, y);
                   Json rows = Json::array();
                   for (int i = 0; i < g.rows; ++i) {
                     Json row = Json::array();
                     for (int k = 0; k < g.cols; ++k) row.push_back(g.at(i, k).to_string());
                     rows.push_back(row);
                   }
                   Json j{{"source", to_json(x)}, {"target", to_json(y)}, {"basis", "e"}, {"gram", rows}};
                   if (g.rows == g.cols) j["determinant"] = gram_determinant(x, y).to_string();
                   return j;
                 }
                 return to_json(gram(x, y, t_opt(o)));
               }};

  c["negligible"] = {"is the morphism negligible at t",
                     [](CLI::App& a, Opts& o) {
                       flavor_flag(a, o);
                       a.add_option("-f", o.f, "morphism payload");
                       a.add_option("--t", o.t, "rational evaluation point");
                     },
                     [](const Opts& o) -> Json { return {{"negligible", is_negligible(morph_opt(o, o.f, "-f"), t_opt(o))}}; }};

  c["quotient-dim"] = {"dim Hom([l],[m]) modulo negligibles at t = n",
                       [](CLI::App& a, Opts& o) {
                         flavor_flag(a, o);
                         a.add_option("-l", o.l, "source size");
                         a.add_option("-m", o.m, "target size");
                         a.add_option("-n", o.n, "integer t");
                       },
                       [](const Opts& o) -> Json {
                         need(o.l, -1, "-l");
                         need(o.m, -1, "-m");
                         need(o.n, -1, "-n");
                         return {{"quotient_dim", quotient_dim(o.l, o.m, o.n, flavor_opt(o))}};
                       }};

  c["oracle-check"] = {"M(P) M(Q) = n^N M(P o Q) over all pairs",
                       [](CLI::App& a, Opts& o) {
                         flavor_flag(a, o);
                         a.add_option("-l", o.l, "size of X");
                         a.add_option("-m", o.m, "size of Y");
                         a.add_option("-k", o.k, "size of Z");
                         a.add_option("-n", o.n, "vector space dimension");
                       },
                       [](const Opts& o) -> Json {
                         need(o.l, -1, "-l");
                         need(o.m, -1, "-m");
                         need(o.k, -1, "-k");
                         need(o.n, -1, "-n");
                         return to_json(verify_structure_constants(o.l, o.m, o.k, o.n, flavor_opt(o)));
                       }};

  c["functor-rank"] = {"rank of the classical image of an idempotent at t = n",
                       [](CLI::App& a, Opts& o) {
                         flavor_flag(a, o);
                         a.add_option("-f", o.f, "idempotent payload");
                         a.add_option("--lambda", o.lambda, "or: the Young idempotent of this label");
                         a.add_option("-n", o.n, "vector space dimension");
                       },
                       [](const Opts& o) -> Json {
                         need(o.n, -1, "-n");
                         return {{"rank", functor_image_rank(KaroubiObject::make(idempotent_opt(o)), o.n)}};
                       }};

  c["lr"] = {"Littlewood-Richardson coefficient c^lambda_{mu,nu}",
             [](CLI::App& a, Opts& o) {
               a.add_option("--lambda", o.lambda, "outer partition");
               a.add_option("--mu", o.mu, "partition");
               a.add_option("--nu", o.nu, "partition");
             },
             [](const Opts& o) -> Json {
               return {{"lr", lr_coefficient(part_opt(o.lambda, "--lambda"), part_opt(o.mu, "--mu"), part_opt(o.nu, "--nu"))}};
             }};

  c["pairing"] = {"(s_{lambda/nu}, s_{mu/nubar})",
                  [](CLI::App& a, Opts& o) {
                    a.add_option("--lambda", o.lambda, "partition");
                    a.add_option("--nu", o.nu, "partition");
                    a.add_option("--mu", o.mu, "partition");
                    a.add_option("--nubar", o.nubar, "partition");
                  },
                  [](const Opts& o) -> Json {
                    return {{"pairing", skew_schur_pairing(part_opt(o.lambda, "--lambda"), part_opt(o.nu, "--nu"),
                                                           part_opt(o.mu, "--mu"), part_opt(o.nubar, "--nubar"))}};
                  }};

  c["mult-gl"] = {"multiplicity of V_(nu,nubar) in Hom(V_mu, V_lambda), stable range",
                  [](CLI::App& a, Opts& o) {
                    a.add_option("--lambda", o.lambda, "partition");
                    a.add_option("--mu", o.mu, "partition");
                    a.add_option("--nu", o.nu, "partition");
                    a.add_option("--nubar", o.nubar, "partition");
                  },
                  [](const Opts& o) -> Json {
                    return {{"multiplicity", gl_mixed_multiplicity(part_opt(o.lambda, "--lambda"), part_opt(o.mu, "--mu"),
                                                                   part_opt(o.nu, "--nu"), part_opt(o.nubar, "--nubar"))}};
                  }};

  c["mult-osp"] = {"multiplicity of V_nu in V_lambda (x) V_mu for O/Sp, stable range",
                   [](CLI::App& a, Opts& o) {
                     a.add_option("--lambda", o.lambda, "partition");
                     a.add_option("--mu", o.mu, "partition");
                     a.add_option("--nu", o.nu, "partition");
                     a.add_option("--upto", o.upto, "instead of --nu: all nu with |nu| <= upto");
                   },
                   [](const Opts& o) -> Json {
                     Partition lam = part_opt(o.lambda, "--lambda"), mu = part_opt(o.mu, "--mu");
                     if (!o.nu.empty()) return {{"multiplicity", osp_multiplicity(lam, mu, part_opt(o.nu, "--nu"))}};
                     need(o.upto, -1, "--nu or --upto");
                     Json rows = Json::array();
                     for (int k = 0; k <= o.upto; ++k)
                       for (const auto& nu : partitions_of(k))
                         rows.push_back({{"nu", to_json(nu)}, {"multiplicity", osp_multiplicity(lam, mu, nu)}});
                     return {{"multiplicities", rows}};
                   }};

  c["triple"] = {"cut lambda into [alpha, beta, gamma] (or glue with --decode)",
                 [](CLI::App& a, Opts& o) {
                   a.add_option("--lambda", o.lambda, "partition to encode");
                   a.add_option("-k", o.k, "row cut");
                   a.add_option("-l", o.l, "column cut");
                   a.add_option("--decode", o.triple, "triple payload to decode");
                 },
                 [](const Opts& o) -> Json {
                   if (!o.triple.empty()) return {{"lambda", to_json(triple_decode(triple_from_json(payload(o.triple, "--decode"), "--decode")))}};
                   need(o.k, -1, "-k");
                   need(o.l, -1, "-l");
                   return to_json(triple_encode(part_opt(o.lambda, "--lambda"), o.k, o.l));
                 }};

  c["hc-stable"] = {"stable Harish-Chandra multiplicity for shift data",
                    [](CLI::App& a, Opts& o) {
                      flavor_flag(a, o);
                      a.add_option("--shift", o.shift, "shift payload {a,b,gamma,delta}");
                      a.add_option("--nu", o.nu, "partition");
                      a.add_option("--nubar", o.nubar, "partition (gl only)");
                      a.add_flag("--check-direct", o.check_direct, "also evaluate at two explicit pairs");
                    },
                    [](const Opts& o) -> Json {
                      const LieFlavor f = lie_opt(o, LieFlavor::gl);
                      ShiftData s = shift_from_json(payload(o.shift, "--shift"), "--shift");
                      Partition nu = part_opt(o.nu, "--nu");
                      Partition nb = o.nubar.empty() ? Partition{} : part_opt(o.nubar, "--nubar");
                      if (f == LieFlavor::osp && !nb.empty()) throw SchemaError("--nubar", "osp takes a single partition");
                      Json j{{"flavor", lie_flavor_name(f)}, {"multiplicity", stable_hc_multiplicity(s, nu, nb, f)}};
                      if (o.check_direct) {
                        const int sp = stable_spacing(nu, nb);
                        Json d = Json::array();
                        for (int spacing : {sp, sp + 3}) {
                          auto [lam, mu] = shifted_pair(s, spacing);
                          d.push_back({{"spacing", spacing},
                                       {"lambda", to_json(lam)},
                                       {"mu", to_json(mu)},
                                       {"multiplicity", direct_hc_multiplicity(s, nu, nb, f, spacing)}});
                        }
                        j["direct"] = d;
                      }
                      return j;
                    }};

  c["char-moments"] = {"moments chi_k - psi_k from (b, c) or from a weight shift",
                       [](CLI::App& a, Opts& o) {
                         flavor_flag(a, o);
                         a.add_option("--b", o.b, "rational array");
                         a.add_option("--c", o.c, "rational array");
                         a.add_option("--weight", o.mu_w, "instead of b, c: weight mu (rational array)");
                         a.add_option("--up", o.up, "1-based indices raised (with --weight)");
                         a.add_option("--down", o.down, "1-based indices lowered (with --weight)");
                         a.add_option("-K", o.K, "number of moments");
                       },
                       [](const Opts& o) -> Json {
                         need(o.K, -1, "-K");
                         Json out;
                         if (!o.mu_w.empty()) {
                           auto mu = rationals_from_json(payload(o.mu_w, "--weight"), "--weight");
                           auto up = o.up.empty() ? std::vector<int>{} : ints_from_json(payload(o.up, "--up"), "--up");
                           auto dn = o.down.empty() ? std::vector<int>{} : ints_from_json(payload(o.down, "--down"), "--down");
                           out = to_json(weight_moment_difference(mu, up, dn, o.K));
                         } else {
                           auto b = o.b.empty() ? std::vector<Rational>{} : rationals_from_json(payload(o.b, "--b"), "--b");
                           auto c = o.c.empty() ? std::vector<Rational>{} : rationals_from_json(payload(o.c, "--c"), "--c");
                           out = to_json(char_difference_forward(b, c, lie_opt(o, LieFlavor::gl), o.K));
                         }
                         return out;
                       }};

  c["char-search"] = {"integer (b, c) reproducing a moment sequence",
                      [](CLI::App& a, Opts& o) {
                        a.add_option("--moments", o.moments, "moment payload {flavor, values}");
                        a.add_option("-r", o.r, "length of b");
                        a.add_option("-s", o.s, "length of c");
                        a.add_option("--bound", o.bound, "entries searched in [-bound, bound]");
                      },
                      [](const Opts& o) -> Json {
                        need(o.r, -1, "-r");
                        need(o.s, -1, "-s");
                        MomentSequence m = moments_from_json(payload(o.moments, "--moments"), "--moments");
                        auto d = search_decomposition(m, o.r, o.s, o.bound);
                        if (!d) return {{"found", false}};
                        Decomposition red = reduce_cancelling(*d);
                        return {{"found", true}, {"b", d->b}, {"c", d->c}, {"reduced", {{"b", red.b}, {"c", red.c}}}};
                      }};

  return c;
}

int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations in the interpolation categories Rep(S_t), Rep(GL_t), Rep(O_t)", "interpcat"};
  app.require_subcommand(1);
  Opts o;
  auto table = commands();
  std::map<CLI::App*, const Command*> by_app;
  for (const auto& [name, cmd] : table) {
    CLI::App* sc = app.add_subcommand(name, cmd.help);
    cmd.setup(*sc, o);
    by_app[sc] = &cmd;
  }
  CLI::App* st = app.add_subcommand("selftest", "randomized invariant suites of every module");
  st->add_option("level", o.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  st->add_option("--seed", o.seed, "overrides INTERPCAT_SEED (default 42)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << Json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }

  try {
    CLI::App* sc = app.get_subcommands().front();
    if (sc == st) {
      SelftestOptions so;
      so.level = o.level == "full" ? SelftestLevel::full : SelftestLevel::quick;
      so.seed = o.seed ? *o.seed : selftest_seed_from_env();
      SelftestReport rep = run_selftest(so);
      out << to_json(rep).dump(2) << "\n";
      if (!rep.passed()) {
        for (const auto& name : rep.failing()) err << "selftest: property failed: " << name << "\n";
        return 1;
      }
      return 0;
    }
    out << by_app.at(sc)->run(o).dump() << "\n";
    return 0;
  } catch (const SchemaError& e) {
    err << Json{{"error", "schema"}, {"path", e.path()}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << Json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << Json{{"error", "domain"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) { return dispatch(args, out, err); }

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return dispatch(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace interpcat
