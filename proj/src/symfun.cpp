#include "interpcat/symfun.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <tuple>

namespace interpcat {

std::string lie_flavor_name(LieFlavor f) { return f == LieFlavor::gl ? "gl" : "osp"; }

LieFlavor parse_lie_flavor(const std::string& s) {
  if (s == "gl" || s == "GL") return LieFlavor::gl;
  if (s == "osp" || s == "o" || s == "sp" || s == "O" || s == "Sp") return LieFlavor::osp;
  throw DomainError("unknown Lie flavor: " + s);
}

// ---------------------------------------------------------------- LR

namespace {

struct LrMemo {
  std::mutex mu;
  std::map<std::tuple<Partition, Partition, Partition>, long long> table;
};

LrMemo& lr_memo() {
  static LrMemo m;
  return m;
}

long long lr_count(const Partition& lambda, const Partition& mu, const Partition& nu) {
  std::vector<std::pair<int, int>> cells;  // reading order: rows top-down, right to left
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = lambda.part(i) - 1; j >= mu.part(i); --j) cells.emplace_back(i, j);
  std::vector<std::vector<int>> tab(static_cast<size_t>(lambda.length()));
  for (int i = 0; i < lambda.length(); ++i) tab[static_cast<size_t>(i)].assign(static_cast<size_t>(lambda.part(i)), 0);
  std::vector<int> cnt(static_cast<size_t>(nu.length()) + 1, 0);
  long long total = 0;
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == cells.size()) {
      ++total;
      return;
    }
    auto [i, j] = cells[idx];
    int hi = nu.length();
    if (j + 1 < lambda.part(i)) hi = std::min(hi, tab[static_cast<size_t>(i)][static_cast<size_t>(j + 1)]);
    int lo = 1;
    if (i > 0 && j >= mu.part(i - 1)) lo = tab[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] + 1;
    for (int v = lo; v <= hi; ++v) {
      auto vv = static_cast<size_t>(v);
      if (cnt[vv] >= nu.part(v - 1)) continue;
      if (v > 1 && cnt[vv] + 1 > cnt[vv - 1]) continue;
      ++cnt[vv];
      tab[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
      rec(idx + 1);
      --cnt[vv];
    }
    tab[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
  };
  rec(0);
  return total;
}

}  // namespace

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (mu.size() + nu.size() != lambda.size() || !lambda.contains(mu) || !lambda.contains(nu)) return 0;
  auto key = std::make_tuple(lambda, mu, nu);
  {
    std::lock_guard<std::mutex> lock(lr_memo().mu);
    auto it = lr_memo().table.find(key);
    if (it != lr_memo().table.end()) return it->second;
  }
  long long v = lr_count(lambda, mu, nu);
  std::lock_guard<std::mutex> lock(lr_memo().mu);
  lr_memo().table.emplace(key, v);
  return v;
}

std::vector<Partition> remove_boxes(const Partition& lambda, int boxes) {
  if (boxes < 0 || boxes > lambda.size()) return {};
  std::set<Partition> level{lambda};
  for (int step = 0; step < boxes; ++step) {
    std::set<Partition> next;
    for (const auto& p : level)
      for (int i = 0; i < p.length(); ++i)
        if (p.part(i) > p.part(i + 1)) {
          std::vector<int> q = p.parts;
          --q[static_cast<size_t>(i)];
          next.insert(make_partition(q));
        }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

long long skew_schur_pairing(const Partition& lambda, const Partition& nu, const Partition& mu,
                             const Partition& nubar) {
  if (lambda.size() - nu.size() != mu.size() - nubar.size()) return 0;
  long long sum = 0;
  for (const auto& eta : remove_boxes(lambda, nu.size())) {
    if (!mu.contains(eta)) continue;
    const long long x = lr_coefficient(lambda, eta, nu);
    if (x) sum += x * lr_coefficient(mu, eta, nubar);
  }
  return sum;
}

long long gl_mixed_multiplicity(const Partition& lambda, const Partition& mu, const Partition& nu,
                                const Partition& nubar) {
  return skew_schur_pairing(lambda, nu, mu, nubar);
}

long long osp_multiplicity(const Partition& lambda, const Partition& mu, const Partition& nu) {
  long long sum = 0;
  for (int ss = 0; ss <= nu.size(); ++ss) {
    const int st = nu.size() - ss;
    for (const auto& zeta : remove_boxes(lambda, ss)) {
      if (!mu.contains(zeta) || mu.size() - zeta.size() != st) continue;
      for (const auto& sigma : partitions_of(ss)) {
        const long long x = lr_coefficient(lambda, zeta, sigma);
        if (!x) continue;
        for (const auto& tau : partitions_of(st)) {
          const long long z = lr_coefficient(nu, sigma, tau);
          if (z) sum += x * z * lr_coefficient(mu, zeta, tau);
        }
      }
    }
  }
  return sum;
}

// ---------------------------------------------------------------- triples

Partition triple_glue(const std::vector<int>& alpha, const std::vector<int>& beta, const Partition& gamma) {
  const int l = static_cast<int>(beta.size());
  std::vector<int> rows;
  for (int a : alpha) {
    if (a < 0) throw DomainError("triple: negative part in alpha");
    rows.push_back(l + a);
  }
  int below = gamma.length();
  for (int b : beta) {
    if (b < 0) throw DomainError("triple: negative part in beta");
    below = std::max(below, b);
  }
  for (int i = 1; i <= below; ++i) {
    int cols = 0;
    for (int b : beta) cols += b >= i;
    if (gamma.part(i - 1) > 0 && cols < l) throw DomainError("triple: gamma row " + std::to_string(i) + " is not supported by the beta columns");
    rows.push_back(cols + gamma.part(i - 1));
  }
  for (size_t i = 1; i < rows.size(); ++i)
    if (rows[i] > rows[i - 1])
      throw DomainError("triple: pieces do not glue to a partition (row " + std::to_string(i + 1) + ")");
  return make_partition(rows);
}

namespace {

std::vector<std::string> triple_violations(const Partition& lambda, const TriplePartition& tp) {
  std::vector<std::string> bad;
  const int k = tp.k, l = tp.l;
  const Partition conj = lambda.conjugate();
  if (tp.alpha.length() != k) bad.push_back("constraint 1: k = l(alpha)");
  if (tp.beta.length() != l) bad.push_back("constraint 1: l = l(beta)");
  if (l > lambda.durfee()) bad.push_back("constraint 1: l <= d(lambda)");
  if (tp.gamma.length() != conj.part(l) - k) bad.push_back("constraint 2: l(gamma) = lambda'_{l+1} - k");
  for (int i = 0; i < k; ++i)
    if (tp.alpha.part(i) != lambda.part(i) - l) bad.push_back("constraint 3: alpha_i = lambda_i - l");
  for (int j = 0; j < l; ++j)
    if (tp.beta.part(j) != conj.part(j) - k) bad.push_back("constraint 3: beta_j = lambda'_j - k");
  for (int i = 0; i < tp.gamma.length(); ++i)
    if (tp.gamma.part(i) != lambda.part(k + i) - l) bad.push_back("constraint 4: gamma_i = lambda_{k+i} - l");
  if (k > 0 && tp.gamma.part(0) > tp.alpha.part(k - 1)) bad.push_back("constraint 5: gamma_1 <= alpha_k");
  if (l > 0 && tp.gamma.conjugate().part(0) > tp.beta.part(l - 1)) bad.push_back("constraint 5: gamma'_1 <= beta_l");
  bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
  return bad;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

}  // namespace

TriplePartition triple_encode(const Partition& lambda, int k, int l) {
  if (k < 0 || l < 0) throw DomainError("triple: negative cut");
  if (k > lambda.length() || l > lambda.part(0)) throw DomainError("triple: cut outside lambda");
  const Partition conj = lambda.conjugate();
  std::vector<int> alpha, beta, gamma;
  for (int i = 0; i < k; ++i) alpha.push_back(lambda.part(i) - l);
  for (int j = 0; j < l; ++j) beta.push_back(conj.part(j) - k);
  for (int i = 0; i < conj.part(l) - k; ++i) gamma.push_back(lambda.part(k + i) - l);
  for (int v : alpha)
    if (v <= 0) throw DomainError("triple: constraint 1 fails, row " + std::to_string(k) + " does not reach past column " + std::to_string(l));
  for (int v : beta)
    if (v <= 0) throw DomainError("triple: constraint 1 fails, column " + std::to_string(l) + " does not reach below row " + std::to_string(k));
  TriplePartition tp{Partition(alpha), Partition(beta), make_partition(gamma), k, l};
  auto bad = triple_violations(lambda, tp);
  if (!bad.empty()) throw DomainError("triple: " + join(bad));
  return tp;
}

Partition triple_decode(const TriplePartition& tp) {
  if (tp.alpha.length() != tp.k) throw DomainError("triple: constraint 1: k = l(alpha)");
  if (tp.beta.length() != tp.l) throw DomainError("triple: constraint 1: l = l(beta)");
  std::vector<std::string> pre;
  if (tp.k > 0 && tp.gamma.part(0) > tp.alpha.part(tp.k - 1)) pre.push_back("constraint 5: gamma_1 <= alpha_k");
  if (tp.l > 0 && tp.gamma.length() > tp.beta.part(tp.l - 1)) pre.push_back("constraint 5: gamma'_1 <= beta_l");
  if (!pre.empty()) throw DomainError("triple: " + join(pre));
  Partition lambda = triple_glue(tp.alpha.parts, tp.beta.parts, tp.gamma);
  auto bad = triple_violations(lambda, tp);
  if (!bad.empty()) throw DomainError("triple: " + join(bad));
  return lambda;
}

// ---------------------------------------------------------------- stabilization

namespace {

// c_nu(c, d, gamma, eps): LR count on the model skew shape lambda~/eta~.
long long model_lr(const std::vector<int>& c, const std::vector<int>& d, const Partition& gamma,
                   const Partition& eps, const Partition& nu) {
  if (!gamma.contains(eps)) return 0;
  const int k = static_cast<int>(c.size()), l = static_cast<int>(d.size());
  std::vector<int> at(static_cast<size_t>(k)), bt(static_cast<size_t>(l)), ac(at.size()), bd(bt.size());
  int run = gamma.part(0);
  for (int i = k - 1; i >= 0; --i) {
    ac[static_cast<size_t>(i)] = run;
    run += c[static_cast<size_t>(i)];
    at[static_cast<size_t>(i)] = run;
  }
  run = gamma.conjugate().part(0);
  for (int i = l - 1; i >= 0; --i) {
    bd[static_cast<size_t>(i)] = run;
    run += d[static_cast<size_t>(i)];
    bt[static_cast<size_t>(i)] = run;
  }
  Partition lt = triple_glue(at, bt, gamma);
  Partition et = triple_glue(ac, bd, eps);
  if (!lt.contains(et)) return 0;
  return lr_coefficient(lt, et, nu);
}

// All c in Z^k_{>=0} with c + a >= 0 and |c| <= budget.
void shifted_vectors(const std::vector<int>& a, int budget, const std::function<void(const std::vector<int>&, int)>& fn) {
  std::vector<int> c(a.size(), 0);
  std::function<void(size_t, int)> rec = [&](size_t i, int used) {
    if (i == a.size()) {
      fn(c, used);
      return;
    }
    for (int v = std::max(0, -a[i]); used + v <= budget; ++v) {
      c[i] = v;
      rec(i + 1, used + v);
    }
  };
  rec(0, 0);
}

long long stable_gl(const ShiftData& s, const Partition& nu, const Partition& nubar) {
  int sa = 0, sb = 0;
  for (int x : s.a) sa += x;
  for (int x : s.b) sb += x;
  std::vector<Partition> eps;
  for (const auto& e : subpartitions(s.gamma))
    if (s.delta.contains(e)) eps.push_back(e);
  long long total = 0;
  shifted_vectors(s.a, nu.size(), [&](const std::vector<int>& c, int sc) {
    shifted_vectors(s.b, nu.size() - sc, [&](const std::vector<int>& d, int sd) {
      for (const auto& e : eps) {
        if (sc + sd + s.gamma.size() - e.size() != nu.size()) continue;
        if (sc + sd + sa + sb + s.delta.size() - e.size() != nubar.size()) continue;
        const long long x = model_lr(c, d, s.gamma, e, nu);
        if (!x) continue;
        std::vector<int> ca = c, db = d;
        for (size_t i = 0; i < ca.size(); ++i) ca[i] += s.a[i];
        for (size_t i = 0; i < db.size(); ++i) db[i] += s.b[i];
        total += x * model_lr(ca, db, s.delta, e, nubar);
      }
    });
  });
  return total;
}

}  // namespace

long long stable_hc_multiplicity(const ShiftData& s, const Partition& nu, const Partition& nubar, LieFlavor f) {
  if (f == LieFlavor::gl) return stable_gl(s, nu, nubar);
  if (!nubar.empty()) throw DomainError("osp multiplicities take a single partition nu");
  long long total = 0;
  for (int so = 0; so <= nu.size(); ++so)
    for (const auto& omega : partitions_of(so))
      for (const auto& xi : partitions_of(nu.size() - so)) {
        const long long z = lr_coefficient(nu, omega, xi);
        if (z) total += z * stable_gl(s, omega, xi);
      }
  return total;
}

int stable_spacing(const Partition& nu, const Partition& nubar) { return nu.size() + nubar.size() + 1; }

std::pair<Partition, Partition> shifted_pair(const ShiftData& s, int spacing) {
  if (spacing < 1) throw DomainError("spacing must be positive");
  auto build = [&](const std::vector<int>& shift, int floor) {
    int amax = 0;
    for (int x : shift) amax = std::max(amax, std::abs(x));
    const int gap = spacing + 2 * amax;
    std::vector<int> base(shift.size()), moved(shift.size());
    const int k = static_cast<int>(shift.size());
    for (int i = 0; i < k; ++i) {
      base[static_cast<size_t>(i)] = floor + amax + spacing + (k - 1 - i) * gap;
      moved[static_cast<size_t>(i)] = base[static_cast<size_t>(i)] + shift[static_cast<size_t>(i)];
    }
    return std::make_pair(base, moved);
  };
  auto [alpha, alpha_a] = build(s.a, std::max(s.gamma.part(0), s.delta.part(0)));
  auto [beta, beta_b] = build(s.b, std::max(s.gamma.conjugate().part(0), s.delta.conjugate().part(0)));
  Partition lambda = triple_decode({Partition(alpha), Partition(beta), s.gamma, s.k(), s.l()});
  Partition mu = triple_decode({Partition(alpha_a), Partition(beta_b), s.delta, s.k(), s.l()});
  return {lambda, mu};
}

long long direct_hc_multiplicity(const ShiftData& s, const Partition& nu, const Partition& nubar, LieFlavor f,
                                 int spacing) {
  if (spacing < stable_spacing(nu, nubar))
    throw DomainError("spacing " + std::to_string(spacing) + " is below the stable threshold " +
                      std::to_string(stable_spacing(nu, nubar)));
  auto [lambda, mu] = shifted_pair(s, spacing);
  if (f == LieFlavor::gl) return gl_mixed_multiplicity(lambda, mu, nu, nubar);
  if (!nubar.empty()) throw DomainError("osp multiplicities take a single partition nu");
  return osp_multiplicity(lambda, mu, nu);
}

// ---------------------------------------------------------------- central characters

Rational pk(const Rational& x, int k) { return rational_pow(x + 1, k) - rational_pow(x, k); }
Rational pbark(const Rational& x, int k) { return rational_pow(x - 1, k) - rational_pow(x, k); }

MomentSequence char_difference_forward(const std::vector<Rational>& b, const std::vector<Rational>& c, LieFlavor f,
                                       int K) {
  if (K < 0) throw DomainError("K must be nonnegative");
  if (f == LieFlavor::osp && !c.empty()) throw DomainError("the osp flavor takes only b");
  MomentSequence m{f, {}};
  for (int k = 1; k <= K; ++k) {
    Rational v = 0;
    if (f == LieFlavor::gl || k % 2 == 0) {
      for (const auto& x : b) v += pk(x, k);
      for (const auto& x : c) v += pbark(x, k);
    }
    m.values[k] = v;
  }
  return m;
}

std::vector<Rational> exponential_coefficients(const MomentSequence& m) {
  std::vector<Rational> out(static_cast<size_t>(m.max_k()) + 1, Rational(0));
  Integer fact = 1;
  for (int k = 1; k <= m.max_k(); ++k) {
    fact *= k;
    auto it = m.values.find(k);
    if (it != m.values.end()) out[static_cast<size_t>(k)] = it->second / Rational(fact);
  }
  return out;
}

MomentSequence weight_moment_difference(const std::vector<Rational>& mu, const std::vector<int>& up,
                                        const std::vector<int>& down, int K) {
  std::vector<Rational> lambda = mu;
  std::set<int> seen;
  for (int i : up) {
    if (i < 1 || i > static_cast<int>(mu.size())) throw DomainError("index " + std::to_string(i) + " outside mu");
    if (!seen.insert(i).second) throw DomainError("index overlap at " + std::to_string(i));
    lambda[static_cast<size_t>(i - 1)] += 1;
  }
  for (int j : down) {
    if (j < 1 || j > static_cast<int>(mu.size())) throw DomainError("index " + std::to_string(j) + " outside mu");
    if (!seen.insert(j).second) throw DomainError("index overlap at " + std::to_string(j));
    lambda[static_cast<size_t>(j - 1)] -= 1;
  }
  std::vector<Rational> b, c;
  for (int i : up) b.push_back(mu[static_cast<size_t>(i - 1)]);
  for (int j : down) c.push_back(mu[static_cast<size_t>(j - 1)]);
  MomentSequence m = char_difference_forward(b, c, LieFlavor::gl, K);
  for (int k = 1; k <= K; ++k) {
    Rational direct = 0;
    for (size_t i = 0; i < mu.size(); ++i) direct += rational_pow(lambda[i], k) - rational_pow(mu[i], k);
    if (direct != m.values[k]) throw DomainError("moment identity failed at k = " + std::to_string(k));
  }
  return m;
}

std::optional<Decomposition> search_decomposition(const MomentSequence& m, int r, int s, int bound) {
  if (r < 0 || s < 0 || bound < 0) throw DomainError("search_decomposition: negative size or bound");
  if (m.flavor == LieFlavor::osp && s > 0) throw DomainError("the osp flavor takes only b");
  if (m.max_k() < r + s + 2)
    throw DomainError("search_decomposition needs at least r+s+2 = " + std::to_string(r + s + 2) + " moments");
  const int K = m.max_k();
  const int width = 2 * bound + 1;
  // term[x][k] for x in [-bound, bound]
  std::vector<std::vector<Rational>> up(static_cast<size_t>(width)), down(static_cast<size_t>(width));
  for (int x = -bound; x <= bound; ++x)
    for (int k = 0; k <= K; ++k) {
      up[static_cast<size_t>(x + bound)].push_back(pk(x, k));
      down[static_cast<size_t>(x + bound)].push_back(pbark(x, k));
    }
  std::vector<Rational> target(static_cast<size_t>(K) + 1, Rational(0));
  std::vector<bool> given(static_cast<size_t>(K) + 1, false);
  for (const auto& [k, v] : m.values)
    if (k >= 1) {
      target[static_cast<size_t>(k)] = v;
      given[static_cast<size_t>(k)] = true;
    }
  const bool osp = m.flavor == LieFlavor::osp;
  std::vector<int> b(static_cast<size_t>(r)), c(static_cast<size_t>(s));
  std::optional<Decomposition> found;
  std::vector<Rational> acc(static_cast<size_t>(K) + 1);
  std::function<void(int, int)> rec_c;
  std::function<void(int, int)> rec_b = [&](int i, int lo) {
    if (found) return;
    if (i == r) {
      rec_c(0, -bound);
      return;
    }
    for (int x = lo; x <= bound && !found; ++x) {
      b[static_cast<size_t>(i)] = x;
      rec_b(i + 1, x);
    }
  };
  rec_c = [&](int j, int lo) {
    if (found) return;
    if (j == s) {
      for (int k = 1; k <= K; ++k) {
        if (!given[static_cast<size_t>(k)]) continue;
        Rational v = 0;
        if (!osp || k % 2 == 0) {
          for (int x : b) v += up[static_cast<size_t>(x + bound)][static_cast<size_t>(k)];
          for (int x : c) v += down[static_cast<size_t>(x + bound)][static_cast<size_t>(k)];
        }
        if (v != target[static_cast<size_t>(k)]) return;
      }
      found = Decomposition{b, c};
      return;
    }
    for (int x = lo; x <= bound && !found; ++x) {
      c[static_cast<size_t>(j)] = x;
      rec_c(j + 1, x);
    }
  };
  rec_b(0, -bound);
  return found;
}

Decomposition reduce_cancelling(Decomposition d) {
  std::sort(d.b.begin(), d.b.end());
  std::sort(d.c.begin(), d.c.end());
  std::vector<int> b, c = d.c;
  for (int x : d.b) {
    auto it = std::find(c.begin(), c.end(), x + 1);
    if (it != c.end())
      c.erase(it);
    else
      b.push_back(x);
  }
  return {b, c};
}

}  // namespace interpcat
