#pragma once
// Slow reference implementations for the symmetric-function code.

#include <functional>
#include <map>
#include <vector>

#include "interpcat/symfun.hpp"

namespace oracle {

using interpcat::Partition;

// Cells of lambda/mu, row by row, left to right.
inline std::vector<std::pair<int, int>> skew_cells(const Partition& lambda, const Partition& mu) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = mu.part(i); j < lambda.part(i); ++j) cells.emplace_back(i, j);
  return cells;
}

// Calls fn(filling) for every semistandard filling of lambda/mu with entries 1..n.
inline void for_each_ssyt(const Partition& lambda, const Partition& mu, int n,
                          const std::function<void(const std::map<std::pair<int, int>, int>&)>& fn) {
  auto cells = skew_cells(lambda, mu);
  std::map<std::pair<int, int>, int> fill;
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == cells.size()) {
      fn(fill);
      return;
    }
    auto [i, j] = cells[idx];
    int lo = 1;
    if (auto it = fill.find({i, j - 1}); it != fill.end()) lo = std::max(lo, it->second);
    if (auto it = fill.find({i - 1, j}); it != fill.end()) lo = std::max(lo, it->second + 1);
    for (int v = lo; v <= n; ++v) {
      fill[{i, j}] = v;
      rec(idx + 1);
    }
    fill.erase({i, j});
  };
  rec(0);
}

// Brute force: every filling, then the three LR conditions checked afterwards.
inline long long lr_brute(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!lambda.contains(mu) || mu.size() + nu.size() != lambda.size()) return 0;
  auto cells = skew_cells(lambda, mu);
  const int n = nu.length();
  if (cells.empty()) return nu.size() == 0 ? 1 : 0;
  if (n == 0) return 0;
  std::vector<int> vals(cells.size(), 1);
  long long count = 0;
  while (true) {
    std::map<std::pair<int, int>, int> f;
    for (size_t i = 0; i < cells.size(); ++i) f[cells[i]] = vals[i];
    bool ok = true;
    for (const auto& [c, v] : f) {
      auto r = f.find({c.first, c.second + 1});
      if (r != f.end() && r->second < v) ok = false;
      auto d = f.find({c.first + 1, c.second});
      if (d != f.end() && d->second <= v) ok = false;
    }
    std::vector<int> content(static_cast<size_t>(n) + 1, 0);
    for (int v : vals) content[static_cast<size_t>(v)]++;
    for (int v = 1; v <= n && ok; ++v)
      if (content[static_cast<size_t>(v)] != nu.part(v - 1)) ok = false;
    if (ok) {
      // Reading word: rows top to bottom, each right to left.
      std::vector<int> seen(static_cast<size_t>(n) + 1, 0);
      for (int i = 0; i < lambda.length() && ok; ++i)
        for (int j = lambda.part(i) - 1; j >= mu.part(i) && ok; --j) {
          int v = f[{i, j}];
          seen[static_cast<size_t>(v)]++;
          if (v > 1 && seen[static_cast<size_t>(v)] > seen[static_cast<size_t>(v - 1)]) ok = false;
        }
    }
    if (ok) ++count;
    size_t i = 0;
    while (i < vals.size() && ++vals[i] > n) vals[i++] = 1;
    if (i == vals.size()) break;
  }
  return count;
}

// Schur expansion of s_{lambda/mu} in N variables, read off from dominant monomials.
inline std::map<Partition, long long> schur_expansion(const Partition& lambda, const Partition& mu, int N) {
  std::map<Partition, long long, std::greater<Partition>> mono;
  auto dominant = [&](const Partition& outer, const Partition& inner) {
    std::map<Partition, long long, std::greater<Partition>> m;
    for_each_ssyt(outer, inner, N, [&](const std::map<std::pair<int, int>, int>& f) {
      std::vector<int> content(static_cast<size_t>(N), 0);
      for (const auto& [c, v] : f) content[static_cast<size_t>(v - 1)]++;
      for (size_t i = 1; i < content.size(); ++i)
        if (content[i] > content[i - 1]) return;
      m[interpcat::make_partition(content)]++;
    });
    return m;
  };
  mono = dominant(lambda, mu);
  std::map<Partition, long long> out;
  while (true) {
    auto it = mono.begin();
    while (it != mono.end() && it->second == 0) ++it;
    if (it == mono.end()) break;
    Partition rho = it->first;
    long long a = it->second;
    out[rho] = a;
    for (const auto& [p, v] : dominant(rho, Partition{})) mono[p] -= a * v;
  }
  return out;
}

// Hall inner product of two skew Schur functions.
inline long long hall_pairing(const Partition& lambda, const Partition& nu, const Partition& mu,
                              const Partition& nubar) {
  if (!lambda.contains(nu) || !mu.contains(nubar)) return 0;
  const int N = std::max(1, lambda.size() + mu.size());
  auto a = schur_expansion(lambda, nu, N), b = schur_expansion(mu, nubar, N);
  long long s = 0;
  for (const auto& [p, v] : a)
    if (auto it = b.find(p); it != b.end()) s += v * it->second;
  return s;
}

}  // namespace oracle
