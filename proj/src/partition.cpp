#include "interpcat/partition.hpp"

#include <functional>

namespace interpcat {

void Partition::check() const {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw DomainError("partition parts must be positive: " + to_string());
    if (i && parts[i] > parts[i - 1]) throw DomainError("partition parts must be weakly decreasing: " + to_string());
  }
}

Partition make_partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> c(static_cast<size_t>(part(0)), 0);
  for (int p : parts)
    for (int j = 0; j < p; ++j) ++c[static_cast<size_t>(j)];
  return Partition(std::move(c));
}

int Partition::durfee() const {
  int d = 0;
  while (d < length() && parts[static_cast<size_t>(d)] >= d + 1) ++d;
  return d;
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> subpartitions(const Partition& outer) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int i, int maxp) {
    if (i == outer.length() || maxp == 0) {
      out.push_back(make_partition(cur));
      return;
    }
    for (int p = std::min(maxp, outer.part(i)); p >= 0; --p) {
      cur.push_back(p);
      rec(i + 1, p);
      cur.pop_back();
    }
  };
  rec(0, outer.part(0));
  return out;
}

std::vector<int> hook_lengths(const Partition& p) {
  Partition c = p.conjugate();
  std::vector<int> h;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p.part(i); ++j) h.push_back(p.part(i) - j - 1 + c.part(j) - i - 1 + 1);
  return h;
}

Integer standard_tableaux_count(const Partition& p) {
  Integer f = 1;
  for (int k = 2; k <= p.size(); ++k) f *= k;
  Integer prod = 1;
  for (int h : hook_lengths(p)) prod *= h;
  return f / prod;
}

}  // namespace interpcat
