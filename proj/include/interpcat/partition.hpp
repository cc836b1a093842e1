#pragma once

#include <compare>
#include <string>
#include <vector>

#include "interpcat/exactnum.hpp"

namespace interpcat {

// Integer partition (weakly decreasing positive parts). Also used as a Young diagram.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p) : parts(p) { check(); }
  explicit Partition(std::vector<int> p) : parts(std::move(p)) { check(); }

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  int part(int i) const { return i < length() ? parts[static_cast<size_t>(i)] : 0; }  // 0-based
  bool empty() const { return parts.empty(); }
  Partition conjugate() const;
  // Durfee size: max i with lambda_i >= i.
  int durfee() const;
  bool contains(const Partition& mu) const;
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  void check() const;
};

// Drops trailing zeros and validates; throws on increasing or negative parts.
Partition make_partition(std::vector<int> parts);

std::vector<Partition> partitions_of(int n);
// All partitions contained in `outer` (including outer and empty).
std::vector<Partition> subpartitions(const Partition& outer);
std::vector<int> hook_lengths(const Partition& p);
Integer standard_tableaux_count(const Partition& p);

struct BiPartition {
  Partition black;
  Partition white;
  auto operator<=>(const BiPartition&) const = default;
  std::string to_string() const { return "(" + black.to_string() + "," + white.to_string() + ")"; }
};

}  // namespace interpcat
