#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "interpcat/json_io.hpp"

namespace interpcat {

enum class SelftestLevel { quick, full };

struct SelftestOptions {
  SelftestLevel level = SelftestLevel::quick;
  std::uint64_t seed = 42;
  // Basis changes under test; swappable so a harness test can plant a bug.
  std::function<Morphism(const Morphism&)> to_delta = e_to_delta;
  std::function<Morphism(const Morphism&)> to_e = delta_to_e;
};

struct PropertyResult {
  std::string module;
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
};

struct SelftestReport {
  SelftestLevel level = SelftestLevel::quick;
  std::uint64_t seed = 42;
  std::vector<PropertyResult> properties;
  bool passed() const;
  std::vector<std::string> failing() const;
};

// INTERPCAT_SEED if set and numeric, else 42.
std::uint64_t selftest_seed_from_env();

SelftestReport run_selftest(const SelftestOptions& opts);

// No timings or addresses: the report is a pure function of (level, seed).
Json to_json(const SelftestReport& r);

}  // namespace interpcat
