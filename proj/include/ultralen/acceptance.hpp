#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ul::acc {

inline constexpr std::uint64_t kDefaultSeed = 20240607;
inline constexpr int kCriteria = 13;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;        // invariants held and the time limit was met
  bool in_time = true;
  std::string detail;
  double seconds = 0;
  double limit = 0;
};

// Criterion ids matching a filter: empty selects all, otherwise a comma list
// of numbers or name fragments ("kyfan", "8", "lattice").
std::vector<int> select(const std::string& filter);
std::string criterion_name(int id);
CriterionResult run_criterion(int id, std::uint64_t seed);
std::string format_line(const CriterionResult& r);

}  // namespace ul::acc
