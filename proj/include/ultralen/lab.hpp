#pragma once

#include "ultralen/decompose.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ul::lab {

inline constexpr int kSchemaVersion = 1;

// Flat key=value lines; '#' starts a comment. Later assignments win.
struct Config {
  std::map<std::string, std::string> kv;

  static Config parse(const std::string& text);
  void merge(const Config& o);
  bool has(const std::string& k) const { return kv.count(k) > 0; }
  std::string str(const std::string& k, const std::string& def) const;
  long long integer(const std::string& k, long long def) const;
  std::uint64_t seed(std::uint64_t def) const;
  bool flag(const std::string& k, bool def) const;
  // "a..b" or a single value
  std::pair<int, int> range(const std::string& k, std::pair<int, int> def) const;
};

struct Report {
  std::string text;
  std::string format;  // csv, json or text
  bool ok = true;      // every invariant held
};

const std::vector<std::string>& experiment_names();
// Throws ConfigInvalid for unknown experiments or keys.
Report run(const std::string& name, const Config& cfg);

// Certificate as a JSON object (factor list with conjugator parameters).
std::string certificate_json(const lie::DecompositionCertificate& c);

}  // namespace ul::lab
