#include "ultralen.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Opt {
  std::string key;
  std::string help;
  bool flag = false;
};

const std::vector<std::pair<std::string, std::vector<Opt>>> kCommands = {
    {"sym-lengths", {{"n", "range of n, e.g. 4..30"}, {"ambient", "S or A"}, {"conj", "include ell_c (true/false)"}}},
    {"linear-lengths", {{"q", "field order"}, {"n", "matrix size"}, {"samples", "random elements"}}},
    {"width", {{"group", "named group, e.g. A5, PSL2_7"}, {"symmetric", "symmetric widths", true}, {"cap", "order cap"}}},
    {"ore-check", {{"group", "named group"}, {"cap", "order cap"}}},
    {"lattice", {{"group", "named group"}, {"cap", "order cap"}, {"max-order", "largest group order analysed"}}},
    {"root-check", {{"type", "A, B, C, D, G2 or F4"}, {"rank", "rank"}}},
    {"su2-decompose", {{"theta-g", "angle of g in units of pi"}, {"theta-h", "angle of h"}, {"m", "even factor budget"}}},
    {"torus-decompose", {{"g", "angles of g, comma separated"}, {"h", "angles of h"}, {"m", "even m"}, {"type", "root type"}}},
    {"large-rank",
     {{"g", "angles of g"}, {"h", "angles of h"}, {"k", "k"}, {"m", "even m"}, {"rank", "rank for random inputs"},
      {"type", "root type"}, {"strategy", "transport or root-blocks"}}},
    {"profile-order", {{"g", "angles of g"}, {"h", "angles of h"}, {"type", "root type"}, {"c-max", "grid c"}, {"k-max", "grid k"}}},
    {"kyfan", {{"samples", "random monomial pairs"}, {"n-max", "largest size"}}},
    {"counterexample", {{"n-max", "largest n"}, {"grid", "witness grid, e.g. c=64,k=8"}}},
    {"strong-color", {{"n", "cycle length"}, {"s", "block size"}, {"mode", "random or exhaustive"}, {"samples", "random partitions"}}},
    {"acceptance", {{"filter", "criterion numbers or name fragments"}}},
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Length functions, bounded generation and profile experiments"};
  app.require_subcommand(1);
  std::string config_file, out_file, format, seed;
  std::vector<std::string> sets;
  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::map<std::string, bool>> flags;
  for (const auto& [name, opts] : kCommands) {
    auto* sub = app.add_subcommand(name);
    sub->set_help_flag("--help", "print help");  // -h would clash with --h
    sub->add_option("--config", config_file, "key=value config file");
    sub->add_option("--set", sets, "extra key=value settings");
    sub->add_option("--out", out_file, "write the report here instead of stdout");
    sub->add_option("--seed", seed, "64-bit seed");
    sub->add_option("--format", format, "csv or json where supported");
    for (const auto& o : opts) {
      if (o.flag)
        sub->add_flag("--" + o.key, flags[name][o.key], o.help);
      else
        sub->add_option("--" + o.key, values[name][o.key], o.help);
    }
  }
  CLI11_PARSE(app, argc, argv);

  const std::string name = app.get_subcommands().front()->get_name();
  std::string cfg;
  try {
    if (!config_file.empty()) cfg = read_file(config_file) + "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  for (const auto& [k, v] : values[name])
    if (!v.empty()) cfg += k + "=" + v + "\n";
  for (const auto& [k, on] : flags[name])
    if (on) cfg += k + "=true\n";
  if (!seed.empty()) cfg += "seed=" + seed + "\n";
  if (!format.empty()) cfg += "format=" + format + "\n";
  for (const auto& s : sets) cfg += s + "\n";

  char* report = nullptr;
  int ok = 0;
  int rc = ulx_run(name.c_str(), cfg.c_str(), &report, &ok);
  if (rc != ULX_OK) {
    std::cerr << "error " << ulx_error_name(rc) << ": " << ulx_last_error() << "\n";
    return 2;
  }
  if (out_file.empty()) {
    std::cout << report;
  } else {
    std::ofstream out(out_file);
    out << report;
    if (!out) {
      std::cerr << "error: cannot write " << out_file << "\n";
      ulx_free_string(report);
      return 2;
    }
  }
  ulx_free_string(report);
  return ok ? 0 : 1;
}
