#pragma once

#include "ultralen/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ul::sym {

using BigInt = boost::multiprecision::cpp_int;

// 0-based images; images[i] is where i goes.
struct Permutation {
  std::vector<int> images;

  int n() const { return static_cast<int>(images.size()); }
  static Permutation identity(int n);
  // Cycles are given 1-based, as in (1 2)(3 4 5).
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  bool valid() const;
  Permutation operator*(const Permutation& o) const;  // (p*o)(i) = p(o(i))
  Permutation inverse() const;
  bool operator==(const Permutation& o) const = default;
};

struct CycleType {
  int n = 0;
  std::map<int, int> counts;  // cycle length -> multiplicity

  int fixed_points() const;
  int num_cycles() const;
  bool is_even() const;
  bool valid() const;
  std::string str() const;  // "1^2 3^1"
  bool operator==(const CycleType& o) const = default;
};

enum class Ambient { Sym, Alt };

CycleType cycle_type(const Permutation& p);
CycleType from_parts(int n, const std::vector<int>& parts);

Rat hamming_length(const CycleType& t);
Rat rank_length_perm(const CycleType& t);

BigInt factorial(int n);
bool splits_in_alt(const CycleType& t);
BigInt class_size(const CycleType& t, Ambient a);
// log|C| and log|G| evaluated as sums of logs.
double log_class_size(const CycleType& t, Ambient a);
double log_group_order(int n, Ambient a);
double conj_length_perm(const CycleType& t, Ambient a);

// Streams every partition of n in lexicographic order of ascending part lists,
// starting from 1^n. The callback sees the parts in ascending order.
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& f);

struct ReportRow {
  int n;
  CycleType type;
  Rat ell_H;
  Rat ell_r;
  double ell_c;
  bool flag_exact;  // ell_r <= ell_H <= 2 ell_r violated
  bool flag_asym;   // ell_c <= 2 ell_H or ell_H <= 8 ell_c violated, n >= 17
  bool asym_info;   // same inequalities violated below the threshold (informational)
};

struct ReportSummary {
  long long rows = 0;
  long long exact_violations = 0;
  long long asym_violations = 0;
  long long asym_info_below_threshold = 0;
  double max_ratio_H_over_r = 0;
  double max_ratio_c_over_H = 0;
  double max_ratio_H_over_c = 0;
};

// Row callback may be empty. Only even types are visited for Alt.
ReportSummary comparison_report(int n_min, int n_max, Ambient a,
                                const std::function<void(const ReportRow&)>& row = {},
                                bool with_conj = true);

std::string csv_header();
std::string csv_row(const ReportRow& r);

enum class LengthKind { Hamming, Rank, Conj };
// Max of the chosen length over all (even, for Alt) cycle types of n.
double diameter(int n, Ambient a, LengthKind k);

}  // namespace ul::sym
