#pragma once

#include "ultralen/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ul::lie {

enum class RootType { A, B, C, D, G2, F4 };

RootType parse_type(const std::string& s);
std::string type_name(RootType t);

using RVec = std::vector<Rat>;

Rat dot(const RVec& a, const RVec& b);
RVec add(const RVec& a, const RVec& b);
RVec scale(const RVec& a, const Rat& s);
std::string vec_str(const RVec& v);

struct RootSystem {
  RootType type = RootType::A;
  int rank = 0;
  int dim = 0;  // ambient coordinates
  std::vector<RVec> roots;
  std::vector<RVec> fundamental;

  // 2a/(a,a)
  RVec coroot(const RVec& a) const;
  RVec reflect(const RVec& v, int i) const;  // simple reflection s_i
  bool is_root(const RVec& v) const;
  Rat max_norm2() const;
  bool is_long(const RVec& v) const { return dot(v, v) == max_norm2(); }
  bool equal_lengths() const;
};

// A_r (r <= 12, r+1 coordinates), B_r, C_r (r <= 12), D_r (2 <= r <= 12), G2, F4.
RootSystem build_root_system(RootType type, int rank);

// Coefficients of v in the fundamental roots, if v lies in their span.
std::optional<RVec> fundamental_coeffs(const RootSystem& rs, const RVec& v);

struct RootSystemCheck {
  bool closed_under_negation = false;
  bool fundamental_independent = false;
  bool integral_sign_coherent = false;
  bool all() const { return closed_under_negation && fundamental_independent && integral_sign_coherent; }
};
RootSystemCheck verify_root_system(const RootSystem& rs);

struct CombinationReport {
  bool equal_lengths = false;     // vacuous case
  int long_roots = 0, short_roots = 0;
  bool long_as_short_sum = true;  // every long root is a sum of two short roots
  bool short_as_long_comb = true; // every short root is mu(b1 + b2), b1, b2 long
  std::vector<Rat> mus;           // coefficients observed, sorted
  bool mus_allowed = true;        // observed subset of +-{1/3, 1/2, 1}
  std::string first_failure;
  bool ok() const { return long_as_short_sum && short_as_long_comb && mus_allowed; }
};
CombinationReport check_root_combinations(const RootSystem& rs);

// Word of simple reflection indices w with w(beta) = alpha; applied left to right.
std::vector<int> weyl_search(const RootSystem& rs, const RVec& alpha, const RVec& beta);
RVec apply_word(const RootSystem& rs, const std::vector<int>& word, const RVec& v);

struct CocharSplit {
  std::vector<int> w1, w2;
  RVec gamma1, gamma2;  // w1(beta), w2(beta)
  Rat mu;
  bool root_relation = false;    // alpha = mu (gamma1 + gamma2)
  bool linear_relation = false;  // with h_d = d: h_g1 + h_g2 = mu^-1 h_alpha
  Rat coroot_coeff;              // g1^v + g2^v = coeff * alpha^v with true coroots
  bool coroot_relation = false;  // coeff is +-1
};
// alpha and beta are indices into the fundamental roots; alpha short, beta long.
CocharSplit cocharacter_split(const RootSystem& rs, int alpha_index, int beta_index);

}  // namespace ul::lie
