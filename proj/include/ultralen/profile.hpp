#pragma once

#include "ultralen/rational.hpp"
#include "ultralen/torus.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ul::prof {

using lie::RootType;
using lie::TorusElement;

// A point of the Weyl orbit: angles[i] = signs[i] * source.angles[perm[i]].
struct OptimalElement {
  TorusElement t;
  std::vector<int> perm;
  std::vector<int> signs;
  bool exact = true;  // false when the tie-state cap was hit
};

// Lexicographically largest sequence |1 - beta_i(t)| over the Weyl orbit
// (permutations for A, signed permutations for B/C, even sign changes for D).
OptimalElement optimal_torus_element(const TorusElement& t, long long max_states = 200000);

struct Profile {
  std::vector<Rat> angles;     // decreasing |beta_i| at an optimal point, units of pi
  std::vector<double> values;  // F(i) = |1 - e^{i pi a_i}| / 2
  int support_bound = 0;       // rank
  bool exact = true;
  bool rational_values = false;  // step profiles: values are exactly 0 or 1

  double at(int i) const;  // 1-based, zero beyond the stored values
};

Profile profile_of(const TorusElement& t);
Profile profile_from_values(std::vector<double> values, int support_bound);
// Step profile: 1 on [1, floor(n * ell)], 0 beyond.
Profile profile_of_finite_type(const Rat& ell, int n);

Profile profile_meet(const Profile& f, const Profile& h);
Profile profile_join(const Profile& f, const Profile& h);
bool profile_equal(const Profile& f, const Profile& h, double tol = 1e-12);

// Type A only: a torus point of SU(rank+1) whose profile has exactly P.angles.
TorusElement realize_profile(const Profile& p, RootType type, int rank);

// Monomial unitary x: e_j -> e^{i pi phases[j]} e_{perm[j]} (0-based perm).
struct Monomial {
  std::vector<int> perm;
  std::vector<Rat> phases;
  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
};
std::vector<Rat> monomial_spectrum(const std::vector<int>& perm, const std::vector<Rat>& phases);
std::vector<Rat> monomial_spectrum(const Monomial& m);
// Profile of a unitary with the given eigen-angles, through the SU(n) roots.
Profile spectrum_profile(const std::vector<Rat>& spec);

struct KyFanReport {
  int checks = 0;
  int violations = 0;
  std::string first_violation;
  double worst_slack = 0;  // max of lhs - rhs over all checks
};
// Main inequality F_gh(6i+6j+1) <= 2F_g(i+1) + 2F_h(j+1), the intermediate
// F_gh(2i+2j+1) <= 2 s_{i+1}(g) + 2 s_{j+1}(h), s_i <= F_i, and the raw Ky Fan
// step at the sampled central phases.
KyFanReport kyfan_profile_check(const Monomial& g, const Monomial& h, const std::vector<double>& sample_phases);

// (c, k) quasiorder on finite profile sequences indexed by n = first_n, first_n+1, ...
struct OrderWitness {
  double c = 1;
  int k = 1;
  int n0 = 0;
};
struct ProfileSequence {
  int first_n = 0;
  std::vector<Profile> items;
};
struct PrecedeResult {
  bool holds = true;
  int n = -1, i = -1;  // first violation
};
PrecedeResult precede_check(const ProfileSequence& f, const ProfileSequence& h, const OrderWitness& w);
// Least k, then least integer c, within the grid; n0 fixed.
std::optional<OrderWitness> precede_search(const ProfileSequence& f, const ProfileSequence& h, int c_max, int k_max,
                                           int n0 = 0);

// Counterexample incomparability scan. For n = 2..n_max the profile model
// compares F(g_n), F(h_n) with the m = c*k bound; rows report the least n at
// which the witness fails for each direction (-1 if it never fails).
struct DemoRow {
  std::string direction;
  int c = 0, k = 0;
  int first_failing_n = -1;
};
struct DemoReport {
  std::vector<DemoRow> rows;
  bool all_fail_g_h = true, all_fail_h_g = true;
};
DemoReport incomparability_demo(int n_max, int c_max, int k_max);

}  // namespace ul::prof
