#pragma once

#include "ultralen/rational.hpp"
#include "ultralen/roots.hpp"

#include <utility>
#include <vector>

namespace ul::lie {

// Angles in units of pi. Type A of rank r stores r+1 diagonal angles of an
// element of SU(r+1); B, C, D store the r free angles t_1..t_r of the
// standard torus.
struct TorusElement {
  RootType type = RootType::A;
  int rank = 0;
  std::vector<Rat> angles;

  static TorusElement make(RootType type, int rank, std::vector<Rat> angles);
  bool determinant_one() const;  // type A: sum of angles in 2Z
};

// beta_i(t) as normalized angles in (-1, 1].
std::vector<Rat> root_values(const TorusElement& t);
// (1/r) sum |beta_i(t)|, i.e. lambda with angles measured in units of pi.
Rat lambda_of(const TorusElement& t);

struct LambdaTilde {
  Rat value;
  bool exact = true;
  std::vector<Rat> arrangement;  // maximizing torus point
};
// Exact maximum of lambda over the Weyl orbit when the multiset state space
// fits in max_states; otherwise a greedy lower bound marked inexact, or
// RankTooLargeForExact when allow_heuristic is false.
LambdaTilde lambda_tilde(const TorusElement& t, bool allow_heuristic = true, long long max_states = 2000000);
// Brute force over the orbit; small ranks only (test oracle and cross-check).
Rat lambda_tilde_bruteforce(const TorusElement& t);

// Eigen-angles in the standard unitary representation.
std::vector<Rat> spectrum(const TorusElement& t);
int unitary_dim(const TorusElement& t);

// (1/2n) sum |1 - e^{i pi a_j}|
double ell1(const std::vector<Rat>& spec);
double ell1(const std::vector<double>& spec);
// inf_z (n/r) ell1(z g); the objective is concave between the breakpoints
// z = conj(mu_j), so the minimum is attained at one of them.
double ell1_prime(const std::vector<Rat>& spec, int rank);
double ell1_prime(const std::vector<double>& spec, int rank);
// Dense grid scan of the same objective (oracle).
double ell1_prime_grid(const std::vector<double>& spec, int rank, int points);

// inf_z rank(1 - z g)/n = 1 - (max eigenvalue multiplicity)/n.
Rat inf_rank_length(const std::vector<Rat>& spec);

// inf_z (1/2) s_i(1 - z g) for a normal g with the given eigen-angles;
// i is 1-based. Candidates are zeros and pairwise crossings.
double underline_singular(const std::vector<double>& spec, int i);
double underline_singular_grid(const std::vector<double>& spec, int i, int points);

// g_n and h_n in SU(2n+1) (type A, rank 2n).
std::pair<TorusElement, TorusElement> counterexample_family(int n);

// |1 - e^{i pi a}| / 2 = |sin(pi a / 2)|
double half_chord(double a);
double half_chord(const Rat& a);

}  // namespace ul::lie
