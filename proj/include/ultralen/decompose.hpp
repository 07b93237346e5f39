#pragma once

#include "ultralen/rational.hpp"
#include "ultralen/su2.hpp"
#include "ultralen/torus.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ul::lie {

// SU(2) block acting on coordinates (t, t+1), 0-based.
struct BlockRotation {
  int t = 0;
  Quat q;
};

// Perm(p) e_i = e_{p[i]}. The conjugator is Perm(left) * blocks * Perm(right);
// an empty vector stands for the identity permutation.
struct Factor {
  std::vector<int> left;
  std::vector<BlockRotation> blocks;
  std::vector<int> right;
  int sign = 1;  // conjugate of h (+1) or of h^-1 (-1)
};

struct LargeRankBookkeeping {
  int K = 0, N = 0;
  std::vector<int> sigma, tau;         // profile orders of g and h roots, 1-based
  std::vector<std::vector<int>> A;     // A[l] for l = 0..K, positions in the orders
  std::array<std::vector<int>, 3> B;   // h roots
  std::vector<std::array<std::vector<int>, 3>> C;  // C[l-1][i]: g roots, l = 1..K
  std::vector<int> leftovers;          // g roots outside every C
};

struct DecompositionCertificate {
  TorusElement g, h;
  int m = 0, k = 0;
  std::vector<Factor> factors;
  // The product equals e^{-i pi central_angle} g; exact when that scalar is 1.
  Rat central_angle;
  bool exact = true;
  long long bound = 0;
  bool within_bound = true;
  double product_error = 0;
  std::string strategy;
  std::optional<LargeRankBookkeeping> book;

  int count() const { return static_cast<int>(factors.size()); }
};

// g, h in SU(r+1), r <= 12, m even; needs lambda(g) <= m lambda(h).
DecompositionCertificate torus_decompose_typeA(const TorusElement& g, const TorusElement& h, int m);
// Needs r > 20k and F_g(ki+1) <= m F_h(i+1); g and h are moved to optimal
// points of their orbits first. strategy: "" picks the cheapest of
// "transport" and "root-blocks".
DecompositionCertificate large_rank_decompose(const TorusElement& g, const TorusElement& h, int k, int m,
                                              const std::string& strategy = "");

// Max entry distance between e^{i pi central_angle} * product and diag(g).
double verify_certificate(const DecompositionCertificate& c);

}  // namespace ul::lie
