#pragma once

#include "ultralen/rational.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace ul::lie {

// Unit quaternion w + x i + y j + z k, identified with the SU(2) matrix
// [[w + x i, y + z i], [-y + z i, w - x i]].
struct Quat {
  double w = 1, x = 0, y = 0, z = 0;

  static Quat torus(double angle) { return {std::cos(angle), std::sin(angle), 0, 0}; }
  Quat operator*(const Quat& o) const;
  Quat conj() const { return {w, -x, -y, -z}; }
  double norm() const;
  Quat normalized() const;
  // Rotation angle in [0, pi]: q = cos(a) + sin(a) u.
  double angle() const;
  std::array<std::complex<double>, 4> matrix() const;  // row-major 2x2
};

double quat_distance(const Quat& a, const Quat& b);  // max entry difference of the matrices
// Unit q with q p q^-1 = target for pure unit quaternions p, target.
Quat rotation_between(const Quat& p, const Quat& target);

// Angles reachable as products of M conjugates of a unit quaternion of angle b,
// as the interval [lo, hi] (angles in [0, pi]).
struct AngleInterval {
  double lo = 0, hi = 0;
  bool contains(double a, double eps = 1e-12) const { return a >= lo - eps && a <= hi + eps; }
};
AngleInterval reach_step(const AngleInterval& from, double b);
AngleInterval reach(double b, int factors);

// Conjugators x_1..x_M with prod x_s base x_s^-1 = target, exactly M factors.
// Fails with BoundViolated when the target angle is not reachable.
std::vector<Quat> su2_conjugators(const Quat& target, const Quat& base, int factors);

struct Su2Certificate {
  Rat theta_g, theta_h;
  int m = 0;
  std::vector<Quat> conjugators;
  std::vector<int> signs;  // all +1: conjugates of h and h^-1 coincide in SU(2)
  double product_error = 0;
  int count() const { return static_cast<int>(conjugators.size()); }
};

// g = diag(e^{i pi tg}, e^{-i pi tg}), h likewise; m even, m >= 2.
// Admissible when pi|tg| <= m * min(pi|th|, pi - pi|th|) (angles normalized).
Su2Certificate su2_decompose(const Rat& theta_g, const Rat& theta_h, int m);
double su2_verify(const Su2Certificate& c);

}  // namespace ul::lie
