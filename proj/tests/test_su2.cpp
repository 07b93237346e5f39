#include "ultralen/errors.hpp"
#include "ultralen/su2.hpp"

#include <doctest.h>

#include <Eigen/Dense>

#include <numbers>
#include <random>

using namespace ul;
using namespace ul::lie;

namespace {

using M2 = Eigen::Matrix2cd;
constexpr double kPi = std::numbers::pi;

M2 mat(const Quat& q) {
  auto a = q.matrix();
  M2 m;
  m << a[0], a[1], a[2], a[3];
  return m;
}

M2 diag_angle(double t) {
  M2 m = M2::Zero();
  m(0, 0) = std::polar(1.0, t);
  m(1, 1) = std::polar(1.0, -t);
  return m;
}

Quat random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> N;
  return Quat{N(rng), N(rng), N(rng), N(rng)}.normalized();
}

// Product of the certificate's conjugates, as complex matrices.
M2 multiply_back(const Su2Certificate& c) {
  M2 h = diag_angle(kPi * to_double(c.theta_h));
  M2 p = M2::Identity();
  for (size_t i = 0; i < c.conjugators.size(); ++i) {
    M2 x = mat(c.conjugators[i]);
    p = p * x * (c.signs[i] > 0 ? h : M2(h.adjoint())) * x.adjoint();
  }
  return p;
}

}  // namespace

TEST_CASE("quaternions multiply like their matrices") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    Quat p = random_unit(rng), q = random_unit(rng);
    CHECK((mat(p * q) - mat(p) * mat(q)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((mat(p).adjoint() * mat(p) - M2::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(mat(p).determinant() - 1.0) < 1e-12);
    CHECK((mat(p.conj()) - mat(p).adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK((mat(Quat::torus(0.7)) - diag_angle(0.7)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("rotation between pure quaternions") {
  std::mt19937_64 rng(2);
  auto pure = [&] {
    Quat q = random_unit(rng);
    q.w = 0;
    return q.normalized();
  };
  for (int i = 0; i < 200; ++i) {
    Quat p = pure(), t = i % 5 ? pure() : Quat{0, -p.x, -p.y, -p.z};
    Quat q = rotation_between(p, t);
    CHECK(quat_distance(q * p * q.conj(), t) < 1e-12);
  }
}

TEST_CASE("reachable angles") {
  auto one = reach(0.8, 1);
  CHECK(one.lo == doctest::Approx(0.8));
  CHECK(one.hi == doctest::Approx(0.8));
  auto two = reach(0.8, 2);
  CHECK(two.lo == doctest::Approx(0.0));
  CHECK(two.hi == doctest::Approx(1.6));
  auto big = reach(2.5, 2);
  CHECK(big.hi == doctest::Approx(2 * kPi - 5.0));
}

TEST_CASE("aligned conjugates for a half turn") {
  auto c = su2_decompose(Rat(1), Rat(1, 2), 2);
  REQUIRE(c.count() == 2);
  CHECK(c.product_error < 1e-12);
  M2 h = diag_angle(kPi / 2);
  M2 f1 = mat(c.conjugators[0]) * h * mat(c.conjugators[0]).adjoint();
  M2 f2 = mat(c.conjugators[1]) * h * mat(c.conjugators[1]).adjoint();
  CHECK((f1 * f2 - f2 * f1).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((f1 * f2 + M2::Identity()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("equal elements need one factor") {
  auto c = su2_decompose(Rat(1, 3), Rat(1, 3), 2);
  REQUIRE(c.count() == 1);
  CHECK(quat_distance(c.conjugators[0], Quat{}) < 1e-12);
  CHECK((multiply_back(c) - diag_angle(kPi / 3)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("random admissible pairs multiply back") {
  std::mt19937_64 rng(3);
  int done = 0;
  while (done < 500) {
    Rat tg(static_cast<long long>(rng() % 48) - 23, 24), th(static_cast<long long>(rng() % 48) - 23, 24);
    int m = 2 * (1 + static_cast<int>(rng() % 4));
    Rat ag = abs_angle(tg), ah = abs_angle(th);
    if (ag > std::min(ah, 1 - ah) * m) {
      CHECK_THROWS_AS(su2_decompose(tg, th, m), Error);
      continue;
    }
    auto c = su2_decompose(tg, th, m);
    CHECK(c.count() <= m);
    CHECK(c.product_error < 1e-9);
    CHECK((multiply_back(c) - diag_angle(kPi * to_double(tg))).cwiseAbs().maxCoeff() < 1e-9);
    ++done;
  }
}

TEST_CASE("bad arguments") {
  CHECK_THROWS_AS(su2_decompose(Rat(1, 2), Rat(1, 3), 3), Error);
  try {
    su2_decompose(Rat(1), Rat(1, 10), 2);
    FAIL("expected BoundViolated");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BoundViolated);
  }
}
