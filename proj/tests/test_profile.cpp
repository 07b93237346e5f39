#include "ultralen/errors.hpp"
#include "ultralen/profile.hpp"

#include <doctest.h>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

using namespace ul;
using namespace ul::prof;
using lie::RootType;

namespace {

Rat wrap(Rat a) {
  long long d = a.denominator(), m = a.numerator() % (2 * d);
  if (m <= -d) m += 2 * d;
  if (m > d) m -= 2 * d;
  return Rat(m, d);
}

TorusElement su(std::vector<Rat> a) {
  Rat s = 0;
  for (auto& x : a) s += x;
  a.push_back(wrap(-s));
  return TorusElement::make(RootType::A, static_cast<int>(a.size()) - 1, a);
}

std::vector<Rat> abs_roots(const TorusElement& t) {
  std::vector<Rat> v;
  for (const auto& b : lie::root_values(t)) v.push_back(abs_angle(b));
  return v;
}

// Lexicographic maximum of the root sequence over the whole orbit.
std::vector<Rat> best_sequence(const TorusElement& t) {
  std::vector<Rat> a = t.angles, best;
  std::sort(a.begin(), a.end());
  int r = static_cast<int>(a.size());
  do {
    int masks = t.type == RootType::A ? 1 : 1 << r;
    for (int mask = 0; mask < masks; ++mask) {
      if (t.type == RootType::D && __builtin_popcount(mask) % 2) continue;
      auto b = a;
      for (int i = 0; i < r; ++i)
        if (mask >> i & 1) b[i] = wrap(-b[i]);
      auto s = abs_roots(TorusElement::make(t.type, t.rank, b));
      if (s > best) best = s;
    }
  } while (std::next_permutation(a.begin(), a.end()));
  return best;
}

Profile random_profile(int len, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(0, 1);
  std::vector<double> v(len);
  for (auto& x : v) x = rng() % 4 ? U(rng) : 0.0;
  std::sort(v.rbegin(), v.rend());
  return profile_from_values(v, len);
}

Monomial random_monomial(int n, std::mt19937_64& rng) {
  Monomial m;
  m.perm.resize(n);
  std::iota(m.perm.begin(), m.perm.end(), 0);
  std::shuffle(m.perm.begin(), m.perm.end(), rng);
  Rat s = 0;
  for (int i = 0; i < n; ++i) {
    m.phases.push_back(Rat(static_cast<long long>(rng() % 24) - 11, 12));
    s += m.phases.back();
  }
  m.phases[0] = wrap(m.phases[0] - s);
  return m;
}

std::vector<double> eigen_angles(const Monomial& m) {
  int n = static_cast<int>(m.perm.size());
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) x(m.perm[j], j) = std::polar(1.0, std::numbers::pi * to_double(m.phases[j]));
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(x);
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(std::arg(es.eigenvalues()[i]) / std::numbers::pi);
  return out;
}

// Cycle of length L with phase sum s has eigen-angles (s + 2j) / L.
std::vector<Rat> cycle_oracle(const Monomial& m) {
  int n = static_cast<int>(m.perm.size());
  std::vector<bool> seen(n);
  std::vector<Rat> out;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int L = 0;
    Rat s = 0;
    for (int j = i; !seen[j]; j = m.perm[j]) {
      seen[j] = true;
      s += m.phases[j];
      ++L;
    }
    for (int j = 0; j < L; ++j) out.push_back(wrap((s + 2 * j) / L));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ProfileSequence seq(std::vector<Profile> ps, int first_n = 2) { return {first_n, std::move(ps)}; }

}  // namespace

TEST_CASE("optimal torus elements") {
  auto c = TorusElement::make(RootType::A, 2, {Rat(2, 3), Rat(2, 3), Rat(2, 3)});
  auto oc = optimal_torus_element(c);
  for (const auto& b : lie::root_values(oc.t)) CHECK(b == 0);
  auto s = su({Rat(1, 2), Rat(0)});
  CHECK(abs_roots(optimal_torus_element(s).t) == best_sequence(s));
  auto two = su({Rat(1, 5)});
  CHECK(abs_roots(optimal_torus_element(two).t) == abs_roots(two));

  std::mt19937_64 rng(51);
  for (RootType t : {RootType::A, RootType::B, RootType::C, RootType::D}) {
    for (int i = 0; i < 25; ++i) {
      int r = (t == RootType::D ? 3 : 2) + static_cast<int>(rng() % 3);
      std::vector<Rat> a;
      for (int j = 0; j < r; ++j) a.push_back(Rat(static_cast<long long>(rng() % 16) - 7, 8));
      auto x = t == RootType::A ? su(a) : TorusElement::make(t, r, a);
      auto o = optimal_torus_element(x);
      CAPTURE(lie::type_name(t));
      CHECK(o.exact);
      CHECK(abs_roots(o.t) == best_sequence(x));
      // The recorded orbit move reproduces the point.
      for (size_t j = 0; j < o.t.angles.size(); ++j)
        CHECK(wrap(o.t.angles[j]) == wrap(o.signs[j] * x.angles[o.perm[j]]));
    }
  }
}

TEST_CASE("profiles of torus elements") {
  auto id = su({Rat(0), Rat(0), Rat(0)});
  for (double v : profile_of(id).values) CHECK(v == 0.0);
  auto [g3, h3] = lie::counterexample_family(3);
  CHECK(profile_of(h3).at(1) == doctest::Approx(1.0));
  auto half = su({Rat(1, 2)});
  auto p = profile_of(half);
  REQUIRE(p.values.size() == 1);
  CHECK(p.values[0] == doctest::Approx(1.0));
  std::mt19937_64 rng(52);
  for (int i = 0; i < 50; ++i) {
    auto x = su({Rat(static_cast<long long>(rng() % 12), 7), Rat(static_cast<long long>(rng() % 12), 5),
                 Rat(static_cast<long long>(rng() % 12), 3)});
    auto pr = profile_of(x);
    CHECK(std::is_sorted(pr.values.rbegin(), pr.values.rend()));
    for (size_t j = 0; j < pr.values.size(); ++j) CHECK(pr.values[j] == doctest::Approx(lie::half_chord(pr.angles[j])));
  }
}

TEST_CASE("finite type step profiles") {
  for (double v : profile_of_finite_type(Rat(0), 4).values) CHECK(v == 0.0);
  CHECK(profile_of_finite_type(Rat(1), 5).values == std::vector<double>(5, 1.0));
  auto t = profile_of_finite_type(Rat(1, 3), 6);
  CHECK(std::count(t.values.begin(), t.values.end(), 1.0) == 2);
  // Supports n/2 against n/4: a bounded ratio, so some k works.
  std::vector<Profile> a, b;
  for (int n = 4; n < 40; ++n) {
    a.push_back(profile_of_finite_type(Rat(1, 2), n));
    b.push_back(profile_of_finite_type(Rat(1, 4), n));
  }
  auto w = precede_search(seq(a, 4), seq(b, 4), 1, 4);
  REQUIRE(w.has_value());
  CHECK(w->k == 3);
  CHECK(precede_search(seq(b, 4), seq(a, 4), 1, 4)->k == 1);
  // A shrinking support ratio cannot be dominated.
  std::vector<Profile> one, lin;
  for (int n = 2; n < 60; ++n) {
    one.push_back(profile_of_finite_type(Rat(1, n), n));
    lin.push_back(profile_of_finite_type(Rat(1, 2), n));
  }
  CHECK_FALSE(precede_search(seq(lin), seq(one), 8, 8).has_value());
  CHECK(precede_search(seq(one), seq(lin), 8, 8).has_value());
}

TEST_CASE("precede checks") {
  std::mt19937_64 rng(53);
  std::vector<Profile> F, Z;
  for (int n = 0; n < 5; ++n) {
    F.push_back(random_profile(6, rng));
    Z.push_back(profile_from_values(std::vector<double>(6, 0.0), 6));
  }
  F[0].values[0] = 0.5;
  CHECK(precede_check(seq(F), seq(F), {1, 1, 0}).holds);
  auto r = precede_check(seq(F), seq(Z), {1, 1, 0});
  CHECK_FALSE(r.holds);
  CHECK(r.n == 2);
  CHECK(r.i == 0);
  auto w = precede_search(seq(F), seq(F), 64, 8);
  REQUIRE(w.has_value());
  CHECK(w->c == 1);
  CHECK(w->k == 1);

  // Doubled support: F_n(i) = H_n(ceil(i/2)).
  std::vector<Profile> Fd, Hd;
  for (int n = 0; n < 6; ++n) {
    auto h = random_profile(5, rng);
    std::vector<double> d;
    for (double v : h.values) d.insert(d.end(), {v, v});
    h.values.resize(10, 0.0);
    h.support_bound = 10;
    Hd.push_back(h);
    Fd.push_back(profile_from_values(d, 10));
  }
  auto wd = precede_search(seq(Fd), seq(Hd), 1, 4);
  REQUIRE(wd.has_value());
  CHECK(wd->k == 2);
}

TEST_CASE("witnesses compose") {
  std::mt19937_64 rng(54);
  int composed = 0;
  for (int t = 0; t < 300; ++t) {
    std::vector<Profile> A, B, C;
    for (int n = 0; n < 4; ++n) {
      A.push_back(random_profile(8, rng));
      B.push_back(random_profile(8, rng));
      C.push_back(random_profile(8, rng));
    }
    auto w1 = precede_search(seq(A), seq(B), 6, 3), w2 = precede_search(seq(B), seq(C), 6, 3);
    if (!w1 || !w2) continue;
    CHECK(precede_check(seq(A), seq(C), {w1->c * w2->c, w1->k * w2->k, 0}).holds);
    ++composed;
  }
  CHECK(composed >= 20);
}

TEST_CASE("profile lattice") {
  std::mt19937_64 rng(55);
  auto Z = profile_from_values(std::vector<double>(7, 0.0), 7);
  for (int t = 0; t < 500; ++t) {
    auto F = random_profile(7, rng), G = random_profile(7, rng), H = random_profile(7, rng);
    CHECK(profile_equal(profile_meet(F, Z), Z));
    CHECK(profile_equal(profile_join(F, F), F));
    auto m = profile_meet(F, G), j = profile_join(F, G);
    CHECK(std::is_sorted(m.values.rbegin(), m.values.rend()));
    CHECK(std::is_sorted(j.values.rbegin(), j.values.rend()));
    CHECK(profile_equal(profile_meet(F, profile_join(G, H)), profile_join(profile_meet(F, G), profile_meet(F, H))));
    CHECK(profile_equal(profile_join(F, profile_meet(G, H)), profile_meet(profile_join(F, G), profile_join(F, H))));
  }
  CHECK_THROWS_AS(profile_from_values({0.2, 0.5}, 2), Error);
}

TEST_CASE("realizing profiles") {
  Profile zero;
  zero.angles.assign(3, Rat(0));
  zero.values.assign(3, 0.0);
  zero.support_bound = 3;
  auto t0 = realize_profile(zero, RootType::A, 3);
  for (const auto& b : lie::root_values(t0)) CHECK(b == 0);

  // Two antipodal eigenvalues put the third at distance >= 1/2 from one of them.
  Profile p10;
  p10.angles = {Rat(1), Rat(0)};
  p10.values = {1.0, 0.0};
  p10.support_bound = 2;
  try {
    realize_profile(p10, RootType::A, 2);
    FAIL("expected Unrealizable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Unrealizable);
  }
  Profile ph;
  ph.angles = {Rat(1), Rat(1, 2)};
  ph.values = {1.0, lie::half_chord(Rat(1, 2))};
  ph.support_bound = 2;
  auto th = realize_profile(ph, RootType::A, 2);
  CHECK(profile_of(th).angles == ph.angles);

  std::mt19937_64 rng(56);
  for (int t = 0; t < 100; ++t) {
    int r = 2 + static_cast<int>(rng() % 7);
    std::vector<Rat> a;
    for (int j = 0; j < r; ++j) a.push_back(Rat(static_cast<long long>(rng() % 16) - 7, 8));
    auto x = su(a);
    auto p = profile_of(x);
    auto y = realize_profile(p, RootType::A, r);
    CHECK(y.determinant_one());
    CHECK(profile_of(y).angles == p.angles);
  }
}

TEST_CASE("monomial spectra") {
  auto sorted = [](std::vector<Rat> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  Monomial c3{{1, 2, 0}, {Rat(0), Rat(0), Rat(0)}};
  CHECK(sorted(monomial_spectrum(c3)) == std::vector<Rat>{Rat(-2, 3), Rat(0), Rat(2, 3)});
  Monomial c2{{1, 0}, {Rat(1, 2), Rat(1, 2)}};
  CHECK(sorted(monomial_spectrum(c2)) == std::vector<Rat>{Rat(-1, 2), Rat(1, 2)});
  std::mt19937_64 rng(57);
  for (int t = 0; t < 200; ++t) {
    auto m = random_monomial(1 + static_cast<int>(rng() % 8), rng);
    auto s = monomial_spectrum(m);
    std::sort(s.begin(), s.end());
    CHECK(s == cycle_oracle(m));
    auto e = eigen_angles(m);
    // Match each numerical eigenvalue to an exact one on the circle.
    for (double x : e) {
      double best = 9;
      for (const auto& y : s) {
        double d = std::fabs(x - to_double(y));
        best = std::min(best, std::min(d, 2 - d));
      }
      CHECK(best < 1e-9);
    }
  }
}

TEST_CASE("singular value profile inequality") {
  std::mt19937_64 rng(58);
  std::vector<double> phases;
  for (int j = 0; j < 12; ++j) phases.push_back(-1 + j / 6.0);
  int violations = 0, checks = 0;
  for (int t = 0; t < 2000; ++t) {
    int n = 2 + static_cast<int>(rng() % 9);
    auto g = random_monomial(n, rng), h = random_monomial(n, rng);
    if (t % 50 == 0) h = g.inverse();
    auto rep = kyfan_profile_check(g, h, phases);
    violations += rep.violations;
    checks += rep.checks;
    if (rep.violations) MESSAGE(rep.first_violation);
  }
  CHECK(checks > 0);
  CHECK(violations == 0);
  auto g = random_monomial(6, rng);
  auto gh = g * g.inverse();
  for (double v : spectrum_profile(monomial_spectrum(gh)).values) CHECK(v == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("incomparability demo") {
  auto rep = incomparability_demo(24, 4, 2);
  CHECK(rep.rows.size() == 16);
  for (const auto& row : rep.rows) {
    CHECK((row.direction == "g<=h" || row.direction == "h<=g"));
    CHECK(row.first_failing_n <= 24);
  }
  CHECK_THROWS_AS(incomparability_demo(1, 1, 1), Error);
}
