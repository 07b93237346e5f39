#include "ultralen/decompose.hpp"
#include "ultralen/errors.hpp"
#include "ultralen/profile.hpp"

#include <doctest.h>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

using namespace ul;
using namespace ul::lie;

namespace {

using MX = Eigen::MatrixXcd;
using cd = std::complex<double>;

cd phase(const Rat& a) { return std::polar(1.0, std::numbers::pi * to_double(a)); }

MX perm_matrix(const std::vector<int>& p, int n) {
  MX m = MX::Zero(n, n);
  for (int i = 0; i < n; ++i) m(p.empty() ? i : p[i], i) = 1;
  return m;
}

// Dense product of the factors, scaled by the recorded central phase, minus diag(g).
double dense_error(const DecompositionCertificate& c) {
  int n = static_cast<int>(c.g.angles.size());
  MX prod = MX::Identity(n, n);
  for (const auto& f : c.factors) {
    MX B = MX::Identity(n, n);
    for (const auto& b : f.blocks) {
      auto u = b.q.matrix();
      MX e = MX::Identity(n, n);
      e(b.t, b.t) = u[0];
      e(b.t, b.t + 1) = u[1];
      e(b.t + 1, b.t) = u[2];
      e(b.t + 1, b.t + 1) = u[3];
      B = B * e;
    }
    MX x = perm_matrix(f.left, n) * B * perm_matrix(f.right, n);
    MX H = MX::Zero(n, n);
    for (int i = 0; i < n; ++i) H(i, i) = phase(c.h.angles[i] * f.sign);
    prod = prod * x * H * x.adjoint();
  }
  MX G = MX::Zero(n, n);
  for (int i = 0; i < n; ++i) G(i, i) = phase(c.g.angles[i]);
  return (phase(c.central_angle) * prod - G).cwiseAbs().maxCoeff();
}

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
  int r = static_cast<int>(a.size()) - 1;
  return TorusElement::make(RootType::A, r, a);
}

TorusElement random_su(int r, long long den, long long spread, std::mt19937_64& rng) {
  std::vector<Rat> a;
  for (int i = 0; i < r; ++i) a.push_back(Rat(static_cast<long long>(rng() % (2 * spread + 1)) - spread, den));
  return su(a);
}

bool non_adjacent(const std::vector<int>& v) {
  std::set<int> s(v.begin(), v.end());
  for (int x : v)
    if (s.count(x + 1)) return false;
  return true;
}

void check_certificate(const DecompositionCertificate& c) {
  CHECK(c.count() <= c.bound);
  CHECK(c.within_bound);
  CHECK(c.product_error < 1e-8);
  CHECK(verify_certificate(c) < 1e-8);
  CHECK(dense_error(c) < 1e-8);
  // Profile inequality with k the number of factors.
  if (c.count() > 0) {
    auto Fg = prof::profile_of(c.g), Fh = prof::profile_of(c.h);
    int k = c.count();
    double scale = std::ldexp(6.0 * k, std::min(k, 60));
    for (int i = 0; 6 * k * i + 1 <= c.g.rank; ++i) CHECK(Fg.at(6 * k * i + 1) <= scale * Fh.at(i + 1) + 1e-12);
  }
}

}  // namespace

TEST_CASE("rank one") {
  auto g = su({Rat(1, 2)}), h = su({Rat(1, 3)});
  auto c = torus_decompose_typeA(g, h, 2);
  check_certificate(c);
  CHECK(c.bound == 8);
}

TEST_CASE("equal elements in SU(3)") {
  auto g = su({Rat(1, 3), Rat(1, 5)});
  auto c = torus_decompose_typeA(g, g, 2);
  check_certificate(c);
  CHECK(c.count() <= 16);
}

TEST_CASE("random admissible pairs in small rank") {
  std::mt19937_64 rng(31);
  int done = 0, exact = 0;
  while (done < 60) {
    int r = 1 + static_cast<int>(rng() % 5);
    int m = 2 * (1 + static_cast<int>(rng() % 3));
    auto g = random_su(r, 12, 11, rng), h = random_su(r, 12, 11, rng);
    if (lambda_of(h) == 0) continue;
    if (lambda_of(g) > lambda_of(h) * m) {
      CHECK_THROWS_AS(torus_decompose_typeA(g, h, m), Error);
      continue;
    }
    auto c = torus_decompose_typeA(g, h, m);
    CAPTURE(r);
    check_certificate(c);
    if (r == 3) CHECK(c.count() <= 4 * m * 9);
    exact += c.exact;
    ++done;
  }
  CHECK(exact == done);
}

TEST_CASE("decomposition errors") {
  auto g = su({Rat(1, 2), Rat(0)});
  auto central = su({Rat(0), Rat(0)});
  try {
    torus_decompose_typeA(g, central, 2);
    FAIL("expected CentralH");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CentralH);
  }
  auto tiny = su({Rat(1, 100), Rat(0)});
  auto big = su({Rat(1), Rat(0)});
  try {
    torus_decompose_typeA(big, tiny, 2);
    FAIL("expected BoundViolated");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BoundViolated);
  }
  std::mt19937_64 rng(1);
  auto h20 = random_su(20, 7, 6, rng);
  try {
    large_rank_decompose(h20, h20, 1, 2);
    FAIL("expected RankTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RankTooSmall);
  }
}

TEST_CASE("large rank with g = h") {
  std::mt19937_64 rng(41);
  auto h = random_su(21, 7, 6, rng);
  for (const char* s : {"", "transport", "root-blocks"}) {
    auto c = large_rank_decompose(h, h, 1, 2, s);
    CAPTURE(s);
    check_certificate(c);
    CHECK(c.count() <= 288);
  }
}

TEST_CASE("central g needs no factors") {
  std::mt19937_64 rng(42);
  auto h = random_su(21, 7, 6, rng);
  auto id = su(std::vector<Rat>(21, Rat(0)));
  auto c = large_rank_decompose(id, h, 1, 2);
  CHECK(c.count() == 0);
  CHECK(verify_certificate(c) < 1e-12);
  auto z = TorusElement::make(RootType::A, 21, std::vector<Rat>(22, Rat(1, 11)));
  REQUIRE(z.determinant_one());
  auto cz = large_rank_decompose(z, h, 1, 2);
  CHECK(cz.count() == 0);
  CHECK(cz.central_angle == Rat(1, 11));
  CHECK_FALSE(cz.exact);
  CHECK(dense_error(cz) < 1e-12);
}

TEST_CASE("large rank random admissible pairs and bookkeeping") {
  std::mt19937_64 rng(43);
  int done = 0;
  for (int attempt = 0; done < 8 && attempt < 200; ++attempt) {
    int k = 1, r = 25 + static_cast<int>(rng() % 20), m = 2;
    auto h = random_su(r, 7, 6, rng);
    TorusElement g;
    bool ok = false;
    for (long long den = 16; den <= 4096 && !ok; den *= 2) {
      g = random_su(r, den, 3, rng);
      auto Fg = prof::profile_of(g), Fh = prof::profile_of(h);
      ok = true;
      for (int i = 0; k * i + 1 <= r; ++i) ok = ok && Fg.at(k * i + 1) <= m * Fh.at(i + 1);
    }
    if (!ok) continue;
    for (const char* s : {"transport", "root-blocks"}) {
      DecompositionCertificate c;
      try {
        c = large_rank_decompose(g, h, k, m, s);
      } catch (const Error& e) {
        // Only the root-block pairing may be infeasible.
        CHECK(std::string(s) == "root-blocks");
        CHECK(e.code() == Errc::HypothesisViolated);
        continue;
      }
      CAPTURE(r);
      CAPTURE(s);
      check_certificate(c);
      CHECK(c.strategy == s);
      REQUIRE(c.book.has_value());
      const auto& bk = *c.book;
      CHECK(bk.K == 5 * k);
      CHECK(bk.N % 3 == 0);
      CHECK(bk.N == (r - bk.K - 1) / bk.K / 3 * 3);
      std::vector<int> sorted_sigma = bk.sigma, sorted_tau = bk.tau, all(r);
      std::iota(all.begin(), all.end(), 1);
      std::sort(sorted_sigma.begin(), sorted_sigma.end());
      std::sort(sorted_tau.begin(), sorted_tau.end());
      CHECK(sorted_sigma == all);
      CHECK(sorted_tau == all);
      std::multiset<int> pos;
      for (int l = 1; l <= bk.K; ++l) {
        CHECK(bk.A[l].size() == static_cast<size_t>(bk.N));
        pos.insert(bk.A[l].begin(), bk.A[l].end());
      }
      std::vector<int> first(bk.N * bk.K);
      std::iota(first.begin(), first.end(), 1);
      CHECK(std::vector<int>(pos.begin(), pos.end()) == first);
      std::multiset<int> covered(bk.leftovers.begin(), bk.leftovers.end());
      for (const auto& Cl : bk.C)
        for (const auto& v : Cl) {
          CHECK(non_adjacent(v));
          covered.insert(v.begin(), v.end());
        }
      CHECK(std::vector<int>(covered.begin(), covered.end()) == all);
      for (int i = 0; i < 3; ++i) {
        CHECK(non_adjacent(bk.B[i]));
        CHECK(bk.B[i].size() == static_cast<size_t>(bk.N / 3));
      }
    }
    ++done;
  }
  CHECK(done >= 4);
}
