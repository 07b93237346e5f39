#include "ultralen/errors.hpp"
#include "ultralen/sym.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

using namespace ul;
using namespace ul::sym;

namespace {

// Cycle counting by hand, independent of cycle_type.
std::vector<int> cycle_lengths(const std::vector<int>& img) {
  std::vector<int> out;
  std::vector<bool> seen(img.size());
  for (size_t i = 0; i < img.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = img[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool even(const std::vector<int>& img) {
  int t = 0;
  for (int c : cycle_lengths(img)) t += c - 1;
  return t % 2 == 0;
}

std::vector<std::vector<int>> all_perms(int n, bool alt) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (!alt || even(p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

std::vector<int> inv(const std::vector<int>& a) {
  std::vector<int> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
  return c;
}

Permutation random_perm(int n, std::mt19937_64& rng) {
  Permutation p = Permutation::identity(n);
  std::shuffle(p.images.begin(), p.images.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("cycle types read off the cycles") {
  CHECK(cycle_type(Permutation::identity(4)).counts == std::map<int, int>{{1, 4}});
  auto p = Permutation::from_cycles(5, {{1, 2}, {3, 4, 5}});
  CHECK(cycle_type(p).counts == std::map<int, int>{{2, 1}, {3, 1}});
  CHECK(cycle_type(Permutation::from_cycles(6, {{1, 2, 3, 4, 5, 6}})).counts == std::map<int, int>{{6, 1}});
}

TEST_CASE("hamming and rank lengths") {
  CHECK(hamming_length(from_parts(4, {1, 1, 1, 1})) == Rat(0));
  CHECK(hamming_length(from_parts(4, {2, 1, 1})) == Rat(1, 2));
  CHECK(hamming_length(from_parts(7, {7})) == Rat(1));
  CHECK(rank_length_perm(from_parts(9, std::vector<int>(9, 1))) == Rat(0));
  CHECK(rank_length_perm(from_parts(4, {2, 1, 1})) == Rat(1, 4));
  CHECK(rank_length_perm(from_parts(7, {7})) == Rat(6, 7));
}

TEST_CASE("class sizes") {
  CHECK(class_size(from_parts(4, {2, 1, 1}), Ambient::Sym) == 6);
  CHECK(class_size(from_parts(5, {1, 1, 1, 1, 1}), Ambient::Sym) == 1);
  CHECK(class_size(from_parts(5, {5}), Ambient::Alt) == 12);
  CHECK_THROWS_AS(class_size(from_parts(4, {2, 1, 1}), Ambient::Alt), Error);
  try {
    class_size(from_parts(4, {2, 1, 1}), Ambient::Alt);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OddTypeInAlt);
  }
}

TEST_CASE("class sizes match conjugation orbits for n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (bool alt : {false, true}) {
      auto G = all_perms(n, alt);
      std::set<std::vector<int>> done;
      for (const auto& g : G) {
        if (done.count(g)) continue;
        std::set<std::vector<int>> orbit;
        for (const auto& x : G) orbit.insert(compose(compose(x, g), inv(x)));
        done.insert(orbit.begin(), orbit.end());
        auto t = cycle_type(Permutation{g});
        CAPTURE(n);
        CAPTURE(t.str());
        CHECK(class_size(t, alt ? Ambient::Alt : Ambient::Sym) == orbit.size());
      }
    }
}

TEST_CASE("conjugacy lengths") {
  CHECK(conj_length_perm(from_parts(5, {1, 1, 1, 1, 1}), Ambient::Sym) == 0.0);
  CHECK(conj_length_perm(from_parts(4, {2, 1, 1}), Ambient::Sym) == doctest::Approx(std::log(6) / std::log(24)));
  CHECK(conj_length_perm(from_parts(5, {5}), Ambient::Alt) == doctest::Approx(std::log(12) / std::log(60)));
}

TEST_CASE("class sizes sum to n!") {
  for (int n = 1; n <= 20; ++n) {
    BigInt total = 0;
    for_each_partition(n, [&](const std::vector<int>& parts) { total += class_size(from_parts(n, parts), Ambient::Sym); });
    CHECK(total == factorial(n));
  }
}

TEST_CASE("rank and hamming sandwich for every type up to 60") {
  for (int n = 1; n <= 60; n += (n < 30 ? 1 : 10)) {
    for_each_partition(n, [&](const std::vector<int>& parts) {
      auto t = from_parts(n, parts);
      Rat h = hamming_length(t), r = rank_length_perm(t);
      REQUIRE(r <= h);
      REQUIRE(h <= 2 * r);
    });
  }
}

TEST_CASE("length function axioms on random pairs") {
  std::mt19937_64 rng(7);
  for (int s = 0; s < 10000; ++s) {
    int n = 2 + static_cast<int>(rng() % 9);
    auto g = random_perm(n, rng), h = random_perm(n, rng);
    auto tg = cycle_type(g), th = cycle_type(h), tgh = cycle_type(g * h);
    for (auto len : {&hamming_length, &rank_length_perm}) {
      CHECK((len(tg) == 0) == (g == Permutation::identity(n)));
      CHECK(len(cycle_type(g.inverse())) == len(tg));
      CHECK(len(tgh) <= len(tg) + len(th));
      CHECK(len(cycle_type(h * g * h.inverse())) == len(tg));
    }
  }
}

TEST_CASE("powers do not increase conjugacy length") {
  for (int n = 2; n <= 7; ++n) {
    for_each_partition(n, [&](const std::vector<int>& parts) {
      std::vector<std::vector<int>> cycles;
      int next = 1;
      for (int p : parts) {
        std::vector<int> c;
        for (int i = 0; i < p; ++i) c.push_back(next++);
        cycles.push_back(c);
      }
      auto g = Permutation::from_cycles(n, cycles);
      double base = conj_length_perm(cycle_type(g), Ambient::Sym);
      auto x = g;
      for (int k = 2; k <= 12; ++k) {
        x = x * g;
        CHECK(conj_length_perm(cycle_type(x), Ambient::Sym) <= base + 1e-12);
      }
    });
  }
}

TEST_CASE("comparison report") {
  int rows = 0;
  auto s = comparison_report(4, 4, Ambient::Sym, [&](const ReportRow&) { ++rows; });
  CHECK(rows == 5);
  CHECK(s.exact_violations == 0);
  auto big = comparison_report(17, 40, Ambient::Sym, {}, true);
  CHECK(big.asym_violations == 0);
  CHECK(big.exact_violations == 0);
  comparison_report(9, 9, Ambient::Sym, [&](const ReportRow& r) {
    if (r.type.counts == std::map<int, int>{{9, 1}}) {
      CHECK(r.ell_H == Rat(1));
      CHECK(r.ell_r == Rat(8, 9));
    }
  });
  CHECK(csv_header().find("ell_H") != std::string::npos);
}
