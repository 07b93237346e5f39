#include "ultralen/errors.hpp"
#include "ultralen/roots.hpp"

#include <doctest.h>

#include <deque>
#include <set>

using namespace ul;
using namespace ul::lie;

namespace {

RVec iv(std::initializer_list<int> xs) {
  RVec v;
  for (int x : xs) v.push_back(Rat(x));
  return v;
}

// Orbit of the fundamental roots under the simple reflections, computed with
// the reflection formula directly.
std::set<RVec> weyl_closure(const RootSystem& rs) {
  auto refl = [&](const RVec& v, const RVec& a) { return add(v, scale(a, -2 * dot(v, a) / dot(a, a))); };
  std::set<RVec> seen(rs.fundamental.begin(), rs.fundamental.end());
  std::deque<RVec> q(rs.fundamental.begin(), rs.fundamental.end());
  while (!q.empty()) {
    RVec v = q.front();
    q.pop_front();
    for (const auto& a : rs.fundamental) {
      RVec w = refl(v, a);
      if (seen.insert(w).second) q.push_back(w);
    }
  }
  return seen;
}

size_t expected_count(RootType t, int r) {
  switch (t) {
    case RootType::A: return r * (r + 1);
    case RootType::B:
    case RootType::C: return 2 * r * r;
    case RootType::D: return 2 * r * (r - 1);
    case RootType::G2: return 12;
    case RootType::F4: return 48;
  }
  return 0;
}

std::vector<std::pair<RootType, int>> systems() {
  std::vector<std::pair<RootType, int>> out;
  for (int r = 1; r <= 8; ++r) out.push_back({RootType::A, r});
  for (int r = 2; r <= 8; ++r) out.push_back({RootType::B, r});
  for (int r = 2; r <= 8; ++r) out.push_back({RootType::C, r});
  for (int r = 4; r <= 8; ++r) out.push_back({RootType::D, r});
  out.push_back({RootType::G2, 2});
  out.push_back({RootType::F4, 4});
  return out;
}

}  // namespace

TEST_CASE("root counts and weyl closure") {
  CHECK(build_root_system(RootType::A, 2).roots.size() == 6);
  CHECK(build_root_system(RootType::B, 3).roots.size() == 18);
  for (auto [t, r] : systems()) {
    auto rs = build_root_system(t, r);
    CAPTURE(type_name(t));
    CAPTURE(r);
    CHECK(rs.roots.size() == expected_count(t, r));
    CHECK(weyl_closure(rs) == std::set<RVec>(rs.roots.begin(), rs.roots.end()));
    CHECK(verify_root_system(rs).all());
    for (const auto& a : rs.roots) {
      auto c = fundamental_coeffs(rs, a);
      REQUIRE(c.has_value());
      for (const auto& x : *c) CHECK(x.denominator() == 1);
    }
  }
}

TEST_CASE("G2 roots are the listed vectors") {
  auto rs = build_root_system(RootType::G2, 2);
  std::set<RVec> want = {iv({1, -1, 0}),  iv({-1, 1, 0}), iv({1, 0, -1}),  iv({-1, 0, 1}),
                         iv({0, 1, -1}),  iv({0, -1, 1}), iv({2, -1, -1}), iv({-2, 1, 1}),
                         iv({1, -2, 1}),  iv({-1, 2, -1}), iv({1, 1, -2}), iv({-1, -1, 2})};
  CHECK(std::set<RVec>(rs.roots.begin(), rs.roots.end()) == want);
}

TEST_CASE("two-root combinations") {
  for (int r = 1; r <= 6; ++r) {
    auto rep = check_root_combinations(build_root_system(RootType::A, r));
    CHECK(rep.equal_lengths);
    CHECK(rep.ok());
  }
  auto g2 = check_root_combinations(build_root_system(RootType::G2, 2));
  CHECK(g2.ok());
  std::set<Rat> g2mus(g2.mus.begin(), g2.mus.end());
  CHECK(g2mus.count(Rat(1, 3)));
  CHECK(g2mus.count(Rat(-1, 3)));
  auto c4 = check_root_combinations(build_root_system(RootType::C, 4));
  CHECK(c4.ok());
  std::set<Rat> c4mus(c4.mus.begin(), c4.mus.end());
  CHECK(c4mus.count(Rat(1, 2)));
  CHECK(c4mus.count(Rat(-1, 2)));
  CHECK_FALSE(c4mus.count(Rat(1, 3)));

  std::set<Rat> all;
  for (auto [t, r] : systems()) {
    auto rep = check_root_combinations(build_root_system(t, r));
    CAPTURE(type_name(t));
    CAPTURE(r);
    CHECK(rep.ok());
    all.insert(rep.mus.begin(), rep.mus.end());
  }
  CHECK(all == std::set<Rat>{Rat(-1), Rat(-1, 2), Rat(-1, 3), Rat(1, 3), Rat(1, 2), Rat(1)});
}

TEST_CASE("weyl search") {
  auto a2 = build_root_system(RootType::A, 2);
  auto w = weyl_search(a2, a2.fundamental[1], a2.fundamental[0]);
  CHECK(w.size() <= 3);
  CHECK(apply_word(a2, w, a2.fundamental[0]) == a2.fundamental[1]);
  CHECK(weyl_search(a2, a2.fundamental[0], a2.fundamental[0]).empty());
  auto b2 = build_root_system(RootType::B, 2);
  try {
    weyl_search(b2, b2.fundamental[1], b2.fundamental[0]);
    FAIL("expected NotInOrbit");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotInOrbit);
  }
  auto f4 = build_root_system(RootType::F4, 4);
  for (const auto& a : f4.roots)
    if (f4.is_long(a) == f4.is_long(f4.fundamental[0]))
      CHECK(apply_word(f4, weyl_search(f4, a, f4.fundamental[0]), f4.fundamental[0]) == a);
}

TEST_CASE("cocharacter splits") {
  struct Case {
    RootType t;
    int r;
    Rat mu;
  };
  for (auto c : {Case{RootType::G2, 2, Rat(1, 3)}, Case{RootType::B, 2, Rat(1, 2)}, Case{RootType::C, 3, Rat(1, 2)},
                 Case{RootType::F4, 4, Rat(1, 2)}}) {
    auto rs = build_root_system(c.t, c.r);
    int shrt = -1, lng = -1;
    for (int i = 0; i < rs.rank; ++i) (rs.is_long(rs.fundamental[i]) ? lng : shrt) = i;
    REQUIRE(shrt >= 0);
    REQUIRE(lng >= 0);
    auto s = cocharacter_split(rs, shrt, lng);
    CAPTURE(type_name(c.t));
    CHECK(abs(s.mu) == c.mu);
    CHECK(s.root_relation);
    CHECK(s.linear_relation);
    CHECK(add(scale(s.gamma1, s.mu), scale(s.gamma2, s.mu)) == rs.fundamental[shrt]);
    CHECK(apply_word(rs, s.w1, rs.fundamental[lng]) == s.gamma1);
    CHECK(apply_word(rs, s.w2, rs.fundamental[lng]) == s.gamma2);
  }
  auto a2 = build_root_system(RootType::A, 2);
  try {
    cocharacter_split(a2, 0, 1);
    FAIL("expected NoSplit");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoSplit);
  }
}
