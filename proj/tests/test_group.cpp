#include "ultralen/errors.hpp"
#include "ultralen/group.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <set>

using namespace ul;
using namespace ul::grp;

namespace {

GroupTable table(const std::string& name) {
  auto spec = named_group(name);
  return GroupTable::generate(spec.amb, spec.gens);
}

// Plain BFS closure under right multiplication by generators.
size_t closure_count(const GroupSpec& spec) {
  std::set<Key> seen{spec.amb.identity()};
  std::deque<Key> q{spec.amb.identity()};
  while (!q.empty()) {
    Key x = q.front();
    q.pop_front();
    for (const auto& g : spec.gens) {
      Key y = spec.amb.mul(x, g);
      if (seen.insert(y).second) q.push_back(y);
    }
  }
  return seen.size();
}

std::vector<int> sorted_class_sizes(const GroupTable& t) {
  std::vector<int> s;
  for (int c = 0; c < t.num_classes(); ++c) s.push_back(t.class_size(c));
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<int> subgroup_orders(const Lattice& L) {
  std::vector<int> s;
  for (const auto& x : L.subgroups) s.push_back(x.count());
  return s;
}

}  // namespace

TEST_CASE("group orders against a BFS closure") {
  auto a5 = perm_group(5, {sym::Permutation::from_cycles(5, {{1, 2, 3, 4, 5}}),
                           sym::Permutation::from_cycles(5, {{1, 2, 3}})});
  CHECK(GroupTable::generate(a5.amb, a5.gens).order() == 60);
  CHECK(closure_count(a5) == 60);
  auto sl = named_group("SL2_3");
  CHECK(GroupTable::generate(sl.amb, sl.gens).order() == 24);
  CHECK(closure_count(sl) == 24);
  auto tr = perm_group(4, {sym::Permutation::from_cycles(4, {{1, 2}})});
  CHECK(GroupTable::generate(tr.amb, tr.gens).order() == 2);
  for (const char* n : {"S4", "A6", "D5", "Q8", "PSL2_7", "GL2_3", "GL3_2"}) {
    auto spec = named_group(n);
    CAPTURE(n);
    auto t = GroupTable::generate(spec.amb, spec.gens);
    CHECK(static_cast<size_t>(t.order()) == closure_count(spec));
    std::mt19937_64 rng(1);
    CHECK(t.verify_axioms(rng, 200));
  }
  auto big = named_group("S8");
  CHECK_THROWS_AS(GroupTable::generate(big.amb, big.gens, 1000), Error);
}

TEST_CASE("conjugacy classes") {
  CHECK(sorted_class_sizes(table("A5")) == std::vector<int>{1, 12, 12, 15, 20});
  CHECK(sorted_class_sizes(table("S3")) == std::vector<int>{1, 2, 3});
  auto c = table("S2");
  CHECK(sorted_class_sizes(c) == std::vector<int>{1, 1});
  auto z = perm_group(5, {sym::Permutation::from_cycles(5, {{1, 2, 3, 4, 5}})});
  auto tz = GroupTable::generate(z.amb, z.gens);
  CHECK(tz.num_classes() == tz.order());
}

TEST_CASE("conjugacy length") {
  auto t = table("A5");
  CHECK(conj_length_element(t, t.identity()) == 0.0);
  auto cyc = sym::Permutation::from_cycles(5, {{1, 2, 3, 4, 5}});
  int g = t.index_of(Key(cyc.images.begin(), cyc.images.end()));
  REQUIRE(g >= 0);
  CHECK(conj_length_element(t, g) == doctest::Approx(std::log(12) / std::log(60)));

  auto sl = table("SL2_3");
  int z = -1;
  for (int c = 0; c < sl.num_classes(); ++c)
    if (sl.class_size(c) == 1 && sl.class_rep(c) != sl.identity()) z = sl.class_rep(c);
  REQUIRE(z >= 0);
  for (int x = 0; x < sl.order(); ++x) CHECK(conj_length_element(sl, sl.mul(z, x)) == conj_length_element(sl, x));
}

TEST_CASE("normal set products agree with the double loop") {
  for (const char* n : {"A5", "S4", "SL2_3", "A6", "D6", "Q8"}) {
    auto t = table(n);
    CAPTURE(n);
    for (int a = 0; a < t.num_classes(); ++a)
      for (int b = 0; b < t.num_classes(); ++b) {
        auto A = NormalSet::of_class(t, a), B = NormalSet::of_class(t, b);
        CHECK(normal_set_product(t, A, B) == naive_product(t, A, B));
      }
    auto C = NormalSet::of_class(t, t.num_classes() - 1);
    CHECK(normal_set_product(t, NormalSet::identity(t), C) == C);
    auto inv = NormalSet::of_class(t, t.inverse_class(t.num_classes() - 1));
    CHECK(normal_set_product(t, C, inv).has(t.identity()));
  }
}

TEST_CASE("widths and closures") {
  auto a5 = table("A5");
  CHECK_THROWS_AS(conjugacy_width(a5, a5.identity(), false), Error);
  for (int c = 1; c < a5.num_classes(); ++c) {
    int g = a5.class_rep(c);
    for (bool sym : {false, true}) {
      auto w = conjugacy_width(a5, g, sym);
      REQUIRE(w.bounded);
      CHECK(w.m * conj_length_element(a5, g) >= 1 - 1e-12);
    }
    CHECK(normal_closure(a5, g) == NormalSet::whole(a5));
  }
  auto sl = table("SL2_3");
  int tv = -1;
  for (int c = 0; c < sl.num_classes(); ++c)
    if (sl.class_size(c) == 4) tv = sl.class_rep(c);
  REQUIRE(tv >= 0);
  // Powers of the class stay in one coset of Q8.
  auto w = conjugacy_width(sl, tv, false);
  CHECK_FALSE(w.bounded);
  CHECK(w.stabilized == normal_closure(sl, tv));
  CHECK(conjugacy_width(sl, tv, true).bounded);

  auto s4 = table("S4");
  CHECK(normal_closure(s4, s4.identity()) == NormalSet::identity(s4));
  auto dt = sym::Permutation::from_cycles(4, {{1, 2}, {3, 4}});
  CHECK(normal_closure(s4, s4.index_of(Key(dt.images.begin(), dt.images.end()))).count() == 4);
}

TEST_CASE("simple groups: every nontrivial closure is the whole group") {
  for (const char* n : {"A5", "PSL2_7", "A6", "GL3_2"}) {
    auto t = table(n);
    for (int c = 1; c < t.num_classes(); ++c) CHECK(normal_closure(t, t.class_rep(c)) == NormalSet::whole(t));
  }
}

TEST_CASE("domination bounds lengths") {
  for (const char* n : {"A5", "S4", "S5", "PSL2_7"}) {
    auto t = table(n);
    for (int c = 1; c < t.num_classes(); ++c) {
      int h = t.class_rep(c);
      auto lv = domination_levels(t, h, true);
      for (int d = 0; d < t.num_classes(); ++d) {
        if (lv[d] < 0) continue;
        int g = t.class_rep(d);
        CHECK(conj_length_element(t, g) <= lv[d] * conj_length_element(t, h) + 1e-12);
        CHECK(hamming_element(t, g) <= lv[d] * hamming_element(t, h) + 1e-12);
      }
    }
  }
}

TEST_CASE("mutual domination") {
  CHECK(mutual_domination(table("A5"), true) > 0);
  CHECK(mutual_domination(table("PSL2_7"), true) > 0);
  // One nontrivial class, which dominates itself in one step.
  CHECK(mutual_domination(table("S2"), true) == 1);
  CHECK(mutual_domination(table("S2"), false) == 1);
}

TEST_CASE("ore property") {
  auto a5 = table("A5");
  CHECK(ore_check(a5, NormalSet::whole(a5)).ok);
  CHECK(ore_check(a5, NormalSet::identity(a5)).ok);
  auto s4 = table("S4");
  auto r = ore_check(s4, NormalSet::whole(s4));
  CHECK_FALSE(r.ok);
  REQUIRE(r.counterexample >= 0);
  // Commutators are even, so the witness must be odd.
  auto k = s4.element(r.counterexample);
  sym::Permutation p{std::vector<int>(k.begin(), k.end())};
  CHECK_FALSE(sym::cycle_type(p).is_even());
}

TEST_CASE("normal subgroup lattices") {
  auto a5 = normal_lattice_analyze(table("A5"));
  CHECK(a5.size() == 2);
  CHECK(a5.is_chain);
  auto s4 = normal_lattice_analyze(table("S4"));
  CHECK(subgroup_orders(s4) == std::vector<int>{1, 4, 12, 24});
  CHECK(s4.is_chain);
  CHECK(s4.is_distributive);
  CHECK(s4.chain_equivalence);
  for (const char* n : {"Q8", "D4"}) {
    auto L = normal_lattice_analyze(table(n));
    CAPTURE(n);
    CHECK(L.size() == 6);
    CHECK(L.is_modular);
    CHECK_FALSE(L.is_distributive);
    CHECK_FALSE(L.is_chain);
    CHECK(L.chain_equivalence);
  }
  for (const char* n : {"S3", "D5", "SL2_3", "GL2_3", "S5"}) {
    CAPTURE(n);
    auto L = normal_lattice_analyze(table(n));
    CHECK(L.is_modular);
    CHECK(L.chain_equivalence);
  }
}
