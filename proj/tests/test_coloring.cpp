#include "ultralen/coloring.hpp"
#include "ultralen/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace ul;
using namespace ul::color;

namespace {

// Written from the definition only; shares nothing with the library checker.
bool strong_ok(int n, const Blocks& blocks, int s, const std::vector<int>& col) {
  int np = (n + s - 1) / s * s;
  if (static_cast<int>(col.size()) != np + 1) return false;
  for (int v = 1; v <= np; ++v)
    if (col[v] < 0 || col[v] >= s) return false;
  for (int v = 1; v < n; ++v)
    if (col[v] == col[v + 1]) return false;
  if (n > 2 && col[1] == col[n]) return false;
  std::vector<int> seen(np + 1, 0);
  for (const auto& b : blocks) {
    if (static_cast<int>(b.size()) != s) return false;
    std::set<int> cs;
    for (int v : b) {
      if (v < 1 || v > np) return false;
      ++seen[v];
      cs.insert(col[v]);
    }
    if (static_cast<int>(cs.size()) != s) return false;
  }
  return std::all_of(seen.begin() + 1, seen.end(), [](int x) { return x == 1; });
}

Blocks random_blocks(int n, int s, std::mt19937_64& rng) {
  int np = (n + s - 1) / s * s;
  std::vector<int> v(np);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  Blocks b;
  for (int a = 0; a < np; a += s) b.emplace_back(v.begin() + a, v.begin() + a + s);
  return b;
}

long long multinomial_count(int n, int s) {
  // n! / ((s!)^{n/s} (n/s)!)
  long long c = 1;
  for (int left = n; left > 0; left -= s) {
    long long ways = 1;
    for (int i = 0; i < s - 1; ++i) ways = ways * (left - 1 - i) / (i + 1);
    c *= ways;
  }
  return c;
}

bool split_ok(const std::vector<int>& sigma, const PermutationSplit& p, int s) {
  int n = static_cast<int>(sigma.size());
  if (static_cast<int>(p.vectors.size()) != s) return false;
  std::vector<int> pos(n + 1, 0);
  for (int k = 1; k <= n; ++k) pos[sigma[k - 1]] = k;
  std::multiset<int> all;
  for (int i = 0; i < s; ++i) {
    std::set<int> vi(p.vectors[i].begin(), p.vectors[i].end());
    for (size_t j = 0; j < p.vectors[i].size(); ++j) {
      int a = p.vectors[i][j];
      if (a < 1 || a > n) return false;
      all.insert(a);
      int nxt = a == n ? 1 : a + 1;
      if (n > 2 && vi.count(nxt)) return false;
      long long sj = static_cast<long long>(s) * static_cast<long long>(j + 1);
      if (std::llabs(sj - pos[a]) > s - 1) return false;
    }
  }
  std::vector<int> want(n);
  std::iota(want.begin(), want.end(), 1);
  return std::vector<int>(all.begin(), all.end()) == want;
}

}  // namespace

TEST_CASE("single block on a triangle") {
  Blocks b = {{1, 2, 3}};
  auto col = strong_color_cycle(3, b, 3);
  CHECK(strong_ok(3, b, 3, col));
  CHECK(verify_strong_coloring(3, b, 3, col));
}

TEST_CASE("residue blocks on C_9") {
  Blocks b = {{1, 4, 7}, {2, 5, 8}, {3, 6, 9}};
  auto col = strong_color_cycle(9, b, 3);
  CHECK(strong_ok(9, b, 3, col));
}

TEST_CASE("library checker rejects bad colorings") {
  Blocks b = {{1, 2, 3}, {4, 5, 6}};
  std::vector<int> col = {0, 0, 1, 2, 0, 1, 2};
  CHECK(strong_ok(6, b, 3, col) == verify_strong_coloring(6, b, 3, col));
  col = {0, 0, 1, 2, 1, 0, 1};
  CHECK_FALSE(strong_ok(6, b, 3, col));
  CHECK_FALSE(verify_strong_coloring(6, b, 3, col));
  col = {0, 0, 1, 2, 0, 2, 1};
  CHECK(strong_ok(6, b, 3, col));
  CHECK(verify_strong_coloring(6, b, 3, col));
  // Wrap edge {1, 6}.
  col = {0, 0, 1, 2, 1, 2, 0};
  CHECK_FALSE(strong_ok(6, b, 3, col));
  CHECK_FALSE(verify_strong_coloring(6, b, 3, col));
}

TEST_CASE("every partition for small n") {
  for (int n : {6, 9, 12}) {
    auto parts = all_partitions(n, 3);
    CAPTURE(n);
    CHECK(static_cast<long long>(parts.size()) == multinomial_count(n, 3));
    std::set<Blocks> uniq(parts.begin(), parts.end());
    CHECK(uniq.size() == parts.size());
    int bad = 0;
    for (const auto& b : parts) {
      auto col = strong_color_cycle(n, b, 3);
      bad += !strong_ok(n, b, 3, col);
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("random partitions up to n = 3000") {
  std::mt19937_64 rng(7);
  for (int n : {3, 6, 12, 30, 99, 300, 1002, 3000}) {
    for (int rep = 0; rep < (n <= 100 ? 20 : 2); ++rep) {
      auto b = random_blocks(n, 3, rng);
      auto col = strong_color_cycle(n, b, 3);
      CAPTURE(n);
      CHECK(strong_ok(n, b, 3, col));
    }
  }
}

TEST_CASE("more colors than three") {
  std::mt19937_64 rng(8);
  for (int s : {4, 5}) {
    for (int n : {8, 20, 60}) {
      auto b = random_blocks(n, s, rng);
      auto col = strong_color_cycle(n, b, s);
      CAPTURE(s);
      CAPTURE(n);
      CHECK(strong_ok(n, b, s, col));
    }
  }
}

TEST_CASE("splitting permutations") {
  std::vector<int> id(9);
  std::iota(id.begin(), id.end(), 1);
  auto p = partition_permutation(id);
  CHECK(split_ok(id, p, 3));
  CHECK(verify_split(p) == std::string());

  std::vector<int> rev(12);
  std::iota(rev.rbegin(), rev.rend(), 1);
  CHECK(split_ok(rev, partition_permutation(rev), 3));

  std::vector<int> three = {2, 3, 1};
  CHECK(split_ok(three, partition_permutation(three), 3));

  std::mt19937_64 rng(9);
  for (int n : {6, 9, 30, 99, 300}) {
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<int> sigma(n);
      std::iota(sigma.begin(), sigma.end(), 1);
      std::shuffle(sigma.begin(), sigma.end(), rng);
      auto sp = partition_permutation(sigma);
      CAPTURE(n);
      CHECK(split_ok(sigma, sp, 3));
      CHECK(verify_split(sp) == std::string());
    }
  }
}

TEST_CASE("padding can make a short cycle uncolorable") {
  // 2 and 4 both need the color missing from {1, 3}.
  Blocks b = {{1, 3, 5}, {2, 4, 6}};
  try {
    strong_color_cycle(4, b, 3);
    FAIL("expected SearchExhausted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SearchExhausted);
  }
  Blocks ok = {{1, 2, 5}, {3, 4, 6}};
  CHECK(strong_ok(4, ok, 3, strong_color_cycle(4, ok, 3)));
}

TEST_CASE("coloring argument errors") {
  CHECK_THROWS_AS(partition_permutation({1, 2, 3, 4}), Error);
  CHECK_THROWS_AS(partition_permutation({1, 1, 2}), Error);
  CHECK_THROWS_AS(strong_color_cycle(6, {{1, 2, 3}}, 3), Error);
  CHECK_THROWS_AS(all_partitions(7, 3), Error);
}
