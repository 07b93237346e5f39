#include "ultralen/coloring.hpp"

#include "ultralen/errors.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <string>

namespace ul::color {

namespace {

constexpr long long kBacktrackNodes = 5000;

struct Search {
  int n, np, s;
  std::vector<int> block_of, color;
  std::vector<std::vector<int>> mates;
  std::vector<unsigned> forbid;  // bitmask of colors used around a vertex
  std::set<std::pair<int, int>> open;  // (domain size, vertex)
  long long nodes = 0, budget;

  std::vector<int> related(int v) const {
    std::vector<int> r = mates[v];
    if (v <= n && n > 1) {
      int a = v == 1 ? n : v - 1, b = v == n ? 1 : v + 1;
      r.push_back(a);
      if (b != a) r.push_back(b);
    }
    return r;
  }

  int domain(int v) const { return s - std::popcount(forbid[v]); }

  unsigned compute_forbid(int v) const {
    unsigned m = 0;
    for (int w : related(v))
      if (color[w] >= 0) m |= 1u << color[w];
    return m;
  }

  void assign(int v, int c) {
    open.erase({domain(v), v});
    color[v] = c;
    for (int w : related(v)) {
      if (color[w] >= 0) continue;
      open.erase({domain(w), w});
      forbid[w] = compute_forbid(w);
      open.insert({domain(w), w});
    }
  }

  void unassign(int v) {
    color[v] = -1;
    for (int w : related(v)) {
      if (color[w] >= 0) continue;
      open.erase({domain(w), w});
      forbid[w] = compute_forbid(w);
      open.insert({domain(w), w});
    }
    forbid[v] = compute_forbid(v);
    open.insert({domain(v), v});
  }

  bool dfs() {
    if (open.empty()) return true;
    if (++nodes > budget) fail(Errc::SearchExhausted, "strong coloring search exceeded its node budget");
    auto [d, v] = *open.begin();
    if (d == 0) return false;
    for (int c = 0; c < s; ++c) {
      if (forbid[v] >> c & 1u) continue;
      assign(v, c);
      if (dfs()) return true;
      unassign(v);
    }
    return false;
  }
};

// Tabu search over colorings that are already strong on every block; moves
// swap two colors inside a block. Deterministic for a fixed seed.
bool local_search(int n, int np, const std::vector<std::vector<int>>& mates, std::vector<int>& color,
                  long long max_moves, long long& moves) {
  std::mt19937_64 rng(0x5eed);
  auto next = [&](int v) { return v == n ? 1 : v + 1; };
  auto prev = [&](int v) { return v == 1 ? n : v - 1; };
  // edge e joins e and next(e), for 1 <= e <= n
  std::vector<int> pos(n + 1, -1), bad;
  auto refresh = [&](int e) {
    bool is_bad = n > 1 && color[e] == color[next(e)];
    if (is_bad && pos[e] < 0) {
      pos[e] = static_cast<int>(bad.size());
      bad.push_back(e);
    } else if (!is_bad && pos[e] >= 0) {
      int last = bad.back();
      bad[pos[e]] = last;
      pos[last] = pos[e];
      bad.pop_back();
      pos[e] = -1;
    }
  };
  for (int e = 1; e <= n; ++e) refresh(e);
  auto touched = [&](int u, int w) {
    std::vector<int> es;
    for (int v : {u, w})
      if (v <= n) {
        es.push_back(v);
        es.push_back(prev(v));
      }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return es;
  };
  auto count_bad = [&](const std::vector<int>& es) {
    int c = 0;
    for (int e : es) c += n > 1 && color[e] == color[next(e)];
    return c;
  };
  std::vector<long long> tabu_until(np + 1, 0);
  size_t best = bad.size();
  for (moves = 0; !bad.empty() && moves < max_moves; ++moves) {
    int e = bad[rng() % bad.size()];
    struct Move {
      int u, w, delta;
    };
    std::vector<Move> cand;
    for (int u : {e, next(e)})
      for (int w : mates[u]) {
        auto es = touched(u, w);
        int before = count_bad(es);
        std::swap(color[u], color[w]);
        int after = count_bad(es);
        std::swap(color[u], color[w]);
        cand.push_back({u, w, after - before});
      }
    const Move* pick = nullptr;
    if (rng() % 10 == 0) {
      pick = &cand[rng() % cand.size()];
    } else {
      for (const auto& m : cand) {
        bool tabu = tabu_until[m.u] > moves || tabu_until[m.w] > moves;
        bool aspire = static_cast<long long>(bad.size()) + m.delta < static_cast<long long>(best);
        if (tabu && !aspire) continue;
        if (!pick || m.delta < pick->delta) pick = &m;
      }
      if (!pick) pick = &cand[rng() % cand.size()];
    }
    std::swap(color[pick->u], color[pick->w]);
    for (int x : touched(pick->u, pick->w)) refresh(x);
    long long tenure = 7 + static_cast<long long>(rng() % 10);
    tabu_until[pick->u] = tabu_until[pick->w] = moves + tenure;
    best = std::min(best, bad.size());
  }
  return bad.empty();
}

void check_blocks(int np, const Blocks& blocks, int s, std::vector<int>& block_of) {
  block_of.assign(np + 1, -1);
  if (static_cast<long long>(blocks.size()) * s != np) fail(Errc::InvalidArgument, "blocks do not cover the padded vertex set");
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (static_cast<int>(blocks[b].size()) != s) fail(Errc::InvalidArgument, "block of wrong size");
    for (int v : blocks[b]) {
      if (v < 1 || v > np || block_of[v] >= 0) fail(Errc::InvalidArgument, "blocks are not a partition");
      block_of[v] = static_cast<int>(b);
    }
  }
}

}  // namespace

std::vector<int> strong_color_cycle(int n, const Blocks& blocks, int s, long long budget, ColoringStats* stats) {
  if (s < 1 || s > 31) fail(Errc::InvalidArgument, "block size out of range");
  if (n < 1) fail(Errc::InvalidArgument, "empty cycle");
  Search S;
  S.n = n;
  S.np = (n + s - 1) / s * s;
  S.s = s;
  S.budget = budget;
  check_blocks(S.np, blocks, s, S.block_of);
  S.mates.assign(S.np + 1, {});
  for (const auto& b : blocks)
    for (int v : b)
      for (int w : b)
        if (v != w) S.mates[v].push_back(w);
  S.color.assign(S.np + 1, -1);
  S.forbid.assign(S.np + 1, 0);
  for (int v = 1; v <= S.np; ++v) S.open.insert({s, v});
  // Colors are interchangeable: fix the block of vertex 1.
  const auto& first = blocks[S.block_of[1]];
  for (int i = 0; i < s; ++i) S.assign(first[i], i);
  bool ok = true;
  for (int v : first) ok = ok && !(S.compute_forbid(v) >> S.color[v] & 1u);
  // Chronological backtracking thrashes on long cycles; past a small budget
  // hand over to local search.
  S.budget = std::min(budget, kBacktrackNodes);
  try {
    if (ok && S.dfs()) {
      if (stats) stats->nodes = S.nodes;
      return S.color;
    }
    if (S.nodes < S.budget) fail(Errc::SearchExhausted, "no strong coloring exists");
  } catch (const Error& e) {
    if (e.code() != Errc::SearchExhausted || S.nodes <= S.budget) throw;
  }
  std::vector<int> color(S.np + 1, 0);
  for (const auto& b : blocks)
    for (int i = 0; i < s; ++i) color[b[i]] = i;
  long long moves = 0;
  bool found = local_search(n, S.np, S.mates, color, std::max(0LL, budget - S.nodes), moves);
  if (stats) stats->nodes = S.nodes + moves;
  if (!found) fail(Errc::SearchExhausted, "strong coloring search exceeded its node budget");
  return color;
}

bool verify_strong_coloring(int n, const Blocks& blocks, int s, const std::vector<int>& color) {
  int np = (n + s - 1) / s * s;
  if (static_cast<int>(color.size()) != np + 1) return false;
  for (int v = 1; v <= np; ++v)
    if (color[v] < 0 || color[v] >= s) return false;
  if (n > 1)
    for (int v = 1; v <= n; ++v)
      if (color[v] == color[v == n ? 1 : v + 1]) return false;
  for (const auto& b : blocks) {
    unsigned seen = 0;
    for (int v : b) seen |= 1u << color[v];
    if (std::popcount(seen) != s || static_cast<int>(b.size()) != s) return false;
  }
  return true;
}

std::vector<Blocks> all_partitions(int n, int s) {
  if (n % s) fail(Errc::InvalidArgument, "n must be divisible by s");
  std::vector<Blocks> out;
  std::vector<char> used(n + 1, 0);
  Blocks cur;
  std::vector<int> blk;
  // Each block starts at the smallest unused vertex.
  auto rec = [&](auto&& self) -> void {
    int first = 1;
    while (first <= n && used[first]) ++first;
    if (first > n) {
      out.push_back(cur);
      return;
    }
    used[first] = 1;
    blk = {first};
    auto fill = [&](auto&& fself, int from) -> void {
      if (static_cast<int>(blk.size()) == s) {
        cur.push_back(blk);
        std::vector<int> saved = blk;
        self(self);
        blk = saved;
        cur.pop_back();
        return;
      }
      for (int v = from; v <= n; ++v) {
        if (used[v]) continue;
        used[v] = 1;
        blk.push_back(v);
        fself(fself, v + 1);
        blk.pop_back();
        used[v] = 0;
      }
    };
    fill(fill, first + 1);
    used[first] = 0;
  };
  rec(rec);
  return out;
}

PermutationSplit partition_permutation(const std::vector<int>& sigma, int s) {
  int n = static_cast<int>(sigma.size());
  if (s < 3) fail(Errc::InvalidArgument, "s must be at least 3");
  if (n == 0 || n % s) fail(Errc::InvalidArgument, "n must be a positive multiple of s");
  std::vector<int> inv(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    int v = sigma[k - 1];
    if (v < 1 || v > n || inv[v]) fail(Errc::InvalidArgument, "sigma is not a permutation");
    inv[v] = k;
  }
  // label(v) = ceil(sigma^-1(v) / s); block j holds the vertices with label j
  Blocks blocks(n / s);
  for (int k = 1; k <= n; ++k) blocks[(k - 1) / s].push_back(sigma[k - 1]);
  std::vector<int> color = strong_color_cycle(n, blocks, s);
  PermutationSplit out;
  out.s = s;
  out.sigma = sigma;
  out.vectors.assign(s, std::vector<int>(n / s, 0));
  for (int v = 1; v <= n; ++v) out.vectors[color[v]][(inv[v] - 1) / s] = v;
  if (const char* why = verify_split(out); *why) fail(Errc::Internal, std::string("split verification failed: ") + why);
  return out;
}

const char* verify_split(const PermutationSplit& p) {
  int n = static_cast<int>(p.sigma.size()), s = p.s;
  if (static_cast<int>(p.vectors.size()) != s) return "wrong number of vectors";
  std::vector<int> inv(n + 1, 0), seen(n + 1, 0);
  for (int k = 1; k <= n; ++k) inv[p.sigma[k - 1]] = k;
  for (const auto& v : p.vectors) {
    if (static_cast<int>(v.size()) != n / s) return "vector of wrong length";
    std::vector<char> in(n + 2, 0);
    for (int a : v) {
      if (a < 1 || a > n || seen[a]++) return "entries do not partition the permutation";
      in[a] = 1;
    }
    for (int a : v) {
      int nxt = a == n ? 1 : a + 1;
      if (n > 1 && nxt != a && in[nxt]) return "cyclically adjacent entries share a vector";
    }
    for (int j = 1; j <= n / s; ++j) {
      int k = inv[v[j - 1]];
      if (std::abs(s * j - k) > s - 1) return "entry too far from its position";
    }
  }
  return "";
}

}  // namespace ul::color
