#include "ultralen/decompose.hpp"

#include "ultralen/coloring.hpp"
#include "ultralen/errors.hpp"
#include "ultralen/profile.hpp"

#include <algorithm>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>

namespace ul::lie {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

struct Edge {
  int p, q;  // 0-based coordinates
  Rat f;     // diag(e^{i pi f}) at p, conjugate at q
};

struct Member {
  Edge e;
  int root;  // 0-based, coordinates (root, root+1)
};

struct Group {
  std::vector<Member> members;
  long long reps = 0;  // 2 * reps factors
};

struct Plan {
  std::vector<Group> groups;
  long long cost = 0;
};

Rat half_root(const TorusElement& h, int t) { return norm_angle(h.angles[t] - h.angles[t + 1]) / 2; }

// Least p >= 1 with |f| <= 2 p |delta|.
long long reps_needed(const Rat& f, const Rat& delta) {
  Rat a = abs_angle(f), d = delta < Rat(0) ? -delta : delta;
  if (d == Rat(0)) return kInf;
  Rat q = a / (2 * d);
  long long c = q.numerator() / q.denominator();
  if (Rat(c) < q) ++c;
  return std::max(1LL, c);
}

// Split a zero-sum vector into point-to-point transfers.
std::vector<Edge> transport(const std::vector<Rat>& d) {
  int n = static_cast<int>(d.size());
  std::vector<Rat> rest = d;
  std::vector<Edge> out;
  int i = 0, j = 0;
  auto next_pos = [&](int x) {
    while (x < n && !(rest[x] > Rat(0))) ++x;
    return x;
  };
  auto next_neg = [&](int x) {
    while (x < n && !(rest[x] < Rat(0))) ++x;
    return x;
  };
  i = next_pos(0);
  j = next_neg(0);
  while (i < n && j < n) {
    Rat f = std::min(rest[i], -rest[j]);
    if (abs_angle(f) != Rat(0)) out.push_back({i, j, f});
    rest[i] -= f;
    rest[j] += f;
    i = next_pos(i);
    j = next_neg(j);
  }
  return out;
}

std::vector<int> roots_by_size(const std::vector<Rat>& delta) {
  std::vector<int> idx(delta.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return abs_angle(delta[a]) > abs_angle(delta[b]); });
  return idx;
}

// Greedy packing of transfers onto pairwise disjoint root blocks of h.
Plan group_transfers(std::vector<Edge> edges, const std::vector<Rat>& delta) {
  std::stable_sort(edges.begin(), edges.end(),
                   [](const Edge& a, const Edge& b) { return abs_angle(a.f) > abs_angle(b.f); });
  std::vector<int> order = roots_by_size(delta);
  int best = order.front();
  Plan plan;
  for (const Edge& e : edges) {
    bool placed = false;
    for (auto& gr : plan.groups) {
      bool clash = false;
      for (const auto& mb : gr.members)
        if (mb.e.p == e.p || mb.e.p == e.q || mb.e.q == e.p || mb.e.q == e.q) clash = true;
      if (clash) continue;
      int pick = -1;
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int t = *it;
        bool near = false;
        for (const auto& mb : gr.members)
          if (std::abs(mb.root - t) < 2) near = true;
        if (near || reps_needed(e.f, delta[t]) > gr.reps) continue;
        pick = t;
        break;
      }
      if (pick < 0) continue;
      gr.members.push_back({e, pick});
      placed = true;
      break;
    }
    if (!placed) plan.groups.push_back({{{e, best}}, reps_needed(e.f, delta[best])});
  }
  for (const auto& gr : plan.groups) plan.cost += 2 * gr.reps;
  return plan;
}

// Lifts L of the angles (L = theta mod 2); d = L - mean(L) then sums to zero.
struct Lift {
  std::vector<Rat> d;
  Rat kappa;
  bool exact;
};

Lift make_lift(std::vector<Rat> L) {
  int n = static_cast<int>(L.size());
  Rat s = 0;
  for (const auto& x : L) s += x;
  Lift out;
  out.kappa = s / n;
  for (auto& x : L) x -= out.kappa;
  out.d = std::move(L);
  Rat half = out.kappa / 2;
  out.exact = half.denominator() == 1;
  return out;
}

// Subtract 2 from the s largest entries.
std::vector<Rat> shift_down(std::vector<Rat> L, int s) {
  std::vector<int> idx(L.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return L[a] > L[b]; });
  for (int i = 0; i < s; ++i) L[idx[i]] -= 2;
  return L;
}

std::vector<Lift> candidate_lifts(const std::vector<Rat>& theta, bool all_shifts) {
  int n = static_cast<int>(theta.size());
  std::vector<Rat> lifted{theta[0]};
  for (int k = 1; k < n; ++k) lifted.push_back(lifted.back() - norm_angle(theta[k - 1] - theta[k]));
  std::vector<Lift> out;
  for (const auto& base : {lifted, theta}) {
    Rat s = 0;
    for (const auto& x : base) s += x;
    // sum(base) = 2j; shifting by s entries gives an exact lift iff j - s = 0 mod n
    long long j = s.numerator() / 2;
    int exact_s = static_cast<int>(((j % n) + n) % n);
    for (int sh = 0; sh < n; ++sh)
      if (all_shifts || sh == 0 || sh == exact_s) out.push_back(make_lift(shift_down(base, sh)));
  }
  return out;
}

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  // Perm(a) Perm(b) e_i = e_{a[b[i]]}
  std::vector<int> r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

std::vector<int> invert(const std::vector<int>& a) {
  std::vector<int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

std::vector<Factor> realize(const Plan& plan, const std::vector<Rat>& delta, int n) {
  const Quat J{0, 0, 1, 0};
  std::vector<Factor> out;
  for (const auto& gr : plan.groups) {
    int M = static_cast<int>(2 * gr.reps);
    std::vector<int> perm(n, -1);
    std::vector<char> taken(n, 0);
    std::vector<std::vector<Quat>> xs;
    for (const auto& mb : gr.members) {
      perm[mb.root] = mb.e.p;
      perm[mb.root + 1] = mb.e.q;
      taken[mb.e.p] = taken[mb.e.q] = 1;
      Quat target = Quat::torus(kPi * to_double(mb.e.f));
      Quat base = Quat::torus(kPi * to_double(delta[mb.root]));
      xs.push_back(su2_conjugators(target, base, M));
    }
    int free_to = 0;
    for (int i = 0; i < n; ++i) {
      if (perm[i] >= 0) continue;
      while (taken[free_to]) ++free_to;
      perm[i] = free_to;
      taken[free_to] = 1;
    }
    // Half the factors use h^-1 conjugated through J, so the h-parts outside
    // the blocks cancel.
    for (int s = 0; s < M; ++s) {
      Factor f;
      f.left = perm;
      f.sign = s < M / 2 ? 1 : -1;
      for (size_t a = 0; a < gr.members.size(); ++a)
        f.blocks.push_back({gr.members[a].root, f.sign > 0 ? xs[a][s] : xs[a][s] * J});
      out.push_back(std::move(f));
    }
  }
  return out;
}

void check_common(const TorusElement& g, const TorusElement& h, int m) {
  if (g.type != RootType::A || h.type != RootType::A) fail(Errc::InvalidArgument, "type A elements expected");
  if (g.rank != h.rank || g.angles.size() != h.angles.size()) fail(Errc::InvalidArgument, "ranks differ");
  if (g.rank < 1) fail(Errc::BadRank, "rank must be positive");
  if (!g.determinant_one() || !h.determinant_one()) fail(Errc::InvalidArgument, "elements must have determinant one");
  if (m < 2 || m % 2) fail(Errc::InvalidArgument, "m must be even and at least 2");
}

struct Choice {
  Plan plan;
  Lift lift;
  std::string strategy;
};

// Exact choices within the bound first, then the cheapest.
bool better(const Choice& a, const Choice& b, long long bound) {
  bool ga = a.lift.exact && a.plan.cost <= bound, gb = b.lift.exact && b.plan.cost <= bound;
  if (ga != gb) return ga;
  if (a.plan.cost != b.plan.cost) return a.plan.cost < b.plan.cost;
  return a.lift.exact && !b.lift.exact;
}

void finish(DecompositionCertificate& c, const Choice& ch, const std::vector<Rat>& delta, int n) {
  c.factors = realize(ch.plan, delta, n);
  c.central_angle = norm_angle(ch.lift.kappa);
  c.exact = ch.lift.exact;
  c.strategy = ch.strategy;
  c.within_bound = c.count() <= c.bound;
}

}  // namespace

DecompositionCertificate torus_decompose_typeA(const TorusElement& g, const TorusElement& h, int m) {
  check_common(g, h, m);
  int r = g.rank, n = r + 1;
  if (r > 12) fail(Errc::BadRank, "rank above 12");
  std::vector<Rat> delta;
  bool central = true;
  for (int t = 0; t < r; ++t) {
    delta.push_back(half_root(h, t));
    if (delta.back() != Rat(0)) central = false;
  }
  if (central) fail(Errc::CentralH, "h is central");
  if (lambda_of(g) > lambda_of(h) * m) fail(Errc::BoundViolated, "lambda(g) exceeds m lambda(h)");

  DecompositionCertificate c;
  c.g = g;
  c.h = h;
  c.m = m;
  c.bound = 4LL * m * r * r;
  std::optional<Choice> best;
  for (auto& lift : candidate_lifts(g.angles, true)) {
    Choice ch{group_transfers(transport(lift.d), delta), lift, "transport"};
    if (!best || better(ch, *best, c.bound)) best = std::move(ch);
  }
  finish(c, *best, delta, n);
  c.product_error = verify_certificate(c);
  return c;
}

DecompositionCertificate large_rank_decompose(const TorusElement& g_in, const TorusElement& h_in, int k, int m,
                                              const std::string& strategy) {
  check_common(g_in, h_in, m);
  if (!strategy.empty() && strategy != "transport" && strategy != "root-blocks")
    fail(Errc::InvalidArgument, "unknown strategy " + strategy);
  bool want_tr = strategy != "root-blocks", want_rb = strategy != "transport";
  if (k < 1) fail(Errc::InvalidArgument, "k must be positive");
  int r = g_in.rank, n = r + 1;
  if (r <= 20 * k) fail(Errc::RankTooSmall, "rank must exceed 20k");
  auto go = prof::optimal_torus_element(g_in), ho = prof::optimal_torus_element(h_in);
  const TorusElement &g = go.t, &h = ho.t;
  auto Fg = prof::profile_of(g_in), Fh = prof::profile_of(h_in);
  for (int i = 0; k * i + 1 <= r; ++i)
    if (Fg.at(k * i + 1) > m * Fh.at(i + 1) + 1e-12) fail(Errc::BoundViolated, "profile hypothesis fails at i = " + std::to_string(i));

  DecompositionCertificate c;
  c.g = g_in;
  c.h = h_in;
  c.m = m;
  c.k = k;
  c.bound = 140LL * k * m + 4LL * m;

  std::vector<Rat> gb = root_values(g), delta;
  if (std::all_of(gb.begin(), gb.end(), [](const Rat& b) { return b == 0; })) {
    // Central g: the empty product, up to the scalar.
    c.central_angle = norm_angle(g.angles[0]);
    c.exact = c.central_angle == 0;
    c.strategy = "central";
    c.product_error = verify_certificate(c);
    return c;
  }
  for (int t = 0; t < r; ++t) delta.push_back(half_root(h, t));
  auto profile_order = [&](const std::vector<Rat>& beta) {
    std::vector<int> idx(beta.size());
    std::iota(idx.begin(), idx.end(), 1);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return abs_angle(beta[a - 1]) > abs_angle(beta[b - 1]); });
    return idx;
  };
  std::vector<Rat> hb;
  for (const auto& d : delta) hb.push_back(d * 2);

  LargeRankBookkeeping bk;
  bk.K = 5 * k;
  bk.N = (r - bk.K - 1) / bk.K / 3 * 3;
  bk.sigma = profile_order(gb);
  bk.tau = profile_order(hb);
  bk.A.assign(bk.K + 1, {});
  for (int j = 1; j <= bk.N; ++j) bk.A[0].push_back(j);
  for (int l = 1; l <= bk.K; ++l)
    for (int j = 0; j < bk.N; ++j) bk.A[l].push_back(j * bk.K + l);
  // Split a list of roots into three vectors of pairwise non-adjacent roots,
  // via the cycle coloring on their rank order.
  auto split = [&](const std::vector<int>& roots) {
    std::vector<int> sorted = roots;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> ranks;
    for (int x : roots) ranks.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1);
    auto ps = color::partition_permutation(ranks, 3);
    std::array<std::vector<int>, 3> out;
    for (int i = 0; i < 3; ++i)
      for (int v : ps.vectors[i]) out[i].push_back(sorted[v - 1]);
    return out;
  };
  auto pick = [](const std::vector<int>& order, const std::vector<int>& pos) {
    std::vector<int> v;
    for (int p : pos) v.push_back(order[p - 1]);
    return v;
  };
  if (bk.N >= 3) {
    bk.B = split(pick(bk.tau, bk.A[0]));
    for (int l = 1; l <= bk.K; ++l) bk.C.push_back(split(pick(bk.sigma, bk.A[l])));
  }
  for (int p = bk.N * bk.K + 1; p <= r; ++p) bk.leftovers.push_back(bk.sigma[p - 1]);

  std::optional<Choice> best;
  {
    int top = roots_by_size(delta).front();
    for (auto& lift : candidate_lifts(g.angles, false)) {
      if (want_tr) {
        Choice tr{group_transfers(transport(lift.d), delta), lift, "transport"};
        if (!best || better(tr, *best, c.bound)) best = tr;
      }
      if (!want_rb) continue;
      // Root-indexed parts: diag(d) = prod over roots a of the SU(2) element
      // with angle S_a = d_1 + ... + d_a on coordinates (a, a+1).
      std::vector<Rat> S(r);
      Rat acc = 0;
      for (int a = 0; a < r; ++a) S[a] = acc += lift.d[a];
      Plan pl;
      bool feasible = true;
      for (const auto& Cl : bk.C)
        for (int i = 0; i < 3; ++i) {
          Group gr;
          for (size_t j = 0; j < Cl[i].size(); ++j) {
            int a = Cl[i][j] - 1, b = bk.B[i][j] - 1;
            if (abs_angle(S[a]) == Rat(0)) continue;
            gr.members.push_back({{a, a + 1, S[a]}, b});
            gr.reps = std::max(gr.reps, reps_needed(S[a], delta[b]));
          }
          if (gr.reps >= kInf) feasible = false;
          if (!gr.members.empty()) pl.groups.push_back(gr);
        }
      for (int a1 : bk.leftovers) {
        int a = a1 - 1;
        if (abs_angle(S[a]) == Rat(0)) continue;
        pl.groups.push_back({{{{a, a + 1, S[a]}, top}}, reps_needed(S[a], delta[top])});
      }
      if (!feasible) continue;
      for (const auto& gr : pl.groups) pl.cost += 2 * gr.reps;
      Choice rc{pl, lift, "root-blocks"};
      if (!best || better(rc, *best, c.bound)) best = rc;
    }
  }
  if (!best) fail(Errc::HypothesisViolated, "root-blocks strategy has no feasible pairing");
  finish(c, *best, delta, n);
  // Undo the moves to optimal points: g = Pg g' Pg^-1 and h' = Ph^-1 h Ph.
  std::vector<int> hinv = invert(ho.perm);
  for (auto& f : c.factors) {
    f.left = compose(go.perm, f.left);
    f.right = hinv;
  }
  c.book = std::move(bk);
  c.product_error = verify_certificate(c);
  return c;
}

double verify_certificate(const DecompositionCertificate& c) {
  using C = std::complex<double>;
  int n = static_cast<int>(c.g.angles.size());
  auto phase = [](const Rat& a) { return std::polar(1.0, kPi * to_double(a)); };
  std::vector<C> M(static_cast<size_t>(n) * n, 0.0);  // row-major running product
  for (int i = 0; i < n; ++i) M[i * n + i] = 1;
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<C> next(M.size());
  for (const auto& f : c.factors) {
    const auto& L = f.left.empty() ? id : f.left;
    const auto& R = f.right.empty() ? id : f.right;
    // diagonal of Perm(R) h^sign Perm(R)^-1
    std::vector<C> dg(n);
    for (int i = 0; i < n; ++i) dg[R[i]] = phase(c.h.angles[i] * f.sign);
    // E = blocks * diag * blocks^-1 as a sparse matrix
    std::vector<std::vector<std::pair<int, C>>> cols(n);  // cols[j] = {(i, E_ij)}
    std::vector<char> in_block(n, 0);
    for (const auto& b : f.blocks) {
      auto u = b.q.matrix();
      int t = b.t;
      in_block[t] = in_block[t + 1] = 1;
      C d0 = dg[t], d1 = dg[t + 1];
      for (int a = 0; a < 2; ++a)
        for (int bb = 0; bb < 2; ++bb) {
          // (U D U^H)_{a bb}
          C v = u[a * 2] * d0 * std::conj(u[bb * 2]) + u[a * 2 + 1] * d1 * std::conj(u[bb * 2 + 1]);
          cols[t + bb].push_back({t + a, v});
        }
    }
    for (int i = 0; i < n; ++i)
      if (!in_block[i]) cols[i].push_back({i, dg[i]});
    std::fill(next.begin(), next.end(), C(0));
    // F = Perm(L) E Perm(L)^-1 has F_{L[i], L[j]} = E_ij
    for (int j = 0; j < n; ++j)
      for (const auto& [i, v] : cols[j]) {
        int fi = L[i], fj = L[j];
        for (int row = 0; row < n; ++row) next[row * n + fj] += M[row * n + fi] * v;
      }
    std::swap(M, next);
  }
  C z = phase(c.central_angle);
  double err = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      C want = i == j ? phase(c.g.angles[i]) : C(0);
      err = std::max(err, std::abs(z * M[i * n + j] - want));
    }
  return err;
}

}  // namespace ul::lie
