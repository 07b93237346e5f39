#include "ultralen/profile.hpp"

#include "ultralen/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

namespace ul::prof {

namespace {

struct Scaled {
  long long D = 1;
  long long normi(long long x) const {
    long long m = ((x % (2 * D)) + 2 * D) % (2 * D);
    return m > D ? m - 2 * D : m;
  }
  long long absn(long long x) const { return std::llabs(normi(x)); }
};

struct BeamState {
  std::vector<int> path;  // 2 * value index + negated
  std::vector<int> left;  // remaining counts per value
  int parity = 0;
};

std::string state_key(const BeamState& s) {
  std::string k;
  k.reserve(8 + 2 * s.left.size());
  int last = s.path.empty() ? -1 : s.path.back();
  k.append(reinterpret_cast<const char*>(&last), sizeof last);
  k.push_back(static_cast<char>(s.parity));
  for (int c : s.left) {
    k.push_back(static_cast<char>(c & 0xff));
    k.push_back(static_cast<char>(c >> 8));
  }
  return k;
}

}  // namespace

OptimalElement optimal_torus_element(const TorusElement& t, long long max_states) {
  const RootType type = t.type;
  const bool sgn = type != RootType::A;
  Scaled sc;
  sc.D = common_denominator(t.angles);
  std::vector<long long> x;
  for (const auto& a : t.angles) x.push_back(a.numerator() * (sc.D / a.denominator()));
  std::map<long long, std::vector<int>> where;  // value -> source indices
  for (size_t i = 0; i < x.size(); ++i) where[sgn ? std::llabs(x[i]) : x[i]].push_back(static_cast<int>(i));
  std::vector<long long> vals;
  std::vector<int> cnt;
  for (const auto& [v, idx] : where) {
    vals.push_back(v);
    cnt.push_back(static_cast<int>(idx.size()));
  }
  int d = static_cast<int>(vals.size());
  int n = static_cast<int>(x.size());
  auto self_neg = [&](int i) { return sc.normi(-vals[i]) == sc.normi(vals[i]); };
  bool parity_free = type != RootType::D;
  for (int i = 0; i < d; ++i)
    if (self_neg(i)) parity_free = true;
  auto sval = [&](int s) { return (s & 1) ? -vals[s >> 1] : vals[s >> 1]; };

  // Emitted |beta| values when appending signed value nv after last (left = elements still to place after nv).
  auto emit = [&](const BeamState& st, long long nv, int left_after) {
    std::vector<long long> e;
    if (!st.path.empty()) e.push_back(sc.absn(sval(st.path.back()) - nv));
    if (left_after == 0) {
      if (type == RootType::B) e.push_back(sc.absn(nv));
      if (type == RootType::C) e.push_back(sc.absn(2 * nv));
      if (type == RootType::D) e.push_back(sc.absn(sval(st.path.back()) + nv));
    }
    return e;
  };

  OptimalElement out;
  std::vector<BeamState> beam(1);
  beam[0].left = cnt;
  // Output negatives must match the input count mod 2 (type D).
  for (long long v : x) beam[0].parity ^= v < 0;
  for (int step = 0; step < n; ++step) {
    int left_after = n - step - 1;
    std::vector<long long> best;
    bool have = false;
    std::map<std::string, BeamState> next;
    for (const auto& st : beam) {
      for (int i = 0; i < d; ++i) {
        if (!st.left[i]) continue;
        for (int s = 0; s < (sgn ? 2 : 1); ++s) {
          if (s && self_neg(i)) continue;
          int np = st.parity ^ s;
          if (left_after == 0 && !parity_free && np) continue;
          auto e = emit(st, s ? -vals[i] : vals[i], left_after);
          if (!have || e > best) {
            best = e;
            next.clear();
            have = true;
          } else if (e < best) {
            continue;
          }
          BeamState ns = st;
          ns.path.push_back(2 * i + s);
          --ns.left[i];
          ns.parity = np;
          next.emplace(state_key(ns), std::move(ns));
        }
      }
    }
    beam.clear();
    for (auto& [k, s] : next) {
      if (static_cast<long long>(beam.size()) >= max_states) {
        out.exact = false;
        break;
      }
      beam.push_back(std::move(s));
    }
    if (beam.empty()) fail(Errc::Internal, "optimal element search lost every state");
  }
  const auto& path = beam.front().path;
  std::map<long long, size_t> used;
  TorusElement r = t;
  for (int k = 0; k < n; ++k) {
    long long key = vals[path[k] >> 1];
    int src = where[key][used[key]++];
    out.perm.push_back(src);
    long long v = sval(path[k]);
    int sign = v == x[src] || sc.normi(v) == sc.normi(x[src]) ? 1 : -1;
    out.signs.push_back(sign);
    r.angles[k] = norm_angle(sign > 0 ? t.angles[src] : -t.angles[src]);
  }
  out.t = r;
  return out;
}

double Profile::at(int i) const {
  if (i < 1 || i > static_cast<int>(values.size())) return 0;
  return values[i - 1];
}

namespace {
Profile from_angles(std::vector<Rat> a, int rank, bool exact) {
  for (auto& x : a) x = abs_angle(x);
  std::sort(a.begin(), a.end(), [](const Rat& p, const Rat& q) { return p > q; });
  Profile p;
  p.support_bound = rank;
  p.exact = exact;
  for (const auto& x : a) {
    p.angles.push_back(x);
    p.values.push_back(lie::half_chord(x));
  }
  return p;
}

bool decreasing(const std::vector<double>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) return false;
  return true;
}
}  // namespace

Profile profile_of(const TorusElement& t) {
  OptimalElement o = optimal_torus_element(t);
  return from_angles(lie::root_values(o.t), t.rank, o.exact);
}

Profile profile_from_values(std::vector<double> values, int support_bound) {
  for (double v : values)
    if (!(v >= 0 && v <= 1)) fail(Errc::InvalidArgument, "profile values must lie in [0, 1]");
  if (!decreasing(values)) fail(Errc::InvalidArgument, "profile values must be decreasing");
  if (static_cast<int>(values.size()) > support_bound) fail(Errc::InvalidArgument, "profile longer than its support bound");
  Profile p;
  p.values = std::move(values);
  p.support_bound = support_bound;
  return p;
}

Profile profile_of_finite_type(const Rat& ell, int n) {
  if (ell < Rat(0) || ell > Rat(1)) fail(Errc::InvalidArgument, "length must lie in [0, 1]");
  Rat s = ell * n;
  long long k = s.numerator() / s.denominator();
  Profile p;
  p.support_bound = n;
  p.rational_values = true;
  p.values.assign(static_cast<size_t>(k), 1.0);
  p.values.resize(static_cast<size_t>(n), 0.0);
  return p;
}

namespace {
Profile pointwise(const Profile& f, const Profile& h, bool take_min) {
  Profile p;
  p.support_bound = std::max(f.support_bound, h.support_bound);
  p.exact = f.exact && h.exact;
  p.rational_values = f.rational_values && h.rational_values;
  size_t len = std::max(f.values.size(), h.values.size());
  for (size_t i = 0; i < len; ++i) {
    double a = f.at(static_cast<int>(i + 1)), b = h.at(static_cast<int>(i + 1));
    p.values.push_back(take_min ? std::min(a, b) : std::max(a, b));
  }
  bool both_angles = f.angles.size() == f.values.size() && h.angles.size() == h.values.size() &&
                     !f.angles.empty() && !h.angles.empty();
  if (both_angles) {
    for (size_t i = 0; i < len; ++i) {
      Rat a = i < f.angles.size() ? f.angles[i] : Rat(0), b = i < h.angles.size() ? h.angles[i] : Rat(0);
      p.angles.push_back(take_min ? std::min(a, b) : std::max(a, b));
    }
  }
  return p;
}
}  // namespace

Profile profile_meet(const Profile& f, const Profile& h) { return pointwise(f, h, true); }
Profile profile_join(const Profile& f, const Profile& h) { return pointwise(f, h, false); }

bool profile_equal(const Profile& f, const Profile& h, double tol) {
  size_t len = std::max(f.values.size(), h.values.size());
  for (size_t i = 0; i < len; ++i)
    if (std::fabs(f.at(static_cast<int>(i + 1)) - h.at(static_cast<int>(i + 1))) > tol) return false;
  return true;
}

TorusElement realize_profile(const Profile& p, RootType type, int rank) {
  if (type != RootType::A) fail(Errc::InvalidArgument, "profile realization is implemented for type A only");
  if (rank < 1) fail(Errc::BadRank, "rank must be positive");
  std::vector<Rat> want = p.angles;
  if (want.empty() && !p.values.empty())
    for (double v : p.values) want.push_back(approximate(2 / std::numbers::pi * std::asin(std::clamp(v, 0.0, 1.0)), 1000000));
  if (static_cast<int>(want.size()) > rank) fail(Errc::Unrealizable, "profile support exceeds the rank");
  for (auto& a : want)
    if (a < Rat(0) || a > Rat(1)) fail(Errc::InvalidArgument, "profile angles must lie in [0, 1]");
  want.resize(rank, Rat(0));
  std::sort(want.begin(), want.end(), [](const Rat& a, const Rat& b) { return a > b; });
  Profile target = from_angles(want, rank, true);

  int n = rank + 1;
  std::vector<Rat> pts{Rat(0)};
  std::vector<Rat> used_d;
  std::vector<char> used(rank, 0);
  long long leaves = 0;
  TorusElement found;
  bool ok = false;
  auto dist = [](const Rat& a, const Rat& b) { return abs_angle(a - b); };
  auto dfs = [&](auto&& self) -> void {
    if (ok || leaves > 200000) return;
    if (static_cast<int>(pts.size()) == n) {
      ++leaves;
      Rat c = 0;
      for (const auto& q : pts) c += q;
      c /= n;
      std::vector<Rat> th;
      for (const auto& q : pts) th.push_back(norm_angle(q - c));
      TorusElement t = TorusElement::make(RootType::A, rank, th);
      Profile got = profile_of(t);
      if (got.angles == target.angles) {
        found = t;
        ok = true;
      }
      return;
    }
    for (int i = 0; i < rank && !ok; ++i) {
      if (used[i] || (i > 0 && !used[i - 1] && want[i] == want[i - 1])) continue;
      for (int s = 0; s < 2 && !ok; ++s) {
        if (s && (want[i] == 0 || want[i] == 1)) continue;
        Rat np = norm_angle(pts.back() + (s ? -want[i] : want[i]));
        // A later point may not be farther from p_j than p_{j+1} was.
        bool good = true;
        for (size_t j = 0; j + 1 < pts.size() && good; ++j)
          if (dist(pts[j], np) > used_d[j]) good = false;
        if (!good) continue;
        used[i] = 1;
        used_d.push_back(want[i]);
        pts.push_back(np);
        self(self);
        pts.pop_back();
        used_d.pop_back();
        used[i] = 0;
      }
    }
  };
  dfs(dfs);
  if (!ok) fail(Errc::Unrealizable, "no torus element of type A has this profile");
  return found;
}

Monomial Monomial::operator*(const Monomial& o) const {
  size_t n = perm.size();
  if (o.perm.size() != n) fail(Errc::InvalidArgument, "monomial sizes differ");
  Monomial r;
  r.perm.resize(n);
  r.phases.resize(n);
  for (size_t j = 0; j < n; ++j) {
    int oj = o.perm[j];
    r.perm[j] = perm[oj];
    r.phases[j] = norm_angle(o.phases[j] + phases[oj]);
  }
  return r;
}

Monomial Monomial::inverse() const {
  size_t n = perm.size();
  Monomial r;
  r.perm.resize(n);
  r.phases.resize(n);
  for (size_t j = 0; j < n; ++j) {
    r.perm[perm[j]] = static_cast<int>(j);
    r.phases[perm[j]] = norm_angle(-phases[j]);
  }
  return r;
}

std::vector<Rat> monomial_spectrum(const std::vector<int>& perm, const std::vector<Rat>& phases) {
  size_t n = perm.size();
  if (phases.size() != n) fail(Errc::InvalidArgument, "phase count must match the permutation size");
  std::vector<char> seen(n, 0);
  for (int p : perm)
    if (p < 0 || static_cast<size_t>(p) >= n || seen[p]++) fail(Errc::InvalidArgument, "not a permutation");
  std::fill(seen.begin(), seen.end(), 0);
  std::vector<Rat> out;
  for (size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    long long len = 0;
    Rat theta = 0;
    for (size_t j = s; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      theta += phases[j];
      ++len;
    }
    for (long long j = 0; j < len; ++j) out.push_back(norm_angle((theta + 2 * j) / len));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rat> monomial_spectrum(const Monomial& m) { return monomial_spectrum(m.perm, m.phases); }

Profile spectrum_profile(const std::vector<Rat>& spec) {
  if (spec.size() < 2) fail(Errc::InvalidArgument, "need at least two eigenvalues");
  return profile_of(TorusElement::make(RootType::A, static_cast<int>(spec.size()) - 1, spec));
}

KyFanReport kyfan_profile_check(const Monomial& g, const Monomial& h, const std::vector<double>& sample_phases) {
  auto sg = monomial_spectrum(g), sh = monomial_spectrum(h), sgh = monomial_spectrum(g * h);
  Profile fg = spectrum_profile(sg), fh = spectrum_profile(sh), fgh = spectrum_profile(sgh);
  int n = static_cast<int>(sg.size());
  auto dbl = [](const std::vector<Rat>& v) {
    std::vector<double> o;
    for (const auto& x : v) o.push_back(to_double(x));
    return o;
  };
  auto dg = dbl(sg), dh = dbl(sh), dgh = dbl(sgh);
  std::vector<double> ug(n + 1), uh(n + 1);
  for (int i = 1; i <= n; ++i) {
    ug[i] = lie::underline_singular(dg, i);
    uh[i] = lie::underline_singular(dh, i);
  }
  KyFanReport rep;
  const double tol = 1e-12;
  auto check = [&](double lhs, double rhs, const std::string& what) {
    ++rep.checks;
    rep.worst_slack = std::max(rep.worst_slack, lhs - rhs);
    if (lhs > rhs + tol) {
      if (!rep.violations) rep.first_violation = what;
      ++rep.violations;
    }
  };
  for (int i = 0; 6 * i + 1 <= n; ++i)
    for (int j = 0; 6 * i + 6 * j + 1 <= n; ++j)
      check(fgh.at(6 * i + 6 * j + 1), 2 * fg.at(i + 1) + 2 * fh.at(j + 1),
            "F_gh(6i+6j+1) at i=" + std::to_string(i) + " j=" + std::to_string(j));
  for (int i = 0; i + 1 <= n; ++i)
    for (int j = 0; i + j + 1 <= n; ++j)
      if (2 * i + 2 * j + 1 <= n)
        check(fgh.at(2 * i + 2 * j + 1), 2 * ug[i + 1] + 2 * uh[j + 1],
              "F_gh(2i+2j+1) at i=" + std::to_string(i) + " j=" + std::to_string(j));
  for (int i = 1; i <= n; ++i) {
    check(ug[i], fg.at(i), "underline s_i(g) <= F_g(i) at i=" + std::to_string(i));
    check(uh[i], fh.at(i), "underline s_i(h) <= F_h(i) at i=" + std::to_string(i));
  }
  // s_k(1 - z u) = k-th largest |1 - z mu|
  auto sk = [](const std::vector<double>& spec, double phi, int k) {
    std::vector<double> v;
    for (double a : spec) v.push_back(2 * lie::half_chord(a + phi));
    std::sort(v.begin(), v.end(), std::greater<double>());
    return v[k - 1];
  };
  for (size_t a = 0; a < sample_phases.size(); ++a)
    for (size_t b = 0; b < sample_phases.size(); ++b) {
      double x = sample_phases[a], y = sample_phases[b];
      for (int i = 0; i + 1 <= n; ++i)
        for (int j = 0; i + j + 1 <= n; ++j)
          check(sk(dgh, x + y, i + j + 1), sk(dg, x, i + 1) + sk(dh, y, j + 1),
                "Ky Fan step at i=" + std::to_string(i) + " j=" + std::to_string(j));
      for (int i = 0; 2 * i + 1 <= n && b == 0; ++i)
        check(fg.at(2 * i + 1), sk(dg, x, i + 1), "F_g(2i+1) <= s_{i+1}(1-zg) at i=" + std::to_string(i));
    }
  return rep;
}

namespace {
// Index of the first failing i at one n, or -1.
int first_fail(const Profile& f, const Profile& h, double c, int k) {
  bool exact = f.rational_values && h.rational_values;
  int len = static_cast<int>(f.values.size());
  for (int i = 0; k * i + 1 <= len; ++i) {
    double lhs = f.at(k * i + 1), rhs = c * h.at(i + 1);
    if (exact ? lhs > rhs : lhs > rhs + 1e-12) return i;
  }
  return -1;
}
}  // namespace

PrecedeResult precede_check(const ProfileSequence& f, const ProfileSequence& h, const OrderWitness& w) {
  if (f.first_n != h.first_n || f.items.size() != h.items.size())
    fail(Errc::InvalidArgument, "profile sequences must share their index range");
  if (w.c < 1 || w.k < 1) fail(Errc::InvalidArgument, "witness needs c >= 1 and k >= 1");
  PrecedeResult r;
  for (size_t idx = 0; idx < f.items.size(); ++idx) {
    int n = f.first_n + static_cast<int>(idx);
    if (n < w.n0) continue;
    int i = first_fail(f.items[idx], h.items[idx], w.c, w.k);
    if (i >= 0) {
      r.holds = false;
      r.n = n;
      r.i = i;
      return r;
    }
  }
  return r;
}

std::optional<OrderWitness> precede_search(const ProfileSequence& f, const ProfileSequence& h, int c_max, int k_max,
                                           int n0) {
  for (int k = 1; k <= k_max; ++k)
    for (int c = 1; c <= c_max; ++c) {
      OrderWitness w{static_cast<double>(c), k, n0};
      if (precede_check(f, h, w).holds) return w;
    }
  return std::nullopt;
}

DemoReport incomparability_demo(int n_max, int c_max, int k_max) {
  if (n_max < 2 || c_max < 1 || k_max < 1) fail(Errc::InvalidArgument, "demo needs n_max >= 2 and a nonempty grid");
  std::vector<Profile> fg, fh;
  for (int n = 2; n <= n_max; ++n) {
    auto [g, h] = lie::counterexample_family(n);
    fg.push_back(profile_of(g));
    fh.push_back(profile_of(h));
  }
  DemoReport rep;
  for (int dir = 0; dir < 2; ++dir)
    for (int k = 1; k <= k_max; ++k)
      for (int c = 1; c <= c_max; ++c) {
        DemoRow row{dir == 0 ? "g<=h" : "h<=g", c, k, -1};
        for (int n = 2; n <= n_max && row.first_failing_n < 0; ++n) {
          const Profile& a = dir == 0 ? fg[n - 2] : fh[n - 2];
          const Profile& b = dir == 0 ? fh[n - 2] : fg[n - 2];
          if (first_fail(a, b, c, k) >= 0) row.first_failing_n = n;
        }
        if (row.first_failing_n < 0) (dir == 0 ? rep.all_fail_g_h : rep.all_fail_h_g) = false;
        rep.rows.push_back(row);
      }
  return rep;
}

}  // namespace ul::prof
