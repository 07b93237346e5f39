#include "ultralen/torus.hpp"

#include "ultralen/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <unordered_map>

namespace ul::lie {

TorusElement TorusElement::make(RootType type, int rank, std::vector<Rat> angles) {
  if (type == RootType::G2 || type == RootType::F4)
    fail(Errc::InvalidArgument, "torus elements are supported for classical types only");
  if (rank < 1 || (type == RootType::D && rank < 2)) fail(Errc::BadRank, "rank too small for type");
  size_t want = type == RootType::A ? size_t(rank) + 1 : size_t(rank);
  if (angles.size() != want)
    fail(Errc::InvalidArgument, "expected " + std::to_string(want) + " angles, got " + std::to_string(angles.size()));
  TorusElement t;
  t.type = type;
  t.rank = rank;
  for (auto& a : angles) a = norm_angle(a);
  t.angles = std::move(angles);
  return t;
}

bool TorusElement::determinant_one() const {
  if (type != RootType::A) return true;
  Rat s = 0;
  for (const auto& a : angles) s += a;
  return s.denominator() == 1 && s.numerator() % 2 == 0;
}

std::vector<Rat> root_values(const TorusElement& t) {
  std::vector<Rat> b;
  const auto& a = t.angles;
  int r = t.rank;
  for (int i = 0; i + 1 < r; ++i) b.push_back(norm_angle(a[i] - a[i + 1]));
  switch (t.type) {
    case RootType::A: b.push_back(norm_angle(a[r - 1] - a[r])); break;
    case RootType::B: b.push_back(norm_angle(a[r - 1])); break;
    case RootType::C: b.push_back(norm_angle(2 * a[r - 1])); break;
    case RootType::D: b.push_back(norm_angle(a[r - 2] + a[r - 1])); break;
    default: fail(Errc::InvalidArgument, "unsupported type");
  }
  return b;
}

Rat lambda_of(const TorusElement& t) {
  Rat s = 0;
  for (const auto& b : root_values(t)) s += b < 0 ? -b : b;
  return s / t.rank;
}

namespace {

// Angles scaled by a common denominator D; the circle is Z / 2D.
struct Scaled {
  long long D = 1;
  long long normi(long long x) const {
    long long m = ((x % (2 * D)) + 2 * D) % (2 * D);
    return m > D ? m - 2 * D : m;
  }
  long long absn(long long x) const { return std::llabs(normi(x)); }
};

struct OrbitDP {
  RootType type;
  int r;
  Scaled sc;
  std::vector<long long> vals;  // distinct values
  std::vector<int> cnt;
  std::vector<long long> radix;
  long long states = 1;
  bool signed_vals = false;
  bool parity_free = true;
  std::unordered_map<long long, long long> memo;

  // Signed value index: 2*i + (negated)
  long long sval(int s) const { return (s & 1) ? -vals[s >> 1] : vals[s >> 1]; }
  bool self_neg(int i) const { return sc.normi(-vals[i]) == sc.normi(vals[i]); }

  long long terminal(long long last) const {
    switch (type) {
      case RootType::B: return sc.absn(last);
      case RootType::C: return sc.absn(2 * last);
      default: return 0;
    }
  }

  long long key(int last, long long code, int par) const { return ((code * (2 * static_cast<long long>(vals.size()))) + last) * 2 + par; }

  long long f(int last, long long code, int left, int par) {
    long long lv = sval(last);
    if (left == 0) return terminal(lv);
    long long k = key(last, code, par);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    long long best = -1;
    for (int i = 0; i < static_cast<int>(vals.size()); ++i) {
      if ((code / radix[i]) % (cnt[i] + 1) == 0) continue;
      for (int s = 0; s < (signed_vals ? 2 : 1); ++s) {
        if (s && self_neg(i)) continue;
        int np = par ^ s;
        long long nv = s ? -vals[i] : vals[i];
        long long v;
        if (type == RootType::D && left == 1) {
          if (!parity_free && np) continue;
          v = sc.absn(lv - nv) + sc.absn(lv + nv);
        } else {
          v = sc.absn(lv - nv) + f(2 * i + s, code - radix[i], left - 1, np);
        }
        best = std::max(best, v);
      }
    }
    memo[k] = best;
    return best;
  }
};

std::vector<long long> scaled_angles(const TorusElement& t, long long& D) {
  D = common_denominator(t.angles);
  std::vector<long long> v;
  for (const auto& a : t.angles) v.push_back(a.numerator() * (D / a.denominator()));
  return v;
}

// Greedy lower bound: start from each value and always take the farthest next.
long long greedy_orbit(const TorusElement& t, const Scaled& sc, const std::vector<long long>& v,
                       std::vector<long long>& best_arr) {
  bool sgn = t.type != RootType::A;
  long long best = -1;
  int n = static_cast<int>(v.size());
  for (int start = 0; start < n; ++start)
    for (int s0 = 0; s0 < (sgn ? 2 : 1); ++s0) {
      std::vector<char> used(n, 0);
      std::vector<long long> arr{s0 ? -v[start] : v[start]};
      int flips = s0;
      used[start] = 1;
      for (int step = 1; step < n; ++step) {
        long long bd = -1, bv = 0;
        int bi = -1, bs = 0;
        for (int i = 0; i < n; ++i) {
          if (used[i]) continue;
          for (int s = 0; s < (sgn ? 2 : 1); ++s) {
            long long nv = s ? -v[i] : v[i];
            long long d = sc.absn(arr.back() - nv);
            if (d > bd) {
              bd = d;
              bv = nv;
              bi = i;
              bs = s;
            }
          }
        }
        used[bi] = 1;
        flips += bs;
        arr.push_back(bv);
      }
      // Even sign changes only for D; a flip of the last entry fixes parity.
      if (t.type == RootType::D && flips % 2) arr.back() = -arr.back();
      TorusElement cand = t;
      for (int i = 0; i < n; ++i) cand.angles[i] = norm_angle(Rat(arr[i], sc.D));
      long long tot = 0;
      for (const auto& b : root_values(cand)) tot += (b < 0 ? -b : b).numerator() * (sc.D / b.denominator());
      if (tot > best) {
        best = tot;
        best_arr = arr;
      }
    }
  return best;
}

}  // namespace

LambdaTilde lambda_tilde(const TorusElement& t, bool allow_heuristic, long long max_states) {
  OrbitDP dp;
  dp.type = t.type;
  dp.r = t.rank;
  std::vector<long long> v = scaled_angles(t, dp.sc.D);
  std::map<long long, int> counts;
  for (long long x : v) {
    ++counts[t.type == RootType::A ? x : std::llabs(x)];
  }
  for (auto [x, c] : counts) {
    dp.vals.push_back(x);
    dp.cnt.push_back(c);
  }
  dp.signed_vals = t.type != RootType::A;
  dp.parity_free = t.type != RootType::D;
  for (size_t i = 0; i < dp.vals.size(); ++i)
    if (dp.self_neg(static_cast<int>(i))) dp.parity_free = true;
  long long states = 1;
  bool too_big = false;
  for (int c : dp.cnt) {
    dp.radix.push_back(states);
    states *= c + 1;
    if (states > max_states) too_big = true;
  }
  LambdaTilde out;
  int n = static_cast<int>(v.size());
  long long table = states * static_cast<long long>(dp.vals.size()) * (dp.signed_vals ? 4 : 1);
  if (too_big || table > max_states) {
    if (!allow_heuristic) fail(Errc::RankTooLargeForExact, "orbit state space too large for exact evaluation");
    std::vector<long long> arr;
    long long best = greedy_orbit(t, dp.sc, v, arr);
    out.value = Rat(best, dp.sc.D * t.rank);
    out.exact = false;
    for (long long x : arr) out.arrangement.push_back(Rat(x, dp.sc.D));
    return out;
  }
  long long full = states - 1;
  long long best = -1;
  int bs = -1;
  int d = static_cast<int>(dp.vals.size());
  for (int i = 0; i < d; ++i)
    for (int s = 0; s < (dp.signed_vals ? 2 : 1); ++s) {
      if (s && dp.self_neg(i)) continue;
      long long val;
      if (t.type == RootType::D && n == 2) {
        // first and last placed directly
        val = -1;
        long long fv = s ? -dp.vals[i] : dp.vals[i];
        long long code = full - dp.radix[i];
        for (int j = 0; j < d; ++j) {
          if ((code / dp.radix[j]) % (dp.cnt[j] + 1) == 0) continue;
          for (int s2 = 0; s2 < 2; ++s2) {
            if (s2 && dp.self_neg(j)) continue;
            if (!dp.parity_free && (s ^ s2)) continue;
            long long nv = s2 ? -dp.vals[j] : dp.vals[j];
            val = std::max(val, dp.sc.absn(fv - nv) + dp.sc.absn(fv + nv));
          }
        }
      } else {
        val = dp.f(2 * i + s, full - dp.radix[i], n - 1, s);
      }
      if (val > best) {
        best = val;
        bs = 2 * i + s;
      }
    }
  out.value = Rat(best, dp.sc.D * t.rank);
  // Reconstruct one maximizing arrangement by following optimal choices.
  std::vector<long long> arr{dp.sval(bs)};
  long long code = full - dp.radix[bs >> 1];
  int last = bs, par = bs & 1, left = n - 1;
  long long remaining = best;
  while (left > 0) {
    bool found = false;
    long long lv = dp.sval(last);
    for (int i = 0; i < d && !found; ++i) {
      if ((code / dp.radix[i]) % (dp.cnt[i] + 1) == 0) continue;
      for (int s = 0; s < (dp.signed_vals ? 2 : 1) && !found; ++s) {
        if (s && dp.self_neg(i)) continue;
        int np = par ^ s;
        long long nv = s ? -dp.vals[i] : dp.vals[i];
        long long v2;
        if (t.type == RootType::D && left == 1) {
          if (!dp.parity_free && np) continue;
          v2 = dp.sc.absn(lv - nv) + dp.sc.absn(lv + nv);
        } else {
          v2 = dp.sc.absn(lv - nv) + dp.f(2 * i + s, code - dp.radix[i], left - 1, np);
        }
        if (v2 == remaining) {
          found = true;
          remaining -= dp.sc.absn(lv - nv);
          arr.push_back(nv);
          last = 2 * i + s;
          par = np;
          code -= dp.radix[i];
          --left;
        }
      }
    }
    if (!found) fail(Errc::Internal, "lambda_tilde reconstruction failed");
  }
  for (long long x : arr) out.arrangement.push_back(Rat(x, dp.sc.D));
  return out;
}

Rat lambda_tilde_bruteforce(const TorusElement& t) {
  // Distinct arrangements only: permute the sorted values themselves.
  std::vector<Rat> a = t.angles;
  std::sort(a.begin(), a.end());
  int n = static_cast<int>(a.size());
  Rat best = 0;
  bool sgn = t.type != RootType::A;
  do {
    for (int mask = 0; mask < (sgn ? (1 << n) : 1); ++mask) {
      if (t.type == RootType::D && __builtin_popcount(mask) % 2) continue;
      TorusElement c = t;
      for (int i = 0; i < n; ++i) c.angles[i] = norm_angle(((mask >> i) & 1) ? -a[i] : a[i]);
      best = std::max(best, lambda_of(c));
    }
  } while (std::next_permutation(a.begin(), a.end()));
  return best;
}

std::vector<Rat> spectrum(const TorusElement& t) {
  std::vector<Rat> s = t.angles;
  if (t.type == RootType::A) return s;
  for (const auto& a : t.angles) s.push_back(norm_angle(-a));
  if (t.type == RootType::B) s.push_back(Rat(0));
  return s;
}

int unitary_dim(const TorusElement& t) {
  switch (t.type) {
    case RootType::A: return t.rank + 1;
    case RootType::B: return 2 * t.rank + 1;
    default: return 2 * t.rank;
  }
}

double half_chord(double a) { return std::fabs(std::sin(std::numbers::pi * a / 2)); }
double half_chord(const Rat& a) { return half_chord(to_double(norm_angle(a))); }

static std::vector<double> to_doubles(const std::vector<Rat>& v) {
  std::vector<double> d;
  for (const auto& x : v) d.push_back(to_double(norm_angle(x)));
  return d;
}

double ell1(const std::vector<double>& spec) {
  double s = 0;
  for (double a : spec) s += half_chord(a);
  return s / spec.size();
}

double ell1(const std::vector<Rat>& spec) { return ell1(to_doubles(spec)); }

static double shifted_sum(const std::vector<double>& spec, double phi) {
  double s = 0;
  for (double a : spec) s += half_chord(a + phi);
  return s;
}

double ell1_prime(const std::vector<double>& spec, int rank) {
  double best = shifted_sum(spec, 0);
  for (double a : spec) best = std::min(best, shifted_sum(spec, -a));
  return best / rank;
}

double ell1_prime(const std::vector<Rat>& spec, int rank) { return ell1_prime(to_doubles(spec), rank); }

double ell1_prime_grid(const std::vector<double>& spec, int rank, int points) {
  double best = shifted_sum(spec, 0);
  for (int k = 0; k < points; ++k) best = std::min(best, shifted_sum(spec, 2.0 * k / points));
  return best / rank;
}

Rat inf_rank_length(const std::vector<Rat>& spec) {
  std::map<Rat, int> mult;
  int best = 0;
  for (const auto& a : spec) best = std::max(best, ++mult[norm_angle(a)]);
  int n = static_cast<int>(spec.size());
  return Rat(n - best, n);
}

static double ith_largest(const std::vector<double>& spec, double phi, int i, std::vector<double>& buf) {
  buf.clear();
  for (double a : spec) buf.push_back(half_chord(a + phi));
  std::nth_element(buf.begin(), buf.begin() + (i - 1), buf.end(), std::greater<double>());
  return buf[i - 1];
}

double underline_singular(const std::vector<double>& spec, int i) {
  int n = static_cast<int>(spec.size());
  if (i < 1 || i > n) fail(Errc::IndexOutOfRange, "singular value index out of range");
  std::vector<double> buf;
  double best = ith_largest(spec, 0, i, buf);
  for (int j = 0; j < n; ++j) {
    best = std::min(best, ith_largest(spec, -spec[j], i, buf));
    for (int k = j + 1; k < n; ++k) {
      double mid = -(spec[j] + spec[k]) / 2;
      best = std::min(best, ith_largest(spec, mid, i, buf));
      best = std::min(best, ith_largest(spec, mid + 1, i, buf));
    }
  }
  return best;
}

double underline_singular_grid(const std::vector<double>& spec, int i, int points) {
  int n = static_cast<int>(spec.size());
  if (i < 1 || i > n) fail(Errc::IndexOutOfRange, "singular value index out of range");
  std::vector<double> buf;
  double best = ith_largest(spec, 0, i, buf);
  for (int k = 0; k < points; ++k) best = std::min(best, ith_largest(spec, 2.0 * k / points, i, buf));
  return best;
}

std::pair<TorusElement, TorusElement> counterexample_family(int n) {
  if (n < 2) fail(Errc::InvalidArgument, "counterexample family needs n >= 2");
  std::vector<Rat> g, h;
  g.push_back(Rat(2 * (n - 1), n));
  for (int i = 0; i < n; ++i) g.push_back(Rat(1, static_cast<long long>(n) * n));
  for (int i = 0; i < n; ++i) g.push_back(Rat(0));
  h.assign(2 * n + 1, Rat(0));
  h[0] = h[1] = Rat(1);
  return {TorusElement::make(RootType::A, 2 * n, g), TorusElement::make(RootType::A, 2 * n, h)};
}

}  // namespace ul::lie
