#include "ultralen/sym.hpp"

#include "ultralen/errors.hpp"

#include <cmath>
#include <sstream>

namespace ul::sym {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  for (int i = 0; i < n; ++i) p.images[i] = i;
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(n);
  for (const auto& c : cycles) {
    for (size_t i = 0; i < c.size(); ++i) {
      int a = c[i] - 1, b = c[(i + 1) % c.size()] - 1;
      if (a < 0 || a >= n || b < 0 || b >= n) fail(Errc::InvalidArgument, "cycle entry out of range");
      p.images[a] = b;
    }
  }
  if (!p.valid()) fail(Errc::InvalidArgument, "cycles do not define a permutation");
  return p;
}

bool Permutation::valid() const {
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    if (v < 0 || v >= n() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Permutation Permutation::operator*(const Permutation& o) const {
  Permutation r;
  r.images.resize(images.size());
  for (int i = 0; i < n(); ++i) r.images[i] = images[o.images[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images.resize(images.size());
  for (int i = 0; i < n(); ++i) r.images[images[i]] = i;
  return r;
}

int CycleType::fixed_points() const {
  auto it = counts.find(1);
  return it == counts.end() ? 0 : it->second;
}

int CycleType::num_cycles() const {
  int l = 0;
  for (auto [len, c] : counts) l += c;
  return l;
}

bool CycleType::is_even() const {
  long long s = 0;
  for (auto [len, c] : counts) s += static_cast<long long>(len - 1) * c;
  return s % 2 == 0;
}

bool CycleType::valid() const {
  long long s = 0;
  for (auto [len, c] : counts) {
    if (len < 1 || c < 0) return false;
    s += static_cast<long long>(len) * c;
  }
  return n > 0 && s == n;
}

std::string CycleType::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto [len, c] : counts) {
    if (c == 0) continue;
    if (!first) os << ' ';
    os << len << '^' << c;
    first = false;
  }
  return os.str();
}

CycleType cycle_type(const Permutation& p) {
  CycleType t;
  t.n = p.n();
  std::vector<char> seen(p.n(), 0);
  for (int i = 0; i < p.n(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p.images[j]) {
      seen[j] = 1;
      ++len;
    }
    ++t.counts[len];
  }
  return t;
}

CycleType from_parts(int n, const std::vector<int>& parts) {
  CycleType t;
  t.n = n;
  for (int x : parts) ++t.counts[x];
  if (!t.valid()) fail(Errc::InvalidArgument, "parts do not sum to n");
  return t;
}

Rat hamming_length(const CycleType& t) { return Rat(t.n - t.fixed_points(), t.n); }

Rat rank_length_perm(const CycleType& t) { return Rat(t.n - t.num_cycles(), t.n); }

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

bool splits_in_alt(const CycleType& t) {
  for (auto [len, c] : t.counts) {
    if (c == 0) continue;
    if (len % 2 == 0 || c > 1) return false;
  }
  return true;
}

static void require_even(const CycleType& t, Ambient a) {
  if (a == Ambient::Alt && !t.is_even()) fail(Errc::OddTypeInAlt, "odd cycle type " + t.str() + " in Alt");
}

BigInt class_size(const CycleType& t, Ambient a) {
  require_even(t, a);
  BigInt den = 1;
  for (auto [len, c] : t.counts) {
    for (int k = 0; k < c; ++k) den *= len;
    den *= factorial(c);
  }
  BigInt s = factorial(t.n) / den;
  if (a == Ambient::Alt && t.n > 1 && splits_in_alt(t)) s /= 2;
  return s;
}

double log_group_order(int n, Ambient a) {
  double l = std::lgamma(n + 1.0);
  if (a == Ambient::Alt && n > 1) l -= std::log(2.0);
  return l;
}

double log_class_size(const CycleType& t, Ambient a) {
  require_even(t, a);
  double l = std::lgamma(t.n + 1.0);
  for (auto [len, c] : t.counts) l -= c * std::log(static_cast<double>(len)) + std::lgamma(c + 1.0);
  if (a == Ambient::Alt && t.n > 1 && splits_in_alt(t)) l -= std::log(2.0);
  return l < 0 ? 0 : l;
}

double conj_length_perm(const CycleType& t, Ambient a) {
  double lg = log_group_order(t.n, a);
  if (lg <= 1e-12) return 0.0;
  return log_class_size(t, a) / lg;
}

void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& f) {
  if (n <= 0) return;
  // Kelleher's ascending-composition generator.
  std::vector<int> a(n + 1, 0);
  std::vector<int> out;
  int k = 1;
  a[0] = 0;
  a[1] = n;
  while (k != 0) {
    int x = a[k - 1] + 1;
    int y = a[k] - 1;
    --k;
    while (x <= y) {
      a[k] = x;
      y -= x;
      ++k;
    }
    a[k] = x + y;
    out.assign(a.begin(), a.begin() + k + 1);
    f(out);
  }
}

ReportSummary comparison_report(int n_min, int n_max, Ambient a,
                                const std::function<void(const ReportRow&)>& row, bool with_conj) {
  if (n_min < 1 || n_max > 60 || n_min > n_max) fail(Errc::InvalidArgument, "n range must lie in [1, 60]");
  ReportSummary s;
  const double tol = 1e-12;
  for (int n = n_min; n <= n_max; ++n) {
    for_each_partition(n, [&](const std::vector<int>& parts) {
      int fixed = 0, cycles = static_cast<int>(parts.size());
      for (int x : parts) fixed += (x == 1);
      if (a == Ambient::Alt) {
        long long par = 0;
        for (int x : parts) par += x - 1;
        if (par % 2) return;
      }
      int moved = n - fixed, rk = n - cycles;
      ++s.rows;
      bool exact_bad = !(rk <= moved && moved <= 2 * rk);
      if (exact_bad) ++s.exact_violations;
      if (rk > 0) s.max_ratio_H_over_r = std::max(s.max_ratio_H_over_r, double(moved) / rk);
      ReportRow r;
      r.n = n;
      r.flag_exact = exact_bad;
      r.flag_asym = false;
      r.asym_info = false;
      r.ell_c = 0;
      bool need_type = with_conj || row;
      if (need_type) r.type = from_parts(n, parts);
      if (with_conj) {
        double lc = conj_length_perm(r.type, a);
        double lh = double(moved) / n;
        r.ell_c = lc;
        bool bad = lc > 2 * lh + tol || lh > 8 * lc + tol;
        if (lh > 0) s.max_ratio_c_over_H = std::max(s.max_ratio_c_over_H, lc / lh);
        if (lc > 0) s.max_ratio_H_over_c = std::max(s.max_ratio_H_over_c, lh / lc);
        if (bad && n >= 17) {
          r.flag_asym = true;
          ++s.asym_violations;
        } else if (bad) {
          r.asym_info = true;
          ++s.asym_info_below_threshold;
        }
      }
      if (row) {
        r.ell_H = Rat(moved, n);
        r.ell_r = Rat(rk, n);
        row(r);
      }
    });
  }
  return s;
}

std::string csv_header() { return "n,cycle_type,ell_H,ell_r,ell_c,flag_exact,flag_asym"; }

std::string csv_row(const ReportRow& r) {
  std::ostringstream os;
  os.precision(12);
  os << r.n << ',' << r.type.str() << ',' << rat_str(r.ell_H) << ',' << rat_str(r.ell_r) << ',' << r.ell_c << ','
     << (r.flag_exact ? 1 : 0) << ',' << (r.flag_asym ? 1 : 0);
  return os.str();
}

double diameter(int n, Ambient a, LengthKind k) {
  double best = 0;
  for_each_partition(n, [&](const std::vector<int>& parts) {
    CycleType t = from_parts(n, parts);
    if (a == Ambient::Alt && !t.is_even()) return;
    double v = 0;
    switch (k) {
      case LengthKind::Hamming: v = to_double(hamming_length(t)); break;
      case LengthKind::Rank: v = to_double(rank_length_perm(t)); break;
      case LengthKind::Conj: v = conj_length_perm(t, a); break;
    }
    best = std::max(best, v);
  });
  return best;
}

}  // namespace ul::sym
