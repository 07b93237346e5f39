#include "ultralen/acceptance.hpp"

#include "ultralen/coloring.hpp"
#include "ultralen/decompose.hpp"
#include "ultralen/errors.hpp"
#include "ultralen/forms.hpp"
#include "ultralen/fq.hpp"
#include "ultralen/group.hpp"
#include "ultralen/profile.hpp"
#include "ultralen/roots.hpp"
#include "ultralen/su2.hpp"
#include "ultralen/sym.hpp"
#include "ultralen/torus.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace ul::acc {

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  const char* name;
  double limit;
  std::function<Outcome(std::mt19937_64&)> fn;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// Exact sandwich ell_r <= ell_H <= 2 ell_r.
Outcome c1(std::mt19937_64&) {
  auto s = sym::comparison_report(1, 60, sym::Ambient::Sym, {}, false);
  return {s.exact_violations == 0,
          std::to_string(s.rows) + " cycle types, " + std::to_string(s.exact_violations) + " violations"};
}

sym::Permutation perm_of(const grp::Key& k) {
  sym::Permutation p;
  for (auto x : k) p.images.push_back(static_cast<int>(x));
  return p;
}

Outcome c2(std::mt19937_64&) {
  long long classes = 0, bad = 0;
  for (int n = 2; n <= 7; ++n)
    for (bool alt : {false, true}) {
      if (alt && n < 3) continue;
      auto spec = grp::named_group((alt ? "A" : "S") + std::to_string(n));
      auto t = grp::GroupTable::generate(spec.amb, spec.gens);
      auto amb = alt ? sym::Ambient::Alt : sym::Ambient::Sym;
      std::map<std::string, int> seen;
      for (int c = 0; c < t.num_classes(); ++c) {
        auto type = sym::cycle_type(perm_of(t.element(t.class_rep(c))));
        ++seen[type.str()];
        ++classes;
        if (sym::class_size(type, amb) != t.class_size(c)) ++bad;
      }
      // every admissible cycle type appears, twice exactly when it splits
      sym::for_each_partition(n, [&](const std::vector<int>& parts) {
        auto type = sym::from_parts(n, parts);
        if (alt && !type.is_even()) return;
        int want = alt && sym::splits_in_alt(type) ? 2 : 1;
        if (seen[type.str()] != want) ++bad;
      });
    }
  return {bad == 0, std::to_string(classes) + " classes compared, " + std::to_string(bad) + " mismatches"};
}

Outcome c3(std::mt19937_64&) {
  auto s = sym::comparison_report(17, 40, sym::Ambient::Sym, {}, true);
  return {s.asym_violations == 0, std::to_string(s.rows) + " cycle types, " + std::to_string(s.asym_violations) +
                                      " violations, max ell_c/ell_H " + fmt("%.4f", s.max_ratio_c_over_H) +
                                      ", max ell_H/ell_c " + fmt("%.4f", s.max_ratio_H_over_c)};
}

Outcome c4(std::mt19937_64& rng) {
  long long checked = 0, bad = 0;
  auto check = [&](const fq::Matrix& g) {
    Rat r = fq::rank_length_mat(g), J = fq::jordan_length(g).value;
    ++checked;
    if (!(J <= r) || (r <= Rat(1, 2) && J != r) || J < std::min(r, Rat(1) - r)) ++bad;
  };
  for (int q : {3, 5, 7}) {
    auto F = fq::Field::make(q, 1);
    fq::Matrix m(F, 2, 2);
    for (int code = 0; code < q * q * q * q; ++code) {
      int x = code;
      for (auto& e : m.a) {
        e = static_cast<fq::Elem>(x % q);
        x /= q;
      }
      if (fq::invertible(m)) check(m);
    }
  }
  const std::pair<int, int> fields[] = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};
  for (int s = 0; s < 10000; ++s) {
    auto [p, e] = fields[rng() % std::size(fields)];
    auto F = fq::Field::make(p, e);
    int n = 1 + static_cast<int>(rng() % 6);
    fq::Matrix m(F, n, n);
    do {
      for (auto& x : m.a) x = static_cast<fq::Elem>(rng() % F->q());
    } while (!fq::invertible(m));
    check(m);
  }
  return {bad == 0, std::to_string(checked) + " elements, " + std::to_string(bad) + " violations"};
}

Outcome c5(std::mt19937_64& rng) {
  long long bad = 0;
  for (int s = 0; s < 1000; ++s) {
    int p = rng() % 2 ? 3 : 5;
    bool herm = rng() % 2;
    fq::BilinearSpace V;
    if (herm) {
      V = fq::BilinearSpace::standard_hermitian(fq::Field::make(p, 2), 1 + static_cast<int>(rng() % 8));
    } else {
      V = fq::BilinearSpace::standard_symplectic(fq::Field::make(p, 1), 2 * (1 + static_cast<int>(rng() % 4)));
    }
    int k = static_cast<int>(rng() % (V.n + 1));
    fq::Matrix rows(V.F, k, V.n);
    for (auto& x : rows.a) x = static_cast<fq::Elem>(rng() % V.F->q());
    auto W = k ? fq::Subspace::span(rows) : fq::Subspace::zero(V.F, V.n);
    auto ext = fq::extend_to_nondegenerate(V, W);
    if (!fq::check_extension(V, W, ext).all()) ++bad;
  }
  return {bad == 0, "1000 subspaces, " + std::to_string(bad) + " failures"};
}

Outcome c6(std::mt19937_64&) {
  std::string detail;
  bool ok = true;
  for (const char* name : {"A5", "A6", "PSL2_7", "PSL2_8"}) {
    auto spec = grp::named_group(name);
    auto t = grp::GroupTable::generate(spec.amb, spec.gens);
    bool closures = true, finite = true, product = true;
    double worst = 1e9;
    for (int c = 0; c < t.num_classes(); ++c) {
      int g = t.class_rep(c);
      if (g == t.identity()) continue;
      closures = closures && grp::normal_closure(t, g).count() == t.order();
      auto w = grp::conjugacy_width(t, g, true);
      finite = finite && w.bounded;
      if (w.bounded) {
        double v = w.m * grp::conj_length_element(t, g);
        worst = std::min(worst, v);
        product = product && v >= 1 - 1e-12;
      }
    }
    bool ore = grp::ore_check(t, grp::NormalSet::whole(t)).ok;
    int k1 = grp::mutual_domination(t, true), k2 = grp::mutual_domination(t, true);
    bool g_ok = closures && finite && product && ore && k1 == k2 && k1 > 0;
    ok = ok && g_ok;
    detail += std::string(detail.empty() ? "" : "; ") + name + (g_ok ? " ok" : " FAILED") + " k=" + std::to_string(k1) +
              " min width*ell_c=" + fmt("%.3f", worst);
  }
  return {ok, detail};
}

Outcome c7(std::mt19937_64&) {
  std::vector<std::pair<lie::RootType, int>> systems;
  for (int r = 1; r <= 8; ++r) systems.push_back({lie::RootType::A, r});
  for (int r = 2; r <= 8; ++r) systems.push_back({lie::RootType::B, r});
  for (int r = 2; r <= 8; ++r) systems.push_back({lie::RootType::C, r});
  for (int r = 4; r <= 8; ++r) systems.push_back({lie::RootType::D, r});
  systems.push_back({lie::RootType::F4, 4});
  systems.push_back({lie::RootType::G2, 2});
  std::set<Rat> mus;
  int bad = 0;
  std::string first;
  for (auto [type, r] : systems) {
    auto rs = lie::build_root_system(type, r);
    auto rep = lie::check_root_combinations(rs);
    if (!rep.ok() || !lie::verify_root_system(rs).all()) {
      ++bad;
      if (first.empty()) first = lie::type_name(type) + std::to_string(r) + ": " + rep.first_failure;
    }
    mus.insert(rep.mus.begin(), rep.mus.end());
  }
  std::set<Rat> want{Rat(1, 3), Rat(-1, 3), Rat(1, 2), Rat(-1, 2), Rat(1), Rat(-1)};
  std::string got;
  for (const auto& m : mus) got += (got.empty() ? "" : " ") + rat_str(m);
  bool ok = bad == 0 && mus == want;
  return {ok, std::to_string(systems.size()) + " systems, " + std::to_string(bad) + " failures, coefficients {" + got + "}" +
                  (first.empty() ? "" : ", first: " + first)};
}

lie::TorusElement random_typeA(int rank, int den, std::mt19937_64& rng) {
  std::vector<Rat> a;
  Rat s = 0;
  for (int i = 0; i < rank; ++i) {
    a.push_back(norm_angle(Rat(static_cast<long long>(rng() % (2 * den)) - den + 1, den)));
    s += a.back();
  }
  a.push_back(norm_angle(-s));
  return lie::TorusElement::make(lie::RootType::A, rank, a);
}

Outcome c8(std::mt19937_64& rng) {
  int su2_bad = 0, a_bad = 0, a_central = 0, lr_bad = 0;
  double su2_err = 0, a_err = 0;
  for (int s = 0; s < 1000;) {
    int m = 2 * (1 + static_cast<int>(rng() % 3));
    Rat th(static_cast<long long>(rng() % 96) - 47, 48), tg(static_cast<long long>(rng() % 96) - 47, 48);
    Rat ah = abs_angle(th);
    if (abs_angle(tg) > std::min(ah, Rat(1) - ah) * m) continue;
    ++s;
    auto c = lie::su2_decompose(tg, th, m);
    su2_err = std::max(su2_err, c.product_error);
    if (!(c.product_error < 1e-9) || c.count() > m) ++su2_bad;
  }
  for (int s = 0; s < 100;) {
    int r = 1 + static_cast<int>(rng() % 8), m = 2 * (1 + static_cast<int>(rng() % 3));
    auto h = random_typeA(r, 24, rng);
    auto g = random_typeA(r, 24 << (rng() % 4), rng);
    bool central = true;
    for (const auto& b : lie::root_values(h)) central = central && b == Rat(0);
    if (central || lie::lambda_of(g) > lie::lambda_of(h) * m) continue;
    ++s;
    auto c = lie::torus_decompose_typeA(g, h, m);
    a_err = std::max(a_err, c.product_error);
    if (!c.exact) ++a_central;
    if (!(c.product_error < 1e-8) || c.count() > 4LL * m * r * r) ++a_bad;
  }
  std::string lr;
  for (int r : {21, 25}) {
    auto h = random_typeA(r, 7, rng);
    auto fh = prof::profile_of(h);
    std::vector<lie::TorusElement> gs{h};
    for (int den = 8; gs.size() < 3 && den < (1 << 20); den *= 2) {
      auto g = random_typeA(r, den, rng);
      auto fg = prof::profile_of(g);
      bool hyp = true;
      for (int i = 0; i + 1 <= r; ++i) hyp = hyp && fg.at(i + 1) <= 2 * fh.at(i + 1) + 1e-12;
      if (hyp) gs.push_back(g);
    }
    for (const auto& g : gs)
      for (const char* strat : {"", "root-blocks"}) {
        auto c = lie::large_rank_decompose(g, h, 1, 2, strat);
        if (!(c.product_error < 1e-8) || c.count() > c.bound) ++lr_bad;
        lr += " r=" + std::to_string(r) + (*strat ? "/rb" : "") + ":" + std::to_string(c.count());
      }
  }
  bool ok = su2_bad == 0 && a_bad == 0 && lr_bad == 0;
  return {ok, "su2 " + std::to_string(su2_bad) + " bad (max err " + fmt("%.1e", su2_err) + "); typeA " +
                  std::to_string(a_bad) + " bad (max err " + fmt("%.1e", a_err) + ", " + std::to_string(a_central) +
                  " modulo center); large rank counts" + lr + " vs bound 288"};
}

Outcome c9(std::mt19937_64& rng) {
  using lie::RootType;
  const RootType types[] = {RootType::A, RootType::B, RootType::C, RootType::D};
  const char* names[] = {"SU", "SO(2n+1)", "Sp", "SO(2n)"};
  // lambda~ <= c1 ell1', ell1' <= c2 lambda~
  const double c1s[] = {2, 1, 1, 2}, c2s[] = {2, 6, 6, 6};
  bool ok = true;
  std::string detail;
  for (int ti = 0; ti < 4; ++ti) {
    int viol = 0;
    double r1 = 0, r2 = 0;
    for (int s = 0; s < 1000; ++s) {
      int rank = 2 + static_cast<int>(rng() % 7);
      lie::TorusElement t;
      if (types[ti] == RootType::A) {
        t = random_typeA(rank, 24, rng);
      } else {
        std::vector<Rat> a;
        for (int i = 0; i < rank; ++i) a.push_back(norm_angle(Rat(static_cast<long long>(rng() % 48) - 23, 24)));
        t = lie::TorusElement::make(types[ti], rank, a);
      }
      double L = to_double(lie::lambda_tilde(t, false).value);
      double E = lie::ell1_prime(lie::spectrum(t), rank);
      if (L > c1s[ti] * E + 1e-8) ++viol;
      if (E > c2s[ti] * L + 1e-8) ++viol;
      if (E > 0) r1 = std::max(r1, L / E);
      if (L > 0) r2 = std::max(r2, E / L);
    }
    ok = ok && viol == 0;
    detail += std::string(detail.empty() ? "" : "; ") + names[ti] + " " + std::to_string(viol) + " violations (max l~/l1' " +
              fmt("%.3f", r1) + ", max l1'/l~ " + fmt("%.3f", r2) + ")";
  }
  return {ok, detail};
}

prof::Monomial random_monomial(int n, std::mt19937_64& rng) {
  prof::Monomial m;
  m.perm.resize(n);
  for (int i = 0; i < n; ++i) m.perm[i] = i;
  std::shuffle(m.perm.begin(), m.perm.end(), rng);
  for (int i = 0; i < n; ++i) m.phases.push_back(Rat(static_cast<long long>(rng() % 2001) - 1000, 1000));
  return m;
}

Outcome c10(std::mt19937_64& rng) {
  long long checks = 0, viol = 0;
  double worst = -1e9;
  std::string first;
  for (int s = 0; s < 10000; ++s) {
    int n = 2 + static_cast<int>(rng() % 9);
    auto r = prof::kyfan_profile_check(random_monomial(n, rng), random_monomial(n, rng), {0.0, 0.5});
    checks += r.checks;
    viol += r.violations;
    worst = std::max(worst, r.worst_slack);
    if (r.violations && first.empty()) first = r.first_violation;
  }
  return {viol == 0, "10000 pairs, " + std::to_string(checks) + " inequalities, " + std::to_string(viol) +
                         " violations, max slack " + fmt("%.2e", worst) + (first.empty() ? "" : ", first: " + first)};
}

Outcome c11(std::mt19937_64&) {
  int bad_h = 0, bad_g = 0, bad_lh = 0, bad_lg = 0;
  std::string lh_sample, lg_sample;
  for (int n = 2; n <= 64; ++n) {
    auto [g, h] = lie::counterexample_family(n);
    if (lie::inf_rank_length(lie::spectrum(h)) != Rat(2, 2 * n + 1)) ++bad_h;
    if (lie::inf_rank_length(lie::spectrum(g)) != Rat(n + 1, 2 * n + 1)) ++bad_g;
    Rat lh = n <= 8 ? lie::lambda_tilde_bruteforce(h) : lie::lambda_tilde(h, false).value;
    Rat lg = n <= 8 ? lie::lambda_tilde_bruteforce(g) : lie::lambda_tilde(g, false).value;
    if (lh != Rat(4, 2 * n + 1)) ++bad_lh;
    if (lg > Rat(4, n * (2 * n + 1))) ++bad_lg;
    if (n == 3) {
      lh_sample = rat_str(lh);
      lg_sample = rat_str(lg);
    }
  }
  auto demo = prof::incomparability_demo(64, 64, 8);
  int open_gh = 0, open_hg = 0;
  for (const auto& r : demo.rows) {
    if (r.first_failing_n >= 0) continue;
    (r.direction == "g<=h" ? open_gh : open_hg)++;
  }
  bool ok = !bad_h && !bad_g && !bad_lh && !bad_lg && demo.all_fail_g_h && demo.all_fail_h_g;
  std::string d = "inf rank lengths: " + std::to_string(bad_h + bad_g) + " mismatches; lambda~(h_n) != 4/(2n+1) for " +
                  std::to_string(bad_lh) + " n (n=3: " + lh_sample + "); lambda~(g_n) > 4/(n(2n+1)) for " +
                  std::to_string(bad_lg) + " n (n=3: " + lg_sample + "); witnesses never failing by n=64: g<=h " +
                  std::to_string(open_gh) + ", h<=g " + std::to_string(open_hg) + " of " +
                  std::to_string(demo.rows.size() / 2);
  return {ok, d};
}

Outcome c12(std::mt19937_64& rng) {
  auto rand_profile = [&] {
    int len = static_cast<int>(rng() % 9);
    std::vector<double> v;
    for (int i = 0; i < len; ++i) v.push_back(static_cast<double>(rng() % 17) / 16);
    std::sort(v.rbegin(), v.rend());
    return prof::profile_from_values(v, 8);
  };
  long long dist_bad = 0;
  for (int s = 0; s < 100000; ++s) {
    auto F = rand_profile(), G = rand_profile(), H = rand_profile();
    using namespace prof;
    if (profile_meet(F, profile_join(G, H)).values != profile_join(profile_meet(F, G), profile_meet(F, H)).values) ++dist_bad;
    if (profile_join(F, profile_meet(G, H)).values != profile_meet(profile_join(F, G), profile_join(F, H)).values) ++dist_bad;
  }
  int trip_bad = 0;
  for (int s = 0; s < 500; ++s) {
    int r = 1 + static_cast<int>(rng() % 8);
    auto t = random_typeA(r, 12, rng);
    auto p = prof::profile_of(t);
    try {
      auto back = prof::realize_profile(p, lie::RootType::A, r);
      if (prof::profile_of(back).angles != p.angles) ++trip_bad;
    } catch (const Error&) {
      ++trip_bad;
    }
  }
  auto lattice_of = [](const char* name) {
    auto spec = grp::named_group(name);
    auto t = grp::GroupTable::generate(spec.amb, spec.gens);
    return grp::normal_lattice_analyze(t);
  };
  auto s4 = lattice_of("S4");
  std::vector<int> s4_orders;
  for (const auto& x : s4.subgroups) s4_orders.push_back(x.count());
  bool s4_ok = s4.is_chain && s4_orders == std::vector<int>{1, 4, 12, 24};
  int simple_bad = 0;
  for (const char* name : {"A5", "A6", "PSL2_7", "PSL2_8"}) {
    auto L = lattice_of(name);
    if (L.size() != 2 || !L.is_chain) ++simple_bad;
  }
  bool ok = dist_bad == 0 && trip_bad == 0 && s4_ok && simple_bad == 0;
  return {ok, "distributivity " + std::to_string(dist_bad) + " failures; round trips " + std::to_string(trip_bad) +
                  " failures of 500; S4 chain " + (s4_ok ? "ok" : "FAILED") + "; simple groups not lattice 2: " +
                  std::to_string(simple_bad)};
}

Outcome c13(std::mt19937_64& rng) {
  long long parts = 0, bad = 0;
  for (int n : {6, 9, 12})
    for (const auto& b : color::all_partitions(n, 3)) {
      ++parts;
      try {
        if (!color::verify_strong_coloring(n, b, 3, color::strong_color_cycle(n, b, 3))) ++bad;
      } catch (const Error&) {
        ++bad;
      }
    }
  long long split_bad = 0;
  for (int s = 0; s < 1000; ++s) {
    int n = 3 * (1 + static_cast<int>(rng() % 1000));
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i + 1;
    std::shuffle(sigma.begin(), sigma.end(), rng);
    try {
      auto ps = color::partition_permutation(sigma, 3);
      if (*color::verify_split(ps)) ++split_bad;
    } catch (const Error&) {
      ++split_bad;
    }
  }
  return {bad == 0 && split_bad == 0, std::to_string(parts) + " partitions, " + std::to_string(bad) +
                                          " uncolored; 1000 permutations, " + std::to_string(split_bad) + " bad splits"};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> v = {
      {"length-sandwich", 5, c1},     {"class-size", 30, c2},       {"asymptotic-lengths", 60, c3},
      {"jordan-length", 60, c4},      {"geometry", 30, c5},         {"width-ore", 300, c6},
      {"root-combinations", 10, c7},  {"decomposition", 300, c8},   {"lambda-constants", 120, c9},
      {"kyfan", 120, c10},            {"counterexample", 60, c11},  {"lattice", 60, c12},
      {"strong-coloring", 120, c13},
  };
  return v;
}

}  // namespace

std::string criterion_name(int id) {
  if (id < 1 || id > kCriteria) fail(Errc::IndexOutOfRange, "no criterion " + std::to_string(id));
  return criteria()[id - 1].name;
}

std::vector<int> select(const std::string& filter) {
  std::vector<int> out;
  if (filter.empty()) {
    for (int i = 1; i <= kCriteria; ++i) out.push_back(i);
    return out;
  }
  std::set<int> picked;
  std::stringstream ss(filter);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    bool numeric = std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; });
    for (int i = 1; i <= kCriteria; ++i)
      if (numeric ? std::to_string(i) == item : std::string(criteria()[i - 1].name).find(item) != std::string::npos)
        picked.insert(i);
  }
  return {picked.begin(), picked.end()};
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
  const auto& c = criteria().at(static_cast<size_t>(id - 1));
  CriterionResult r;
  r.id = id;
  r.name = c.name;
  r.limit = c.limit;
  // Each criterion gets its own stream so a subset reproduces the full run.
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(id) * 0x9E3779B97F4A7C15ULL);
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.fn(rng);
  } catch (const Error& e) {
    o = {false, std::string("error ") + errc_name(e.code()) + ": " + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.in_time = r.seconds <= r.limit;
  r.pass = o.ok && r.in_time;
  r.detail = o.detail + (r.in_time ? "" : "; time limit exceeded");
  return r;
}

std::string format_line(const CriterionResult& r) {
  char t[64];
  std::snprintf(t, sizeof t, "%.2fs/%.0fs", r.seconds, r.limit);
  return "criterion " + std::to_string(r.id) + " " + r.name + ": " + (r.pass ? "PASS" : "FAIL") + " [" + t + "] " + r.detail;
}

}  // namespace ul::acc
