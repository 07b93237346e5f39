#include "ultralen/lab.hpp"

#include "ultralen/acceptance.hpp"
#include "ultralen/coloring.hpp"
#include "ultralen/decompose.hpp"
#include "ultralen/errors.hpp"
#include "ultralen/fq.hpp"
#include "ultralen/group.hpp"
#include "ultralen/profile.hpp"
#include "ultralen/roots.hpp"
#include "ultralen/su2.hpp"
#include "ultralen/sym.hpp"
#include "ultralen/torus.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace ul::lab {

using Json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

long long to_ll(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    long long x = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    fail(Errc::ConfigInvalid, "key " + key + ": not an integer: " + v);
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!trim(item).empty()) out.push_back(trim(item));
  return out;
}

std::vector<Rat> angle_list(const Config& c, const std::string& key) {
  std::vector<Rat> out;
  for (const auto& s : split(c.str(key, ""), ',')) {
    try {
      out.push_back(parse_rat(s));
    } catch (const Error&) {
      fail(Errc::ConfigInvalid, "key " + key + ": bad angle " + s);
    }
  }
  return out;
}

std::string header_line(const std::string& name, const Config& c, std::uint64_t seed) {
  std::string s = "# experiment=" + name + " schema_version=" + std::to_string(kSchemaVersion) + " seed=" + std::to_string(seed);
  for (const auto& [k, v] : c.kv)
    if (k != "seed" && k != "out" && k != "format") s += " " + k + "=" + v;
  return s + "\n";
}

Json json_head(const std::string& name, const Config& c, std::uint64_t seed) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["experiment"] = name;
  j["seed"] = seed;
  Json cfg = Json::object();
  for (const auto& [k, v] : c.kv)
    if (k != "out" && k != "format") cfg[k] = v;
  j["config"] = cfg;
  return j;
}

std::pair<int, int> prime_power(long long q) {
  for (int p = 2; p <= q; ++p) {
    if (q % p) continue;
    int e = 0;
    long long x = q;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    if (x != 1) fail(Errc::ConfigInvalid, "q is not a prime power");
    return {p, e};
  }
  fail(Errc::ConfigInvalid, "q must be at least 2");
}

fq::Matrix random_invertible(const fq::FieldPtr& F, int n, std::mt19937_64& rng) {
  for (;;) {
    fq::Matrix m(F, n, n);
    for (auto& x : m.a) x = static_cast<fq::Elem>(rng() % F->q());
    if (fq::invertible(m)) return m;
  }
}

lie::TorusElement torus_from(const Config& c, const std::string& key, const std::string& type_key) {
  auto a = angle_list(c, key);
  if (a.empty()) fail(Errc::ConfigInvalid, "key " + key + " is required");
  lie::RootType t = lie::parse_type(c.str(type_key, "A"));
  int rank = t == lie::RootType::A ? static_cast<int>(a.size()) - 1 : static_cast<int>(a.size());
  return lie::TorusElement::make(t, rank, a);
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

std::vector<std::string> rat_strs(const std::vector<Rat>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(rat_str(x));
  return out;
}

Json cert_json(const lie::DecompositionCertificate& c) {
  Json j;
  j["g"] = rat_strs(c.g.angles);
  j["h"] = rat_strs(c.h.angles);
  j["m"] = c.m;
  if (c.k) j["k"] = c.k;
  j["count"] = c.count();
  j["bound"] = c.bound;
  j["within_bound"] = c.within_bound;
  j["exact"] = c.exact;
  j["central_angle"] = rat_str(c.central_angle);
  j["strategy"] = c.strategy;
  j["product_error"] = c.product_error;
  Json fs = Json::array();
  for (const auto& f : c.factors) {
    Json fj;
    fj["sign"] = f.sign;
    fj["left"] = f.left;
    if (!f.right.empty()) fj["right"] = f.right;
    Json bs = Json::array();
    for (const auto& b : f.blocks) bs.push_back({{"t", b.t}, {"q", {b.q.w, b.q.x, b.q.y, b.q.z}}});
    fj["blocks"] = bs;
    fs.push_back(fj);
  }
  j["factors"] = fs;
  if (c.book) {
    const auto& b = *c.book;
    Json bj;
    bj["K"] = b.K;
    bj["N"] = b.N;
    bj["sigma"] = b.sigma;
    bj["tau"] = b.tau;
    bj["A"] = b.A;
    bj["B"] = {b.B[0], b.B[1], b.B[2]};
    Json cj = Json::array();
    for (const auto& cl : b.C) cj.push_back({cl[0], cl[1], cl[2]});
    bj["C"] = cj;
    bj["leftovers"] = b.leftovers;
    j["bookkeeping"] = bj;
  }
  return j;
}

Report finish_json(Json j, bool ok) {
  j["ok"] = ok;
  return {j.dump(2) + "\n", "json", ok};
}

struct Experiment {
  std::set<std::string> keys;
  std::function<Report(const std::string&, const Config&)> fn;
};

Report sym_lengths(const std::string& name, const Config& c) {
  auto [lo, hi] = c.range("n", {1, 12});
  if (lo < 1 || hi > 200 || lo > hi) fail(Errc::ConfigInvalid, "n must be a range within 1..200");
  std::string amb = c.str("ambient", "S");
  if (amb != "S" && amb != "A") fail(Errc::ConfigInvalid, "ambient must be S or A");
  bool conj = c.flag("conj", true);
  std::string out = header_line(name, c, 0) + sym::csv_header() + "\n";
  auto s = sym::comparison_report(lo, hi, amb == "S" ? sym::Ambient::Sym : sym::Ambient::Alt,
                                  [&](const sym::ReportRow& r) { out += sym::csv_row(r) + "\n"; }, conj);
  bool ok = s.exact_violations == 0 && s.asym_violations == 0;
  if (c.str("format", "csv") == "json") {
    Json j = json_head(name, c, 0);
    j["rows"] = s.rows;
    j["exact_violations"] = s.exact_violations;
    j["asym_violations"] = s.asym_violations;
    j["asym_info_below_threshold"] = s.asym_info_below_threshold;
    j["max_ratio_H_over_r"] = s.max_ratio_H_over_r;
    j["max_ratio_c_over_H"] = s.max_ratio_c_over_H;
    j["max_ratio_H_over_c"] = s.max_ratio_H_over_c;
    return finish_json(j, ok);
  }
  return {out, "csv", ok};
}

Report linear_lengths(const std::string& name, const Config& c) {
  auto seed = c.seed(1);
  long long q = c.integer("q", 3), n = c.integer("n", 3), samples = c.integer("samples", 100);
  if (n < 1 || n > 12 || samples < 0 || samples > 1000000) fail(Errc::ConfigInvalid, "n or samples out of range");
  auto [p, e] = prime_power(q);
  auto F = fq::Field::make(p, e);
  std::mt19937_64 rng(seed);
  std::string out = header_line(name, c, seed) + "sample,q,n,ell_r,ell_J,le,eq_when_small,lower\n";
  bool ok = true;
  for (long long s = 0; s < samples; ++s) {
    auto g = random_invertible(F, static_cast<int>(n), rng);
    Rat r = fq::rank_length_mat(g), J = fq::jordan_length(g).value;
    bool le = J <= r, eq = r > Rat(1, 2) || J == r, lower = J >= std::min(r, Rat(1) - r);
    ok = ok && le && eq && lower;
    out += std::to_string(s) + "," + std::to_string(q) + "," + std::to_string(n) + "," + rat_str(r) + "," + rat_str(J) + "," +
           (le ? "1" : "0") + "," + (eq ? "1" : "0") + "," + (lower ? "1" : "0") + "\n";
  }
  return {out, "csv", ok};
}

grp::GroupTable group_from(const Config& c) {
  auto spec = grp::named_group(c.str("group", "A5"));
  return grp::GroupTable::generate(spec.amb, spec.gens, c.integer("cap", 100000));
}

Report width(const std::string& name, const Config& c) {
  auto t = group_from(c);
  bool symmetric = c.flag("symmetric", true);
  Json j = json_head(name, c, 0);
  j["order"] = t.order();
  Json rows = Json::array();
  bool ok = true;
  for (int k = 0; k < t.num_classes(); ++k) {
    int g = t.class_rep(k);
    if (g == t.identity()) continue;
    auto w = grp::conjugacy_width(t, g, symmetric);
    double lc = grp::conj_length_element(t, g);
    Json r;
    r["class"] = k;
    r["size"] = t.class_size(k);
    r["bounded"] = w.bounded;
    r["width"] = w.bounded ? Json(w.m) : Json(nullptr);
    r["ell_c"] = lc;
    if (w.bounded) {
      r["width_times_ell_c"] = w.m * lc;
      ok = ok && w.m * lc >= 1 - 1e-12;
    }
    rows.push_back(r);
  }
  j["classes"] = rows;
  j["mutual_domination"] = grp::mutual_domination(t, symmetric);
  return finish_json(j, ok);
}

Report ore_check(const std::string& name, const Config& c) {
  auto t = group_from(c);
  auto r = grp::ore_check(t, grp::NormalSet::whole(t));
  Json j = json_head(name, c, 0);
  j["order"] = t.order();
  j["every_element_a_commutator"] = r.ok;
  if (!r.ok) j["counterexample"] = r.counterexample;
  return finish_json(j, r.ok);
}

Report lattice(const std::string& name, const Config& c) {
  auto t = group_from(c);
  auto L = grp::normal_lattice_analyze(t, static_cast<int>(c.integer("max-order", 2000)));
  Json j = json_head(name, c, 0);
  j["order"] = t.order();
  std::vector<int> orders;
  for (const auto& s : L.subgroups) orders.push_back(s.count());
  j["normal_subgroup_orders"] = orders;
  j["hasse"] = L.hasse;
  j["is_chain"] = L.is_chain;
  j["is_modular"] = L.is_modular;
  j["is_distributive"] = L.is_distributive;
  j["closures_chain"] = L.closures_chain;
  j["chain_equivalence"] = L.chain_equivalence;
  return finish_json(j, L.is_modular && L.chain_equivalence);
}

Report root_check(const std::string& name, const Config& c) {
  auto rs = lie::build_root_system(lie::parse_type(c.str("type", "G2")), static_cast<int>(c.integer("rank", 2)));
  auto v = lie::verify_root_system(rs);
  auto r = lie::check_root_combinations(rs);
  Json j = json_head(name, c, 0);
  j["roots"] = rs.roots.size();
  j["structure_ok"] = v.all();
  j["equal_lengths"] = r.equal_lengths;
  j["long_roots"] = r.long_roots;
  j["short_roots"] = r.short_roots;
  j["long_as_short_sum"] = r.long_as_short_sum;
  j["short_as_long_comb"] = r.short_as_long_comb;
  j["mus"] = rat_strs(r.mus);
  j["mus_allowed"] = r.mus_allowed;
  if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
  return finish_json(j, v.all() && r.ok());
}

Report su2(const std::string& name, const Config& c) {
  Rat tg = parse_rat(c.str("theta-g", "1")), th = parse_rat(c.str("theta-h", "1/2"));
  int m = static_cast<int>(c.integer("m", 2));
  auto cert = lie::su2_decompose(tg, th, m);
  Json j = json_head(name, c, 0);
  j["theta_g"] = rat_str(cert.theta_g);
  j["theta_h"] = rat_str(cert.theta_h);
  j["m"] = m;
  j["count"] = cert.count();
  Json xs = Json::array();
  for (const auto& q : cert.conjugators) xs.push_back({q.w, q.x, q.y, q.z});
  j["conjugators"] = xs;
  j["signs"] = cert.signs;
  j["product_error"] = cert.product_error;
  return finish_json(j, cert.product_error < 1e-9 && cert.count() <= m);
}

Report torus_decompose(const std::string& name, const Config& c) {
  auto g = torus_from(c, "g", "type"), h = torus_from(c, "h", "type");
  auto cert = lie::torus_decompose_typeA(g, h, static_cast<int>(c.integer("m", 2)));
  Json j = json_head(name, c, 0);
  j["certificate"] = cert_json(cert);
  return finish_json(j, cert.product_error < 1e-8 && cert.within_bound);
}

Report large_rank(const std::string& name, const Config& c) {
  auto seed = c.seed(1);
  std::mt19937_64 rng(seed);
  int k = static_cast<int>(c.integer("k", 1)), m = static_cast<int>(c.integer("m", 2));
  int rank = static_cast<int>(c.integer("rank", 25));
  if (rank < 2 || rank > 400) fail(Errc::ConfigInvalid, "rank out of range");
  lie::TorusElement h = c.has("h") ? torus_from(c, "h", "type") : random_typeA(rank, 7, rng);
  lie::TorusElement g = h;
  if (c.has("g")) {
    g = torus_from(c, "g", "type");
  } else {
    // Random candidates with shrinking angles until the profile hypothesis holds.
    auto fh = prof::profile_of(h);
    for (int den = 8; den < (1 << 20); den *= 2) {
      auto cand = random_typeA(h.rank, den, rng);
      auto fg = prof::profile_of(cand);
      bool okh = true;
      for (int i = 0; k * i + 1 <= h.rank; ++i) okh = okh && fg.at(k * i + 1) <= m * fh.at(i + 1) + 1e-12;
      if (okh) {
        g = cand;
        break;
      }
    }
  }
  auto cert = lie::large_rank_decompose(g, h, k, m, c.str("strategy", ""));
  Json j = json_head(name, c, seed);
  j["certificate"] = cert_json(cert);
  return finish_json(j, cert.product_error < 1e-8 && cert.within_bound);
}

Report profile_order(const std::string& name, const Config& c) {
  auto g = torus_from(c, "g", "type"), h = torus_from(c, "h", "type");
  int cmax = static_cast<int>(c.integer("c-max", 64)), kmax = static_cast<int>(c.integer("k-max", 8));
  auto fg = prof::profile_of(g), fh = prof::profile_of(h);
  prof::ProfileSequence sg{0, {fg}}, sh{0, {fh}};
  Json j = json_head(name, c, 0);
  j["F_g"] = fg.values;
  j["F_h"] = fh.values;
  auto put = [&](const char* key, const std::optional<prof::OrderWitness>& w) {
    j[key] = w ? Json{{"c", w->c}, {"k", w->k}} : Json(nullptr);
  };
  put("g_below_h", prof::precede_search(sg, sh, cmax, kmax));
  put("h_below_g", prof::precede_search(sh, sg, cmax, kmax));
  return finish_json(j, true);
}

prof::Monomial random_monomial(int n, std::mt19937_64& rng) {
  prof::Monomial m;
  m.perm.resize(n);
  for (int i = 0; i < n; ++i) m.perm[i] = i;
  std::shuffle(m.perm.begin(), m.perm.end(), rng);
  for (int i = 0; i < n; ++i) m.phases.push_back(Rat(static_cast<long long>(rng() % 2001) - 1000, 1000));
  return m;
}

Report kyfan(const std::string& name, const Config& c) {
  auto seed = c.seed(1);
  long long samples = c.integer("samples", 1000), nmax = c.integer("n-max", 10);
  if (nmax < 2 || nmax > 40 || samples < 0) fail(Errc::ConfigInvalid, "n-max or samples out of range");
  std::mt19937_64 rng(seed);
  std::string out = header_line(name, c, seed) + "sample,n,checks,violations,worst_slack\n";
  bool ok = true;
  for (long long s = 0; s < samples; ++s) {
    int n = 2 + static_cast<int>(rng() % (nmax - 1));
    auto g = random_monomial(n, rng), h = random_monomial(n, rng);
    auto r = prof::kyfan_profile_check(g, h, {0.0, 0.5, -0.25});
    ok = ok && r.violations == 0;
    std::ostringstream line;
    line << s << "," << n << "," << r.checks << "," << r.violations << "," << r.worst_slack << "\n";
    out += line.str();
  }
  return {out, "csv", ok};
}

Report counterexample(const std::string& name, const Config& c) {
  int nmax = static_cast<int>(c.integer("n-max", 64));
  int cmax = 64, kmax = 8;
  for (const auto& part : split(c.str("grid", "c=64,k=8"), ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) fail(Errc::ConfigInvalid, "grid entries look like c=64");
    std::string k = part.substr(0, eq);
    long long v = to_ll("grid", part.substr(eq + 1));
    if (k == "c") cmax = static_cast<int>(v);
    else if (k == "k") kmax = static_cast<int>(v);
    else fail(Errc::ConfigInvalid, "grid key must be c or k");
  }
  if (nmax < 2 || nmax > 512 || cmax < 1 || kmax < 1) fail(Errc::ConfigInvalid, "grid out of range");
  auto rep = prof::incomparability_demo(nmax, cmax, kmax);
  bool ok = rep.all_fail_g_h && rep.all_fail_h_g;
  if (c.str("format", "csv") == "json") {
    Json j = json_head(name, c, 0);
    Json rows = Json::array();
    for (const auto& r : rep.rows)
      rows.push_back({{"direction", r.direction}, {"c", r.c}, {"k", r.k}, {"first_failing_n", r.first_failing_n}});
    j["rows"] = rows;
    Json per_n = Json::array();
    for (int n = 2; n <= nmax; ++n) {
      auto [g, h] = lie::counterexample_family(n);
      per_n.push_back({{"n", n},
                       {"inf_rank_length_h", rat_str(lie::inf_rank_length(lie::spectrum(h)))},
                       {"inf_rank_length_g", rat_str(lie::inf_rank_length(lie::spectrum(g)))}});
    }
    j["rank_lengths"] = per_n;
    j["all_fail_g_h"] = rep.all_fail_g_h;
    j["all_fail_h_g"] = rep.all_fail_h_g;
    return finish_json(j, ok);
  }
  std::string out = header_line(name, c, 0) + "direction,c,k,first_failing_n\n";
  for (const auto& r : rep.rows)
    out += r.direction + "," + std::to_string(r.c) + "," + std::to_string(r.k) + "," + std::to_string(r.first_failing_n) + "\n";
  return {out, "csv", ok};
}

Report strong_color(const std::string& name, const Config& c) {
  auto seed = c.seed(1);
  std::mt19937_64 rng(seed);
  int n = static_cast<int>(c.integer("n", 12)), s = static_cast<int>(c.integer("s", 3));
  std::string mode = c.str("mode", "random");
  if (n < 1 || n > 100000 || s < 3 || s > 31) fail(Errc::ConfigInvalid, "n or s out of range");
  std::string out = header_line(name, c, seed) + "sample,n,nodes,ok\n";
  bool ok = true;
  auto one = [&](long long idx, const color::Blocks& b) {
    color::ColoringStats st;
    auto col = color::strong_color_cycle(n, b, s, 10000000, &st);
    bool good = color::verify_strong_coloring(n, b, s, col);
    ok = ok && good;
    out += std::to_string(idx) + "," + std::to_string(n) + "," + std::to_string(st.nodes) + "," + (good ? "1" : "0") + "\n";
  };
  if (mode == "exhaustive") {
    if (n % s || n > 15) fail(Errc::ConfigInvalid, "exhaustive mode needs n divisible by s and n <= 15");
    long long i = 0;
    for (const auto& b : color::all_partitions(n, s)) one(i++, b);
  } else if (mode == "random") {
    long long samples = c.integer("samples", 10);
    int np = (n + s - 1) / s * s;
    for (long long i = 0; i < samples; ++i) {
      std::vector<int> v(np);
      for (int a = 0; a < np; ++a) v[a] = a + 1;
      std::shuffle(v.begin(), v.end(), rng);
      color::Blocks b;
      for (int a = 0; a < np; a += s) b.emplace_back(v.begin() + a, v.begin() + a + s);
      one(i, b);
    }
  } else {
    fail(Errc::ConfigInvalid, "mode must be random or exhaustive");
  }
  return {out, "csv", ok};
}

Report acceptance(const std::string&, const Config& c) {
  auto seed = c.seed(acc::kDefaultSeed);
  std::string filter = c.str("filter", "");
  std::string out = "# acceptance seed=" + std::to_string(seed) + "\n";
  bool ok = true;
  for (int id : acc::select(filter)) {
    auto r = acc::run_criterion(id, seed);
    ok = ok && r.pass;
    out += acc::format_line(r) + "\n";
  }
  return {out, "text", ok};
}

const std::map<std::string, Experiment>& registry() {
  static const std::map<std::string, Experiment> r = {
      {"sym-lengths", {{"n", "ambient", "conj"}, sym_lengths}},
      {"linear-lengths", {{"q", "n", "samples", "seed"}, linear_lengths}},
      {"width", {{"group", "symmetric", "cap"}, width}},
      {"ore-check", {{"group", "cap"}, ore_check}},
      {"lattice", {{"group", "cap", "max-order"}, lattice}},
      {"root-check", {{"type", "rank"}, root_check}},
      {"su2-decompose", {{"theta-g", "theta-h", "m"}, su2}},
      {"torus-decompose", {{"g", "h", "m", "type"}, torus_decompose}},
      {"large-rank", {{"g", "h", "k", "m", "rank", "seed", "type", "strategy"}, large_rank}},
      {"profile-order", {{"g", "h", "type", "c-max", "k-max"}, profile_order}},
      {"kyfan", {{"samples", "n-max", "seed"}, kyfan}},
      {"counterexample", {{"n-max", "grid"}, counterexample}},
      {"strong-color", {{"n", "s", "mode", "samples", "seed"}, strong_color}},
      {"acceptance", {{"filter", "seed"}, acceptance}},
  };
  return r;
}

}  // namespace

Config Config::parse(const std::string& text) {
  Config c;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0) fail(Errc::ConfigInvalid, "line " + std::to_string(lineno) + ": expected key=value");
    c.kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return c;
}

void Config::merge(const Config& o) {
  for (const auto& [k, v] : o.kv) kv[k] = v;
}

std::string Config::str(const std::string& k, const std::string& def) const {
  auto it = kv.find(k);
  return it == kv.end() ? def : it->second;
}

long long Config::integer(const std::string& k, long long def) const {
  auto it = kv.find(k);
  return it == kv.end() ? def : to_ll(k, it->second);
}

std::uint64_t Config::seed(std::uint64_t def) const {
  auto it = kv.find("seed");
  if (it == kv.end()) return def;
  try {
    size_t pos = 0;
    auto v = std::stoull(it->second, &pos, 0);
    if (pos != it->second.size()) throw std::invalid_argument(it->second);
    return v;
  } catch (const std::exception&) {
    fail(Errc::ConfigInvalid, "seed must be an unsigned 64-bit integer");
  }
}

bool Config::flag(const std::string& k, bool def) const {
  auto it = kv.find(k);
  if (it == kv.end()) return def;
  if (it->second == "true" || it->second == "1" || it->second == "yes") return true;
  if (it->second == "false" || it->second == "0" || it->second == "no") return false;
  fail(Errc::ConfigInvalid, "key " + k + ": expected true or false");
}

std::pair<int, int> Config::range(const std::string& k, std::pair<int, int> def) const {
  auto it = kv.find(k);
  if (it == kv.end()) return def;
  auto dots = it->second.find("..");
  if (dots == std::string::npos) {
    int v = static_cast<int>(to_ll(k, it->second));
    return {v, v};
  }
  return {static_cast<int>(to_ll(k, it->second.substr(0, dots))), static_cast<int>(to_ll(k, it->second.substr(dots + 2)))};
}

std::string certificate_json(const lie::DecompositionCertificate& c) { return cert_json(c).dump(2); }

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, e] : registry()) v.push_back(k);
    return v;
  }();
  return names;
}

Report run(const std::string& name, const Config& cfg) {
  auto it = registry().find(name);
  if (it == registry().end()) fail(Errc::ConfigInvalid, "unknown experiment " + name);
  for (const auto& [k, v] : cfg.kv)
    if (k != "format" && k != "out" && !it->second.keys.count(k)) fail(Errc::ConfigInvalid, "unknown key " + k + " for " + name);
  std::string fmt = cfg.str("format", "");
  if (!fmt.empty() && fmt != "csv" && fmt != "json") fail(Errc::ConfigInvalid, "format must be csv or json");
  return it->second.fn(name, cfg);
}

}  // namespace ul::lab
