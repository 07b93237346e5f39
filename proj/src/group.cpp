#include "ultralen/group.hpp"

#include "ultralen/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <set>

namespace ul::grp {

size_t KeyHash::operator()(const Key& k) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : k) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

Key Ambient::identity() const {
  if (kind == Kind::Perm) {
    Key k(degree);
    for (int i = 0; i < degree; ++i) k[i] = i;
    return k;
  }
  return from_matrix(fq::Matrix::identity(field, degree));
}

Key Ambient::mul(const Key& a, const Key& b) const {
  if (kind == Kind::Perm) {
    Key r(degree);
    for (int i = 0; i < degree; ++i) r[i] = a[b[i]];
    return r;
  }
  const fq::Field& F = *field;
  int n = degree;
  Key r(size_t(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      fq::Elem x = a[i * n + k];
      if (!x) continue;
      for (int j = 0; j < n; ++j) r[i * n + j] = F.add(r[i * n + j], F.mul(x, b[k * n + j]));
    }
  return r;
}

Key Ambient::inv(const Key& a) const {
  if (kind == Kind::Perm) {
    Key r(degree);
    for (int i = 0; i < degree; ++i) r[a[i]] = i;
    return r;
  }
  return from_matrix(fq::inverse(to_matrix(a)));
}

fq::Matrix Ambient::to_matrix(const Key& k) const {
  if (kind != Kind::MatFq) fail(Errc::InvalidArgument, "not a matrix group");
  fq::Matrix m(field, degree, degree);
  for (size_t i = 0; i < k.size(); ++i) m.a[i] = k[i];
  return m;
}

Key Ambient::from_matrix(const fq::Matrix& m) const { return Key(m.a.begin(), m.a.end()); }

GroupTable GroupTable::generate(const Ambient& amb, const std::vector<Key>& gens, long long cap) {
  GroupTable t;
  t.amb_ = amb;
  size_t keylen = amb.kind == Kind::Perm ? size_t(amb.degree) : size_t(amb.degree) * amb.degree;
  for (const Key& g : gens)
    if (g.size() != keylen) fail(Errc::InvalidArgument, "generator size does not match the ambient group");
  Key id = amb.identity();
  t.elems_.push_back(id);
  t.index_.emplace(id, 0);
  for (size_t head = 0; head < t.elems_.size(); ++head) {
    for (const Key& g : gens) {
      Key x = amb.mul(t.elems_[head], g);
      if (t.index_.count(x)) continue;
      if (static_cast<long long>(t.elems_.size()) >= cap)
        fail(Errc::CapExceeded, "group order exceeds cap " + std::to_string(cap));
      t.index_.emplace(x, static_cast<int>(t.elems_.size()));
      t.elems_.push_back(std::move(x));
    }
  }
  for (const Key& g : gens) t.gens_.push_back(t.index_.at(g));
  int n = t.order();
  t.inv_.resize(n);
  for (int i = 0; i < n; ++i) t.inv_[i] = t.index_.at(amb.inv(t.elems_[i]));
  if (n <= 2048) {
    t.table_.resize(size_t(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t.table_[size_t(i) * n + j] = t.index_.at(amb.mul(t.elems_[i], t.elems_[j]));
  }
  t.build_classes();
  return t;
}

int GroupTable::index_of(const Key& k) const {
  auto it = index_.find(k);
  return it == index_.end() ? -1 : it->second;
}

int GroupTable::mul(int a, int b) const {
  if (!table_.empty()) return table_[size_t(a) * order() + b];
  return index_.at(amb_.mul(elems_[a], elems_[b]));
}

void GroupTable::build_classes() {
  int n = order();
  class_of_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (class_of_[x] >= 0) continue;
    int c = static_cast<int>(classes_.size());
    std::vector<int> orbit{x};
    class_of_[x] = c;
    for (size_t h = 0; h < orbit.size(); ++h)
      for (int g : gens_) {
        int y = conj(orbit[h], g);
        if (class_of_[y] < 0) {
          class_of_[y] = c;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    classes_.push_back(std::move(orbit));
  }
}

bool GroupTable::verify_axioms(std::mt19937_64& rng, int samples) const {
  std::uniform_int_distribution<int> d(0, order() - 1);
  for (int s = 0; s < samples; ++s) {
    int a = d(rng), b = d(rng), c = d(rng);
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  }
  for (int i = 0; i < order(); ++i)
    if (mul(i, inv_[i]) != 0 || mul(inv_[i], i) != 0) return false;
  return true;
}

NormalSet NormalSet::of_class(const GroupTable& t, int c) {
  NormalSet s(t.order());
  for (int x : t.class_members(c)) s.set(x);
  return s;
}

NormalSet NormalSet::whole(const GroupTable& t) {
  NormalSet s(t.order());
  for (int i = 0; i < t.order(); ++i) s.set(i);
  return s;
}

NormalSet NormalSet::identity(const GroupTable& t) {
  NormalSet s(t.order());
  s.set(t.identity());
  return s;
}

int NormalSet::count() const {
  int c = 0;
  for (auto x : w) c += std::popcount(x);
  return c;
}

NormalSet NormalSet::operator|(const NormalSet& o) const {
  NormalSet r = *this;
  for (size_t i = 0; i < w.size(); ++i) r.w[i] |= o.w[i];
  return r;
}

NormalSet NormalSet::operator&(const NormalSet& o) const {
  NormalSet r = *this;
  for (size_t i = 0; i < w.size(); ++i) r.w[i] &= o.w[i];
  return r;
}

bool NormalSet::subset_of(const NormalSet& o) const {
  for (size_t i = 0; i < w.size(); ++i)
    if (w[i] & ~o.w[i]) return false;
  return true;
}

bool NormalSet::is_normal(const GroupTable& t) const {
  for (int c = 0; c < t.num_classes(); ++c) {
    bool first = has(t.class_rep(c));
    for (int x : t.class_members(c))
      if (has(x) != first) return false;
  }
  return true;
}

std::vector<int> NormalSet::classes(const GroupTable& t) const {
  std::vector<int> out;
  for (int c = 0; c < t.num_classes(); ++c) {
    bool all = true;
    for (int x : t.class_members(c)) all = all && has(x);
    if (all) out.push_back(c);
  }
  return out;
}

std::vector<int> NormalSet::members() const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (has(i)) out.push_back(i);
  return out;
}

static NormalSet expand(const GroupTable& t, const std::vector<char>& hit) {
  NormalSet r(t.order());
  for (int c = 0; c < t.num_classes(); ++c)
    if (hit[c])
      for (int x : t.class_members(c)) r.set(x);
  return r;
}

NormalSet normal_set_product(const GroupTable& t, const NormalSet& a, const NormalSet& b) {
  // K.b is the union of the classes met by r_K.b, since b is normal.
  std::vector<char> hit(t.num_classes(), 0);
  std::vector<int> bm = b.members();
  for (int c = 0; c < t.num_classes(); ++c) {
    int r = t.class_rep(c);
    if (!a.has(r)) continue;
    for (int y : bm) hit[t.class_of(t.mul(r, y))] = 1;
  }
  return expand(t, hit);
}

NormalSet naive_product(const GroupTable& t, const NormalSet& a, const NormalSet& b) {
  NormalSet r(t.order());
  std::vector<int> am = a.members(), bm = b.members();
  for (int x : am)
    for (int y : bm) r.set(t.mul(x, y));
  return r;
}

double conj_length_element(const GroupTable& t, int g) {
  if (t.order() <= 1) return 0;
  return std::log(double(t.class_size(t.class_of(g)))) / std::log(double(t.order()));
}

double hamming_element(const GroupTable& t, int g) {
  if (t.ambient().kind != Kind::Perm) fail(Errc::InvalidArgument, "Hamming length needs a permutation group");
  const Key& k = t.element(g);
  int moved = 0;
  for (size_t i = 0; i < k.size(); ++i) moved += k[i] != i;
  return double(moved) / double(k.size());
}

static NormalSet generator_set(const GroupTable& t, int g, bool symmetric) {
  int c = t.class_of(g);
  NormalSet s = NormalSet::of_class(t, c);
  if (symmetric) s = s | NormalSet::of_class(t, t.inverse_class(c));
  return s;
}

Width conjugacy_width(const GroupTable& t, int g, bool symmetric) {
  if (g == t.identity()) fail(Errc::IdentityElement, "width of the identity is undefined");
  NormalSet G = NormalSet::whole(t);
  NormalSet s = generator_set(t, g, symmetric);
  Width w;
  if (symmetric) {
    NormalSet d = s;
    for (int m = 1;; ++m) {
      if (d == G) {
        w.bounded = true;
        w.m = m;
        w.stabilized = d;
        return w;
      }
      NormalSet next = d | normal_set_product(t, d, s);
      if (next == d) {
        w.stabilized = d;
        return w;
      }
      d = std::move(next);
    }
  }
  std::vector<NormalSet> seen;
  NormalSet p = s;
  for (int m = 1;; ++m) {
    if (p == G) {
      w.bounded = true;
      w.m = m;
      w.stabilized = p;
      return w;
    }
    if (std::find(seen.begin(), seen.end(), p) != seen.end()) {
      NormalSet u(t.order());
      for (const auto& x : seen) u = u | x;
      w.stabilized = u;
      return w;
    }
    seen.push_back(p);
    p = normal_set_product(t, p, s);
  }
}

NormalSet normal_closure(const GroupTable& t, int g) {
  NormalSet d = NormalSet::identity(t);
  if (g == t.identity()) return d;
  NormalSet s = generator_set(t, g, true);
  d = d | s;
  for (;;) {
    NormalSet next = d | normal_set_product(t, d, s);
    if (next == d) return d;
    d = std::move(next);
  }
}

std::vector<int> domination_levels(const GroupTable& t, int g, bool symmetric) {
  std::vector<int> level(t.num_classes(), -1);
  NormalSet s = generator_set(t, g, symmetric);
  NormalSet d = s;
  for (int k = 1;; ++k) {
    for (int c = 0; c < t.num_classes(); ++c)
      if (level[c] < 0 && d.has(t.class_rep(c))) level[c] = k;
    NormalSet next = d | normal_set_product(t, d, s);
    if (next == d) return level;
    d = std::move(next);
  }
}

int mutual_domination(const GroupTable& t, bool symmetric) {
  NormalSet G = NormalSet::whole(t);
  int nc = t.num_classes();
  std::vector<std::vector<int>> lv(nc);
  for (int c = 1; c < nc; ++c) {
    if (!(normal_closure(t, t.class_rep(c)) == G)) fail(Errc::NotSimple, "group is not simple");
    lv[c] = domination_levels(t, t.class_rep(c), symmetric);
  }
  int k = 0;
  for (int a = 1; a < nc; ++a)
    for (int b = a; b < nc; ++b) {
      int x = lv[a][b], y = lv[b][a];
      int best = x < 0 ? y : (y < 0 ? x : std::min(x, y));
      if (best < 0) fail(Errc::Internal, "no domination between classes of a simple group");
      k = std::max(k, best);
    }
  return k;
}

OreResult ore_check(const GroupTable& t, const NormalSet& s) {
  // The commutator set of a normal set is normal, so class reps suffice for x.
  std::vector<char> hit(t.num_classes(), 0);
  std::vector<int> sm = s.members();
  for (int c = 0; c < t.num_classes(); ++c) {
    int r = t.class_rep(c);
    if (!s.has(r)) continue;
    int ri = t.inv(r);
    for (int y : sm) hit[t.class_of(t.mul(t.mul(r, y), t.mul(ri, t.inv(y))))] = 1;
  }
  OreResult out;
  for (int x : sm)
    if (!hit[t.class_of(x)]) {
      out.ok = false;
      out.counterexample = x;
      break;
    }
  return out;
}

bool lattice_modular(const std::vector<NormalSet>& xs,
                     const std::function<NormalSet(const NormalSet&, const NormalSet&)>& join,
                     const std::function<NormalSet(const NormalSet&, const NormalSet&)>& meet) {
  for (const auto& x : xs)
    for (const auto& z : xs) {
      if (!x.subset_of(z)) continue;
      for (const auto& y : xs)
        if (!(join(x, meet(y, z)) == meet(join(x, y), z))) return false;
    }
  return true;
}

bool lattice_distributive(const std::vector<NormalSet>& xs,
                          const std::function<NormalSet(const NormalSet&, const NormalSet&)>& join,
                          const std::function<NormalSet(const NormalSet&, const NormalSet&)>& meet) {
  for (const auto& x : xs)
    for (const auto& y : xs)
      for (const auto& z : xs)
        if (!(meet(x, join(y, z)) == join(meet(x, y), meet(x, z)))) return false;
  return true;
}

static bool totally_ordered(const std::vector<NormalSet>& xs) {
  for (const auto& a : xs)
    for (const auto& b : xs)
      if (!a.subset_of(b) && !b.subset_of(a)) return false;
  return true;
}

Lattice normal_lattice_analyze(const GroupTable& t, int max_order) {
  if (t.order() > max_order) fail(Errc::CapExceeded, "lattice analysis is limited to small groups");
  auto key_less = [](const NormalSet& a, const NormalSet& b) {
    int ca = a.count(), cb = b.count();
    return ca != cb ? ca < cb : a.w < b.w;
  };
  std::vector<NormalSet> closures;
  for (int c = 0; c < t.num_classes(); ++c) {
    NormalSet n = normal_closure(t, t.class_rep(c));
    if (std::find(closures.begin(), closures.end(), n) == closures.end()) closures.push_back(n);
  }
  std::vector<NormalSet> all = closures;
  for (bool grew = true; grew;) {
    grew = false;
    size_t sz = all.size();
    for (size_t i = 0; i < sz; ++i)
      for (size_t j = i + 1; j < sz; ++j) {
        NormalSet p = normal_set_product(t, all[i], all[j]);
        if (std::find(all.begin(), all.end(), p) == all.end()) {
          all.push_back(p);
          grew = true;
        }
      }
  }
  std::sort(all.begin(), all.end(), key_less);
  Lattice L;
  L.subgroups = all;
  int n = L.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !all[i].subset_of(all[j])) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k)
        if (k != i && k != j && all[i].subset_of(all[k]) && all[k].subset_of(all[j])) cover = false;
      if (cover) L.hasse.emplace_back(i, j);
    }
  auto join = [&](const NormalSet& a, const NormalSet& b) { return normal_set_product(t, a, b); };
  auto meet = [](const NormalSet& a, const NormalSet& b) { return a & b; };
  L.is_chain = totally_ordered(all);
  L.is_modular = lattice_modular(all, join, meet);
  L.is_distributive = lattice_distributive(all, join, meet);
  L.closures_chain = totally_ordered(closures);
  L.chain_equivalence = L.is_chain == L.closures_chain;
  return L;
}

GroupSpec perm_group(int degree, const std::vector<sym::Permutation>& gens) {
  GroupSpec s;
  s.amb.kind = Kind::Perm;
  s.amb.degree = degree;
  for (const auto& p : gens) {
    if (p.n() != degree) fail(Errc::InvalidArgument, "generator degree mismatch");
    s.gens.emplace_back(p.images.begin(), p.images.end());
  }
  return s;
}

GroupSpec matrix_group(fq::FieldPtr F, const std::vector<fq::Matrix>& gens) {
  GroupSpec s;
  s.amb.kind = Kind::MatFq;
  s.amb.field = F;
  s.amb.degree = gens.empty() ? 1 : gens[0].rows;
  for (const auto& g : gens) {
    if (g.rows != s.amb.degree || g.cols != s.amb.degree) fail(Errc::InvalidArgument, "generator size mismatch");
    if (!fq::invertible(g)) fail(Errc::Singular, "generator is singular");
    s.gens.push_back(s.amb.from_matrix(g));
  }
  return s;
}

static void prime_power(int q, int& p, int& e) {
  if (q < 2) fail(Errc::InvalidArgument, "field order must be at least 2");
  p = 0;
  for (int d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  e = 0;
  int r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) fail(Errc::InvalidArgument, std::to_string(q) + " is not a prime power");
}

static fq::FieldPtr field_of_order(int q) {
  int p, e;
  prime_power(q, p, e);
  return fq::Field::make(p, e);
}

static int parse_int(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    fail(Errc::InvalidArgument, "bad integer '" + s + "' in group name");
  return std::stoi(s);
}

static GroupSpec psl2(int q) {
  fq::FieldPtr F = field_of_order(q);
  int inf = q;
  auto map = [&](auto f) {
    sym::Permutation p = sym::Permutation::identity(q + 1);
    for (int x = 0; x <= q; ++x) p.images[x] = f(x);
    return p;
  };
  std::vector<sym::Permutation> gens;
  fq::Elem b = 1;
  for (int i = 0; i < F->e(); ++i) {
    gens.push_back(map([&](int x) { return x == inf ? inf : int(F->add(fq::Elem(x), b)); }));
    b = F->mul(b, F->primitive());
  }
  fq::Elem w2 = F->mul(F->primitive(), F->primitive());
  gens.push_back(map([&](int x) { return x == inf ? inf : int(F->mul(w2, fq::Elem(x))); }));
  gens.push_back(map([&](int x) {
    if (x == inf) return 0;
    if (x == 0) return inf;
    return int(F->neg(F->inv(fq::Elem(x))));
  }));
  return perm_group(q + 1, gens);
}

GroupSpec named_group(const std::string& name) {
  auto under = name.find('_');
  if (name == "Q8") {
    auto F = fq::Field::make(3, 1);
    fq::Matrix i(F, 2, 2), j(F, 2, 2);
    i.a = {0, 1, 2, 0};
    j.a = {1, 1, 1, 2};
    return matrix_group(F, {i, j});
  }
  if (name.rfind("PSL2_", 0) == 0) return psl2(parse_int(name.substr(5)));
  if (name.rfind("SL2_", 0) == 0) {
    auto F = field_of_order(parse_int(name.substr(4)));
    fq::Matrix u(F, 2, 2), l(F, 2, 2), d(F, 2, 2);
    u.a = {1, 1, 0, 1};
    l.a = {1, 0, 1, 1};
    d.a = {F->primitive(), 0, 0, F->inv(F->primitive())};
    return matrix_group(F, {u, l, d});
  }
  if (name.rfind("GL", 0) == 0 && under != std::string::npos) {
    int n = parse_int(name.substr(2, under - 2));
    auto F = field_of_order(parse_int(name.substr(under + 1)));
    if (n < 1 || n > 8) fail(Errc::InvalidArgument, "GL degree out of range");
    std::vector<fq::Matrix> gens;
    for (int i = 0; i + 1 < n; ++i) {
      fq::Matrix a = fq::Matrix::identity(F, n), b = fq::Matrix::identity(F, n);
      a.at(i, i + 1) = 1;
      b.at(i + 1, i) = 1;
      gens.push_back(a);
      gens.push_back(b);
    }
    fq::Matrix d = fq::Matrix::identity(F, n);
    d.at(0, 0) = F->primitive();
    gens.push_back(d);
    return matrix_group(F, gens);
  }
  if (name.size() >= 2 && (name[0] == 'S' || name[0] == 'A' || name[0] == 'D')) {
    int n = parse_int(name.substr(1));
    if (n < 1 || n > 10) fail(Errc::InvalidArgument, "degree out of range in " + name);
    std::vector<sym::Permutation> gens;
    if (name[0] == 'S') {
      if (n >= 2) {
        std::vector<int> cyc(n);
        for (int i = 0; i < n; ++i) cyc[i] = i + 1;
        gens.push_back(sym::Permutation::from_cycles(n, {cyc}));
        gens.push_back(sym::Permutation::from_cycles(n, {{1, 2}}));
      }
    } else if (name[0] == 'A') {
      for (int i = 3; i <= n; ++i) gens.push_back(sym::Permutation::from_cycles(n, {{1, 2, i}}));
    } else {
      if (n < 3) fail(Errc::InvalidArgument, "dihedral group needs n >= 3");
      sym::Permutation r = sym::Permutation::identity(n), s = r;
      for (int i = 0; i < n; ++i) {
        r.images[i] = (i + 1) % n;
        s.images[i] = (n - i) % n;
      }
      gens = {r, s};
    }
    return perm_group(n, gens);
  }
  fail(Errc::InvalidArgument, "unknown group '" + name + "'");
}

}  // namespace ul::grp
