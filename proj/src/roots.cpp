#include "ultralen/roots.hpp"

#include "ultralen/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace ul::lie {

RootType parse_type(const std::string& s) {
  if (s == "A") return RootType::A;
  if (s == "B") return RootType::B;
  if (s == "C") return RootType::C;
  if (s == "D") return RootType::D;
  if (s == "G2" || s == "G") return RootType::G2;
  if (s == "F4" || s == "F") return RootType::F4;
  fail(Errc::InvalidArgument, "unknown root system type '" + s + "'");
}

std::string type_name(RootType t) {
  switch (t) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
    case RootType::G2: return "G2";
    case RootType::F4: return "F4";
  }
  return "?";
}

Rat dot(const RVec& a, const RVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RVec add(const RVec& a, const RVec& b) {
  RVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RVec scale(const RVec& a, const Rat& s) {
  RVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

std::string vec_str(const RVec& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << rat_str(v[i]);
  os << ')';
  return os.str();
}

RVec RootSystem::coroot(const RVec& a) const { return scale(a, Rat(2) / dot(a, a)); }

RVec RootSystem::reflect(const RVec& v, int i) const {
  const RVec& b = fundamental[i];
  return add(v, scale(b, -Rat(2) * dot(v, b) / dot(b, b)));
}

bool RootSystem::is_root(const RVec& v) const { return std::find(roots.begin(), roots.end(), v) != roots.end(); }

Rat RootSystem::max_norm2() const {
  Rat m = 0;
  for (const auto& r : roots) m = std::max(m, dot(r, r));
  return m;
}

bool RootSystem::equal_lengths() const {
  for (const auto& r : roots)
    if (dot(r, r) != dot(roots[0], roots[0])) return false;
  return true;
}

static RVec unit(int dim, int i, Rat s = 1) {
  RVec v(dim, Rat(0));
  v[i] = s;
  return v;
}

RootSystem build_root_system(RootType type, int rank) {
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  auto pm_pairs = [&](int dim) {
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1}) {
            RVec v(dim, Rat(0));
            v[i] = si;
            v[j] = sj;
            rs.roots.push_back(v);
          }
  };
  auto chain = [&](int count) {
    for (int i = 0; i < count; ++i) {
      RVec v(rs.dim, Rat(0));
      v[i] = 1;
      v[i + 1] = -1;
      rs.fundamental.push_back(v);
    }
  };
  switch (type) {
    case RootType::A:
      if (rank < 1 || rank > 12) fail(Errc::BadRank, "type A needs 1 <= rank <= 12");
      rs.dim = rank + 1;
      for (int i = 0; i < rs.dim; ++i)
        for (int j = 0; j < rs.dim; ++j)
          if (i != j) {
            RVec v(rs.dim, Rat(0));
            v[i] = 1;
            v[j] = -1;
            rs.roots.push_back(v);
          }
      chain(rank);
      break;
    case RootType::B:
    case RootType::C:
      if (rank < 1 || rank > 12) fail(Errc::BadRank, "types B and C need 1 <= rank <= 12");
      rs.dim = rank;
      pm_pairs(rank);
      for (int i = 0; i < rank; ++i)
        for (int s : {1, -1}) rs.roots.push_back(unit(rank, i, type == RootType::B ? s : 2 * s));
      chain(rank - 1);
      rs.fundamental.push_back(unit(rank, rank - 1, type == RootType::B ? 1 : 2));
      break;
    case RootType::D:
      if (rank < 2 || rank > 12) fail(Errc::BadRank, "type D needs 2 <= rank <= 12");
      rs.dim = rank;
      pm_pairs(rank);
      chain(rank - 1);
      {
        RVec v(rank, Rat(0));
        v[rank - 2] = 1;
        v[rank - 1] = 1;
        rs.fundamental.push_back(v);
      }
      break;
    case RootType::G2: {
      if (rank != 2) fail(Errc::BadRank, "G2 has rank 2");
      rs.dim = 3;
      const int sh[6][3] = {{1, -1, 0}, {-1, 1, 0}, {1, 0, -1}, {-1, 0, 1}, {0, 1, -1}, {0, -1, 1}};
      const int lo[6][3] = {{2, -1, -1}, {-2, 1, 1}, {1, -2, 1}, {-1, 2, -1}, {1, 1, -2}, {-1, -1, 2}};
      for (auto& r : sh) rs.roots.push_back({r[0], r[1], r[2]});
      for (auto& r : lo) rs.roots.push_back({r[0], r[1], r[2]});
      rs.fundamental = {{1, -1, 0}, {-2, 1, 1}};
      break;
    }
    case RootType::F4: {
      if (rank != 4) fail(Errc::BadRank, "F4 has rank 4");
      rs.dim = 4;
      pm_pairs(4);
      for (int i = 0; i < 4; ++i)
        for (int s : {1, -1}) rs.roots.push_back(unit(4, i, s));
      for (int mask = 0; mask < 16; ++mask) {
        RVec v(4);
        for (int i = 0; i < 4; ++i) v[i] = Rat((mask >> i) & 1 ? -1 : 1, 2);
        rs.roots.push_back(v);
      }
      rs.fundamental = {{0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}, {Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)}};
      break;
    }
  }
  return rs;
}

std::optional<RVec> fundamental_coeffs(const RootSystem& rs, const RVec& v) {
  int r = static_cast<int>(rs.fundamental.size()), d = rs.dim;
  // Augmented system: rows are coordinates, columns fundamental roots plus v.
  std::vector<RVec> m(d, RVec(r + 1));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < r; ++j) m[i][j] = rs.fundamental[j][i];
    m[i][r] = v[i];
  }
  std::vector<int> piv;
  int row = 0;
  for (int c = 0; c < r && row < d; ++c) {
    int p = row;
    while (p < d && m[p][c] == 0) ++p;
    if (p == d) continue;
    std::swap(m[p], m[row]);
    Rat inv = Rat(1) / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (int i = 0; i < d; ++i)
      if (i != row && m[i][c] != 0) {
        Rat f = m[i][c];
        for (int j = 0; j <= r; ++j) m[i][j] -= f * m[row][j];
      }
    piv.push_back(c);
    ++row;
  }
  for (int i = row; i < d; ++i)
    if (m[i][r] != 0) return std::nullopt;
  RVec c(r, Rat(0));
  for (int i = 0; i < row; ++i) c[piv[i]] = m[i][r];
  return c;
}

RootSystemCheck verify_root_system(const RootSystem& rs) {
  RootSystemCheck c;
  c.closed_under_negation = true;
  for (const auto& r : rs.roots) c.closed_under_negation = c.closed_under_negation && rs.is_root(scale(r, -1));
  // Independence: the zero vector has only the trivial expression, checked via rank.
  {
    int r = static_cast<int>(rs.fundamental.size());
    bool indep = r == rs.rank;
    for (int j = 0; j < r && indep; ++j) {
      RootSystem sub = rs;
      sub.fundamental.erase(sub.fundamental.begin() + j);
      if (fundamental_coeffs(sub, rs.fundamental[j])) indep = false;
    }
    c.fundamental_independent = indep;
  }
  c.integral_sign_coherent = true;
  for (const auto& r : rs.roots) {
    auto co = fundamental_coeffs(rs, r);
    if (!co) {
      c.integral_sign_coherent = false;
      break;
    }
    bool pos = true, neg = true;
    for (const auto& x : *co) {
      if (x.denominator() != 1) c.integral_sign_coherent = false;
      pos = pos && x >= 0;
      neg = neg && x <= 0;
    }
    if (!pos && !neg) c.integral_sign_coherent = false;
  }
  return c;
}

static bool parallel_ratio(const RVec& a, const RVec& s, Rat& mu) {
  // a = mu * s with s nonzero
  int k = -1;
  for (size_t i = 0; i < s.size(); ++i)
    if (s[i] != 0) {
      k = static_cast<int>(i);
      break;
    }
  if (k < 0) return false;
  mu = a[k] / s[k];
  return scale(s, mu) == a;
}

CombinationReport check_root_combinations(const RootSystem& rs) {
  CombinationReport rep;
  const std::set<Rat> allowed = {Rat(1, 3), Rat(1, 2), Rat(1), Rat(-1, 3), Rat(-1, 2), Rat(-1)};
  std::vector<RVec> lng, shrt;
  rep.equal_lengths = rs.equal_lengths();
  for (const auto& r : rs.roots) (rs.is_long(r) && !rep.equal_lengths ? lng : shrt).push_back(r);
  rep.long_roots = static_cast<int>(lng.size());
  rep.short_roots = static_cast<int>(shrt.size());
  if (rep.equal_lengths) return rep;
  for (const auto& b : lng) {
    bool found = false;
    for (const auto& a1 : shrt) {
      if (rs.is_root(a1) && std::find(shrt.begin(), shrt.end(), add(b, scale(a1, -1))) != shrt.end()) {
        found = true;
        break;
      }
    }
    if (!found && rep.long_as_short_sum) {
      rep.long_as_short_sum = false;
      rep.first_failure = "long root " + vec_str(b) + " is not a sum of two short roots";
    }
  }
  std::set<Rat> seen;
  std::set<RVec> covered;
  for (size_t i = 0; i < lng.size(); ++i)
    for (size_t j = i; j < lng.size(); ++j) {
      RVec s = add(lng[i], lng[j]);
      for (const auto& a : shrt) {
        Rat mu;
        if (parallel_ratio(a, s, mu)) {
          seen.insert(mu);
          covered.insert(a);
          if (!allowed.count(mu) && rep.mus_allowed) {
            rep.mus_allowed = false;
            rep.first_failure = "coefficient " + rat_str(mu) + " for " + vec_str(a);
          }
        }
      }
    }
  // Same-length pairs in the other direction: long roots from two short ones.
  for (size_t i = 0; i < shrt.size(); ++i)
    for (size_t j = i; j < shrt.size(); ++j) {
      RVec s = add(shrt[i], shrt[j]);
      for (const auto& b : lng) {
        Rat mu;
        if (parallel_ratio(b, s, mu)) {
          seen.insert(mu);
          if (!allowed.count(mu) && rep.mus_allowed) {
            rep.mus_allowed = false;
            rep.first_failure = "coefficient " + rat_str(mu) + " for " + vec_str(b);
          }
        }
      }
    }
  for (const auto& a : shrt)
    if (!covered.count(a) && rep.short_as_long_comb) {
      rep.short_as_long_comb = false;
      rep.first_failure = "short root " + vec_str(a) + " is not mu(b1 + b2)";
    }
  rep.mus.assign(seen.begin(), seen.end());
  return rep;
}

RVec apply_word(const RootSystem& rs, const std::vector<int>& word, const RVec& v) {
  RVec x = v;
  for (int i : word) x = rs.reflect(x, i);
  return x;
}

// BFS over the Weyl orbit of beta; parent links give words.
static std::map<RVec, std::vector<int>> orbit_words(const RootSystem& rs, const RVec& beta) {
  std::map<RVec, std::vector<int>> words;
  std::deque<RVec> q;
  words[beta] = {};
  q.push_back(beta);
  while (!q.empty()) {
    RVec v = q.front();
    q.pop_front();
    for (int i = 0; i < rs.rank; ++i) {
      RVec w = rs.reflect(v, i);
      if (words.count(w)) continue;
      auto word = words[v];
      word.push_back(i);
      words[w] = word;
      q.push_back(w);
    }
  }
  return words;
}

std::vector<int> weyl_search(const RootSystem& rs, const RVec& alpha, const RVec& beta) {
  if (dot(alpha, alpha) != dot(beta, beta)) fail(Errc::NotInOrbit, "roots of different lengths");
  auto words = orbit_words(rs, beta);
  auto it = words.find(alpha);
  if (it == words.end()) fail(Errc::NotInOrbit, vec_str(alpha) + " is not in the orbit of " + vec_str(beta));
  if (apply_word(rs, it->second, beta) != alpha) fail(Errc::Internal, "Weyl word does not verify");
  return it->second;
}

CocharSplit cocharacter_split(const RootSystem& rs, int ai, int bi) {
  if (ai < 0 || bi < 0 || ai >= rs.rank || bi >= rs.rank) fail(Errc::IndexOutOfRange, "fundamental index out of range");
  const RVec& alpha = rs.fundamental[ai];
  const RVec& beta = rs.fundamental[bi];
  Rat na = dot(alpha, alpha), nb = dot(beta, beta);
  if (na == nb) fail(Errc::NoSplit, "fundamental roots of equal length");
  if (na > nb) fail(Errc::NoSplit, "alpha must be the short root");
  auto words = orbit_words(rs, beta);
  // Deterministic order: BFS words by length, then lexicographic.
  std::vector<std::pair<std::vector<int>, RVec>> orbit;
  for (auto& [v, w] : words) orbit.emplace_back(w, v);
  std::sort(orbit.begin(), orbit.end(), [](const auto& x, const auto& y) {
    return x.first.size() != y.first.size() ? x.first.size() < y.first.size() : x.first < y.first;
  });
  const Rat mus[] = {Rat(1, 3), Rat(1, 2), Rat(1), Rat(-1, 3), Rat(-1, 2), Rat(-1)};
  for (const Rat& mu : mus)
    for (size_t i = 0; i < orbit.size(); ++i)
      for (size_t j = i; j < orbit.size(); ++j) {
        RVec s = add(orbit[i].second, orbit[j].second);
        if (scale(s, mu) != alpha) continue;
        CocharSplit out;
        out.w1 = orbit[i].first;
        out.w2 = orbit[j].first;
        out.gamma1 = orbit[i].second;
        out.gamma2 = orbit[j].second;
        out.mu = mu;
        out.root_relation = add(scale(out.gamma1, mu), scale(out.gamma2, mu)) == alpha;
        out.linear_relation = add(out.gamma1, out.gamma2) == scale(alpha, Rat(1) / mu);
        RVec lhs = add(rs.coroot(out.gamma1), rs.coroot(out.gamma2));
        RVec av = rs.coroot(alpha);
        Rat c;
        out.coroot_relation = parallel_ratio(lhs, av, c) && (c == 1 || c == -1);
        out.coroot_coeff = c;
        return out;
      }
  fail(Errc::NoSplit, "no split found");
}

}  // namespace ul::lie
