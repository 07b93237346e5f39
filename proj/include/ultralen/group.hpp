#pragma once

#include "ultralen/fq.hpp"
#include "ultralen/sym.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

namespace ul::grp {

using Key = std::vector<std::uint32_t>;

struct KeyHash {
  size_t operator()(const Key& k) const noexcept;
};

enum class Kind { Perm, MatFq };

// How elements of the ambient group multiply. For Perm, keys are 0-based
// images and (a*b)(i) = a(b(i)). For MatFq, keys are row-major entries.
struct Ambient {
  Kind kind = Kind::Perm;
  int degree = 0;  // points for Perm, matrix size for MatFq
  fq::FieldPtr field;

  Key identity() const;
  Key mul(const Key& a, const Key& b) const;
  Key inv(const Key& a) const;
  fq::Matrix to_matrix(const Key& k) const;
  Key from_matrix(const fq::Matrix& m) const;
};

class GroupTable {
 public:
  static GroupTable generate(const Ambient& amb, const std::vector<Key>& gens, long long cap = 100000);

  int order() const { return static_cast<int>(elems_.size()); }
  const Ambient& ambient() const { return amb_; }
  const Key& element(int i) const { return elems_[i]; }
  int index_of(const Key& k) const;  // -1 if absent
  int identity() const { return 0; }
  int mul(int a, int b) const;
  int inv(int a) const { return inv_[a]; }
  int conj(int x, int g) const { return mul(mul(g, x), inv_[g]); }  // g x g^-1
  const std::vector<int>& generators() const { return gens_; }

  int num_classes() const { return static_cast<int>(classes_.size()); }
  const std::vector<int>& class_members(int c) const { return classes_[c]; }
  int class_of(int x) const { return class_of_[x]; }
  int class_rep(int c) const { return classes_[c][0]; }
  int class_size(int c) const { return static_cast<int>(classes_[c].size()); }
  int inverse_class(int c) const { return class_of_[inv_[class_rep(c)]]; }

  // Associativity on random triples and exact inverses.
  bool verify_axioms(std::mt19937_64& rng, int samples) const;

 private:
  Ambient amb_;
  std::vector<Key> elems_;
  std::unordered_map<Key, int, KeyHash> index_;
  std::vector<int> gens_;
  std::vector<int> table_;  // order*order when small, else empty
  std::vector<int> inv_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> classes_;
  void build_classes();
};

// Bitset over element indices.
struct NormalSet {
  int n = 0;
  std::vector<std::uint64_t> w;

  NormalSet() = default;
  explicit NormalSet(int order) : n(order), w((order + 63) / 64, 0) {}
  static NormalSet of_class(const GroupTable& t, int c);
  static NormalSet whole(const GroupTable& t);
  static NormalSet identity(const GroupTable& t);

  bool has(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
  int count() const;
  bool empty() const { return count() == 0; }
  NormalSet operator|(const NormalSet& o) const;
  NormalSet operator&(const NormalSet& o) const;
  bool subset_of(const NormalSet& o) const;
  bool operator==(const NormalSet& o) const { return n == o.n && w == o.w; }
  bool is_normal(const GroupTable& t) const;
  std::vector<int> classes(const GroupTable& t) const;  // classes fully contained
  std::vector<int> members() const;
};

// {xy : x in a, y in b} for normal a, b.
NormalSet normal_set_product(const GroupTable& t, const NormalSet& a, const NormalSet& b);
// Same product by the quadratic double loop; test oracle and small inputs.
NormalSet naive_product(const GroupTable& t, const NormalSet& a, const NormalSet& b);

double conj_length_element(const GroupTable& t, int g);
// Fraction of moved points, Perm groups only.
double hamming_element(const GroupTable& t, int g);

struct Width {
  bool bounded = false;
  int m = 0;               // least m, valid when bounded
  NormalSet stabilized;    // final set reached (G when bounded)
};

// Exact mode: least m with C(g)^m = G. Symmetric mode: least m with
// D_m = union_{j<=m} (C u C^-1)^j = G.
Width conjugacy_width(const GroupTable& t, int g, bool symmetric);

NormalSet normal_closure(const GroupTable& t, int g);

// Per-class filtration levels: level[c] = least k with class c inside D_k(g),
// or -1 if never reached.
std::vector<int> domination_levels(const GroupTable& t, int g, bool symmetric);
int mutual_domination(const GroupTable& t, bool symmetric);

struct OreResult {
  bool ok = true;
  int counterexample = -1;  // element index
};
// Every element of s is [x,y] = x y x^-1 y^-1 with x, y in s. s must be normal.
OreResult ore_check(const GroupTable& t, const NormalSet& s);

struct Lattice {
  std::vector<NormalSet> subgroups;          // sorted by order, then bits
  std::vector<std::pair<int, int>> hasse;    // (lower, upper)
  bool is_chain = false;
  bool is_modular = false;
  bool is_distributive = false;
  bool closures_chain = false;               // class closures totally ordered
  bool chain_equivalence = false;            // is_chain == closures_chain
  int size() const { return static_cast<int>(subgroups.size()); }
};

Lattice normal_lattice_analyze(const GroupTable& t, int max_order = 2000);

// Generic lattice checks on a family of subsets closed under the given ops.
bool lattice_modular(const std::vector<NormalSet>& xs,
                     const std::function<NormalSet(const NormalSet&, const NormalSet&)>& join,
                     const std::function<NormalSet(const NormalSet&, const NormalSet&)>& meet);
bool lattice_distributive(const std::vector<NormalSet>& xs,
                          const std::function<NormalSet(const NormalSet&, const NormalSet&)>& join,
                          const std::function<NormalSet(const NormalSet&, const NormalSet&)>& meet);

// Named groups: S<n>, A<n> (n <= 8), D<n> (dihedral of order 2n), Q8,
// SL2_<q>, GL<n>_<q>, PSL2_<q>.
struct GroupSpec {
  Ambient amb;
  std::vector<Key> gens;
};
GroupSpec named_group(const std::string& name);
GroupSpec perm_group(int degree, const std::vector<sym::Permutation>& gens);
GroupSpec matrix_group(fq::FieldPtr F, const std::vector<fq::Matrix>& gens);

}  // namespace ul::grp
