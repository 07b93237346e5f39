#pragma once

#include "ultralen/fq.hpp"

#include <string>

namespace ul::fq {

enum class FormKind { Trivial, Symmetric, Symplectic, Hermitian };

const char* form_name(FormKind k);

// Vectors are rows; B(u, v) = u G sigma(v)^T with sigma the identity, or
// x -> x^(p^(e/2)) for Hermitian forms over F_{q^2}.
struct BilinearSpace {
  FieldPtr F;
  int n = 0;
  FormKind kind = FormKind::Trivial;
  Matrix gram;

  static BilinearSpace make(FormKind kind, Matrix gram);
  static BilinearSpace standard_symplectic(FieldPtr F, int n);
  static BilinearSpace standard_hermitian(FieldPtr F, int n);  // identity Gram over F_{q^2}
  static BilinearSpace trivial(FieldPtr F, int n);

  Elem form(const Matrix& u, const Matrix& v) const;
  Matrix sigma(const Matrix& m) const;
  // Rows b_i of basis; entries B(b_i, b_j).
  Matrix restricted_gram(const Matrix& basis) const;
  bool nondegenerate() const;
  // g G sigma(g)^T == G
  bool is_isometry(const Matrix& g) const;
};

// Row space kept in reduced echelon form.
struct Subspace {
  Matrix basis;
  int dim() const { return basis.rows; }
  static Subspace span(const Matrix& rows);
  static Subspace zero(FieldPtr F, int n);
  static Subspace whole(FieldPtr F, int n);
  bool contains(const Matrix& v) const;
  bool operator==(const Subspace& o) const { return basis == o.basis; }
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
// {v : B(w, v) = 0 for all w in W}
Subspace perp(const BilinearSpace& s, const Subspace& w);
bool nondegenerate_on(const BilinearSpace& s, const Subspace& w);

Subspace radical(const BilinearSpace& s, const Subspace& w);

// v with B(w_i, v) = phi_i for the basis rows w_i of W.
Matrix solve_form_functional(const BilinearSpace& s, const Subspace& w, const std::vector<Elem>& phi);

struct Extension {
  Subspace w_prime;     // complement of rad W in W
  Subspace w_dblprime;  // paired with rad W, orthogonal to W'
  Subspace rad;
  Subspace u;           // W'' + W^perp
};

struct ExtensionCheck {
  bool dim_matches = false;      // dim W'' == dim rad W
  bool orthogonal = false;       // U perp W'
  bool spans = false;            // U + W' == V and U cap W' == 0
  bool u_nondegenerate = false;
  bool wp_nondegenerate = false;
  bool all() const { return dim_matches && orthogonal && spans && u_nondegenerate && wp_nondegenerate; }
};

Extension extend_to_nondegenerate(const BilinearSpace& s, const Subspace& w);
ExtensionCheck check_extension(const BilinearSpace& s, const Subspace& w, const Extension& ext);

struct FixRestriction {
  Subspace u;
  int dim_w = 0, dim_rad = 0, dim_wpp = 0, dim_wperp = 0, dim_u = 0;
  int rank_g = 0, rank_h = 0;
  int bound = 0;  // 2 rank(1-g) + 2 rank(1-h)
  bool within_bound = false;
  bool identity_on_complement = false;
};

// Row action u -> u g; ker(1 - g) is the left kernel of 1 - g.
Subspace fixed_space(const Matrix& g);
FixRestriction common_fix_restriction(const Matrix& g, const Matrix& h, const BilinearSpace& s);

}  // namespace ul::fq
