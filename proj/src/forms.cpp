#include "ultralen/forms.hpp"

#include "ultralen/errors.hpp"

namespace ul::fq {

const char* form_name(FormKind k) {
  switch (k) {
    case FormKind::Trivial: return "trivial";
    case FormKind::Symmetric: return "symmetric";
    case FormKind::Symplectic: return "symplectic";
    case FormKind::Hermitian: return "hermitian";
  }
  return "?";
}

BilinearSpace BilinearSpace::make(FormKind kind, Matrix gram) {
  if (gram.rows != gram.cols) fail(Errc::InvalidArgument, "Gram matrix must be square");
  BilinearSpace s;
  s.F = gram.F;
  s.n = gram.rows;
  s.kind = kind;
  s.gram = std::move(gram);
  const Field& F = *s.F;
  const Matrix& G = s.gram;
  bool ok = true;
  switch (kind) {
    case FormKind::Trivial:
      for (Elem x : G.a) ok = ok && x == 0;
      break;
    case FormKind::Symmetric:
      ok = G == G.transpose();
      break;
    case FormKind::Symplectic:
      for (int i = 0; i < s.n; ++i) {
        ok = ok && G.at(i, i) == 0;
        for (int j = 0; j < s.n; ++j) ok = ok && G.at(i, j) == F.neg(G.at(j, i));
      }
      break;
    case FormKind::Hermitian:
      if (F.e() % 2) fail(Errc::InvalidArgument, "Hermitian forms need a field of square order");
      ok = G.transpose() == G.frob(F.e() / 2);
      break;
  }
  if (!ok) fail(Errc::InvalidArgument, std::string("Gram matrix does not match form kind ") + form_name(kind));
  return s;
}

BilinearSpace BilinearSpace::standard_symplectic(FieldPtr F, int n) {
  if (n % 2) fail(Errc::InvalidArgument, "symplectic space needs even dimension");
  Matrix G(F, n, n);
  int h = n / 2;
  for (int i = 0; i < h; ++i) {
    G.at(i, h + i) = 1;
    G.at(h + i, i) = F->neg(1);
  }
  return make(FormKind::Symplectic, G);
}

BilinearSpace BilinearSpace::standard_hermitian(FieldPtr F, int n) {
  return make(FormKind::Hermitian, Matrix::identity(F, n));
}

BilinearSpace BilinearSpace::trivial(FieldPtr F, int n) { return make(FormKind::Trivial, Matrix(F, n, n)); }

Matrix BilinearSpace::sigma(const Matrix& m) const {
  return kind == FormKind::Hermitian ? m.frob(F->e() / 2) : m;
}

Elem BilinearSpace::form(const Matrix& u, const Matrix& v) const {
  return (u * gram * sigma(v).transpose()).at(0, 0);
}

Matrix BilinearSpace::restricted_gram(const Matrix& basis) const {
  if (basis.rows == 0) return Matrix(F, 0, 0);
  return basis * gram * sigma(basis).transpose();
}

bool BilinearSpace::nondegenerate() const { return mat_rank(gram) == n; }

bool BilinearSpace::is_isometry(const Matrix& g) const { return g * gram * sigma(g).transpose() == gram; }

Subspace Subspace::span(const Matrix& rows) {
  Echelon e = row_reduce(rows);
  Subspace s;
  s.basis = Matrix(rows.F, e.rank(), rows.cols);
  for (int i = 0; i < e.rank(); ++i)
    for (int j = 0; j < rows.cols; ++j) s.basis.at(i, j) = e.rref.at(i, j);
  return s;
}

Subspace Subspace::zero(FieldPtr F, int n) {
  Subspace s;
  s.basis = Matrix(std::move(F), 0, n);
  return s;
}

Subspace Subspace::whole(FieldPtr F, int n) { return span(Matrix::identity(std::move(F), n)); }

bool Subspace::contains(const Matrix& v) const {
  if (dim() == 0) {
    for (Elem x : v.a)
      if (x != 0) return false;
    return true;
  }
  return mat_rank(basis.stack(v)) == dim();
}

Subspace sum(const Subspace& a, const Subspace& b) { return Subspace::span(a.basis.stack(b.basis)); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  FieldPtr F = a.basis.F;
  int n = a.basis.cols;
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(F, n);
  Matrix k = left_kernel(a.basis.stack(b.basis));
  Matrix coeff(F, k.rows, a.dim());
  for (int i = 0; i < k.rows; ++i)
    for (int j = 0; j < a.dim(); ++j) coeff.at(i, j) = k.at(i, j);
  if (k.rows == 0) return Subspace::zero(F, n);
  return Subspace::span(coeff * a.basis);
}

Subspace perp(const BilinearSpace& s, const Subspace& w) {
  if (w.dim() == 0) return Subspace::whole(s.F, s.n);
  Matrix k = right_kernel(w.basis * s.gram);
  if (k.rows == 0) return Subspace::zero(s.F, s.n);
  return Subspace::span(s.sigma(k));
}

bool nondegenerate_on(const BilinearSpace& s, const Subspace& w) {
  if (w.dim() == 0) return true;
  return mat_rank(s.restricted_gram(w.basis)) == w.dim();
}

Subspace radical(const BilinearSpace& s, const Subspace& w) {
  if (w.dim() == 0) return Subspace::zero(s.F, s.n);
  Matrix k = left_kernel(s.restricted_gram(w.basis));
  if (k.rows == 0) return Subspace::zero(s.F, s.n);
  return Subspace::span(k * w.basis);
}

static Matrix solve_on_rows(const BilinearSpace& s, const Matrix& rows, const std::vector<Elem>& phi) {
  if (static_cast<int>(phi.size()) != rows.rows) fail(Errc::InvalidArgument, "functional size mismatch");
  if (rows.rows == 0) return Matrix(s.F, 1, s.n);
  // rows G y = phi with y = sigma(v)^T
  Matrix wg = rows * s.gram;
  Matrix b(s.F, 1, rows.rows);
  for (int i = 0; i < rows.rows; ++i) b.at(0, i) = phi[i];
  Matrix y;
  if (!solve_left(wg.transpose(), b, y)) fail(Errc::InvalidArgument, "functional is not representable");
  return s.sigma(y);
}

Matrix solve_form_functional(const BilinearSpace& s, const Subspace& w, const std::vector<Elem>& phi) {
  if (!s.nondegenerate()) fail(Errc::InvalidArgument, "form must be nondegenerate");
  return solve_on_rows(s, w.basis, phi);
}

Extension extend_to_nondegenerate(const BilinearSpace& s, const Subspace& w) {
  if (s.kind == FormKind::Symmetric && s.F->p() == 2)
    fail(Errc::CharTwoSymmetric, "symmetric forms in characteristic 2 are excluded");
  if (s.kind == FormKind::Trivial || !s.nondegenerate()) fail(Errc::InvalidArgument, "form must be nondegenerate");
  Extension ext;
  ext.rad = radical(s, w);
  int r = ext.rad.dim();
  // Complement of the radical inside W, chosen from the echelon basis of W.
  Matrix comp(s.F, 0, s.n);
  Subspace acc = ext.rad;
  for (int i = 0; i < w.dim(); ++i) {
    Matrix v = w.basis.row(i);
    if (acc.contains(v)) continue;
    comp = comp.stack(v);
    acc = sum(acc, Subspace::span(v));
  }
  ext.w_prime = comp.rows ? Subspace::span(comp) : Subspace::zero(s.F, s.n);
  Matrix rows = ext.rad.basis.stack(comp);
  Matrix wpp(s.F, 0, s.n);
  for (int i = 0; i < r; ++i) {
    std::vector<Elem> phi(rows.rows, 0);
    phi[i] = 1;
    wpp = wpp.stack(solve_on_rows(s, rows, phi));
  }
  ext.w_dblprime = r ? Subspace::span(wpp) : Subspace::zero(s.F, s.n);
  ext.u = sum(ext.w_dblprime, perp(s, w));
  return ext;
}

ExtensionCheck check_extension(const BilinearSpace& s, const Subspace& w, const Extension& ext) {
  ExtensionCheck c;
  c.dim_matches = ext.w_dblprime.dim() == radical(s, w).dim();
  bool orth = true;
  if (ext.u.dim() && ext.w_prime.dim()) {
    Matrix cross = ext.u.basis * s.gram * s.sigma(ext.w_prime.basis).transpose();
    for (Elem x : cross.a) orth = orth && x == 0;
  }
  c.orthogonal = orth;
  c.spans = sum(ext.u, ext.w_prime).dim() == s.n && ext.u.dim() + ext.w_prime.dim() == s.n;
  c.u_nondegenerate = nondegenerate_on(s, ext.u);
  c.wp_nondegenerate = nondegenerate_on(s, ext.w_prime);
  return c;
}

Subspace fixed_space(const Matrix& g) {
  Matrix k = left_kernel(Matrix::identity(g.F, g.n()) - g);
  if (k.rows == 0) return Subspace::zero(g.F, g.n());
  return Subspace::span(k);
}

FixRestriction common_fix_restriction(const Matrix& g, const Matrix& h, const BilinearSpace& s) {
  if (!s.is_isometry(g) || !s.is_isometry(h)) fail(Errc::HypothesisViolated, "g and h must be isometries");
  if (rank_length_mat(g) != jordan_length(g).value || rank_length_mat(h) != jordan_length(h).value)
    fail(Errc::HypothesisViolated, "rank length and Jordan length differ");
  FixRestriction out;
  Subspace W = intersect(fixed_space(g), fixed_space(h));
  Extension ext = extend_to_nondegenerate(s, W);
  out.u = ext.u;
  out.dim_w = W.dim();
  out.dim_rad = ext.rad.dim();
  out.dim_wpp = ext.w_dblprime.dim();
  out.dim_wperp = perp(s, W).dim();
  out.dim_u = ext.u.dim();
  Matrix I = Matrix::identity(g.F, g.n());
  out.rank_g = mat_rank(I - g);
  out.rank_h = mat_rank(I - h);
  out.bound = 2 * out.rank_g + 2 * out.rank_h;
  out.within_bound = out.dim_u <= out.bound;
  // U^perp is W', which lies in W.
  bool id = true;
  for (int i = 0; i < ext.w_prime.dim(); ++i) {
    Matrix v = ext.w_prime.basis.row(i);
    id = id && (v * g == v) && (v * h == v);
  }
  out.identity_on_complement = id && perp(s, ext.u) == ext.w_prime;
  return out;
}

}  // namespace ul::fq
