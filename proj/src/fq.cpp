#include "ultralen/fq.hpp"

#include "ultralen/errors.hpp"

#include <algorithm>

namespace ul::fq {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<int>;  // low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  int dm = static_cast<int>(m.size()) - 1;
  int lead_inv = 1;
  for (int x = 1; x < p; ++x)
    if ((m.back() * x) % p == 1) lead_inv = x;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    int shift = static_cast<int>(a.size()) - 1 - dm;
    int c = (a.back() * lead_inv) % p;
    for (int i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(r, m, p);
}

Poly decode(std::uint32_t v, int p, int e) {
  Poly c(e, 0);
  for (int i = 0; i < e; ++i) {
    c[i] = v % p;
    v /= p;
  }
  trim(c);
  return c;
}

std::uint32_t encode(const Poly& c, int p) {
  std::uint32_t v = 0, w = 1;
  for (int x : c) {
    v += static_cast<std::uint32_t>(x) * w;
    w *= p;
  }
  return v;
}

}  // namespace

bool poly_irreducible(int p, const std::vector<int>& monic) {
  int e = static_cast<int>(monic.size()) - 1;
  if (e <= 0) return false;
  if (e == 1) return true;
  // Trial division by every monic polynomial of degree 1..e/2.
  for (int d = 1; d <= e / 2; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      Poly div(d + 1, 0);
      long long c = code;
      for (int i = 0; i < d; ++i) {
        div[i] = static_cast<int>(c % p);
        c /= p;
      }
      div[d] = 1;
      if (poly_mod(monic, div, p).empty()) return false;
    }
  }
  return true;
}

std::vector<int> smallest_irreducible(int p, int e) {
  long long count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (long long code = 0; code < count; ++code) {
    Poly m(e + 1, 0);
    long long c = code;
    for (int i = 0; i < e; ++i) {
      m[i] = static_cast<int>(c % p);
      c /= p;
    }
    m[e] = 1;
    if (poly_irreducible(p, m)) return m;
  }
  fail(Errc::Internal, "no irreducible polynomial found");
}

std::shared_ptr<const Field> Field::make(int p, int e) {
  if (!is_prime(p) || e < 1) fail(Errc::InvalidArgument, "field needs prime p and e >= 1");
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > 65536) fail(Errc::InvalidArgument, "q must not exceed 2^16");
  }
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->e_ = e;
  f->q_ = static_cast<std::uint32_t>(q);
  f->modulus_ = smallest_irreducible(p, e);
  if (!poly_irreducible(p, f->modulus_)) fail(Errc::Internal, "modulus not irreducible");

  std::vector<long long> primes;
  long long m = q - 1;
  for (long long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) primes.push_back(m);

  auto powmod = [&](const Poly& base, long long k) {
    Poly r{1}, b = base;
    while (k > 0) {
      if (k & 1) r = poly_mulmod(r, b, f->modulus_, p);
      b = poly_mulmod(b, b, f->modulus_, p);
      k >>= 1;
    }
    return r;
  };
  std::uint32_t gen = 0;
  if (q == 2) {
    gen = 1;
  } else {
    for (std::uint32_t cand = 2; cand < q; ++cand) {
      Poly c = decode(cand, p, e);
      bool ok = true;
      for (long long r : primes) {
        Poly t = powmod(c, (q - 1) / r);
        if (t.size() == 1 && t[0] == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        gen = cand;
        break;
      }
    }
  }
  if (gen == 0) fail(Errc::Internal, "no primitive element");
  f->exp_.assign(2 * (q - 1), 0);
  f->log_.assign(q, 0);
  Poly cur{1};
  Poly g = decode(gen, p, e);
  for (long long i = 0; i < q - 1; ++i) {
    std::uint32_t v = encode(cur, p);
    f->exp_[i] = v;
    f->exp_[i + q - 1] = v;
    f->log_[v] = static_cast<std::uint32_t>(i);
    cur = poly_mulmod(cur, g, f->modulus_, p);
  }
  f->neg_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    Poly c = decode(a, p, e);
    for (auto& x : c) x = (p - x) % p;
    f->neg_[a] = encode(c, p);
  }
  return f;
}

Elem Field::add(Elem a, Elem b) const {
  if (e_ == 1) return (a + b) % p_;
  if (p_ == 2) return a ^ b;
  Elem r = 0, w = 1;
  while (a > 0 || b > 0) {
    r += ((a % p_ + b % p_) % p_) * w;
    a /= p_;
    b /= p_;
    w *= p_;
  }
  return r;
}

Elem Field::neg(Elem a) const { return neg_[a]; }

Elem Field::inv(Elem a) const {
  if (a == 0) fail(Errc::Singular, "inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, long long k) const {
  if (a == 0) return k == 0 ? 1 : 0;
  long long l = static_cast<long long>(log_[a]) * (k % (q_ - 1) + (q_ - 1));
  return exp_[l % (q_ - 1)];
}

Elem Field::frob(Elem a, int k) const {
  long long pk = 1;
  for (int i = 0; i < k; ++i) pk *= p_;
  return pow(a, pk);
}

std::vector<int> Field::coeffs(Elem a) const {
  std::vector<int> c(e_, 0);
  for (int i = 0; i < e_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Elem Field::from_coeffs(const std::vector<long long>& c) const {
  if (static_cast<int>(c.size()) > e_) fail(Errc::InvalidArgument, "too many coefficients");
  Elem v = 0, w = 1;
  for (long long x : c) {
    v += static_cast<Elem>(((x % p_) + p_) % p_) * w;
    w *= p_;
  }
  return v;
}

Elem Field::from_int(long long v) const { return static_cast<Elem>(((v % p_) + p_) % p_); }

Matrix Matrix::identity(FieldPtr f, int n) { return scalar(std::move(f), n, 1); }

Matrix Matrix::scalar(FieldPtr f, int n, Elem s) {
  Matrix m(std::move(f), n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = s;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols != o.rows) fail(Errc::InvalidArgument, "dimension mismatch in product");
  Matrix r(F, rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      Elem x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) = F->add(r.at(i, j), F->mul(x, o.at(k, j)));
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r(F, rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = F->add(a[i], o.a[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r(F, rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = F->sub(a[i], o.a[i]);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(F, cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::frob(int k) const {
  Matrix r = *this;
  for (auto& x : r.a) x = F->frob(x, k);
  return r;
}

Matrix Matrix::row(int i) const {
  Matrix r(F, 1, cols);
  for (int j = 0; j < cols; ++j) r.at(0, j) = at(i, j);
  return r;
}

Matrix Matrix::stack(const Matrix& below) const {
  if (rows == 0) return below;
  if (below.rows == 0) return *this;
  Matrix r(F, rows + below.rows, cols);
  std::copy(a.begin(), a.end(), r.a.begin());
  std::copy(below.a.begin(), below.a.end(), r.a.begin() + a.size());
  return r;
}

Echelon row_reduce(const Matrix& m) {
  Echelon e;
  e.rref = m;
  Matrix& r = e.rref;
  const Field& F = *m.F;
  int row = 0;
  for (int col = 0; col < r.cols && row < r.rows; ++col) {
    int piv = -1;
    for (int i = row; i < r.rows; ++i)
      if (r.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(row, j));
    Elem inv = F.inv(r.at(row, col));
    for (int j = 0; j < r.cols; ++j) r.at(row, j) = F.mul(r.at(row, j), inv);
    for (int i = 0; i < r.rows; ++i) {
      if (i == row || r.at(i, col) == 0) continue;
      Elem f = F.neg(r.at(i, col));
      for (int j = 0; j < r.cols; ++j) r.at(i, j) = F.add(r.at(i, j), F.mul(f, r.at(row, j)));
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

int mat_rank(const Matrix& m) { return row_reduce(m).rank(); }

Matrix right_kernel(const Matrix& m) {
  Echelon e = row_reduce(m);
  const Field& F = *m.F;
  std::vector<char> is_piv(m.cols, 0);
  for (int c : e.pivots) is_piv[c] = 1;
  int dim = m.cols - e.rank();
  Matrix k(m.F, dim, m.cols);
  int idx = 0;
  for (int free = 0; free < m.cols; ++free) {
    if (is_piv[free]) continue;
    k.at(idx, free) = 1;
    for (int i = 0; i < e.rank(); ++i) k.at(idx, e.pivots[i]) = F.neg(e.rref.at(i, free));
    ++idx;
  }
  return row_reduce(k).rref;
}

Matrix left_kernel(const Matrix& m) { return right_kernel(m.transpose()); }

bool invertible(const Matrix& m) { return m.rows == m.cols && mat_rank(m) == m.rows; }

Matrix inverse(const Matrix& m) {
  if (m.rows != m.cols) fail(Errc::InvalidArgument, "inverse of non-square matrix");
  int n = m.rows;
  Matrix aug(m.F, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  Echelon e = row_reduce(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) fail(Errc::Singular, "matrix is singular");
  Matrix r(m.F, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = e.rref.at(i, n + j);
  return r;
}

bool solve_left(const Matrix& A, const Matrix& b, Matrix& x) {
  // x A = b  <=>  A^T x^T = b^T
  int n = A.rows, m = A.cols;
  Matrix aug(A.F, m, n + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(j, i);
    aug.at(i, n) = b.at(0, i);
  }
  Echelon e = row_reduce(aug);
  x = Matrix(A.F, 1, n);
  for (int i = 0; i < e.rank(); ++i) {
    int c = e.pivots[i];
    if (c == n) return false;
    x.at(0, c) = e.rref.at(i, n);
  }
  return true;
}

Rat rank_length_mat(const Matrix& g) {
  if (!invertible(g)) fail(Errc::Singular, "rank length needs an invertible matrix");
  return Rat(mat_rank(Matrix::identity(g.F, g.n()) - g), g.n());
}

JordanLength jordan_length(const Matrix& g) {
  if (!invertible(g)) fail(Errc::Singular, "Jordan length needs an invertible matrix");
  JordanLength best;
  best.m_g = -1;
  int n = g.n();
  // Scalars in increasing encoding order; strict improvement keeps the smallest alpha.
  for (Elem alpha = 1; alpha < g.F->q(); ++alpha) {
    int k = n - mat_rank(Matrix::scalar(g.F, n, alpha) - g);
    if (k > best.m_g) {
      best.m_g = k;
      best.best_alpha = alpha;
    }
  }
  best.value = Rat(n - best.m_g, n);
  return best;
}

bool is_scalar(const Matrix& g) {
  for (int i = 0; i < g.rows; ++i)
    for (int j = 0; j < g.cols; ++j) {
      if (i != j && g.at(i, j) != 0) return false;
      if (i == j && g.at(i, j) != g.at(0, 0)) return false;
    }
  return true;
}

}  // namespace ul::fq
