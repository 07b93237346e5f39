#pragma once

#include "ultralen/rational.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ul::fq {

using Elem = std::uint32_t;

// F_q with q = p^e. Elements are encoded as integers sum c_i p^i, where
// c_i are the coefficients of the polynomial representative.
class Field {
 public:
  static std::shared_ptr<const Field> make(int p, int e);

  int p() const { return p_; }
  int e() const { return e_; }
  std::uint32_t q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }  // c_0..c_e, monic
  Elem primitive() const { return exp_[1]; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, long long k) const;
  // x -> x^(p^k)
  Elem frob(Elem a, int k) const;

  std::vector<int> coeffs(Elem a) const;
  Elem from_coeffs(const std::vector<long long>& c) const;
  Elem from_int(long long v) const;  // image of the integer v

  bool operator==(const Field& o) const { return p_ == o.p_ && e_ == o.e_; }

 private:
  Field() = default;
  int p_ = 0, e_ = 0;
  std::uint32_t q_ = 0;
  std::vector<int> modulus_;
  std::vector<Elem> exp_;          // size 2(q-1)
  std::vector<std::uint32_t> log_;  // size q
  std::vector<Elem> neg_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(long long n);
// Monic irreducible of degree e over F_p, smallest by the integer encoding
// of its non-leading coefficients.
std::vector<int> smallest_irreducible(int p, int e);
bool poly_irreducible(int p, const std::vector<int>& monic);

struct Matrix {
  FieldPtr F;
  int rows = 0, cols = 0;
  std::vector<Elem> a;

  Matrix() = default;
  Matrix(FieldPtr f, int r, int c) : F(std::move(f)), rows(r), cols(c), a(size_t(r) * c, 0) {}
  static Matrix identity(FieldPtr f, int n);
  static Matrix scalar(FieldPtr f, int n, Elem s);

  Elem& at(int i, int j) { return a[size_t(i) * cols + j]; }
  Elem at(int i, int j) const { return a[size_t(i) * cols + j]; }
  int n() const { return rows; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix transpose() const;
  Matrix frob(int k) const;
  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  Matrix row(int i) const;
  Matrix stack(const Matrix& below) const;
};

// Row echelon data from Gaussian elimination.
struct Echelon {
  Matrix rref;
  std::vector<int> pivots;
  int rank() const { return static_cast<int>(pivots.size()); }
};

Echelon row_reduce(const Matrix& m);
int mat_rank(const Matrix& m);
// Rows spanning {x : x m = 0} (left kernel), reduced.
Matrix left_kernel(const Matrix& m);
// Rows spanning {x : m x^T = 0}, i.e. the right kernel written as rows.
Matrix right_kernel(const Matrix& m);
bool invertible(const Matrix& m);
Matrix inverse(const Matrix& m);
// Solves x A = b for a row vector x; returns false if inconsistent.
bool solve_left(const Matrix& A, const Matrix& b, Matrix& x);

struct JordanLength {
  Rat value;
  int m_g = 0;
  Elem best_alpha = 0;
};

Rat rank_length_mat(const Matrix& g);
JordanLength jordan_length(const Matrix& g);
bool is_scalar(const Matrix& g);

}  // namespace ul::fq
