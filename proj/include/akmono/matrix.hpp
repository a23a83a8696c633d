#pragma once

#include <stdexcept>
#include <vector>

#include "akmono/rational.hpp"

namespace akmono {

// Dense exact-rational matrix. Vectors are columns; A.apply(x) = A*x.
struct QMat {
  int nr = 0, nc = 0;
  std::vector<Rat> a;

  QMat() = default;
  QMat(int r, int c) : nr(r), nc(c), a(static_cast<size_t>(r) * c) {}

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * nc + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * nc + j]; }

  static QMat identity(int n);
  static QMat zero(int r, int c) { return QMat(r, c); }

  QMat operator*(const QMat& o) const;
  QMat operator+(const QMat& o) const;
  QMat operator-(const QMat& o) const;
  QMat scaled(const Rat& s) const;
  QMat transpose() const;
  QVec apply(const QVec& x) const;
  QVec apply_transpose(const QVec& x) const;  // x^t * A, returned as a vector
  bool is_zero() const;
  bool operator==(const QMat& o) const { return nr == o.nr && nc == o.nc && a == o.a; }
  Rat trace() const;

  QVec col(int j) const;
  QVec row(int i) const;
  void set_col(int j, const QVec& v);
  void set_row(int i, const QVec& v);
};

// In-place reduced row echelon form. Returns rank; pivot columns appended to
// *piv if given.
int rref(QMat& M, std::vector<int>* piv = nullptr);

int rank_of(QMat M);

// Columns of the returned matrix form a basis of {x : A x = 0}.
QMat kernel_basis(const QMat& A);

// Solves A X = B exactly; throws std::domain_error if inconsistent.
QMat solve_linear(const QMat& A, const QMat& B);

QMat inverse(const QMat& A);

// Row-space echelon data: rows form an RREF basis of the row space of the
// input; piv[i] is the pivot column of row i. A vector v in the row space
// satisfies v = sum_i v[piv[i]] * row_i.
struct Rref {
  QMat rows;
  std::vector<int> piv;
  int rank = 0;
};

Rref rref_rows(QMat rowmat);

// Repeated exact solves of A x = v for a fixed A (dim x N). Solutions are
// with respect to the original columns of A.
class SpanSolver {
 public:
  explicit SpanSolver(const QMat& A);
  int rank() const { return rank_; }
  bool contains(const QVec& v) const;
  // Any solution x with A x = v; throws std::domain_error if v not in span.
  QVec solve(const QVec& v) const;

 private:
  int dim_, n_, rank_;
  QMat R_;               // rank x dim, RREF rows spanning col space of A
  std::vector<int> piv_;  // pivot coordinates of R_ rows
  QMat T_;               // rank x N with (T A^t)_k = R_k
};

// ---- integer matrices ----

struct ZMat {
  int nr = 0, nc = 0;
  std::vector<Int> a;
  ZMat() = default;
  ZMat(int r, int c) : nr(r), nc(c), a(static_cast<size_t>(r) * c) {}
  Int& at(int i, int j) { return a[static_cast<size_t>(i) * nc + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * nc + j]; }
};

// Row-style Hermite normal form (non-negative pivots, reduced above).
struct Hnf {
  ZMat H;
  int rank = 0;
};
Hnf hnf_rows(ZMat A);

// Diagonal of the Smith normal form (nonzero entries only, d1 | d2 | ...).
std::vector<Int> snf_diag(ZMat A);

}  // namespace akmono
