#include "akmono/matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace akmono {

Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::operator*(const QMat& o) const {
  if (nc != o.nr) throw std::invalid_argument("QMat mul shape");
  QMat r(nr, o.nc);
  for (int i = 0; i < nr; ++i)
    for (int k = 0; k < nc; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.nc; ++j) {
        const Rat& y = o.at(k, j);
        if (y != 0) r.at(i, j) += x * y;
      }
    }
  return r;
}

QMat QMat::operator+(const QMat& o) const {
  QMat r(nr, nc);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
  return r;
}

QMat QMat::operator-(const QMat& o) const {
  QMat r(nr, nc);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
  return r;
}

QMat QMat::scaled(const Rat& s) const {
  QMat r(nr, nc);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] * s;
  return r;
}

QMat QMat::transpose() const {
  QMat r(nc, nr);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) r.at(j, i) = at(i, j);
  return r;
}

QVec QMat::apply(const QVec& x) const {
  if (static_cast<int>(x.size()) != nc) throw std::invalid_argument("QMat apply shape");
  QVec r(nr);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j)
      if (at(i, j) != 0 && x[j] != 0) r[i] += at(i, j) * x[j];
  return r;
}

QVec QMat::apply_transpose(const QVec& x) const {
  if (static_cast<int>(x.size()) != nr) throw std::invalid_argument("QMat applyT shape");
  QVec r(nc);
  for (int i = 0; i < nr; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < nc; ++j)
      if (at(i, j) != 0) r[j] += x[i] * at(i, j);
  }
  return r;
}

bool QMat::is_zero() const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

Rat QMat::trace() const {
  Rat t;
  for (int i = 0; i < std::min(nr, nc); ++i) t += at(i, i);
  return t;
}

QVec QMat::col(int j) const {
  QVec v(nr);
  for (int i = 0; i < nr; ++i) v[i] = at(i, j);
  return v;
}

QVec QMat::row(int i) const {
  QVec v(nc);
  for (int j = 0; j < nc; ++j) v[j] = at(i, j);
  return v;
}

void QMat::set_col(int j, const QVec& v) {
  for (int i = 0; i < nr; ++i) at(i, j) = v[i];
}

void QMat::set_row(int i, const QVec& v) {
  for (int j = 0; j < nc; ++j) at(i, j) = v[j];
}

namespace {
// Pivot size heuristic: prefer entries with small numerator/denominator.
size_t rat_size(const Rat& x) {
  return mpz_sizeinbase(x.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(x.get_den().get_mpz_t(), 2);
}
}  // namespace

int rref(QMat& M, std::vector<int>* piv) {
  int r = 0;
  for (int c = 0; c < M.nc && r < M.nr; ++c) {
    int best = -1;
    size_t bsz = 0;
    for (int i = r; i < M.nr; ++i) {
      if (M.at(i, c) != 0) {
        size_t sz = rat_size(M.at(i, c));
        if (best < 0 || sz < bsz) {
          best = i;
          bsz = sz;
        }
      }
    }
    if (best < 0) continue;
    if (best != r)
      for (int j = 0; j < M.nc; ++j) std::swap(M.at(r, j), M.at(best, j));
    Rat inv = 1 / M.at(r, c);
    for (int j = c; j < M.nc; ++j)
      if (M.at(r, j) != 0) M.at(r, j) *= inv;
    for (int i = 0; i < M.nr; ++i) {
      if (i == r) continue;
      const Rat f = M.at(i, c);
      if (f == 0) continue;
      for (int j = c; j < M.nc; ++j)
        if (M.at(r, j) != 0) M.at(i, j) -= f * M.at(r, j);
    }
    if (piv) piv->push_back(c);
    ++r;
  }
  return r;
}

int rank_of(QMat M) { return rref(M); }

QMat kernel_basis(const QMat& A) {
  QMat M = A;
  std::vector<int> piv;
  int r = rref(M, &piv);
  std::vector<bool> ispiv(A.nc, false);
  for (int c : piv) ispiv[c] = true;
  QMat K(A.nc, A.nc - r);
  int k = 0;
  for (int c = 0; c < A.nc; ++c) {
    if (ispiv[c]) continue;
    K.at(c, k) = 1;
    for (int i = 0; i < r; ++i) K.at(piv[i], k) = -M.at(i, c);
    ++k;
  }
  return K;
}

QMat solve_linear(const QMat& A, const QMat& B) {
  if (A.nr != B.nr) throw std::invalid_argument("solve shape");
  QMat M(A.nr, A.nc + B.nc);
  for (int i = 0; i < A.nr; ++i) {
    for (int j = 0; j < A.nc; ++j) M.at(i, j) = A.at(i, j);
    for (int j = 0; j < B.nc; ++j) M.at(i, A.nc + j) = B.at(i, j);
  }
  std::vector<int> piv;
  rref(M, &piv);
  for (int c : piv)
    if (c >= A.nc) throw std::domain_error("inconsistent linear system");
  QMat X(A.nc, B.nc);
  for (size_t i = 0; i < piv.size(); ++i)
    for (int j = 0; j < B.nc; ++j) X.at(piv[i], j) = M.at(static_cast<int>(i), A.nc + j);
  return X;
}

QMat inverse(const QMat& A) {
  if (A.nr != A.nc) throw std::invalid_argument("inverse shape");
  QMat X = solve_linear(A, QMat::identity(A.nr));
  return X;
}

Rref rref_rows(QMat rowmat) {
  Rref out;
  out.rank = rref(rowmat, &out.piv);
  QMat R(out.rank, rowmat.nc);
  for (int i = 0; i < out.rank; ++i)
    for (int j = 0; j < rowmat.nc; ++j) R.at(i, j) = rowmat.at(i, j);
  out.rows = std::move(R);
  return out;
}

SpanSolver::SpanSolver(const QMat& A) : dim_(A.nr), n_(A.nc) {
  // Row-reduce A^t while tracking the transform back to original columns.
  QMat M(n_, dim_ + n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < dim_; ++j) M.at(i, j) = A.at(j, i);
    M.at(i, dim_ + i) = 1;
  }
  // Eliminate only over the first dim_ columns.
  int r = 0;
  std::vector<int> piv;
  for (int c = 0; c < dim_ && r < n_; ++c) {
    int best = -1;
    for (int i = r; i < n_; ++i)
      if (M.at(i, c) != 0) {
        best = i;
        break;
      }
    if (best < 0) continue;
    if (best != r)
      for (int j = 0; j < M.nc; ++j) std::swap(M.at(r, j), M.at(best, j));
    Rat inv = 1 / M.at(r, c);
    for (int j = 0; j < M.nc; ++j)
      if (M.at(r, j) != 0) M.at(r, j) *= inv;
    for (int i = 0; i < n_; ++i) {
      if (i == r) continue;
      const Rat f = M.at(i, c);
      if (f == 0) continue;
      for (int j = 0; j < M.nc; ++j)
        if (M.at(r, j) != 0) M.at(i, j) -= f * M.at(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  rank_ = r;
  piv_ = piv;
  R_ = QMat(r, dim_);
  T_ = QMat(r, n_);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < dim_; ++j) R_.at(i, j) = M.at(i, j);
    for (int j = 0; j < n_; ++j) T_.at(i, j) = M.at(i, dim_ + j);
  }
}

bool SpanSolver::contains(const QVec& v) const {
  QVec res = v;
  for (int k = 0; k < rank_; ++k) {
    const Rat c = res[piv_[k]];
    if (c == 0) continue;
    for (int j = 0; j < dim_; ++j)
      if (R_.at(k, j) != 0) res[j] -= c * R_.at(k, j);
  }
  for (const auto& x : res)
    if (x != 0) return false;
  return true;
}

QVec SpanSolver::solve(const QVec& v) const {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("SpanSolver dim");
  QVec coef(rank_);
  QVec res = v;
  for (int k = 0; k < rank_; ++k) {
    const Rat c = res[piv_[k]];
    coef[k] = c;
    if (c == 0) continue;
    for (int j = 0; j < dim_; ++j)
      if (R_.at(k, j) != 0) res[j] -= c * R_.at(k, j);
  }
  for (const auto& x : res)
    if (x != 0) throw std::domain_error("vector not in span");
  QVec lam(n_);
  for (int k = 0; k < rank_; ++k) {
    if (coef[k] == 0) continue;
    for (int j = 0; j < n_; ++j)
      if (T_.at(k, j) != 0) lam[j] += coef[k] * T_.at(k, j);
  }
  return lam;
}

Hnf hnf_rows(ZMat A) {
  int r = 0;
  for (int c = 0; c < A.nc && r < A.nr; ++c) {
    // gcd-reduce column c below row r
    while (true) {
      int nz = -1;
      for (int i = r; i < A.nr; ++i)
        if (A.at(i, c) != 0 && (nz < 0 || cmp(abs(A.at(i, c)), abs(A.at(nz, c))) < 0)) nz = i;
      if (nz < 0) break;
      if (nz != r)
        for (int j = 0; j < A.nc; ++j) std::swap(A.at(r, j), A.at(nz, j));
      bool done = true;
      for (int i = r + 1; i < A.nr; ++i) {
        if (A.at(i, c) == 0) continue;
        Int q = A.at(i, c) / A.at(r, c);  // truncated division is fine here
        if (q != 0)
          for (int j = 0; j < A.nc; ++j) A.at(i, j) -= q * A.at(r, j);
        if (A.at(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (A.at(r, c) == 0) continue;
    if (A.at(r, c) < 0)
      for (int j = 0; j < A.nc; ++j) A.at(r, j) = -A.at(r, j);
    // reduce rows above
    for (int i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), A.at(i, c).get_mpz_t(), A.at(r, c).get_mpz_t());
      if (q != 0)
        for (int j = 0; j < A.nc; ++j) A.at(i, j) -= q * A.at(r, j);
    }
    ++r;
  }
  Hnf out;
  out.rank = r;
  out.H = ZMat(r, A.nc);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < A.nc; ++j) out.H.at(i, j) = A.at(i, j);
  return out;
}

std::vector<Int> snf_diag(ZMat A) {
  std::vector<Int> d;
  int top = 0;
  while (top < A.nr && top < A.nc) {
    // find nonzero entry with minimal absolute value in A[top:, top:]
    int pi = -1, pj = -1;
    for (int i = top; i < A.nr; ++i)
      for (int j = top; j < A.nc; ++j)
        if (A.at(i, j) != 0 &&
            (pi < 0 || cmp(abs(A.at(i, j)), abs(A.at(pi, pj))) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    if (pi != top)
      for (int j = 0; j < A.nc; ++j) std::swap(A.at(top, j), A.at(pi, j));
    if (pj != top)
      for (int i = 0; i < A.nr; ++i) std::swap(A.at(i, top), A.at(i, pj));
    bool clean = true;
    for (int i = top + 1; i < A.nr; ++i) {
      if (A.at(i, top) == 0) continue;
      Int q = A.at(i, top) / A.at(top, top);
      for (int j = 0; j < A.nc; ++j) A.at(i, j) -= q * A.at(top, j);
      if (A.at(i, top) != 0) clean = false;
    }
    for (int j = top + 1; j < A.nc; ++j) {
      if (A.at(top, j) == 0) continue;
      Int q = A.at(top, j) / A.at(top, top);
      for (int i = 0; i < A.nr; ++i) A.at(i, j) -= q * A.at(i, top);
      if (A.at(top, j) != 0) clean = false;
    }
    if (!clean) continue;
    // enforce divisibility
    bool divides = true;
    for (int i = top + 1; i < A.nr && divides; ++i)
      for (int j = top + 1; j < A.nc && divides; ++j)
        if (A.at(i, j) % A.at(top, top) != 0) {
          for (int jj = 0; jj < A.nc; ++jj) A.at(top, jj) += A.at(i, jj);
          divides = false;
        }
    if (!divides) continue;
    if (A.at(top, top) < 0) A.at(top, top) = -A.at(top, top);
    d.push_back(A.at(top, top));
    ++top;
  }
  return d;
}

}  // namespace akmono
