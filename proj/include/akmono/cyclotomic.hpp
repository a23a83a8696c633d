#pragma once

#include <string>
#include <vector>

#include "akmono/rational.hpp"

namespace akmono {

// Cyclotomic polynomial Phi_L, integer coefficients, ascending degree.
const std::vector<Int>& cyclotomic_poly(long L);

long euler_phi(long n);

// Conductor of the field Q(zeta_L) as a field: L, except L/2 when L = 2 mod 4
// (Q(zeta_L) = Q(zeta_{L/2}) there), and 1 for L = 1, 2.
long field_conductor(long L);

// Exact element of Q(zeta_L), stored as a residue mod Phi_L. zeta_L is the
// primitive root e^{2*pi*i/L}; complex conjugation is zeta -> zeta^{-1}.
// Mixed-conductor arithmetic promotes both operands to the lcm.
class CycNum {
 public:
  CycNum() : L_(1), c_(1) {}
  explicit CycNum(const Rat& r) : L_(1), c_{r} {}
  explicit CycNum(long n) : L_(1), c_{Rat(n)} {}

  // zeta_L^k
  static CycNum zeta(long L, long k = 1);

  long conductor() const { return L_; }
  const QVec& coeffs() const { return c_; }

  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator*(const CycNum& o) const;
  CycNum operator-() const;
  CycNum inverse() const;
  CycNum operator/(const CycNum& o) const { return *this * o.inverse(); }

  CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
  CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // throws if not rational

  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  // Galois action zeta_L -> zeta_L^s; requires gcd(s, L) = 1.
  CycNum galois(long s) const;
  CycNum conj() const;

  // Canonical embedding into Q(zeta_L2); requires L | L2.
  CycNum embedded(long L2) const;

  // True iff the element lies in the subfield Q(zeta_D) (D | conductor up to
  // normalization), tested by invariance under Gal(Q(zeta_L)/Q(zeta_D)).
  bool in_subfield(long D) const;

  std::string str() const;

 private:
  long L_;
  QVec c_;  // degree < phi(L_)
  void reduce_conductor_2mod4();
};

inline CycNum operator*(const Rat& r, const CycNum& x) { return CycNum(r) * x; }

// ---- small dense matrices over cyclotomic fields ----

using CMat = std::vector<std::vector<CycNum>>;

CMat cmat_identity(int n);
CMat cmat_mul(const CMat& A, const CMat& B);
CMat cmat_add(const CMat& A, const CMat& B);
bool cmat_eq(const CMat& A, const CMat& B);
CycNum cmat_trace(const CMat& A);
CMat cmat_scal(const CycNum& s, const CMat& A);
int cmat_rank(CMat A);
// conjugate transpose
CMat cmat_star(const CMat& A);

}  // namespace akmono
