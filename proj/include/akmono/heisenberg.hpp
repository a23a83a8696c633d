#pragma once

#include <array>
#include <string>
#include <vector>

#include "akmono/cyclotomic.hpp"
#include "akmono/rational.hpp"

namespace akmono {

// Element of the finite Heisenberg group H(Z/mZ) in the normal form
// s^a t^b z^c, where s, t are the standard generators and z = [s, t] is
// central. Multiplication follows
//   s^a t^b z^c * s^a' t^b' z^c' = s^(a+a') t^(b+b') z^(c+c'-b*a').
struct HElem {
  int m = 1;
  int a = 0, b = 0, c = 0;

  HElem() = default;
  HElem(int m_, int a_, int b_, int c_);

  static HElem identity(int m) { return HElem(m, 0, 0, 0); }
  static HElem sigma(int m) { return HElem(m, 1, 0, 0); }
  static HElem tau(int m) { return HElem(m, 0, 1, 0); }
  static HElem zeta(int m) { return HElem(m, 0, 0, 1); }

  int index() const { return (a * m + b) * m + c; }
  static HElem from_index(int m, int idx);

  HElem operator*(const HElem& o) const;
  HElem inverse() const;
  HElem pow(long k) const;
  bool is_identity() const { return a == 0 && b == 0 && c == 0; }
  bool operator==(const HElem& o) const {
    return m == o.m && a == o.a && b == o.b && c == o.c;
  }
  std::string str() const;
};

// Exact Q-linear combination of Heisenberg group elements.
struct GrElem {
  int m = 1;
  QVec co;  // indexed by HElem::index()

  GrElem() = default;
  explicit GrElem(int m_) : m(m_), co(static_cast<size_t>(m_) * m_ * m_) {}

  static GrElem zero(int m) { return GrElem(m); }
  static GrElem unit(int m);
  static GrElem of(const HElem& g, const Rat& c = Rat(1));

  int order() const { return m * m * m; }
  const Rat& coeff(const HElem& g) const { return co[g.index()]; }

  GrElem operator+(const GrElem& o) const;
  GrElem operator-(const GrElem& o) const;
  GrElem operator*(const GrElem& o) const;
  GrElem operator-() const;
  GrElem scaled(const Rat& s) const;
  GrElem& operator+=(const GrElem& o);
  GrElem bar() const;  // involution induced by g -> g^{-1}
  bool is_zero() const;
  bool operator==(const GrElem& o) const { return m == o.m && co == o.co; }
  std::string str() const;
};

GrElem gr_mul(const HElem& g, const GrElem& x);  // g * x
GrElem gr_mul(const GrElem& x, const HElem& g);  // x * g

// Pi_na = m - (1 + z + ... + z^{m-1}); projects (after division by m) onto the
// nonabelian part of Q[H].
GrElem pi_na(int m);

// Irreducible complex representation rho_{a,b,c} of H(Z/mZ) of dimension k:
//   rho(s) = zeta_m^a * (cyclic shift),
//   rho(t) = zeta_m^b * diag(1, zeta_k^c, ..., zeta_k^{(k-1)c}),
//   rho(z) = zeta_k^{-c} * I,
// with k | m, a, b in Z/(m/k)Z and c a unit mod k.
struct Irrep {
  int m = 1, k = 1, a = 0, b = 0, c = 1;
  CMat Ms, Mt, Mz;
  std::vector<CMat> pow_s, pow_t;  // cached powers 0..m-1
  std::vector<CycNum> pow_z;

  int dim() const { return k; }
  CMat rho(const HElem& g) const;
  CMat rho(const GrElem& x) const;
  CycNum character(const HElem& g) const;
  bool abelian() const { return k == 1; }
  std::string name() const;
};

Irrep make_irrep(int m, int k, int a, int b, int c);

// All irreducible complex representations, in a fixed deterministic order
// (k ascending, then (a, b, c) lexicographic).
std::vector<Irrep> complex_census(int m);

// Conductor L = lcm(k, (m/k)/gcd(a,b,m/k)) of the trace field Q(chi);
// verified against the field generated by the character values.
long trace_field(const Irrep& r);

// (nontrivial, zeta_order): dimension of the tau-fixed subspace computed from
// the matrices; when nontrivial, the multiplicative order of rho(z) on it.
std::pair<bool, long> tau_invariant_flag(const Irrep& r);

struct WeddFactor {
  int k = 1;                                // matrix size
  std::vector<std::array<int, 3>> orbit;    // Galois orbit of (a,b,c) labels
  long L = 1;                               // trace-field conductor (formula value)
  long Lfield = 1;                          // normalized field conductor
  bool abelian = false;
  bool tau_nontrivial = false;              // b = 0 on the orbit
  std::string field_str;                    // e.g. "Q", "Q(z3)"
  std::string str() const;                  // e.g. "M2(Q(z3))"
};

struct WedderburnReport {
  int m = 1;
  std::vector<WeddFactor> factors;  // deterministic order
  std::vector<WeddFactor> nonabelian_factors() const;
};

WedderburnReport wedderburn(int m);

// Primitive central idempotents of Q[H], aligned with wedderburn(m).factors.
std::vector<GrElem> central_idempotents(int m);

// Wedderburn factors of Q[Z/mZ]: one (k, field conductor) per divisor k | m.
std::vector<std::pair<long, long>> cyclic_wedderburn(long m);

// Exact character inner product <chi_1, chi_2> over the complex irreps.
CycNum character_inner(const Irrep& r1, const Irrep& r2);

std::vector<long> divisors(long m);

}  // namespace akmono
