#include "akmono/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace akmono {

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      r -= r / p;
      while (n % p == 0) n /= p;
    }
  if (n > 1) r -= r / n;
  return r;
}

long field_conductor(long L) {
  if (L <= 2) return 1;
  if (L % 4 == 2) return L / 2;
  return L;
}

namespace {

using ZPoly = std::vector<Int>;

// (x^L - 1) / prod_{d | L, d < L} Phi_d, exact integer division.
ZPoly compute_cyclotomic(long L, const std::map<long, ZPoly>& lower) {
  ZPoly num(L + 1);
  num[0] = -1;
  num[L] = 1;
  for (long d = 1; d < L; ++d) {
    if (L % d != 0) continue;
    const ZPoly& q = lower.at(d);
    // num /= q  (q monic)
    ZPoly res(num.size() - q.size() + 1);
    for (int i = static_cast<int>(res.size()) - 1; i >= 0; --i) {
      Int c = num[i + q.size() - 1];
      res[i] = c;
      if (c == 0) continue;
      for (size_t j = 0; j < q.size(); ++j) num[i + j] -= c * q[j];
    }
    num = res;
  }
  return num;
}

std::map<long, ZPoly>& phi_cache() {
  static std::map<long, ZPoly> cache;
  return cache;
}
std::mutex& phi_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

const std::vector<Int>& cyclotomic_poly(long L) {
  std::lock_guard<std::mutex> lock(phi_mutex());
  auto& cache = phi_cache();
  auto it = cache.find(L);
  if (it != cache.end()) return it->second;
  for (long d = 1; d <= L; ++d)
    if (L % d == 0 && !cache.count(d)) cache[d] = compute_cyclotomic(d, cache);
  return cache.at(L);
}

namespace {

// reduce polynomial (ascending coeffs) mod Phi_L in place, truncate to deg < phi(L)
void reduce_mod_phi(QVec& p, long L) {
  const auto& phi = cyclotomic_poly(L);
  const size_t deg = phi.size() - 1;  // = euler_phi(L)
  for (size_t i = p.size(); i-- > deg;) {
    const Rat c = p[i];
    if (c == 0) continue;
    p[i] = 0;
    for (size_t j = 0; j < deg; ++j) p[i - deg + j] -= c * phi[j];
  }
  p.resize(deg);
}

long lcm_l(long a, long b) { return a / std::gcd(a, b) * b; }

}  // namespace

void CycNum::reduce_conductor_2mod4() {
  // Keep representations canonical enough for equality via common embedding;
  // no aggressive conductor minimization needed.
}

CycNum CycNum::zeta(long L, long k) {
  if (L < 1) throw std::invalid_argument("zeta: L >= 1");
  k %= L;
  if (k < 0) k += L;
  CycNum z;
  z.L_ = L;
  z.c_.assign(euler_phi(L), Rat(0));
  QVec p(static_cast<size_t>(k) + 1);
  p[k] = 1;
  reduce_mod_phi(p, L);
  z.c_ = p;
  return z;
}

CycNum CycNum::embedded(long L2) const {
  if (L2 % L_ != 0) throw std::invalid_argument("embedded: conductor mismatch");
  if (L2 == L_) return *this;
  const long t = L2 / L_;
  QVec p(static_cast<size_t>((c_.size() - 1)) * t + 1, Rat(0));
  if (c_.empty()) p.assign(1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) p[i * t] = c_[i];
  reduce_mod_phi(p, L2);
  CycNum r;
  r.L_ = L2;
  r.c_ = p;
  return r;
}

CycNum CycNum::operator+(const CycNum& o) const {
  long L = lcm_l(L_, o.L_);
  CycNum a = embedded(L), b = o.embedded(L);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

CycNum CycNum::operator-(const CycNum& o) const {
  long L = lcm_l(L_, o.L_);
  CycNum a = embedded(L), b = o.embedded(L);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
  return a;
}

CycNum CycNum::operator-() const {
  CycNum a = *this;
  for (auto& x : a.c_) x = -x;
  return a;
}

CycNum CycNum::operator*(const CycNum& o) const {
  long L = lcm_l(L_, o.L_);
  CycNum a = embedded(L), b = o.embedded(L);
  QVec p(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) p[i + j] += a.c_[i] * b.c_[j];
  }
  reduce_mod_phi(p, L);
  CycNum r;
  r.L_ = L;
  r.c_ = p;
  return r;
}

bool CycNum::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat CycNum::rational_value() const {
  if (!is_rational()) throw std::domain_error("not rational: " + str());
  return c_.empty() ? Rat(0) : c_[0];
}

bool CycNum::operator==(const CycNum& o) const {
  long L = lcm_l(L_, o.L_);
  CycNum a = embedded(L), b = o.embedded(L);
  return a.c_ == b.c_;
}

CycNum CycNum::galois(long s) const {
  s %= L_;
  if (s < 0) s += L_;
  if (std::gcd(s, L_) != 1) throw std::invalid_argument("galois: s not a unit");
  QVec p(static_cast<size_t>(L_), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    p[(i * static_cast<size_t>(s)) % L_] += c_[i];
  }
  reduce_mod_phi(p, L_);
  CycNum r;
  r.L_ = L_;
  r.c_ = p;
  return r;
}

CycNum CycNum::conj() const { return galois(L_ - 1 == 0 ? 1 : L_ - 1); }

namespace {

// polynomial helpers over Q, coefficients ascending
QVec poly_mod(QVec a, const QVec& b) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  QVec m = b;
  while (!m.empty() && m.back() == 0) m.pop_back();
  if (m.empty()) throw std::domain_error("poly_mod by zero");
  while (a.size() >= m.size()) {
    Rat c = a.back() / m.back();
    size_t off = a.size() - m.size();
    for (size_t j = 0; j < m.size(); ++j) a[off + j] -= c * m[j];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

}  // namespace

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) {
    CycNum r;
    r.L_ = L_;
    r.c_.assign(c_.size(), Rat(0));
    r.c_[0] = 1 / c_[0];
    return r;
  }
  // extended Euclid: u * self + v * Phi_L = gcd (a nonzero rational)
  const auto& phiI = cyclotomic_poly(L_);
  QVec r0(phiI.begin(), phiI.end());
  QVec r1 = c_;
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  QVec s0{}, s1{Rat(1)};  // coefficients of self
  while (true) {
    // r0 = q*r1 + r2
    QVec q;
    QVec rem = r0;
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.size() >= r1.size()) {
      q.assign(rem.size() - r1.size() + 1, Rat(0));
      while (rem.size() >= r1.size() && !rem.empty()) {
        Rat c = rem.back() / r1.back();
        size_t off = rem.size() - r1.size();
        q[off] += c;
        for (size_t j = 0; j < r1.size(); ++j) rem[off + j] -= c * r1[j];
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
      }
    }
    QVec r2 = rem;
    // s2 = s0 - q*s1
    QVec s2 = s0;
    if (s2.size() < q.size() + s1.size()) s2.resize(q.size() + s1.size(), Rat(0));
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    if (r2.empty()) break;
    if (r2.size() == 1) {
      // gcd reached: inverse = s2 / r2[0]
      for (auto& x : s2) x /= r2[0];
      QVec p = s2;
      reduce_mod_phi(p, L_);
      CycNum out;
      out.L_ = L_;
      out.c_ = p;
      return out;
    }
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  throw std::domain_error("inverse: zero divisor (unexpected)");
}

bool CycNum::in_subfield(long D) const {
  const long L = L_;
  const long Dn = field_conductor(D);
  for (long s = 1; s < L; ++s) {
    if (std::gcd(s, L) != 1) continue;
    if ((Dn == 1) || (s % Dn == 1 % Dn)) {
      if (!(galois(s) == *this)) return false;
    }
  }
  return true;
}

std::string CycNum::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].get_str();
    if (i > 0) os << "*z" << L_ << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

CMat cmat_identity(int n) {
  CMat A(n, std::vector<CycNum>(n));
  for (int i = 0; i < n; ++i) A[i][i] = CycNum(Rat(1));
  return A;
}

CMat cmat_mul(const CMat& A, const CMat& B) {
  int n = static_cast<int>(A.size()), m = static_cast<int>(B[0].size()),
      k = static_cast<int>(B.size());
  CMat C(n, std::vector<CycNum>(m));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      if (A[i][l].is_zero()) continue;
      for (int j = 0; j < m; ++j)
        if (!B[l][j].is_zero()) C[i][j] += A[i][l] * B[l][j];
    }
  return C;
}

CMat cmat_add(const CMat& A, const CMat& B) {
  CMat C = A;
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < A[0].size(); ++j) C[i][j] += B[i][j];
  return C;
}

bool cmat_eq(const CMat& A, const CMat& B) {
  if (A.size() != B.size()) return false;
  for (size_t i = 0; i < A.size(); ++i) {
    if (A[i].size() != B[i].size()) return false;
    for (size_t j = 0; j < A[i].size(); ++j)
      if (A[i][j] != B[i][j]) return false;
  }
  return true;
}

CycNum cmat_trace(const CMat& A) {
  CycNum t;
  for (size_t i = 0; i < A.size(); ++i) t += A[i][i];
  return t;
}

CMat cmat_scal(const CycNum& s, const CMat& A) {
  CMat C = A;
  for (auto& row : C)
    for (auto& x : row) x = s * x;
  return C;
}

int cmat_rank(CMat A) {
  if (A.empty()) return 0;
  int nr = static_cast<int>(A.size()), nc = static_cast<int>(A[0].size());
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int p = -1;
    for (int i = r; i < nr; ++i)
      if (!A[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(A[p], A[r]);
    CycNum inv = A[r][c].inverse();
    for (int j = c; j < nc; ++j) A[r][j] = inv * A[r][j];
    for (int i = 0; i < nr; ++i) {
      if (i == r || A[i][c].is_zero()) continue;
      CycNum f = A[i][c];
      for (int j = c; j < nc; ++j) A[i][j] -= f * A[r][j];
    }
    ++r;
  }
  return r;
}

CMat cmat_star(const CMat& A) {
  int n = static_cast<int>(A.size()), m = static_cast<int>(A[0].size());
  CMat C(m, std::vector<CycNum>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) C[j][i] = A[i][j].conj();
  return C;
}

}  // namespace akmono
