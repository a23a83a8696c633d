#include "akmono/heisenberg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace akmono {

namespace {
int mmod(long x, int m) {
  long r = x % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}
}  // namespace

HElem::HElem(int m_, int a_, int b_, int c_)
    : m(m_), a(mmod(a_, m_)), b(mmod(b_, m_)), c(mmod(c_, m_)) {
  if (m_ < 1) throw std::invalid_argument("HElem: m >= 1 required");
}

HElem HElem::from_index(int m, int idx) {
  return HElem(m, idx / (m * m), (idx / m) % m, idx % m);
}

HElem HElem::operator*(const HElem& o) const {
  if (m != o.m) throw std::invalid_argument("HElem mul: mismatched m");
  return HElem(m, a + o.a, b + o.b, c + o.c - b * o.a);
}

HElem HElem::inverse() const { return HElem(m, -a, -b, -c - a * b); }

HElem HElem::pow(long k) const {
  HElem r = identity(m), x = *this;
  long n = k >= 0 ? k : -k;
  while (n > 0) {
    if (n & 1) r = r * x;
    x = x * x;
    n >>= 1;
  }
  return k >= 0 ? r : r.inverse();
}

std::string HElem::str() const {
  std::ostringstream os;
  if (is_identity()) return "1";
  bool first = true;
  auto put = [&](const char* n, int e) {
    if (e == 0) return;
    if (!first) os << "*";
    first = false;
    os << n;
    if (e != 1) os << "^" << e;
  };
  put("s", a);
  put("t", b);
  put("z", c);
  return os.str();
}

GrElem GrElem::unit(int m) {
  GrElem x(m);
  x.co[HElem::identity(m).index()] = 1;
  return x;
}

GrElem GrElem::of(const HElem& g, const Rat& c) {
  GrElem x(g.m);
  x.co[g.index()] = c;
  return x;
}

GrElem GrElem::operator+(const GrElem& o) const {
  if (m != o.m) throw std::invalid_argument("GrElem add: mismatched m");
  GrElem r = *this;
  for (size_t i = 0; i < co.size(); ++i) r.co[i] += o.co[i];
  return r;
}

GrElem& GrElem::operator+=(const GrElem& o) {
  if (m != o.m) throw std::invalid_argument("GrElem add: mismatched m");
  for (size_t i = 0; i < co.size(); ++i) co[i] += o.co[i];
  return *this;
}

GrElem GrElem::operator-(const GrElem& o) const {
  GrElem r = *this;
  for (size_t i = 0; i < co.size(); ++i) r.co[i] -= o.co[i];
  return r;
}

GrElem GrElem::operator-() const {
  GrElem r = *this;
  for (auto& x : r.co) x = -x;
  return r;
}

GrElem GrElem::scaled(const Rat& s) const {
  GrElem r = *this;
  for (auto& x : r.co) x *= s;
  return r;
}

GrElem GrElem::operator*(const GrElem& o) const {
  if (m != o.m) throw std::invalid_argument("GrElem mul: mismatched m");
  GrElem r(m);
  const int n = order();
  for (int i = 0; i < n; ++i) {
    if (co[i] == 0) continue;
    HElem g = HElem::from_index(m, i);
    for (int j = 0; j < n; ++j) {
      if (o.co[j] == 0) continue;
      HElem h = HElem::from_index(m, j);
      r.co[(g * h).index()] += co[i] * o.co[j];
    }
  }
  return r;
}

GrElem GrElem::bar() const {
  GrElem r(m);
  for (int i = 0; i < order(); ++i) {
    if (co[i] == 0) continue;
    r.co[HElem::from_index(m, i).inverse().index()] += co[i];
  }
  return r;
}

bool GrElem::is_zero() const {
  for (const auto& x : co)
    if (x != 0) return false;
  return true;
}

std::string GrElem::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < order(); ++i) {
    if (co[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (co[i] != 1) os << co[i].get_str() << "*";
    os << HElem::from_index(m, i).str();
  }
  if (first) os << "0";
  return os.str();
}

GrElem gr_mul(const HElem& g, const GrElem& x) {
  GrElem r(x.m);
  for (int i = 0; i < x.order(); ++i) {
    if (x.co[i] == 0) continue;
    r.co[(g * HElem::from_index(x.m, i)).index()] += x.co[i];
  }
  return r;
}

GrElem gr_mul(const GrElem& x, const HElem& g) {
  GrElem r(x.m);
  for (int i = 0; i < x.order(); ++i) {
    if (x.co[i] == 0) continue;
    r.co[(HElem::from_index(x.m, i) * g).index()] += x.co[i];
  }
  return r;
}

GrElem pi_na(int m) {
  GrElem r(m);
  r.co[HElem::identity(m).index()] = m;
  for (int j = 0; j < m; ++j) r.co[HElem::zeta(m).pow(j).index()] -= 1;
  return r;
}

Irrep make_irrep(int m, int k, int a, int b, int c) {
  if (m < 1 || k < 1 || m % k != 0) throw std::invalid_argument("irrep: k | m required");
  const int l = m / k;
  if (a < 0 || a >= l || b < 0 || b >= l)
    throw std::invalid_argument("irrep: a, b in Z/(m/k)Z required");
  if (c < 0 || c >= k || std::gcd(c == 0 ? k : c, k) != 1)
    throw std::invalid_argument("irrep: c must be a unit mod k");
  Irrep r;
  r.m = m;
  r.k = k;
  r.a = a;
  r.b = b;
  r.c = c;
  CycNum za = CycNum::zeta(m, a), zb = CycNum::zeta(m, b);
  r.Ms = CMat(k, std::vector<CycNum>(k));
  r.Mt = CMat(k, std::vector<CycNum>(k));
  r.Mz = CMat(k, std::vector<CycNum>(k));
  for (int i = 0; i < k; ++i) {
    r.Ms[(i + 1) % k][i] = za;                       // shift e_i -> e_{i+1}
    r.Mt[i][i] = zb * CycNum::zeta(k, (i * c) % k);  // diag
    r.Mz[i][i] = CycNum::zeta(k, mmod(-c, k));       // zeta_k^{-c}
  }
  // power caches for fast rho()
  r.pow_s.assign(1, cmat_identity(k));
  r.pow_t.assign(1, cmat_identity(k));
  r.pow_z.assign(1, CycNum(Rat(1)));
  for (int i = 1; i < m; ++i) {
    r.pow_s.push_back(cmat_mul(r.pow_s.back(), r.Ms));
    r.pow_t.push_back(cmat_mul(r.pow_t.back(), r.Mt));
    r.pow_z.push_back(r.pow_z.back() * r.Mz[0][0]);
  }
  return r;
}

CMat Irrep::rho(const HElem& g) const {
  if (g.m != m) throw std::invalid_argument("rho: mismatched m");
  return cmat_scal(pow_z[g.c], cmat_mul(pow_s[g.a], pow_t[g.b]));
}

CMat Irrep::rho(const GrElem& x) const {
  if (x.m != m) throw std::invalid_argument("rho: mismatched m");
  CMat r(k, std::vector<CycNum>(k));
  for (int i = 0; i < x.order(); ++i) {
    if (x.co[i] == 0) continue;
    CMat g = rho(HElem::from_index(m, i));
    r = cmat_add(r, cmat_scal(CycNum(x.co[i]), g));
  }
  return r;
}

CycNum Irrep::character(const HElem& g) const { return cmat_trace(rho(g)); }

std::string Irrep::name() const {
  std::ostringstream os;
  os << "U(" << k << ";" << a << "," << b << "," << c << ")";
  return os.str();
}

std::vector<Irrep> complex_census(int m) {
  std::vector<Irrep> out;
  for (long k : divisors(m)) {
    const int l = m / static_cast<int>(k);
    for (int a = 0; a < l; ++a)
      for (int b = 0; b < l; ++b)
        for (int c = 0; c < k; ++c) {
          if (std::gcd(c == 0 ? static_cast<int>(k) : c, static_cast<int>(k)) != 1) continue;
          out.push_back(make_irrep(m, static_cast<int>(k), a, b, c));
        }
  }
  return out;
}

std::vector<long> divisors(long m) {
  std::vector<long> d;
  for (long k = 1; k <= m; ++k)
    if (m % k == 0) d.push_back(k);
  return d;
}

long trace_field(const Irrep& r) {
  const long l = r.m / r.k;
  const long g = std::gcd(std::gcd(static_cast<long>(r.a), static_cast<long>(r.b)), l);
  const long lp = l / g;
  const long L = r.k / std::gcd(static_cast<long>(r.k), lp) * lp;
  // verify: all character values lie in Q(zeta_L), and in no proper subfield
  const long Lf = field_conductor(L);
  std::vector<CycNum> vals;
  for (int i = 0; i < r.m * r.m * r.m; ++i)
    vals.push_back(r.character(HElem::from_index(r.m, i)));
  for (const auto& v : vals)
    if (!v.in_subfield(Lf))
      throw std::logic_error("trace_field: value outside claimed field");
  for (long D : divisors(Lf)) {
    if (D == Lf) continue;
    bool all_in = true;
    for (const auto& v : vals)
      if (!v.in_subfield(D)) {
        all_in = false;
        break;
      }
    if (all_in && euler_phi(D) < euler_phi(Lf))
      throw std::logic_error("trace_field: field smaller than claimed");
  }
  return L;
}

std::pair<bool, long> tau_invariant_flag(const Irrep& r) {
  // fixed space of rho(t): kernel of (rho(t) - I)
  CMat M = r.Mt;
  for (int i = 0; i < r.k; ++i) M[i][i] -= CycNum(Rat(1));
  const int dim_fixed = r.k - cmat_rank(M);
  if (dim_fixed == 0) return {false, 0};
  long ord = 1;
  CycNum z = r.Mz[0][0], p = z;
  while (!(p == CycNum(Rat(1)))) {
    p = p * z;
    ++ord;
  }
  return {true, ord};
}

namespace {

std::string field_name(long Lfield) {
  if (Lfield <= 2) return "Q";
  if (Lfield == 4) return "Q(i)";
  std::ostringstream os;
  os << "Q(z" << Lfield << ")";
  return os.str();
}

}  // namespace

std::string WeddFactor::str() const {
  std::ostringstream os;
  os << "M" << k << "(" << field_str << ")";
  return os.str();
}

WedderburnReport wedderburn(int m) {
  WedderburnReport rep;
  rep.m = m;
  std::vector<Irrep> census = complex_census(m);
  std::vector<bool> used(census.size(), false);
  auto find = [&](int k, int a, int b, int c) -> int {
    for (size_t i = 0; i < census.size(); ++i)
      if (census[i].k == k && census[i].a == a && census[i].b == b && census[i].c == c)
        return static_cast<int>(i);
    throw std::logic_error("wedderburn: missing census entry");
  };
  for (size_t i = 0; i < census.size(); ++i) {
    if (used[i]) continue;
    const Irrep& r = census[i];
    const int l = m / r.k;
    WeddFactor f;
    f.k = r.k;
    f.abelian = (r.k == 1);
    // Galois orbit under zeta_m -> zeta_m^s: chi_{a,b,c} -> chi_{sa,sb,sc}
    for (int s = 1; s < std::max(m, 2); ++s) {
      if (std::gcd(s, m) != 1) continue;
      int a2 = mmod(static_cast<long>(s) * r.a, std::max(l, 1));
      int b2 = mmod(static_cast<long>(s) * r.b, std::max(l, 1));
      int c2 = r.k == 1 ? 0 : mmod(static_cast<long>(s) * r.c, r.k);
      int j = find(r.k, a2, b2, c2);
      if (!used[j]) {
        used[j] = true;
        f.orbit.push_back({a2, b2, c2});
      }
    }
    std::sort(f.orbit.begin(), f.orbit.end());
    f.L = trace_field(r);
    f.Lfield = field_conductor(f.L);
    f.field_str = field_name(f.Lfield);
    f.tau_nontrivial = (r.b == 0);
    rep.factors.push_back(std::move(f));
  }
  std::sort(rep.factors.begin(), rep.factors.end(),
            [](const WeddFactor& x, const WeddFactor& y) {
              if (x.k != y.k) return x.k < y.k;
              return x.orbit.front() < y.orbit.front();
            });
  long total = 0;
  for (const auto& f : rep.factors) total += static_cast<long>(f.orbit.size()) * f.k * f.k;
  if (total != static_cast<long>(m) * m * m)
    throw std::logic_error("wedderburn: census mismatch");
  return rep;
}

std::vector<WeddFactor> WedderburnReport::nonabelian_factors() const {
  std::vector<WeddFactor> out;
  for (const auto& f : factors)
    if (!f.abelian) out.push_back(f);
  return out;
}

std::vector<GrElem> central_idempotents(int m) {
  WedderburnReport rep = wedderburn(m);
  std::vector<GrElem> out;
  const Rat invn(1, static_cast<long>(m) * m * m);
  for (const auto& f : rep.factors) {
    std::vector<Irrep> orbit_reps;
    for (const auto& abc : f.orbit)
      orbit_reps.push_back(make_irrep(m, f.k, abc[0], abc[1], abc[2]));
    GrElem e(m);
    for (int i = 0; i < m * m * m; ++i) {
      HElem gi = HElem::from_index(m, i).inverse();
      CycNum s;
      for (const auto& r : orbit_reps) s += r.character(gi);
      if (!s.is_rational())
        throw std::logic_error("central_idempotents: orbit character not rational");
      e.co[i] = Rat(f.k) * invn * s.rational_value();
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::pair<long, long>> cyclic_wedderburn(long m) {
  std::vector<std::pair<long, long>> out;
  for (long k : divisors(m)) out.push_back({k, field_conductor(k)});
  return out;
}

CycNum character_inner(const Irrep& r1, const Irrep& r2) {
  if (r1.m != r2.m) throw std::invalid_argument("character_inner: mismatched m");
  const int n = r1.m * r1.m * r1.m;
  CycNum s;
  for (int i = 0; i < n; ++i) {
    HElem g = HElem::from_index(r1.m, i);
    s += r1.character(g) * r2.character(g).conj();
  }
  return s * CycNum(Rat(1, n));
}

}  // namespace akmono
