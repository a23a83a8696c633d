#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "akmono/cyclotomic.hpp"
#include "akmono/heisenberg.hpp"
#include "akmono/matrix.hpp"

using namespace akmono;

TEST_CASE("rational matrix echelon, kernel, solve") {
  QMat A(3, 4);
  int vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {1, 0, 1, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) A.at(i, j) = vals[i][j];
  CHECK(rank_of(A) == 2);
  QMat K = kernel_basis(A);
  CHECK(K.nc == 2);
  CHECK((A * K).is_zero());

  QMat B = QMat::identity(3);
  B.at(0, 1) = 5;
  B.at(2, 0) = Rat(-7, 3);
  QMat Binv = inverse(B);
  CHECK(B * Binv == QMat::identity(3));

  // SpanSolver round trip
  SpanSolver ss(A);
  QVec v = A.apply(QVec{Rat(1), Rat(-2), Rat(3), Rat(1, 2)});
  CHECK(ss.contains(v));
  QVec lam = ss.solve(v);
  QVec v2 = A.apply(lam);
  CHECK(v2 == v);
  QVec w{Rat(1), Rat(0), Rat(0)};
  CHECK(!ss.contains(w));
}

TEST_CASE("hnf and snf") {
  ZMat A(3, 3);
  long vals[3][3] = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) A.at(i, j) = vals[i][j];
  // det = 624; d1 = gcd of entries = 2, d1*d2 = gcd of 2x2 minors = 4
  auto d = snf_diag(A);
  REQUIRE(d.size() == 3);
  CHECK(d[0] == 2);
  CHECK(d[1] == 2);
  CHECK(d[2] == 156);
  CHECK(d[0] * d[1] * d[2] == 624);

  ZMat B(2, 3);
  B.at(0, 0) = 3;
  B.at(0, 1) = 3;
  B.at(0, 2) = 1;
  B.at(1, 0) = 0;
  B.at(1, 1) = 6;
  B.at(1, 2) = 2;
  Hnf h = hnf_rows(B);
  CHECK(h.rank == 2);
}

TEST_CASE("cyclotomic basics") {
  // zeta_4 = i: i^2 = -1
  CycNum i4 = CycNum::zeta(4);
  CHECK(i4 * i4 == CycNum(Rat(-1)));
  CHECK(i4.conj() == CycNum::zeta(4, 3));
  CHECK((i4 * i4.conj()) == CycNum(Rat(1)));

  // 1 + zeta_3 + zeta_3^2 = 0
  CycNum z3 = CycNum::zeta(3);
  CHECK((CycNum(Rat(1)) + z3 + z3 * z3).is_zero());

  // Q(zeta_6) = Q(zeta_3): embed and compare: zeta_6 = -zeta_3^2
  CycNum z6 = CycNum::zeta(6);
  CHECK(z6 == -(z3 * z3));
  CHECK(field_conductor(6) == 3);

  // inverse: (1 + zeta_5)^{-1} * (1 + zeta_5) = 1
  CycNum x = CycNum(Rat(1)) + CycNum::zeta(5);
  CHECK(x * x.inverse() == CycNum(Rat(1)));

  // galois action is a field automorphism
  CycNum a = CycNum(Rat(2, 3)) + CycNum::zeta(12, 5);
  CycNum b = CycNum(Rat(-1)) + CycNum::zeta(12, 7);
  for (long s : {5L, 7L, 11L}) {
    CHECK((a * b).galois(s) == a.galois(s) * b.galois(s));
    CHECK((a + b).galois(s) == a.galois(s) + b.galois(s));
  }

  // embeddings are ring maps
  CHECK(CycNum::zeta(3).embedded(12) == CycNum::zeta(12, 4));
  CHECK((z3 * z3).embedded(12) == z3.embedded(12) * z3.embedded(12));

  // subfield detection
  CHECK(CycNum::zeta(4).in_subfield(4));
  CHECK(!CycNum::zeta(4).in_subfield(2));
  CHECK((CycNum::zeta(5) + CycNum::zeta(5, 4)).in_subfield(5));
}

TEST_CASE("heisenberg group law") {
  for (int m : {2, 3, 4}) {
    HElem s = HElem::sigma(m), t = HElem::tau(m), z = HElem::zeta(m);
    // [s, t] = z
    CHECK(s * t * s.inverse() * t.inverse() == z);
    // z central
    CHECK(z * s == s * z);
    CHECK(z * t == t * z);
    // orders
    CHECK(s.pow(m).is_identity());
    CHECK(t.pow(m).is_identity());
    CHECK(z.pow(m).is_identity());
    // t * s = s t z^{m-1}
    CHECK(t * s == HElem(m, 1, 1, m - 1));
    // inverses
    for (int i = 0; i < m * m * m; ++i) {
      HElem g = HElem::from_index(m, i);
      CHECK((g * g.inverse()).is_identity());
      CHECK((g.inverse() * g).is_identity());
    }
  }
}

TEST_CASE("group law vs faithful representation oracle") {
  // rho_{0,0,1} at k = m is faithful; the multiplication law must agree with
  // matrix multiplication on every pair (exhaustive for small m).
  for (int m : {2, 3}) {
    Irrep r = make_irrep(m, m, 0, 0, 1);
    // faithfulness: all m^3 matrices distinct
    std::vector<CMat> mats;
    for (int i = 0; i < m * m * m; ++i)
      mats.push_back(r.rho(HElem::from_index(m, i)));
    for (size_t i = 0; i < mats.size(); ++i)
      for (size_t j = i + 1; j < mats.size(); ++j) CHECK(!cmat_eq(mats[i], mats[j]));
    for (int i = 0; i < m * m * m; ++i)
      for (int j = 0; j < m * m * m; ++j) {
        HElem g = HElem::from_index(m, i), h = HElem::from_index(m, j);
        CHECK(cmat_eq(r.rho(g * h), cmat_mul(mats[i], mats[j])));
      }
  }
}

TEST_CASE("irrep defining relations and randomized homomorphism check") {
  std::mt19937_64 rng(12345);
  for (int m : {4, 5, 6}) {
    for (const auto& r : complex_census(m)) {
      // relations
      CMat lhs = cmat_mul(cmat_mul(r.Ms, r.Mt),
                          cmat_mul(r.rho(HElem::sigma(m).inverse()),
                                   r.rho(HElem::tau(m).inverse())));
      CHECK(cmat_eq(lhs, r.Mz));
      CHECK(cmat_eq(r.rho(HElem::sigma(m).pow(m)), cmat_identity(r.k)));
    }
    // randomized rho(gh) = rho(g) rho(h)
    auto census = complex_census(m);
    for (int trial = 0; trial < 40; ++trial) {
      const Irrep& r = census[rng() % census.size()];
      HElem g = HElem::from_index(m, static_cast<int>(rng() % (m * m * m)));
      HElem h = HElem::from_index(m, static_cast<int>(rng() % (m * m * m)));
      CHECK(cmat_eq(r.rho(g * h), cmat_mul(r.rho(g), r.rho(h))));
    }
  }
}

TEST_CASE("characters: values, vanishing, orthogonality") {
  for (int m : {2, 3, 4}) {
    // chi(1) = k
    for (const auto& r : complex_census(m))
      CHECK(r.character(HElem::identity(m)) == CycNum(Rat(r.k)));
    // top irrep: chi(z^r) = m * zeta_m^{-r}
    Irrep top = make_irrep(m, m, 0, 0, 1);
    for (int rr = 0; rr < m; ++rr)
      CHECK(top.character(HElem::zeta(m).pow(rr)) ==
            CycNum(Rat(m)) * CycNum::zeta(m, ((m - rr) % m)));
    // chi(s) = 0 for k > 1
    for (const auto& r : complex_census(m))
      if (r.k > 1) CHECK(r.character(HElem::sigma(m)).is_zero());
    // vanishing: chi(s^p t^q z^r) = 0 unless k | p and k | q
    for (const auto& r : complex_census(m))
      for (int i = 0; i < m * m * m; ++i) {
        HElem g = HElem::from_index(m, i);
        if (g.a % r.k != 0 || g.b % r.k != 0) CHECK(r.character(g).is_zero());
      }
  }
  // orthogonality (exhaustive for m = 2, 3)
  for (int m : {2, 3}) {
    auto census = complex_census(m);
    for (size_t i = 0; i < census.size(); ++i)
      for (size_t j = 0; j < census.size(); ++j) {
        CycNum ip = character_inner(census[i], census[j]);
        CHECK(ip == CycNum(Rat(i == j ? 1 : 0)));
      }
  }
}

TEST_CASE("census counts and sum of squares") {
  for (int m : {2, 3, 4, 5, 6}) {
    auto census = complex_census(m);
    long sum = 0;
    for (const auto& r : census) sum += static_cast<long>(r.k) * r.k;
    CHECK(sum == static_cast<long>(m) * m * m);
    for (long k : divisors(m)) {
      long cnt = 0;
      for (const auto& r : census)
        if (r.k == k) ++cnt;
      CHECK(cnt == (m / k) * (m / k) * euler_phi(k));
    }
  }
}

TEST_CASE("trace field") {
  // k=m, a=b=0, c=1 -> L = m
  for (int m : {2, 3, 4, 5, 6}) CHECK(trace_field(make_irrep(m, m, 0, 0, 1)) == m);
  // m=4, k=2, (a,b)=(0,0) -> L = 2 (field Q)
  CHECK(trace_field(make_irrep(4, 2, 0, 0, 1)) == 2);
  CHECK(field_conductor(2) == 1);
  // k=1, (a,b)=(0,0) -> L = 1
  CHECK(trace_field(make_irrep(4, 1, 0, 0, 0)) == 1);
}

TEST_CASE("group ring: involution and pi_na") {
  for (int m : {2, 3}) {
    std::mt19937_64 rng(99);
    auto rand_elem = [&]() {
      GrElem x(m);
      for (auto& c : x.co)
        c = rat(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
      return x;
    };
    for (int trial = 0; trial < 25; ++trial) {
      GrElem x = rand_elem(), y = rand_elem();
      CHECK((x * y).bar() == y.bar() * x.bar());
      CHECK(x.bar().bar() == x);
    }
    GrElem pna = pi_na(m);
    CHECK(pna * pna == pna.scaled(Rat(m)));
    GrElem avg(m);
    for (int j = 0; j < m; ++j) avg += GrElem::of(HElem::zeta(m).pow(j));
    CHECK((pna * avg).is_zero());
    CHECK(pna.bar() == pna);
  }
  // m=2: pi_na = 1 - z
  GrElem p2 = pi_na(2);
  GrElem expect = GrElem::unit(2) - GrElem::of(HElem::zeta(2));
  CHECK(p2 == expect);
}

TEST_CASE("pi_na acts as 0 on abelian irreps and m on nonabelian ones") {
  for (int m : {2, 3, 4}) {
    GrElem pna = pi_na(m);
    for (const auto& r : complex_census(m)) {
      CMat img = r.rho(pna);
      if (r.abelian())
        CHECK(cmat_eq(img, cmat_scal(CycNum(Rat(0)), cmat_identity(r.k))));
      else
        CHECK(cmat_eq(img, cmat_scal(CycNum(Rat(m)), cmat_identity(r.k))));
    }
  }
}

TEST_CASE("wedderburn decomposition matches worked examples") {
  // m prime: single nonabelian factor M_m(Q(zeta_m))
  for (int m : {2, 3, 5}) {
    auto rep = wedderburn(m);
    auto na = rep.nonabelian_factors();
    REQUIRE(na.size() == 1);
    CHECK(na[0].k == m);
    CHECK(na[0].Lfield == field_conductor(m));
  }
  // m = 4: M2(Q)^4 x M4(Q(i))
  {
    auto na = wedderburn(4).nonabelian_factors();
    REQUIRE(na.size() == 5);
    int m2q = 0, m4qi = 0;
    for (const auto& f : na) {
      if (f.k == 2 && f.Lfield == 1) ++m2q;
      if (f.k == 4 && f.Lfield == 4) ++m4qi;
    }
    CHECK(m2q == 4);
    CHECK(m4qi == 1);
  }
  // m = 6: M2(Q) x M2(Q(z3))^4 x M3(Q(z3))^4 x M6(Q(z3))
  {
    auto na = wedderburn(6).nonabelian_factors();
    REQUIRE(na.size() == 10);
    int m2q = 0, m2q3 = 0, m3q3 = 0, m6 = 0;
    for (const auto& f : na) {
      if (f.k == 2 && f.Lfield == 1) ++m2q;
      if (f.k == 2 && f.Lfield == 3) ++m2q3;
      if (f.k == 3 && f.Lfield == 3) ++m3q3;
      if (f.k == 6 && f.Lfield == 3) ++m6;
    }
    CHECK(m2q == 1);
    CHECK(m2q3 == 4);
    CHECK(m3q3 == 4);
    CHECK(m6 == 1);
  }
}

TEST_CASE("central idempotents") {
  for (int m : {2, 3, 4}) {
    auto rep = wedderburn(m);
    auto es = central_idempotents(m);
    REQUIRE(es.size() == rep.factors.size());
    GrElem sum(m);
    for (const auto& e : es) sum += e;
    CHECK(sum == GrElem::unit(m));
    for (size_t i = 0; i < es.size(); ++i)
      for (size_t j = 0; j < es.size(); ++j) {
        GrElem p = es[i] * es[j];
        if (i == j)
          CHECK(p == es[i]);
        else
          CHECK(p.is_zero());
      }
    // independent check through the irreps: rho_chi(e_f) = I on the factor's
    // own orbit and 0 on every other irrep
    for (size_t i = 0; i < es.size(); ++i) {
      const auto& f = rep.factors[i];
      for (const auto& r : complex_census(m)) {
        bool inside = (r.k == f.k);
        if (inside) {
          inside = false;
          for (const auto& abc : f.orbit)
            if (abc[0] == r.a && abc[1] == r.b && abc[2] == r.c) inside = true;
        }
        CMat img = r.rho(es[i]);
        CHECK(cmat_eq(img, cmat_scal(CycNum(Rat(inside ? 1 : 0)), cmat_identity(r.k))));
      }
    }
    // top factor at prime m: e = 1 - (1/m)(1 + z + ... + z^{m-1})
    if (m == 2 || m == 3) {
      GrElem avg(m);
      for (int j = 0; j < m; ++j) avg += GrElem::of(HElem::zeta(m).pow(j));
      GrElem etop = GrElem::unit(m) - avg.scaled(Rat(1, m));
      bool found = false;
      for (const auto& e : es) found = found || (e == etop);
      CHECK(found);
    }
  }
}

TEST_CASE("tau invariants of irreps") {
  for (int m : {2, 3, 4, 6}) {
    for (const auto& r : complex_census(m)) {
      auto [nontriv, ord] = tau_invariant_flag(r);
      CHECK(nontriv == (r.b == 0));
      if (nontriv) CHECK(ord == r.k);
    }
    // b=0, k=m -> 1-dimensional, z acts with order m
    auto [nt, od] = tau_invariant_flag(make_irrep(m, m, 0, 0, 1));
    CHECK(nt);
    CHECK(od == m);
  }
  // k=1, b=0 -> whole space fixed
  auto [nt1, od1] = tau_invariant_flag(make_irrep(3, 1, 0, 0, 0));
  CHECK(nt1);
  CHECK(od1 == 1);
  // For 1 < k < m: U_{0,0,1} and U_{1,0,1} lie in different Galois orbits
  {
    auto rep = wedderburn(4);
    int idx001 = -1, idx101 = -1;
    for (size_t i = 0; i < rep.factors.size(); ++i) {
      const auto& f = rep.factors[i];
      if (f.k != 2) continue;
      for (const auto& abc : f.orbit) {
        if (abc == std::array<int, 3>{0, 0, 1}) idx001 = static_cast<int>(i);
        if (abc == std::array<int, 3>{1, 0, 1}) idx101 = static_cast<int>(i);
      }
    }
    REQUIRE(idx001 >= 0);
    REQUIRE(idx101 >= 0);
    CHECK(idx001 != idx101);
  }
}

TEST_CASE("cyclic group wedderburn") {
  auto w2 = cyclic_wedderburn(2);
  REQUIRE(w2.size() == 2);
  CHECK(w2[0] == std::pair<long, long>(1, 1));
  CHECK(w2[1] == std::pair<long, long>(2, 1));
  auto w4 = cyclic_wedderburn(4);
  REQUIRE(w4.size() == 3);
  CHECK(w4[2] == std::pair<long, long>(4, 4));
  auto w1 = cyclic_wedderburn(1);
  REQUIRE(w1.size() == 1);
}

TEST_CASE("phi-weighted count identity") {
  for (int m : {2, 3, 4, 5, 6}) {
    long total = 0;
    for (long k : divisors(m)) total += euler_phi(k) * (m / k) * (m / k) * k * k;
    CHECK(total == static_cast<long>(m) * m * m);
  }
}
