#include <functional>

#include "doctest.h"
#include "x1gon/extension.hpp"
#include "x1gon/factor.hpp"
#include "x1gon/intmatrix.hpp"
#include "x1gon/mpoly.hpp"

using namespace x1gon;

namespace {

const std::vector<std::string> XY{"x", "y"};
ZPoly P(const std::string& s) { return parse_zpoly(s, XY); }

UPoly<Rationals> uq(std::vector<long> c) {
  std::vector<Rational> r;
  for (auto v : c) r.push_back(v);
  return UPoly<Rationals>(Rationals{}, r);
}

template <class F>
UPoly<F> expand(const Factorization<F>& fs, const F& f) {
  auto r = UPoly<F>::constant(f, f.one());
  for (auto& [g, m] : fs) r = r * g.pow(m);
  return r;
}

ZPoly random_zpoly(uint64_t& s, int terms, int maxdeg) {
  std::vector<ZPoly::Term> t;
  for (int i = 0; i < terms; ++i) {
    unsigned a = nt::splitmix64(s) % (maxdeg + 1), b = nt::splitmix64(s) % (maxdeg + 1);
    t.push_back({mono::make({a, b}), Integer((long)(nt::splitmix64(s) % 19) - 9)});
  }
  return ZPoly(Integers{}, XY, t);
}

// gcd of all k x k minors, by cofactor expansion over chosen rows/cols
Integer minor_gcd(const IntMatrix& A, size_t k) {
  Integer g = 0;
  std::vector<size_t> rs, cs;
  std::function<void(size_t)> pick_cols;
  std::function<void(size_t)> pick_rows = [&](size_t i) {
    if (rs.size() == k) {
      pick_cols(0);
      return;
    }
    for (size_t r = i; r < A.rows(); ++r) {
      rs.push_back(r);
      pick_rows(r + 1);
      rs.pop_back();
    }
  };
  pick_cols = [&](size_t j) {
    if (cs.size() == k) {
      IntMatrix M(k, k);
      for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b) M(a, b) = A(rs[a], cs[b]);
      Integer d = M.det();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      return;
    }
    for (size_t c = j; c < A.cols(); ++c) {
      cs.push_back(c);
      pick_cols(c + 1);
      cs.pop_back();
    }
  };
  pick_rows(0);
  return g;
}

}  // namespace

TEST_CASE("poly_arith examples") {
  CHECK(gcd(P("x^2-1"), P("x-1")) == P("x-1"));
  CHECK(content(P("2*x+4")) == 2);
  CHECK(primitive_part(P("2*x+4")) == P("x+2"));
  auto bc = parse_zpoly("b^2-b*c-c^3", {"b", "c"});
  CHECK(bc.exact_div(bc.constant(1)) == bc);
  CHECK(P("x^2*y-x*y^2+y-1").str() == "x^2*y-x*y^2+y-1");
  CHECK(P("(x-y+1)^2").str() == "x^2-2*x*y+y^2+2*x-2*y+1");
  CHECK_THROWS_AS(P("x^2+1").exact_div(P("x+1")), DivisionError);
  CHECK_THROWS_AS(P("x+"), ParseError);
  auto a = parse_zpoly("x", {"x", "y"}), b = parse_zpoly("b", {"b", "c"});
  CHECK_THROWS_AS(a + b, FieldMismatch);
}

TEST_CASE("poly_arith properties on random polynomials") {
  uint64_t s = 7;
  for (int it = 0; it < 60; ++it) {
    auto a = random_zpoly(s, 1 + it % 6, 4), b = random_zpoly(s, 1 + it % 5, 3), c = random_zpoly(s, 2, 2);
    if (b.is_zero() || a.is_zero()) continue;
    CHECK((a * b).exact_div(b) == a);
    auto g = gcd(a * c, b * c);
    ZPoly q;
    CHECK((a * c).divides_by(g, &q));
    CHECK((b * c).divides_by(g, &q));
    if (!c.is_zero()) CHECK((g).divides_by(primitive_part(c), &q));
    CHECK(primitive_part(primitive_part(a).scale(content(a))) == primitive_part(a));
  }
}

TEST_CASE("factor_univariate examples") {
  auto f = factor(uq({-1, 0, 1}));
  REQUIRE(f.size() == 2);
  CHECK(((f[0].first == uq({-1, 1}) && f[1].first == uq({1, 1})) || (f[1].first == uq({-1, 1}) && f[0].first == uq({1, 1}))));
  PrimeField F2(2);
  UPoly<PrimeField> g(F2, {1, 1, 1});
  auto fg = factor(g);
  REQUIRE(fg.size() == 1);
  CHECK(fg[0].first == g);
  // x^3-2: no rational root among the divisors +-1, +-2 of the constant term
  for (long r : {1, -1, 2, -2}) CHECK(r * r * r - 2 != 0);
  auto h = factor(uq({-2, 0, 0, 1}));
  REQUIRE(h.size() == 1);
  CHECK(h[0].first == uq({-2, 0, 0, 1}));
  CHECK_THROWS_AS(factor(uq({})), ZeroPolynomial);
}

TEST_CASE("factorization reproduces the input") {
  uint64_t s = 99;
  for (int it = 0; it < 25; ++it) {
    auto prod = uq({(long)(nt::splitmix64(s) % 5) + 1});
    int nf = 1 + it % 4;
    for (int k = 0; k < nf; ++k) {
      std::vector<long> c;
      int d = 1 + nt::splitmix64(s) % 4;
      for (int i = 0; i < d; ++i) c.push_back((long)(nt::splitmix64(s) % 11) - 5);
      c.push_back(1 + nt::splitmix64(s) % 3);
      prod = prod * uq(c).pow(1 + (k == 0 && it % 3 == 0));
    }
    auto fs = factor(prod);
    CHECK(expand(fs, Rationals{}).scale(prod.lc()) == prod);
    for (auto& [g, m] : fs) CHECK(g.is_monic());
  }
  for (uint64_t p : {2ULL, 3ULL, 101ULL}) {
    PrimeField F(p);
    for (int it = 0; it < 20; ++it) {
      std::vector<uint64_t> c;
      int d = 1 + nt::splitmix64(s) % 12;
      for (int i = 0; i < d; ++i) c.push_back(F.random(s));
      c.push_back(1);
      UPoly<PrimeField> g(F, c);
      g = g * g.pow(it % 3);
      auto fs = factor(g);
      CHECK(expand(fs, F) == g);
      for (auto& [h, m] : fs) CHECK(is_irreducible_finite(h));
    }
  }
  // swinnerton-dyer style: x^4-10x^2+1 irreducible over Q but splits mod every prime
  CHECK(factor(uq({1, 0, -10, 0, 1})).size() == 1);
  // product of many linear factors
  auto lin = uq({1});
  for (long r = -4; r <= 4; ++r) lin = lin * uq({-r, 1});
  CHECK(factor(lin).size() == 9);
}

TEST_CASE("extension fields and number fields") {
  auto K = make_finite_field(2, 3);
  CHECK(K.size() == 8);
  auto a = K.gen();
  CHECK(K.is_one(K.pow(a, 7)));
  CHECK(K.is_one(K.mul(a, K.inv(a))));
  // x^2+x+1 over F_2 needs F_4; over F_8 it stays irreducible
  UPoly<FiniteField> g(K, {K.one(), K.one(), K.one()});
  CHECK(factor(g).size() == 1);
  auto emb = extend_field(K, g);
  CHECK(emb.to.degree() == 6);
  CHECK(emb.to.is_zero(emb.map(g).eval(emb.beta)));
  std::vector<FiniteField::Elem> mc;
  for (auto& r : K.modulus()) mc.push_back(emb.to.from_base(r));
  CHECK(emb.to.is_zero(UPoly<FiniteField>(emb.to, mc).eval(emb.alpha)));
  // the embedding is a ring map
  auto u = K.add(K.gen(), K.one()), v = K.mul(K.gen(), K.gen());
  CHECK(emb.to.eq(emb(K.mul(u, v)), emb.to.mul(emb(u), emb(v))));

  NumberField Q(Rationals{});
  // y^2 - 2 over Q, then z^2 - 3 over Q(sqrt 2)
  auto e1 = extend_field(Q, UPoly<NumberField>(Q, {Q.from_int(-2), Q.zero(), Q.one()}));
  auto L = e1.to;
  CHECK(L.eq(L.mul(e1.beta, e1.beta), L.from_int(2)));
  UPoly<NumberField> z23(L, {L.from_int(-3), L.zero(), L.one()});
  CHECK(factor(z23).size() == 1);
  auto e2 = extend_field(L, z23);
  auto M = e2.to;
  CHECK(M.degree() == 4);
  auto s2 = e2(e1.beta);
  CHECK(M.eq(M.mul(s2, s2), M.from_int(2)));
  CHECK(M.eq(M.mul(e2.beta, e2.beta), M.from_int(3)));
  // x^2-2 splits over Q(sqrt 2)
  UPoly<NumberField> x22(L, {L.from_int(-2), L.zero(), L.one()});
  CHECK(factor(x22).size() == 2);
  // x^2-8 splits too, x^2-6 does not
  CHECK(factor(UPoly<NumberField>(L, {L.from_int(-8), L.zero(), L.one()})).size() == 2);
  CHECK(factor(UPoly<NumberField>(L, {L.from_int(-6), L.zero(), L.one()})).size() == 1);
}

TEST_CASE("smith_normal_form examples") {
  auto I = IntMatrix::identity(3);
  CHECK(smith_normal_form(I).S == I);
  IntMatrix D({{2, 0}, {0, 3}});
  auto f = smith_normal_form(D);
  CHECK(f.diagonal() == std::vector<Integer>{1, 6});
  IntMatrix Z(2, 3);
  CHECK(smith_normal_form(Z).S == Z);
}

TEST_CASE("smith_normal_form against determinantal divisors") {
  uint64_t s = 3;
  for (int it = 0; it < 80; ++it) {
    size_t m = 1 + it % 4, n = 1 + (it / 4) % 4;
    IntMatrix A(m, n);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n; ++j) A(i, j) = (long)(nt::splitmix64(s) % 13) - 6;
    auto f = smith_normal_form(A);
    CHECK((f.U * A * f.V) == f.S);
    CHECK(abs(f.U.det()) == 1);
    CHECK(abs(f.V.det()) == 1);
    auto d = f.diagonal();
    for (size_t i = 0; i + 1 < d.size(); ++i) {
      CHECK(d[i] >= 0);
      if (d[i] != 0) CHECK(mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()));
    }
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n; ++j)
        if (i != j) CHECK(f.S(i, j) == 0);
    Integer prev = 1, prod = 1;
    for (size_t k = 1; k <= d.size(); ++k) {
      prod *= d[k - 1];
      CHECK(minor_gcd(A, k) == prod);
    }
  }
}

TEST_CASE("integer solve") {
  IntMatrix A({{2, 0}, {0, 3}});
  auto r = solve_left(A, {4, 9});
  CHECK(r.status == SolveStatus::Ok);
  CHECK(r.x == std::vector<Integer>{2, 3});
  CHECK(solve_left(A, {1, 0}).status == SolveStatus::RationalNotInteger);
  IntMatrix B({{1, 1, 0}});
  CHECK(solve_left(B, {1, 0, 1}).status == SolveStatus::NoRationalSolution);
}

TEST_CASE("multivariate gcd is maximal") {
  // cofactors must be coprime: their specializations at some y share no factor in x
  uint64_t s = 11;
  auto coprime_at = [&](const ZPoly& u, const ZPoly& v, int var) {
    for (int tries = 0; tries < 3; ++tries) {
      Integer r = (long)(nt::splitmix64(s) % 1000) + 17;
      auto specialize = [&](const ZPoly& f) {
        std::vector<Rational> c(f.degree(1 - var) + 1, Rational(0));
        for (auto& [m, a] : f.terms()) {
          Integer t = a;
          for (unsigned k = 0; k < mono::exp(m, var); ++k) t *= r;
          c[mono::exp(m, 1 - var)] += t;
        }
        return UPoly<Rationals>(Rationals{}, c);
      };
      auto su = specialize(u), sv = specialize(v);
      if (su.deg() < 0 || sv.deg() < 0) continue;
      if (gcd(su, sv).deg() == 0) return true;
    }
    return false;
  };
  for (int it = 0; it < 40; ++it) {
    auto a = random_zpoly(s, 2 + it % 4, 5), b = random_zpoly(s, 2 + it % 3, 4), c = random_zpoly(s, 3, 3);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    auto g = gcd(a * c, b * c);
    auto u = (a * c).exact_div(g), v = (b * c).exact_div(g);
    bool ok = (u.is_constant() || v.is_constant()) || (coprime_at(u, v, 1) && coprime_at(u, v, 0)) ||
              (u.degree(0) == 0 && v.degree(0) == 0) || (u.degree(1) == 0 && v.degree(1) == 0);
    CHECK(ok);
  }
}
