#include <doctest.h>

#include "x1gon/modeq.hpp"
#include "x1gon/ntheory.hpp"

using namespace x1gon;
using namespace x1gon::modeq;

namespace {

ZPoly bcp(const char* s) { return parse_zpoly(s, BC); }
ZPoly xyp(const char* s) { return parse_zpoly(s, XY); }

bool eq_up_to_sign(const ZPoly& a, const ZPoly& b) { return a == b || a == -b; }

// chord-tangent law on Y^2 + (1-c)XY - bY = X^3 - bX^2 over F_p, affine points only
struct Curve {
  uint64_t p, a1, a2, a3;
  uint64_t ad(uint64_t u, uint64_t v) const { return (u + v) % p; }
  uint64_t sb(uint64_t u, uint64_t v) const { return (u + p - v) % p; }
  uint64_t ml(uint64_t u, uint64_t v) const { return nt::mulmod(u, v, p); }
  // returns false when the sum is the point at infinity
  bool add(uint64_t x1, uint64_t y1, uint64_t x2, uint64_t y2, uint64_t& x3, uint64_t& y3) const {
    uint64_t lam, nu;
    if (x1 == x2) {
      uint64_t ny2 = sb(sb(0, y2), ad(ml(a1, x2), a3));
      if (y1 == ny2) return false;
      uint64_t num = sb(ad(ml(3, ml(x1, x1)), ml(ml(2, a2), x1)), ml(a1, y1));
      uint64_t den = ad(ad(ml(2, y1), ml(a1, x1)), a3);
      lam = ml(num, nt::invmod(den, p));
    } else {
      lam = ml(sb(y2, y1), nt::invmod(sb(x2, x1), p));
    }
    nu = sb(y1, ml(lam, x1));
    x3 = sb(sb(sb(ad(ml(lam, lam), ml(a1, lam)), a2), x1), x2);
    y3 = sb(sb(0, ad(ml(ad(lam, a1), x3), nu)), a3);
    return true;
  }
  int order_of_origin(int cap) const {
    uint64_t x = 0, y = 0;
    for (int k = 1; k <= cap; ++k) {
      uint64_t nx, ny;
      if (!add(x, y, 0, 0, nx, ny)) return k + 1;
      x = nx;
      y = ny;
    }
    return 0;
  }
};

uint64_t evalp(const ZPoly& f, uint64_t p, std::vector<uint64_t> pt) {
  PrimeField F(p);
  return f.eval(F, pt, [&](const Integer& c) { return F.from_integer(c); });
}

}  // namespace

TEST_CASE("tate normal form basics") {
  CHECK(tate_discriminant() == bcp("16*b^5+b^4-20*b^4*c-8*b^4*c^2+b^3*c*(c-1)^3"));
  auto [x2, y2] = tate_multiple(2);
  CHECK(x2 == RatFunc(bcp("b")));
  CHECK(y2 == RatFunc(bcp("b*c")));
  auto [x3, y3] = tate_multiple(3);
  CHECK(x3 == RatFunc(bcp("c")));
  CHECK(y3 == RatFunc(bcp("b-c")));
  CHECK_THROWS_AS(modular_equation_F(3), UnsupportedLevel);
}

TEST_CASE("modular equations F_4..F_7") {
  CHECK(modular_equation_F(4) == bcp("c"));
  CHECK(modular_equation_F(5) == bcp("b-c"));
  CHECK(eq_up_to_sign(modular_equation_F(6), bcp("c^2+c-b")));
  CHECK(eq_up_to_sign(modular_equation_F(7), bcp("b^2-b*c-c^3")));
}

TEST_CASE("model polynomials f_10..f_13") {
  CHECK(f_poly(10).num == xyp("x-y+1"));
  CHECK(f_poly(11).num == xyp("x^2*y-x*y^2+y-1"));
  CHECK(f_poly(12).num == xyp("x-y"));
  CHECK(f_poly(13).num == xyp("x^3*y-x^2*y^2-x^2*y+x*y^2-y+1"));
}

TEST_CASE("coordinate maps and unit relations") {
  RatFunc one(xyp("1")), X(xyp("x")), Y(xyp("y"));
  auto f = [](int k) { return f_poly(k).value(); };
  CHECK(X == f(7) / f(8));
  CHECK(Y == f(8) / f(9));
  CHECK(one - X == f(5) * f(6) / (f(4) * f(8)));
  CHECK(one - Y == f(6) * f(7) / f(9));
  CHECK(one - X * Y == f(6).pow(2) / f(9));
  CHECK(b_of_xy() == f(3));
  CHECK(r_of_xy() - one == RatFunc(xyp("-(x-1)*(y-1)"), xyp("x*(x*y-1)")));
  CHECK(c_of_xy() == RatFunc(xyp("-(x*y-y+1)*(x-1)*(y-1)"), xyp("x^2*y*(x*y-1)")));
  // the generic transform agrees with direct substitution
  RatFunc g(bcp("b^2-3*b*c+c^3-7"), bcp("b+c^2"));
  CHECK(transform_to_xy(g) == g.compose({b_of_xy(), c_of_xy()}));
}

TEST_CASE("block form reassembles") {
  for (int k : {10, 11, 14, 15}) {
    ZPoly F = modular_equation_F(k);
    BlockForm bf = transform_blocks(F);
    CHECK(bf.to_ratfunc() == RatFunc(F).compose({b_of_xy(), c_of_xy()}));
  }
}

TEST_CASE("F_N vanishes exactly on points of order N over F_p") {
  const uint64_t p = 211;
  std::vector<ZPoly> Fs(17);
  for (int N = 4; N <= 16; ++N) Fs[N] = modular_equation_F(N);
  ZPoly D = tate_discriminant();
  int checked = 0;
  for (uint64_t b = 1; b < p; ++b)
    for (uint64_t c = 0; c < p; ++c) {
      if (evalp(D, p, {b, c}) == 0) continue;
      Curve E{p, (1 + p - c) % p, (p - b) % p, (p - b) % p};
      int ord = E.order_of_origin(40);
      for (int N = 4; N <= 16; ++N) {
        bool z = evalp(Fs[N], p, {b, c}) == 0;
        if (z != (ord == N)) FAIL("mismatch at b=" << b << " c=" << c << " N=" << N << " ord=" << ord);
      }
      ++checked;
    }
  CHECK(checked > 40000);
}

TEST_CASE("f_k vanishes on points of order k over F_p") {
  const uint64_t p = 307;
  PrimeField F(p);
  RatFunc bx = b_of_xy(), cx = c_of_xy();
  ZPoly D = tate_discriminant();
  std::vector<ZPoly> fs(19);
  for (int k = 10; k <= 18; ++k) fs[k] = f_poly(k).num;
  int hits = 0;
  for (uint64_t x = 2; x < p; ++x)
    for (uint64_t y = 2; y < p; ++y) {
      uint64_t bd = evalp(bx.den(), p, {x, y}), cd = evalp(cx.den(), p, {x, y});
      if (!bd || !cd) continue;
      uint64_t b = F.div(evalp(bx.num(), p, {x, y}), bd), c = F.div(evalp(cx.num(), p, {x, y}), cd);
      if (!b || evalp(D, p, {b, c}) == 0) continue;
      Curve E{p, (1 + p - c) % p, (p - b) % p, (p - b) % p};
      int ord = E.order_of_origin(40);
      for (int k = 10; k <= 18; ++k) {
        bool z = evalp(fs[k], p, {x, y}) == 0;
        if (z != (ord == k)) FAIL("mismatch at x=" << x << " y=" << y << " k=" << k << " ord=" << ord);
        hits += z;
      }
    }
  CHECK(hits > 100);
}

TEST_CASE("modular residual matches the symbolic route") {
  for (int k = 10; k <= 18; ++k) {
    CAPTURE(k);
    auto B = transform_blocks(modular_equation_F(k));
    CHECK(residual_modular(k) == B.residual);
    CHECK(block_exponents(RatFunc(modular_equation_F(k)), 5 + k) == B.exps);
  }
}

TEST_CASE("f_k from the modular route vanishes on points of order k") {
  const uint64_t p = 331;
  PrimeField F(p);
  RatFunc bx = b_of_xy(), cx = c_of_xy();
  ZPoly D = tate_discriminant();
  std::vector<int> ks{25, 26, 28};
  std::vector<ZPoly> fs;
  for (int k : ks) fs.push_back(f_poly(k).num);
  std::vector<int> hits(ks.size());
  for (uint64_t x = 2; x < p; ++x)
    for (uint64_t y = 2; y < p; ++y) {
      uint64_t bd = evalp(bx.den(), p, {x, y}), cd = evalp(cx.den(), p, {x, y});
      if (!bd || !cd) continue;
      uint64_t b = F.div(evalp(bx.num(), p, {x, y}), bd), c = F.div(evalp(cx.num(), p, {x, y}), cd);
      if (!b || evalp(D, p, {b, c}) == 0) continue;
      Curve E{p, (1 + p - c) % p, (p - b) % p, (p - b) % p};
      int ord = E.order_of_origin(40);
      for (size_t i = 0; i < ks.size(); ++i) {
        bool z = evalp(fs[i], p, {x, y}) == 0;
        if (z != (ord == ks[i])) FAIL("mismatch at x=" << x << " y=" << y << " k=" << ks[i] << " ord=" << ord);
        hits[i] += z;
      }
    }
  for (int h : hits) CHECK(h > 0);
}
