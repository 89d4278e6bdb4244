#include "x1gon/modeq.hpp"

#include <map>
#include <mutex>

#include "x1gon/ntheory.hpp"
#include "x1gon/qseries.hpp"

namespace x1gon::modeq {

const std::vector<std::string> BC{"b", "c"};
const std::vector<std::string> XY{"x", "y"};

namespace {
ZPoly bc(const char* s) { return parse_zpoly(s, BC); }
ZPoly xy(const char* s) { return parse_zpoly(s, XY); }

std::mutex eds_mu;
std::vector<ZPoly> eds_cache;

std::mutex f_mu;
std::map<int, UnitSymbol> f_cache;
}  // namespace

ZPoly tate_discriminant() { return bc("b^3*(16*b^2+(1-20*c-8*c^2)*b+c*(c-1)^3)"); }

const ZPoly& eds(int n) {
  if (n < 0) throw std::invalid_argument("negative index");
  std::lock_guard<std::mutex> lk(eds_mu);
  auto& W = eds_cache;
  if (W.empty()) {
    W = {bc("0"), bc("1"), bc("-b"), bc("-b^3"), bc("b^5*c")};
  }
  const ZPoly mb = bc("-b");
  while ((int)W.size() <= n) {
    int k = (int)W.size();
    int m = k / 2;
    ZPoly v;
    if (k & 1) {
      v = W[m + 2] * W[m].pow(3) - W[m - 1] * W[m + 1].pow(3);
    } else {
      v = W[m] * (W[m + 2] * W[m - 1].pow(2) - W[m - 2] * W[m + 1].pow(2));
      v = v.exact_div(mb);
    }
    W.push_back(std::move(v));
  }
  return W[n];
}

std::pair<RatFunc, RatFunc> tate_multiple(int k) {
  if (k < 1) throw std::invalid_argument("k >= 1 required");
  const ZPoly &wm = eds(k - 1), &w = eds(k), &wp = eds(k + 1), &w2 = eds(2 * k);
  if (w.is_zero()) throw DivisionError("multiple is the identity");
  RatFunc X(-(wm * wp), w.pow(2));
  ZPoly two = w.constant(2);
  RatFunc a1(bc("1-c")), a3(bc("-b"));
  RatFunc Y = RatFunc(w2, two * w.pow(4)) - (a1 * X + a3) / RatFunc(two);
  return {X, Y};
}

ZPoly modular_equation_F(int N) {
  if (N <= 3) throw UnsupportedLevel("F_N needs N >= 4");
  ZPoly w = eds(N);
  ZPoly b = bc("b"), q;
  while (w.divides_by(b, &q)) w = q;
  for (int d = 4; d < N; ++d) {
    if (N % d) continue;
    ZPoly f = modular_equation_F(d);
    while (w.divides_by(f, &q)) w = q;
  }
  return primitive_part(w);
}

RatFunc unit_F(int k) {
  if (k == 2) {
    ZPoly d = tate_discriminant();
    return RatFunc(bc("b^4"), d);
  }
  if (k == 3) return RatFunc(bc("b"));
  return RatFunc(modular_equation_F(k));
}

const std::array<ZPoly, kBlocks>& blocks() {
  static const std::array<ZPoly, kBlocks> B{xy("x"),      xy("y"),       xy("x-1"),           xy("y-1"),
                                           xy("x*y-1"), xy("x*y-y+1"), xy("x^2*y-x*y+y-1")};
  return B;
}

RatFunc BlockForm::to_ratfunc() const {
  ZPoly n = residual.scale(unit), d = residual_den.scale(unit_den);
  for (int i = 0; i < kBlocks; ++i) {
    if (exps[i] > 0) n = n * blocks()[i].pow(exps[i]);
    if (exps[i] < 0) d = d * blocks()[i].pow(-exps[i]);
  }
  return RatFunc(n, d, false);
}

namespace {

// strip block factors from p, adding multiplicities to e
ZPoly strip_blocks(ZPoly p, std::array<int, kBlocks>& e, int sign) {
  const auto& B = blocks();
  // monomial blocks first
  for (int v = 0; v < 2; ++v) {
    unsigned lo = ~0u;
    for (auto& t : p.terms()) lo = std::min(lo, mono::exp(t.first, v));
    if (lo && lo != ~0u) {
      p = p.exact_div(B[v].pow(lo));
      e[v] += sign * (int)lo;
    }
  }
  ZPoly q;
  for (int i = 2; i < kBlocks; ++i) {
    // divide by growing powers to save passes
    for (unsigned step = 8; step >= 1; step /= 2) {
      ZPoly bp = B[i].pow(step);
      while (p.divides_by(bp, &q)) {
        p = std::move(q);
        e[i] += sign * (int)step;
      }
    }
  }
  return p;
}

}  // namespace

BlockForm transform_blocks(const ZPoly& g) {
  BlockForm out;
  out.residual_den = xy("1");
  if (g.is_zero()) {
    out.residual = xy("0");
    return out;
  }
  const int m = std::max(g.degree(0), 0), n = std::max(g.degree(1), 0);
  // b = Bn/Bd, c = Cn/Cd with Bn = R*Cn/x-block bookkeeping kept in exponents
  ZPoly Cn = xy("-(x*y-y+1)*(x-1)*(y-1)"), Cd = xy("x^2*y*(x*y-1)");
  ZPoly Bn = xy("-(x^2*y-x*y+y-1)*(x*y-y+1)*(x-1)*(y-1)"), Bd = xy("x^3*y*(x*y-1)^2");
  std::vector<ZPoly> Cdp{xy("1")}, Bdp{xy("1")};
  for (int j = 1; j <= n; ++j) Cdp.push_back(Cdp.back() * Cd);
  for (int i = 1; i <= m; ++i) Bdp.push_back(Bdp.back() * Bd);
  auto rows = g.coefficients_in(0);  // coefficient polys in c of b^i
  auto homog_c = [&](const ZPoly& pc) {
    // sum_j a_j Cn^j Cd^(n-j) by Horner
    auto cs = pc.coefficients_in(1);
    ZPoly h = xy("0");
    for (int j = n; j >= 0; --j) {
      Integer a = j < (int)cs.size() ? cs[j].constant_term() : Integer(0);
      h = h * Cn;
      if (a != 0) h = h + Cdp[n - j].scale(a);
    }
    return h;
  };
  ZPoly G = xy("0");
  for (int i = m; i >= 0; --i) {
    G = G * Bn;
    if (i < (int)rows.size() && !rows[i].is_zero()) G = G + homog_c(rows[i]) * Bdp[m - i];
  }
  if (G.is_zero()) throw DegenerateSubstitution("substitution annihilates the polynomial");
  out.exps = {};
  out.exps[0] = -(3 * m + 2 * n);
  out.exps[1] = -(m + n);
  out.exps[4] = -(2 * m + n);
  ZPoly r = strip_blocks(G, out.exps, 1);
  Integer c = content(r);
  out.unit = c;
  out.residual = primitive_part(r);
  return out;
}

RatFunc transform_to_xy(const RatFunc& g) {
  BlockForm a = transform_blocks(g.num()), b = transform_blocks(g.den());
  ZPoly n = a.residual.scale(a.unit), d = b.residual.scale(b.unit);
  for (int i = 0; i < kBlocks; ++i) {
    int e = a.exps[i] - b.exps[i];
    if (e > 0) n = n * blocks()[i].pow(e);
    if (e < 0) d = d * blocks()[i].pow(-e);
  }
  return RatFunc(n, d);
}

RatFunc r_of_xy() { return RatFunc(xy("x^2*y-x*y+y-1"), xy("x*(x*y-1)")); }
RatFunc s_of_xy() { return RatFunc(xy("x*y-y+1"), xy("x*y")); }
RatFunc c_of_xy() { return s_of_xy() * (r_of_xy() - RatFunc(xy("1"))); }
RatFunc b_of_xy() { return r_of_xy() * c_of_xy(); }

UnitSymbol F_symbol(int k) {
  RatFunc v = unit_F(k);
  return {'F', k, v.num(), v.den()};
}

UnitSymbol f_poly(int k) {
  if (k < 2) throw std::invalid_argument("k >= 2 required");
  {
    std::lock_guard<std::mutex> lk(f_mu);
    auto it = f_cache.find(k);
    if (it != f_cache.end()) return it->second;
  }
  RatFunc one(xy("1")), r = r_of_xy(), s = s_of_xy();
  RatFunc v;
  switch (k) {
    case 2: v = transform_to_xy(unit_F(2)); break;
    case 3: v = b_of_xy(); break;
    case 4: v = c_of_xy(); break;
    case 5: v = b_of_xy() - c_of_xy(); break;
    case 6: v = s - one; break;
    case 7: v = s - r; break;
    case 8: v = r * s - RatFunc(xy("2")) * r + one; break;
    case 9: v = s * s - s - r + one; break;
    default: {
      if (k > kSymbolicLimit) {
        v = RatFunc(residual_modular(k));
      } else {
        BlockForm bf = transform_blocks(modular_equation_F(k));
        v = RatFunc(bf.residual);
      }
    }
  }
  UnitSymbol u{'f', k, v.num(), v.den()};
  std::lock_guard<std::mutex> lk(f_mu);
  f_cache.emplace(k, u);
  return u;
}

namespace {

using qs::Series;

Series eval_series(const ZPoly& f, const Series& u, const Series& v) {
  uint64_t p = u.p;
  int M = std::min(u.prec, v.prec);
  std::vector<Series> pu{Series::constant(p, 1, M)}, pv = pu;
  Series acc = Series::constant(p, 0, M);
  for (auto& [m, c] : f.terms()) {
    unsigned a = mono::exp(m, 0), b = mono::exp(m, 1);
    while (pu.size() <= a) pu.push_back(pu.back() * u);
    while (pv.size() <= b) pv.push_back(pv.back() * v);
    acc = acc + (pu[a] * pv[b]).scale(mpz_fdiv_ui(c.get_mpz_t(), p));
  }
  return acc;
}

// b(x,y), c(x,y) as functions of points mod p
struct BCMap {
  uint64_t p;
  uint64_t m(uint64_t a, uint64_t b) const { return nt::mulmod(a, b, p); }
  uint64_t s(uint64_t a, uint64_t b) const { return (a + p - b) % p; }
  uint64_t ad(uint64_t a, uint64_t b) const { return (a + b) % p; }
  std::array<uint64_t, kBlocks> blocks(uint64_t x, uint64_t y) const {
    uint64_t xy = m(x, y);
    return {x, y, s(x, 1), s(y, 1), s(xy, 1), ad(s(xy, y), 1), s(ad(s(m(x, xy), xy), y), 1)};
  }
  bool ok(uint64_t x, uint64_t y) const {
    for (auto v : blocks(x, y))
      if (!v) return false;
    return true;
  }
  // b, c at (x, y); blocks must be nonzero
  std::pair<uint64_t, uint64_t> bc(uint64_t x, uint64_t y) const {
    auto B = blocks(x, y);
    uint64_t cn = p - m(m(B[5], B[2]), B[3]), cd = m(m(m(x, x), y), B[4]);
    uint64_t bn = m(cn, B[6]), bd = m(m(cd, x), B[4]);
    return {m(bn, nt::invmod(bd, p)), m(cn, nt::invmod(cd, p))};
  }
};

uint64_t eval_mod(const ZPoly& f, uint64_t p, uint64_t u, uint64_t v) {
  PrimeField K(p);
  return f.eval(K, {u, v}, [&](const Integer& c) { return K.from_integer(c); });
}

// values of F_k(b,c) / prod B_i^e_i on a (D+1) x (D+1) grid, interpolated mod p
std::vector<std::vector<uint64_t>> interpolate_residual(const ZPoly& F, const std::array<int, kBlocks>& e, uint64_t p,
                                                        int D, uint64_t& seed) {
  BCMap G{p};
  PrimeField K(p);
  auto value = [&](uint64_t x, uint64_t y) {
    auto [b, c] = G.bc(x, y);
    uint64_t v = eval_mod(F, p, b, c);
    auto B = G.blocks(x, y);
    for (int i = 0; i < kBlocks; ++i) {
      uint64_t f = nt::powmod(B[i], (uint64_t)std::abs(e[i]), p);
      v = e[i] >= 0 ? K.div(v, f) : K.mul(v, f);
    }
    return v;
  };
  auto newton = [&](const std::vector<uint64_t>& xs, std::vector<uint64_t> ys) {
    size_t n = xs.size();
    for (size_t j = 1; j < n; ++j)
      for (size_t i = n - 1; i >= j; --i) ys[i] = K.div(K.sub(ys[i], ys[i - 1]), K.sub(xs[i], xs[i - j]));
    std::vector<uint64_t> c(n, 0);
    for (int i = (int)n - 1; i >= 0; --i) {
      // c = c * (X - xs[i]) + ys[i]
      for (size_t k = n - 1; k >= 1; --k) c[k] = K.sub(c[k - 1], K.mul(c[k], xs[i]));
      c[0] = K.sub(ys[i], K.mul(c[0], xs[i]));
    }
    return c;
  };
  std::vector<uint64_t> xs, ys;
  while ((int)xs.size() <= D) {
    uint64_t x = 2 + nt::splitmix64(seed) % (p - 3);
    if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
  }
  while ((int)ys.size() <= D) {
    uint64_t y = 2 + nt::splitmix64(seed) % (p - 3);
    bool good = std::find(ys.begin(), ys.end(), y) == ys.end();
    for (auto x : xs) good = good && G.ok(x, y);
    if (good) ys.push_back(y);
  }
  // rows[i][j]: coefficient of y^j at x = xs[i]
  std::vector<std::vector<uint64_t>> rows;
  for (auto x : xs) {
    std::vector<uint64_t> vals;
    for (auto y : ys) vals.push_back(value(x, y));
    rows.push_back(newton(ys, vals));
  }
  std::vector<std::vector<uint64_t>> out(D + 1, std::vector<uint64_t>(D + 1));  // out[a][b]: x^a y^b
  for (int j = 0; j <= D; ++j) {
    std::vector<uint64_t> col;
    for (int i = 0; i <= D; ++i) col.push_back(rows[i][j]);
    auto c = newton(xs, col);
    for (int a = 0; a <= D; ++a) out[a][j] = c[a];
  }
  // spot check off the grid
  for (int t = 0; t < 4;) {
    uint64_t x = 2 + nt::splitmix64(seed) % (p - 3), y = 2 + nt::splitmix64(seed) % (p - 3);
    if (!G.ok(x, y)) continue;
    ++t;
    uint64_t acc = 0, xp = 1;
    for (int a = 0; a <= D; ++a, xp = K.mul(xp, x)) {
      uint64_t inner = 0;
      for (int b = D; b >= 0; --b) inner = K.add(K.mul(inner, y), out[a][b]);
      acc = K.add(acc, K.mul(xp, inner));
    }
    if (acc != value(x, y)) return {};
  }
  return out;
}

}  // namespace

std::array<int, kBlocks> block_exponents(const RatFunc& g, uint64_t seed) {
  const uint64_t p = nt::split_prime(2, (int)(seed % 8), 31);
  std::array<int, kBlocks> best{};
  for (int trial = 0; trial < 2; ++trial) {
    uint64_t x0 = 2 + nt::splitmix64(seed) % (p - 3), y0 = 2 + nt::splitmix64(seed) % (p - 3);
    uint64_t i1 = nt::invmod(x0, p), i2 = nt::invmod((1 + p - x0) % p, p);
    uint64_t q = (nt::mulmod(x0, x0, p) + p - x0 + 1) % p;
    if (!q) continue;
    uint64_t i3 = nt::invmod(q, p);
    for (int M = 64;; M *= 2) {
      if (M > 1 << 14) throw PrecisionExhausted("block exponent precision");
      auto T = [&](uint64_t a0) { return Series::constant(p, a0, M) + Series::monomial(p, 1, 1, M); };
      auto C = [&](uint64_t a0) { return Series::constant(p, a0, M); };
      std::array<std::pair<Series, Series>, kBlocks> lines{
          std::pair{Series::monomial(p, 1, 1, M), C(y0)}, {C(x0), Series::monomial(p, 1, 1, M)},
          {T(1), C(y0)}, {C(x0), T(1)}, {C(x0), T(i1)}, {C(x0), T(i2)}, {C(x0), T(i3)}};
      std::array<int, kBlocks> e{};
      try {
        for (int i = 0; i < kBlocks; ++i) {
          auto& [X, Y] = lines[i];
          Series one = C(1), xy = X * Y;
          Series cn = -((xy - Y + one) * (X - one) * (Y - one)), cd = X * X * Y * (xy - one);
          Series bn = cn * (X * xy - xy + Y - one), bd = cd * X * (xy - one);
          Series b = bn / bd, c = cn / cd;
          e[i] = eval_series(g.num(), b, c).valuation() - eval_series(g.den(), b, c).valuation();
        }
      } catch (const PrecisionExhausted&) {
        continue;
      }
      if (trial == 0) best = e;
      else if (e != best) throw DegenerateSubstitution("block exponents depend on the chosen line");
      break;
    }
  }
  return best;
}

ZPoly residual_modular(int k) {
  ZPoly F = modular_equation_F(k);
  auto e = block_exponents(RatFunc(F), 0x51ed + k);
  uint64_t seed = 0xa11ce + k;
  for (int D = 16; D <= 512; D *= 2) {
    Integer M = 1;
    std::vector<std::vector<Integer>> acc;
    ZPoly prev;
    bool fail = false;
    for (int pi = 0; pi < 40 && !fail; ++pi) {
      uint64_t p = nt::split_prime(2, pi);
      auto v = interpolate_residual(F, e, p, D, seed);
      if (v.empty()) {
        fail = true;
        break;
      }
      if (acc.empty()) acc.assign(D + 1, std::vector<Integer>(D + 1, 0));
      // CRT update
      Integer P = (unsigned long)p, Minv;
      Integer Mmod = M % P;
      mpz_invert(Minv.get_mpz_t(), Mmod.get_mpz_t(), P.get_mpz_t());
      std::vector<ZPoly::Term> terms;
      for (int a = 0; a <= D; ++a)
        for (int b = 0; b <= D; ++b) {
          Integer r = acc[a][b];
          Integer diff = (Integer((unsigned long)v[a][b]) - r % P) % P;
          if (diff < 0) diff += P;
          r += M * ((diff * Minv) % P);
          acc[a][b] = r;
        }
      M *= P;
      for (int a = 0; a <= D; ++a)
        for (int b = 0; b <= D; ++b) {
          Integer r = acc[a][b];
          if (2 * r > M) r -= M;
          if (r != 0) terms.push_back({mono::make({(unsigned)a, (unsigned)b}), r});
        }
      std::sort(terms.begin(), terms.end(), [](auto& s, auto& t) { return s.first > t.first; });
      ZPoly cur(Integers{}, XY, terms);
      if (pi > 0 && cur == prev) {
        ZPoly r = primitive_part(cur);
        if (r.is_zero()) throw ZeroPolynomial("empty residual");
        return r;
      }
      prev = cur;
    }
  }
  throw UnsupportedLevel("residual interpolation did not converge");
}

}  // namespace x1gon::modeq
