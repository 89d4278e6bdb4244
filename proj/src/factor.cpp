#include "x1gon/factor.hpp"

#include <numeric>

#include "x1gon/extension.hpp"

namespace x1gon {
namespace {

using IPoly = std::vector<Integer>;  // low to high

void itrim(IPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IPoly imul(const IPoly& a, const IPoly& b) {
  if (a.empty() || b.empty()) return {};
  IPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  return r;
}

void imod(IPoly& a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  itrim(a);
}

UPoly<PrimeField> to_fp(const IPoly& a, const PrimeField& F) {
  std::vector<uint64_t> c;
  for (auto& x : a) c.push_back(F.from_integer(x));
  return UPoly<PrimeField>(F, c);
}

IPoly from_fp(const UPoly<PrimeField>& a) {
  IPoly r;
  for (auto c : a.coeffs()) {
    Integer v;
    mpz_set_ui(v.get_mpz_t(), c);
    r.push_back(v);
  }
  return r;
}

Integer icontent(const IPoly& a) {
  Integer g = 0;
  for (auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IPoly primitive_of(const UPoly<Rationals>& a) {
  Integer den = 1;
  for (auto& c : a.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  IPoly r;
  for (auto& c : a.coeffs()) r.push_back(Integer(c * den));
  Integer g = icontent(r);
  if (r.back() < 0) g = -g;
  for (auto& c : r) c /= g;
  return r;
}

UPoly<Rationals> to_q(const IPoly& a) {
  std::vector<Rational> c;
  for (auto& x : a) c.push_back(Rational(x));
  return UPoly<Rationals>(Rationals{}, c);
}

// exact division over Z; returns false when not divisible
bool idivides(const IPoly& f, const IPoly& g, IPoly& q) {
  auto [qq, r] = to_q(f).divmod(to_q(g));
  if (!r.is_zero()) return false;
  q.clear();
  for (auto& c : qq.coeffs()) {
    if (c.get_den() != 1) return false;
    q.push_back(c.get_num());
  }
  return true;
}

// lift F = g*h mod p (g monic) to modulus M; returns (g, h) mod M
std::pair<IPoly, IPoly> hensel_two(const IPoly& F, UPoly<PrimeField> g, UPoly<PrimeField> h, const PrimeField& Fp,
                                   const Integer& M) {
  auto [one, s, t] = xgcd(g, h);
  IPoly G = from_fp(g), H = from_fp(h);
  H.back() = F.back();
  Integer m = Fp.p(), pz = Integer((unsigned long)Fp.p());
  while (m < M) {
    IPoly gh = imul(G, H), e(F.size(), 0);
    for (size_t i = 0; i < F.size(); ++i) e[i] = F[i] - (i < gh.size() ? gh[i] : Integer(0));
    for (auto& c : e) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    auto ep = to_fp(e, Fp);
    auto [q, r] = (s * ep).divmod(h);
    auto dg = t * ep + q * g;
    IPoly dG = from_fp(dg), dH = from_fp(r);
    for (size_t i = 0; i < dG.size(); ++i) {
      if (i >= G.size()) G.resize(i + 1, 0);
      G[i] += m * dG[i];
    }
    for (size_t i = 0; i < dH.size(); ++i) {
      if (i >= H.size()) H.resize(i + 1, 0);
      H[i] += m * dH[i];
    }
    m *= pz;
  }
  imod(G, M);
  imod(H, M);
  return {G, H};
}

// factor a squarefree primitive integer polynomial with positive lc
std::vector<IPoly> zassenhaus(IPoly f) {
  int n = (int)f.size() - 1;
  if (n <= 1) return {f};
  // choose a good prime with few modular factors
  uint64_t bestp = 0;
  Factorization<PrimeField> best;
  int good = 0;
  for (uint64_t p = 3; good < 6 && p < 100000; p += 2) {
    if (!nt::is_prime(p)) continue;
    if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0) continue;
    PrimeField Fp(p);
    auto fp = to_fp(f, Fp);
    if (gcd(fp, fp.derivative()).deg() > 0) continue;
    auto fac = factor_finite(fp);
    ++good;
    if (bestp == 0 || fac.size() < best.size()) bestp = p, best = fac;
  }
  if (best.size() == 1) return {f};
  PrimeField Fp(bestp);
  // coefficient bound for factors: 2^n * ||f||_2, times |lc|, times 2 for symmetric range
  Integer norm2 = 0;
  for (auto& c : f) norm2 += c * c;
  Integer B = sqrt(norm2) + 1;
  B <<= n;
  B *= 2 * abs(f.back());
  Integer M = Integer((unsigned long)bestp);
  while (M <= B) M *= bestp;
  std::vector<UPoly<PrimeField>> mods;
  for (auto& [g, e] : best) mods.push_back(g);
  std::vector<IPoly> lifted;
  IPoly T = f;
  imod(T, M);
  for (size_t i = 0; i + 1 < mods.size(); ++i) {
    auto rest = UPoly<PrimeField>::constant(Fp, Fp.from_integer(T.back()));
    for (size_t j = i + 1; j < mods.size(); ++j) rest = rest * mods[j];
    auto [G, H] = hensel_two(T, mods[i], rest, Fp, M);
    lifted.push_back(G);
    T = H;
  }
  {
    Integer il;
    mpz_invert(il.get_mpz_t(), T.back().get_mpz_t(), M.get_mpz_t());
    for (auto& c : T) c *= il;
    imod(T, M);
    lifted.push_back(T);
  }
  std::vector<IPoly> out;
  std::vector<int> alive(lifted.size(), 1);
  IPoly cur = f;
  Integer half = M / 2;
  int remaining = (int)lifted.size();
  for (int s = 1; 2 * s <= remaining; ++s) {
    std::vector<int> idx;
    for (size_t i = 0; i < lifted.size(); ++i)
      if (alive[i]) idx.push_back((int)i);
    std::vector<int> sel(s);
    std::iota(sel.begin(), sel.end(), 0);
    bool restart = false;
    while (true) {
      IPoly cand{cur.back()};
      for (int k : sel) {
        cand = imul(cand, lifted[idx[k]]);
        imod(cand, M);
      }
      for (auto& c : cand)
        if (c > half) c -= M;
      itrim(cand);
      Integer g = icontent(cand);
      if (cand.back() < 0) g = -g;
      for (auto& c : cand) c /= g;
      IPoly q;
      if (idivides(cur, cand, q)) {
        out.push_back(cand);
        cur = q;
        for (int k : sel) alive[idx[k]] = 0;
        remaining -= s;
        restart = true;
        break;
      }
      // next combination
      int i = s - 1;
      while (i >= 0 && sel[i] == (int)idx.size() - s + i) --i;
      if (i < 0) break;
      ++sel[i];
      for (int j = i + 1; j < s; ++j) sel[j] = sel[j - 1] + 1;
    }
    if (restart) --s;
  }
  if (cur.size() > 1) {
    Integer g = icontent(cur);
    if (cur.back() < 0) g = -g;
    for (auto& c : cur) c /= g;
    out.push_back(cur);
  }
  return out;
}

}  // namespace

Factorization<Rationals> factor_rational(const UPoly<Rationals>& a) {
  if (a.is_zero()) throw ZeroPolynomial("factor of zero polynomial");
  Factorization<Rationals> out;
  for (auto& [s, m] : squarefree_char0(a)) {
    for (auto& g : zassenhaus(primitive_of(s))) out.push_back({to_q(g).monic(), m});
  }
  detail::sort_factors(out);
  return out;
}

// ---- number fields ----
namespace {

UPoly<Rationals> base_poly(const NumberField& K, const NumberField::Elem& e) {
  return UPoly<Rationals>(K.base(), e);
}

// resultant in t of m(t) and G(t, z), as a polynomial in z, where G is given
// by its z-coefficients (elements of K = Q[t]/m)
UPoly<Rationals> norm_poly(const NumberField& K, const std::vector<NumberField::Elem>& gz) {
  UPoly<Rationals> m(K.base(), K.modulus());
  int D = (int)K.degree() * ((int)gz.size() - 1);
  std::vector<Rational> xs, ys;
  for (int j = 0; j <= D; ++j) {
    Rational z = j - D / 2;
    UPoly<Rationals> acc(K.base());
    Rational pw = 1;
    for (auto& c : gz) {
      acc = acc + base_poly(K, c).scale(pw);
      pw *= z;
    }
    xs.push_back(z);
    ys.push_back(resultant(m, acc));
  }
  // Lagrange interpolation
  UPoly<Rationals> res(K.base());
  for (int j = 0; j <= D; ++j) {
    UPoly<Rationals> term = UPoly<Rationals>::constant(K.base(), ys[j]);
    for (int l = 0; l <= D; ++l) {
      if (l == j) continue;
      term = term * UPoly<Rationals>(K.base(), {-xs[l], Rational(1)});
      term = term.scale(1 / (xs[j] - xs[l]));
    }
    res = res + term;
  }
  return res;
}

UPoly<NumberField> lift_q(const NumberField& K, const UPoly<Rationals>& h) {
  std::vector<NumberField::Elem> c;
  for (auto& x : h.coeffs()) c.push_back(K.from_base(x));
  return UPoly<NumberField>(K, c);
}

// shift z -> z - s*alpha
UPoly<NumberField> shift(const UPoly<NumberField>& g, long s) {
  const auto& K = g.field();
  UPoly<NumberField> lin(K, {K.neg(K.mul(K.from_int(s), K.gen())), K.one()});
  return g.compose(lin);
}

Factorization<NumberField> factor_sqfree_nf(const UPoly<NumberField>& g) {
  const auto& K = g.field();
  if (g.deg() <= 1) return {{g.monic(), 1}};
  for (long s : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 4L, -4L, 5L, -5L, 6L, 7L, 8L, 9L, 10L}) {
    auto gs = shift(g, s);
    auto N = norm_poly(K, gs.coeffs());
    if (gcd(N, N.derivative()).deg() > 0) continue;
    Factorization<NumberField> out;
    for (auto& [h, e] : factor_rational(N)) {
      auto f = gcd(gs, lift_q(K, h));
      if (f.deg() > 0) out.push_back({shift(f, -s).monic(), 1});
    }
    return out;
  }
  throw DivisionError("no separating shift found");
}

}  // namespace

Factorization<NumberField> factor(const UPoly<NumberField>& a) {
  if (a.is_zero()) throw ZeroPolynomial("factor of zero polynomial");
  Factorization<NumberField> out;
  if (a.field().degree() == 1) {
    // base case: coefficients are rationals
    const auto& K = a.field();
    std::vector<Rational> c;
    for (auto& e : a.coeffs()) c.push_back(e[0]);
    for (auto& [h, m] : factor_rational(UPoly<Rationals>(K.base(), c))) out.push_back({lift_q(K, h), m});
    return out;
  }
  for (auto& [s, m] : squarefree_char0(a))
    for (auto& [f, one] : factor_sqfree_nf(s)) out.push_back({f, m});
  detail::sort_factors(out);
  return out;
}

FieldEmbedding<NumberField> extend_field(const NumberField& K, const UPoly<NumberField>& g0) {
  auto g = g0.monic();
  if (g.deg() == 1) return {K, K, K.gen(), K.neg(g.coef(0))};
  if (K.degree() == 1) {
    std::vector<Rational> c;
    for (auto& e : g.coeffs()) c.push_back(e[0]);
    NumberField L(K.base(), c);
    // old generator is the rational K.gen()
    return {K, L, L.from_base(K.gen()[0]), L.gen()};
  }
  for (long s : {1L, -1L, 2L, -2L, 3L, -3L, 4L, 5L, 6L, 7L}) {
    auto gs = shift(g, s);  // root gamma = beta + s*alpha
    auto N = norm_poly(K, gs.coeffs());
    if (gcd(N, N.derivative()).deg() > 0) continue;
    N = N.monic();
    NumberField L(K.base(), N.coeffs());
    // alpha in L: gcd over L of m(t) and g(gamma - s t) as polynomials in t
    std::vector<NumberField::Elem> mc;
    for (auto& r : K.modulus()) mc.push_back(L.from_base(r));
    UPoly<NumberField> mt(L, mc);
    UPoly<NumberField> lin(L, {L.gen(), L.from_int(-s)});  // gamma - s t
    UPoly<NumberField> acc(L);
    for (int i = g.deg(); i >= 0; --i) {
      // coefficient g_i(t) as polynomial in t over L
      std::vector<NumberField::Elem> ci;
      for (auto& r : g.coef(i)) ci.push_back(L.from_base(r));
      acc = acc * lin + UPoly<NumberField>(L, ci);
    }
    auto h = gcd(mt, acc);
    if (h.deg() != 1) continue;
    auto alpha = L.neg(h.coef(0));
    auto beta = L.sub(L.gen(), L.mul(L.from_int(s), alpha));
    return {K, L, alpha, beta};
  }
  throw DivisionError("primitive element search failed");
}

FiniteField make_finite_field(uint64_t p, int k, uint64_t seed) {
  PrimeField Fp(p);
  if (k == 1) return FiniteField(Fp, {Fp.zero(), Fp.one()});
  auto m = random_irreducible(Fp, k, seed);
  return FiniteField(Fp, m.coeffs());
}

FieldEmbedding<FiniteField> extend_field(const FiniteField& K, const UPoly<FiniteField>& g0) {
  auto g = g0.monic();
  if (g.deg() == 1) return {K, K, K.gen(), K.neg(g.coef(0))};
  int k = (int)K.degree() * g.deg();
  FiniteField L = make_finite_field(K.base().p(), k, 0x1234 + (uint64_t)k);
  // image of the old generator: a root of K's modulus in L
  std::vector<FiniteField::Elem> mc;
  for (auto& r : K.modulus()) mc.push_back(L.from_base(r));
  FiniteField::Elem alpha;
  if (K.degree() == 1)
    alpha = L.from_base(K.gen()[0]);
  else
    alpha = roots_finite(UPoly<FiniteField>(L, mc)).at(0);
  FieldEmbedding<FiniteField> emb{K, L, alpha, L.zero()};
  emb.beta = roots_finite(emb.map(g)).at(0);
  return emb;
}

}  // namespace x1gon
