#pragma once
// Univariate factorization: Cantor-Zassenhaus over finite fields,
// Zassenhaus with Hensel lifting over Q, Trager over number fields.
#include <map>
#include <utility>
#include <vector>

#include "x1gon/upoly.hpp"

namespace x1gon {

template <class F>
using Factorization = std::vector<std::pair<UPoly<F>, int>>;

template <class F>
typename F::Elem fpow(const F& f, typename F::Elem a, const Integer& e) {
  typename F::Elem r = f.one();
  size_t nb = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return r;
  for (size_t i = nb; i-- > 0;) {
    r = f.mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = f.mul(r, a);
  }
  return r;
}

namespace detail {

// sort key so factor lists come out in a reproducible order
template <class F>
bool poly_less(const UPoly<F>& a, const UPoly<F>& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  const F& f = a.field();
  for (int i = a.deg(); i >= 0; --i) {
    auto sa = f.str(a.coef(i)), sb = f.str(b.coef(i));
    if (sa != sb) return sa.size() != sb.size() ? sa.size() < sb.size() : sa < sb;
  }
  return false;
}

template <class F>
void sort_factors(Factorization<F>& fs) {
  std::sort(fs.begin(), fs.end(), [](auto& a, auto& b) {
    if (poly_less(a.first, b.first)) return true;
    if (poly_less(b.first, a.first)) return false;
    return a.second < b.second;
  });
}

// p-th root of a polynomial whose exponents are all divisible by p (finite field)
template <class F>
UPoly<F> pth_root(const UPoly<F>& g) {
  const F& f = g.field();
  uint64_t p = f.char_p();
  Integer e = f.size() / Integer((unsigned long)p);  // a^(q/p) is the p-th root
  std::vector<typename F::Elem> c;
  for (int i = 0; i <= g.deg(); i += (int)p) c.push_back(fpow(f, g.coef(i), e));
  return UPoly<F>(f, c);
}

}  // namespace detail

// squarefree decomposition of a monic polynomial over a finite field
template <class F>
Factorization<F> squarefree_finite(const UPoly<F>& a) {
  Factorization<F> out;
  const F& f = a.field();
  uint64_t p = f.char_p();
  auto rec = [&](auto&& self, UPoly<F> g, int mult) -> void {
    if (g.deg() <= 0) return;
    auto d = g.derivative();
    if (d.is_zero()) {
      self(self, detail::pth_root(g), mult * (int)p);
      return;
    }
    auto c = gcd(g, d);
    auto w = g / c;
    int i = 1;
    while (w.deg() > 0) {
      auto y = gcd(w, c);
      auto z = w / y;
      if (z.deg() > 0) out.push_back({z.monic(), i * mult});
      ++i;
      w = y;
      c = c / y;
    }
    if (c.deg() > 0) self(self, detail::pth_root(c), mult * (int)p);
  };
  rec(rec, a.monic(), 1);
  return out;
}

// distinct-degree factorization of a squarefree monic polynomial
template <class F>
std::vector<std::pair<UPoly<F>, int>> ddf(UPoly<F> g) {
  const F& f = g.field();
  std::vector<std::pair<UPoly<F>, int>> out;
  auto x = UPoly<F>::x(f);
  auto h = x;
  Integer q = f.size();
  for (int d = 1; 2 * d <= g.deg(); ++d) {
    h = powmod(h, q, g);
    auto t = gcd(g, h - x);
    if (t.deg() > 0) {
      out.push_back({t, d});
      g = g / t;
      h = h % g;
    }
  }
  if (g.deg() > 0) out.push_back({g.monic(), g.deg()});
  return out;
}

// equal-degree splitting: g squarefree monic, all irreducible factors of degree d
template <class F>
void edf(const UPoly<F>& g, int d, uint64_t& seed, std::vector<UPoly<F>>& out) {
  if (g.deg() == d) {
    out.push_back(g);
    return;
  }
  const F& f = g.field();
  Integer q = f.size();
  Integer qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
  uint64_t p = f.char_p();
  for (;;) {
    std::vector<typename F::Elem> c;
    for (int i = 0; i < g.deg(); ++i) c.push_back(f.random(seed));
    UPoly<F> a(f, c);
    if (a.deg() <= 0) continue;
    UPoly<F> b(f);
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(m-1)), q^d = 2^m
      size_t m = mpz_sizeinbase(qd.get_mpz_t(), 2) - 1;
      auto t = a % g;
      b = t;
      for (size_t i = 1; i < m; ++i) {
        t = (t * t) % g;
        b = b + t;
      }
    } else {
      b = powmod(a, (qd - 1) / 2, g) - UPoly<F>::constant(f, f.one());
    }
    auto h = gcd(g, b);
    if (h.deg() > 0 && h.deg() < g.deg()) {
      edf(h, d, seed, out);
      edf(g / h, d, seed, out);
      return;
    }
  }
}

template <class F>
Factorization<F> factor_finite(const UPoly<F>& a, uint64_t seed = 0x5eed) {
  if (a.is_zero()) throw ZeroPolynomial("factor of zero polynomial");
  Factorization<F> out;
  for (auto& [s, m] : squarefree_finite(a))
    for (auto& [g, d] : ddf(s)) {
      std::vector<UPoly<F>> parts;
      edf(g, d, seed, parts);
      for (auto& p : parts) out.push_back({p, m});
    }
  detail::sort_factors(out);
  return out;
}

// roots in the coefficient field
template <class F>
std::vector<typename F::Elem> roots_finite(const UPoly<F>& a, uint64_t seed = 0x5eed) {
  const F& f = a.field();
  std::vector<typename F::Elem> out;
  if (a.deg() <= 0) return out;
  auto g = a.monic();
  auto x = UPoly<F>::x(f);
  auto h = gcd(g, powmod(x, f.size(), g) - x);
  if (h.deg() <= 0) return out;
  std::vector<UPoly<F>> lin;
  edf(h, 1, seed, lin);
  for (auto& l : lin) out.push_back(f.neg(l.coef(0)));
  return out;
}

// Ben-Or irreducibility test over a finite field
template <class F>
bool is_irreducible_finite(const UPoly<F>& g) {
  if (g.deg() <= 0) return false;
  const F& f = g.field();
  auto m = g.monic();
  auto x = UPoly<F>::x(f);
  auto h = x;
  for (int i = 1; 2 * i <= m.deg(); ++i) {
    h = powmod(h, f.size(), m);
    if (gcd(m, h - x).deg() > 0) return false;
  }
  return true;
}

template <class F>
UPoly<F> random_irreducible(const F& f, int k, uint64_t seed) {
  for (;;) {
    std::vector<typename F::Elem> c;
    for (int i = 0; i < k; ++i) c.push_back(f.random(seed));
    c.push_back(f.one());
    UPoly<F> g(f, c);
    if (is_irreducible_finite(g)) return g;
  }
}

// ---- rationals ----

Factorization<Rationals> factor_rational(const UPoly<Rationals>& a);
// squarefree decomposition over a field of characteristic 0 (Yun)
template <class F>
Factorization<F> squarefree_char0(const UPoly<F>& a) {
  Factorization<F> out;
  auto g = a.monic();
  auto d = g.derivative();
  auto c = gcd(g, d);
  auto w = g / c;
  auto y = d / c - w.derivative();
  int i = 1;
  while (w.deg() > 0) {
    auto z = gcd(w, y);
    if (z.deg() > 0) out.push_back({z, i});
    w = w / z;
    y = y / z - w.derivative();
    ++i;
  }
  return out;
}

inline Factorization<PrimeField> factor(const UPoly<PrimeField>& a) { return factor_finite(a); }
inline Factorization<FiniteField> factor(const UPoly<FiniteField>& a) { return factor_finite(a); }
inline Factorization<Rationals> factor(const UPoly<Rationals>& a) { return factor_rational(a); }
Factorization<NumberField> factor(const UPoly<NumberField>& a);

}  // namespace x1gon
