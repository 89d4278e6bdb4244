#pragma once
// Rational Puiseux expansions (one expansion per place, conjugates never split) of a
// plane curve f(x,y) = 0 above a point of the x-line, and valuations at those places.
#include <climits>
#include <numeric>
#include <optional>
#include <sstream>

#include "x1gon/extension.hpp"
#include "x1gon/mpoly.hpp"
#include "x1gon/ratfunc.hpp"

namespace x1gon::puiseux {

// truncated Laurent series over a field; c[0] is the coefficient of t^val, known mod t^prec
template <class F>
struct LSeries {
  using Elem = typename F::Elem;
  F f;
  int val = 0, prec = 0;
  std::vector<Elem> c;

  static LSeries monomial(const F& f, const Elem& a, int e, int prec) {
    LSeries s{f, e, prec, {}};
    if (e < prec && !f.is_zero(a)) s.c = {a};
    s.normalize();
    return s;
  }
  static LSeries constant(const F& f, const Elem& a, int prec) { return monomial(f, a, 0, prec); }
  bool is_zero() const { return c.empty(); }
  void normalize() {
    size_t k = 0;
    while (k < c.size() && f.is_zero(c[k])) ++k;
    if (k) {
      c.erase(c.begin(), c.begin() + k);
      val += (int)k;
    }
    if ((int)c.size() > prec - val) c.resize(std::max(0, prec - val));
    if (c.empty()) val = prec;
  }
  LSeries operator+(const LSeries& o) const {
    LSeries r{f, std::min(val, o.val), std::min(prec, o.prec), {}};
    r.c.assign(std::max(0, r.prec - r.val), f.zero());
    for (size_t i = 0; i < c.size() && val + (int)i < r.prec; ++i) r.c[val + i - r.val] = c[i];
    for (size_t i = 0; i < o.c.size() && o.val + (int)i < r.prec; ++i) {
      auto& t = r.c[o.val + i - r.val];
      t = f.add(t, o.c[i]);
    }
    r.normalize();
    return r;
  }
  LSeries operator-() const {
    LSeries r = *this;
    for (auto& v : r.c) v = f.neg(v);
    return r;
  }
  LSeries operator-(const LSeries& o) const { return *this + (-o); }
  LSeries scale(const Elem& a) const {
    LSeries r = *this;
    for (auto& v : r.c) v = f.mul(v, a);
    r.normalize();
    return r;
  }
  LSeries operator*(const LSeries& o) const {
    if (is_zero() || o.is_zero()) {
      int p = std::min(prec + (o.is_zero() ? o.prec : o.val), o.prec + (is_zero() ? prec : val));
      return LSeries{f, p, p, {}};
    }
    int rel = std::min(prec - val, o.prec - o.val);
    LSeries r{f, val + o.val, val + o.val + rel, std::vector<Elem>(rel, f.zero())};
    for (size_t i = 0; i < c.size() && (int)i < rel; ++i)
      for (size_t j = 0; j < o.c.size() && (int)(i + j) < rel; ++j) f.addmul(r.c[i + j], c[i], o.c[j]);
    r.normalize();
    return r;
  }
  LSeries inv() const {
    if (is_zero()) throw PrecisionExhausted("inverting a series that is zero to the working precision");
    int rel = prec - val;
    LSeries r{f, -val, -val + rel, std::vector<Elem>(rel, f.zero())};
    Elem li = f.inv(c[0]);
    r.c[0] = li;
    for (int k = 1; k < rel; ++k) {
      Elem acc = f.zero();
      for (int i = 1; i <= k && i < (int)c.size(); ++i) f.addmul(acc, c[i], r.c[k - i]);
      r.c[k] = f.neg(f.mul(acc, li));
    }
    r.normalize();
    return r;
  }
  int valuation() const {
    if (is_zero()) throw PrecisionExhausted("series is zero to the working precision");
    return val;
  }
};

template <class F>
struct Stage {
  int q, m, u, v;
  typename F::Elem xi;
};

template <class F>
struct Place {
  using Elem = typename F::Elem;
  F base, field;
  ZPoly curve;
  bool at_infinity = false;
  Elem center;  // in `field`
  int e = 1;
  int residue_degree = 1;
  std::vector<Stage<F>> stages;        // constants live in `field`
  std::vector<UPoly<F>> regular;       // last equation, simple root Y = 0 above X = 0
  int truncation_order = 0;
  LSeries<F> xs, ys;                   // x(t), y(t) to absolute precision truncation_order

  // recompute x(t), y(t) so that both are known at least mod t^W
  void extend(int W);
  int valuation(const ZPoly& g);
  int valuation(const RatFunc& g) { return valuation(g.num()) - valuation(g.den()); }
  std::string dump() const;
};

// places of f = 0 above x = x0 (nullopt: x = infinity); f in Z[x,y] with positive y-degree.
// Places of residue degree above max_degree are skipped.
template <class F>
std::vector<Place<F>> places_above(const ZPoly& f, const F& K, const std::optional<typename F::Elem>& x0,
                                   int max_degree = INT_MAX);

// implementation details
namespace detail {

template <class F>
using BPoly = std::vector<UPoly<F>>;  // index = power of Y, coefficient polynomial in X

template <class F>
int ordx(const UPoly<F>& a) {
  for (int j = 0; j <= a.deg(); ++j)
    if (!a.field().is_zero(a.coef(j))) return j;
  return INT_MAX;
}

inline void bezout(int q, int m, int& u, int& v) {
  // u q - v m = 1
  long r0 = q, r1 = m, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long qq = r0 / r1;
    long tmp = r0 - qq * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - qq * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - qq * t1;
    t0 = t1;
    t1 = tmp;
  }
  // s0 q + t0 m = r0 = +-1
  if (r0 < 0) {
    s0 = -s0;
    t0 = -t0;
  }
  u = (int)s0;
  v = (int)-t0;
}

template <class F>
typename F::Elem epow(const F& K, const typename F::Elem& a, long k) {
  if (k < 0) return epow(K, K.inv(a), -k);
  typename F::Elem r = K.one(), b = a;
  for (; k; k >>= 1) {
    if (k & 1) r = K.mul(r, b);
    if (k > 1) b = K.mul(b, b);
  }
  return r;
}

// G(xi^v X^q, X^m (xi^u + Y)) / X^l
template <class F>
BPoly<F> substitute(const BPoly<F>& G, const F& K, int q, int m, int u, int v, const typename F::Elem& xi, long l) {
  int dy = (int)G.size() - 1;
  auto xu = epow(K, xi, u), xv = epow(K, xi, v);
  std::vector<std::vector<typename F::Elem>> out(dy + 1);
  // binomial rows
  std::vector<std::vector<Integer>> binom(dy + 1);
  for (int i = 0; i <= dy; ++i) {
    binom[i].assign(i + 1, 1);
    for (int k = 1; k < i; ++k) binom[i][k] = binom[i - 1][k - 1] + binom[i - 1][k];
  }
  std::vector<typename F::Elem> xupow{K.one()};
  for (int i = 1; i <= dy; ++i) xupow.push_back(K.mul(xupow.back(), xu));
  for (int i = 0; i <= dy; ++i) {
    const auto& a = G[i];
    for (int j = 0; j <= a.deg(); ++j) {
      if (K.is_zero(a.coef(j))) continue;
      long ex = (long)q * j + (long)m * i - l;
      if (ex < 0) throw std::logic_error("point below the Newton polygon");
      auto cj = K.mul(a.coef(j), epow(K, xv, j));
      for (int k = 0; k <= i; ++k) {
        auto t = K.mul(cj, K.mul(K.from_integer(binom[i][k]), xupow[i - k]));
        auto& row = out[k];
        if ((long)row.size() <= ex) row.resize(ex + 1, K.zero());
        row[ex] = K.add(row[ex], t);
      }
    }
  }
  BPoly<F> r;
  for (auto& row : out) r.push_back(UPoly<F>(K, row));
  while (r.size() > 1 && r.back().is_zero()) r.pop_back();
  return r;
}

template <class F>
BPoly<F> map_bpoly(const BPoly<F>& G, const FieldEmbedding<F>& emb) {
  BPoly<F> r;
  for (auto& a : G) r.push_back(emb.map(a));
  return r;
}

template <class F>
struct Expander {
  const F base;
  std::vector<Place<F>> out;
  int depth_cap;
  int max_degree;

  void run(BPoly<F> G, F K, std::vector<Stage<F>> stages, typename F::Elem center, bool first) {
    if ((int)stages.size() > depth_cap) throw NotSquarefree("Puiseux expansion does not separate branches");
    // lower convex hull of (i, ordx(G_i))
    std::vector<std::pair<int, int>> pts;
    for (int i = 0; i < (int)G.size(); ++i) {
      int o = ordx(G[i]);
      if (o != INT_MAX) pts.push_back({i, o});
    }
    if (pts.empty()) throw NotSquarefree("zero polynomial in Puiseux expansion");
    if (!first && pts[0].first > 0) throw NotSquarefree("repeated branch in Puiseux expansion");
    std::vector<std::pair<int, int>> hull;
    for (auto& p : pts) {
      while (hull.size() >= 2) {
        auto& a = hull[hull.size() - 2];
        auto& b = hull.back();
        // keep b only if it lies strictly below segment a-p
        long cross = (long)(b.first - a.first) * (p.second - a.second) - (long)(b.second - a.second) * (p.first - a.first);
        if (cross <= 0) hull.pop_back();
        else break;
      }
      hull.push_back(p);
    }
    for (size_t h = 0; h + 1 < hull.size(); ++h) {
      auto [i1, j1] = hull[h];
      auto [i2, j2] = hull[h + 1];
      int num = j1 - j2, den = i2 - i1;  // slope m/q = num/den
      int g = std::gcd(std::abs(num), den);
      int q = den / g, m = num / g;
      if (!first && m <= 0) continue;
      long l = (long)q * j1 + (long)m * i1;
      if (K.char_p() != 0 && q % (long)K.char_p() == 0)
        throw WildRamification("ramification index divisible by the characteristic");
      // characteristic polynomial on the edge
      std::vector<typename F::Elem> phi((i2 - i1) / q + 1, K.zero());
      for (int i = i1; i <= i2; i += q) {
        long jj = (l - (long)m * i);
        if (jj % q) continue;
        phi[(i - i1) / q] = G[i].coef(jj / q);
      }
      UPoly<F> Phi(K, phi);
      for (auto& [psi, mult] : factor(Phi)) {
        if (psi.deg() < 1) continue;
        if ((long)psi.deg() * (K.degree() / base.degree()) > max_degree) continue;
        F L = K;
        typename F::Elem xi;
        BPoly<F> GL = G;
        auto st = stages;
        auto cen = center;
        if (psi.deg() == 1) {
          xi = K.neg(K.div(psi.coef(0), psi.coef(1)));
        } else {
          auto emb = extend_field(K, psi);
          L = emb.to;
          xi = emb.beta;
          GL = map_bpoly(G, emb);
          for (auto& s : st) s.xi = emb(s.xi);
          cen = emb(cen);
        }
        int u, v;
        bezout(q, m, u, v);
        auto G1 = substitute(GL, L, q, m, u, v, xi, l);
        st.push_back({q, m, u, v, xi});
        if (mult == 1) {
          Place<F> P;
          P.base = base;
          P.field = L;
          P.center = cen;
          P.stages = st;
          P.regular = G1;
          P.e = 1;
          for (auto& s : st) P.e *= s.q;
          P.residue_degree = (int)(L.degree() / base.degree());
          out.push_back(std::move(P));
        } else {
          run(G1, L, st, cen, false);
        }
      }
    }
  }
};

// truncated power series helpers (length n)
template <class F>
std::vector<typename F::Elem> ps_mul(const F& K, const std::vector<typename F::Elem>& a,
                                     const std::vector<typename F::Elem>& b, size_t n) {
  std::vector<typename F::Elem> r(n, K.zero());
  for (size_t i = 0; i < a.size() && i < n; ++i) {
    if (K.is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size() && i + j < n; ++j) K.addmul(r[i + j], a[i], b[j]);
  }
  return r;
}

template <class F>
std::vector<typename F::Elem> ps_inv(const F& K, const std::vector<typename F::Elem>& a, size_t n) {
  std::vector<typename F::Elem> r(n, K.zero());
  auto li = K.inv(a.at(0));
  r[0] = li;
  for (size_t k = 1; k < n; ++k) {
    auto acc = K.zero();
    for (size_t i = 1; i <= k && i < a.size(); ++i) K.addmul(acc, a[i], r[k - i]);
    r[k] = K.neg(K.mul(acc, li));
  }
  return r;
}

// root S(X) of G(X, S) = 0 with S(0) = 0, to n coefficients (Newton iteration)
template <class F>
std::vector<typename F::Elem> lift_root(const F& K, const BPoly<F>& G, size_t n) {
  std::vector<typename F::Elem> S(n, K.zero());
  auto trunc = [&](const UPoly<F>& a, size_t k) {
    std::vector<typename F::Elem> v(k, K.zero());
    for (size_t i = 0; i < k && (int)i <= a.deg(); ++i) v[i] = a.coef(i);
    return v;
  };
  size_t prec = 1;
  while (prec < n) {
    size_t np = std::min(n, 2 * prec);
    std::vector<typename F::Elem> s(S.begin(), S.begin() + np);
    // Horner for G(S) and G_Y(S)
    std::vector<typename F::Elem> g(np, K.zero()), gy(np, K.zero());
    for (int i = (int)G.size() - 1; i >= 0; --i) {
      gy = ps_mul(K, gy, s, np);
      for (size_t k = 0; k < np; ++k) gy[k] = K.add(gy[k], g[k]);
      g = ps_mul(K, g, s, np);
      auto a = trunc(G[i], np);
      for (size_t k = 0; k < np; ++k) g[k] = K.add(g[k], a[k]);
    }
    auto corr = ps_mul(K, g, ps_inv(K, gy, np), np);
    for (size_t k = 0; k < np; ++k) S[k] = K.sub(s[k], corr[k]);
    prec = np;
  }
  S.resize(n);
  return S;
}

}  // namespace detail

template <class F>
void Place<F>::extend(int W) {
  const F& L = field;
  // exponent shifts accumulated from the last stage back to the first
  long ex = 1, shift = 0;
  for (int k = (int)stages.size() - 1; k >= 0; --k) {
    shift += ex * stages[k].m;
    ex *= stages[k].q;
  }
  long n = std::max<long>(4, W - std::min<long>(0, shift) + 2);
  auto S = detail::lift_root(L, regular, (size_t)n);
  LSeries<F> Y{L, 0, (int)n, S};
  Y.normalize();
  // X_k = cx t^ek
  typename F::Elem cx = L.one();
  long ek = 1;
  for (int k = (int)stages.size() - 1; k >= 0; --k) {
    auto& s = stages[k];
    auto coef = detail::epow(L, cx, s.m);
    auto base_term = LSeries<F>::constant(L, detail::epow(L, s.xi, s.u), Y.prec);
    Y = (base_term + Y);
    Y = LSeries<F>::monomial(L, coef, (int)(ek * s.m), INT_MAX / 4) * Y;
    cx = L.mul(detail::epow(L, s.xi, s.v), detail::epow(L, cx, s.q));
    ek *= s.q;
  }
  e = (int)ek;
  int P = (int)std::min<long>(Y.prec, W + 64);
  if (at_infinity) {
    xs = LSeries<F>::monomial(L, L.inv(cx), -e, P);
  } else {
    xs = LSeries<F>::constant(L, center, P) + LSeries<F>::monomial(L, cx, e, P);
  }
  ys = Y;
  ys.prec = std::min(ys.prec, P);
  ys.normalize();
  truncation_order = std::min(xs.prec, ys.prec);
}

template <class F>
int Place<F>::valuation(const ZPoly& g) {
  if (g.is_zero()) throw NotAFunction("zero function");
  ZPoly q;
  if (!curve.is_zero() && g.divides_by(curve, &q)) throw NotAFunction("function vanishes on the curve");
  int W = std::max(truncation_order, 16);
  for (int attempt = 0; attempt < 10; ++attempt, W *= 2) {
    if (truncation_order < W) extend(W);
    const F& L = field;
    std::vector<LSeries<F>> px{LSeries<F>::constant(L, L.one(), truncation_order)}, py = px;
    auto acc = LSeries<F>::constant(L, L.zero(), truncation_order);
    for (auto& [mo, c] : g.terms()) {
      unsigned a = mono::exp(mo, 0), b = mono::exp(mo, 1);
      while (px.size() <= a) px.push_back(px.back() * xs);
      while (py.size() <= b) py.push_back(py.back() * ys);
      acc = acc + (px[a] * py[b]).scale(L.from_integer(c));
    }
    if (!acc.is_zero()) return acc.val;
  }
  throw NotAFunction("function vanishes on the curve to the maximal tested precision");
}

template <class F>
std::string Place<F>::dump() const {
  std::ostringstream os;
  os << (at_infinity ? std::string("inf") : field.str(center)) << " | " << e << " | " << residue_degree << " | ";
  int k = 0;
  for (size_t i = 0; i < ys.c.size() && k < 4; ++i) {
    if (field.is_zero(ys.c[i])) continue;
    os << (k ? " + " : "") << "(" << field.str(ys.c[i]) << ")*t^" << (ys.val + (int)i);
    ++k;
  }
  if (!k) os << "0";
  os << " + O(t^" << ys.prec << ")";
  return os.str();
}

template <class F>
std::vector<Place<F>> places_above(const ZPoly& f, const F& K, const std::optional<typename F::Elem>& x0,
                                   int max_degree) {
  if (f.nvars() != 2 || f.degree(1) <= 0) throw std::invalid_argument("need positive y-degree");
  {
    // squarefree in y over Q
    ZPoly fy = f.zero();
    for (auto& [mo, c] : f.terms()) {
      unsigned b = mono::exp(mo, 1);
      if (b) fy += f.constant(c * b).mul_term(mono::make({mono::exp(mo, 0), b - 1}), 1);
    }
    if (gcd(f, fy).degree(1) > 0) throw NotSquarefree("polynomial is not squarefree in y");
  }
  auto cs = f.coefficients_in(1);
  int dx = f.degree(0);
  detail::BPoly<F> G;
  for (auto& c : cs) {
    std::vector<typename F::Elem> v(std::max(dx, 0) + 1, K.zero());
    for (auto& [mo, a] : c.terms()) v[mono::exp(mo, 0)] = K.from_integer(a);
    UPoly<F> p(K, v);
    if (x0) {
      p = p.compose(UPoly<F>(K, {*x0, K.one()}));
    } else {
      // X^dx p(1/X)
      std::vector<typename F::Elem> r(dx + 1, K.zero());
      for (int j = 0; j <= p.deg(); ++j) r[dx - j] = p.coef(j);
      p = UPoly<F>(K, r);
    }
    G.push_back(p);
  }
  detail::Expander<F> ex{K, {}, 4 * (f.degree(1) + dx) + 8, max_degree};
  ex.run(G, K, {}, x0 ? *x0 : K.zero(), true);
  for (auto& P : ex.out) {
    P.at_infinity = !x0;
    P.curve = f;
    P.extend(16);
  }
  return ex.out;
}

}  // namespace x1gon::puiseux
