// Place counts of X_1(N) over small finite fields.
#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "x1gon/cusps.hpp"
#include "x1gon/gonality.hpp"
#include "x1gon/modeq.hpp"
#include "x1gon/ntheory.hpp"

namespace x1gon::gonality {

namespace {

// GF(q^k) with elements 0..Q-1 written in base q; multiplication through log tables
class SmallField {
public:
  using E = uint32_t;
  SmallField(long q, int k) : q_((uint32_t)q), k_(k) {
    if (q < 2 || !nt::is_prime((uint64_t)q)) throw BadPrime("field characteristic must be prime");
    double sz = std::pow((double)q, k);
    if (sz > (double)(1u << 24)) throw Undecided("field too large for table arithmetic");
    Q_ = 1;
    for (int i = 0; i < k; ++i) Q_ *= q_;
    exp_.resize(Q_);
    log_.assign(Q_, 0);
    // search a primitive modulus: the powers of t must run through all nonzero elements
    std::vector<uint32_t> m(k_);
    for (uint32_t code = 0; code < Q_; ++code) {
      uint32_t c = code;
      for (int i = 0; i < k_; ++i) m[i] = c % q_, c /= q_;
      if (m[0] == 0) continue;
      if (try_modulus(m)) return;
    }
    throw Undecided("no primitive modulus found");
  }
  uint32_t size() const { return Q_; }
  uint32_t q() const { return q_; }
  int k() const { return k_; }
  E zero() const { return 0; }
  E one() const { return 1; }
  E from_int(long v) const {
    long r = v % (long)q_;
    return (E)(r < 0 ? r + q_ : r);
  }
  E add(E a, E b) const {
    if (q_ == 2) return a ^ b;
    E r = 0, pw = 1;
    while (a || b) {
      r += ((a % q_ + b % q_) % q_) * pw;
      a /= q_, b /= q_, pw *= q_;
    }
    return r;
  }
  E neg(E a) const {
    if (q_ == 2) return a;
    E r = 0, pw = 1;
    while (a) {
      r += ((q_ - a % q_) % q_) * pw;
      a /= q_, pw *= q_;
    }
    return r;
  }
  E sub(E a, E b) const { return add(a, neg(b)); }
  E mul(E a, E b) const {
    if (!a || !b) return 0;
    uint32_t s = log_[a] + log_[b];
    if (s >= Q_ - 1) s -= Q_ - 1;
    return exp_[s];
  }
  E inv(E a) const {
    if (!a) throw DivisionError("inverse of zero");
    return exp_[(Q_ - 1 - log_[a]) % (Q_ - 1)];
  }
  E div(E a, E b) const { return mul(a, inv(b)); }
  E pow(E a, uint64_t e) const {
    if (!a) return e ? 0 : 1;
    return exp_[(uint64_t)log_[a] * (e % (Q_ - 1)) % (Q_ - 1)];
  }

private:
  bool try_modulus(const std::vector<uint32_t>& m) {
    // t^k = -(m_0 + m_1 t + ...); multiply by t on the digit vector
    std::vector<uint32_t> cur(k_, 0), nxt(k_);
    cur[0] = 1;
    std::vector<bool> seen(Q_, false);
    for (uint32_t e = 0; e < Q_ - 1; ++e) {
      uint32_t code = 0;
      for (int i = k_ - 1; i >= 0; --i) code = code * q_ + cur[i];
      if (seen[code]) return false;
      seen[code] = true;
      exp_[e] = code;
      log_[code] = e;
      uint32_t top = cur[k_ - 1];
      for (int i = k_ - 1; i >= 1; --i) nxt[i] = cur[i - 1];
      nxt[0] = 0;
      for (int i = 0; i < k_; ++i) nxt[i] = (nxt[i] + (q_ - m[i]) * top) % q_;
      cur.swap(nxt);
    }
    return cur[0] == 1 && std::all_of(cur.begin() + 1, cur.end(), [](uint32_t v) { return v == 0; });
  }

  uint32_t q_;
  int k_;
  uint32_t Q_ = 1;
  std::vector<E> exp_, log_;
};

using E = SmallField::E;
using Poly = std::vector<E>;  // coefficient of y^i at index i

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(const SmallField& F, Poly a, const Poly& m) {
  trim(a);
  E li = F.inv(m.back());
  size_t dm = m.size() - 1;
  while (a.size() > dm) {
    E c = F.mul(a.back(), li);
    size_t s = a.size() - 1 - dm;
    for (size_t i = 0; i <= dm; ++i) a[s + i] = F.sub(a[s + i], F.mul(c, m[i]));
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const SmallField& F, const Poly& a, const Poly& b, const Poly& m) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  return poly_mod(F, r, m);
}

Poly poly_gcd(const SmallField& F, Poly a, Poly b) {
  trim(a), trim(b);
  while (!b.empty()) {
    a = poly_mod(F, a, b);
    std::swap(a, b);
  }
  if (!a.empty()) {
    E li = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, li);
  }
  return a;
}

Poly poly_powmod(const SmallField& F, Poly b, uint64_t e, const Poly& m) {
  Poly r{1};
  r = poly_mod(F, r, m);
  b = poly_mod(F, b, m);
  while (e) {
    if (e & 1) r = poly_mulmod(F, r, b, m);
    e >>= 1;
    if (e) b = poly_mulmod(F, b, b, m);
  }
  return r;
}

// distinct roots of a squarefree product of linear factors
void split_roots(const SmallField& F, const Poly& g, uint64_t& seed, std::vector<E>& out) {
  size_t d = g.size() - 1;
  if (d == 0) return;
  if (d == 1) {
    out.push_back(F.neg(F.div(g[0], g[1])));
    return;
  }
  for (;;) {
    E a = (E)(nt::splitmix64(seed) % F.size());
    Poly w;
    if (F.q() == 2) {
      // absolute trace of a*y
      Poly t{0, a};
      t = poly_mod(F, t, g);
      w = t;
      for (int i = 1; i < F.k(); ++i) {
        t = poly_mulmod(F, t, t, g);
        w.resize(std::max(w.size(), t.size()), 0);
        for (size_t j = 0; j < t.size(); ++j) w[j] = F.add(w[j], t[j]);
      }
    } else {
      w = poly_powmod(F, Poly{a, 1}, (F.size() - 1) / 2, g);
      if (w.empty()) w.push_back(0);
      w[0] = F.sub(w[0], 1);
    }
    Poly h = poly_gcd(F, g, w);
    if (h.size() > 1 && h.size() < g.size()) {
      split_roots(F, h, seed, out);
      Poly rest = g, quo(g.size() - h.size() + 1, 0);
      // exact division g / h
      for (size_t i = quo.size(); i-- > 0;) {
        quo[i] = rest[i + h.size() - 1];
        for (size_t j = 0; j < h.size(); ++j) rest[i + j] = F.sub(rest[i + j], F.mul(quo[i], h[j]));
      }
      split_roots(F, quo, seed, out);
      return;
    }
  }
}

std::vector<E> roots(const SmallField& F, Poly P, uint64_t seed) {
  trim(P);
  std::vector<E> out;
  if (P.size() <= 1) return out;
  Poly h = poly_powmod(F, Poly{0, 1}, F.size(), P);
  h.resize(std::max<size_t>(h.size(), 2), 0);
  h[1] = F.sub(h[1], 1);
  Poly g = poly_gcd(F, P, h);
  split_roots(F, g, seed, out);
  std::sort(out.begin(), out.end());
  return out;
}

// (i, j, c): c x^i y^j with c reduced into F
struct Term {
  unsigned i, j;
  E c;
};
std::vector<Term> reduce_terms(const SmallField& F, const ZPoly& f) {
  std::vector<Term> t;
  for (auto& [m, c] : f.terms()) {
    E v = F.from_int(mpz_fdiv_ui(c.get_mpz_t(), F.q()));
    if (v) t.push_back({mono::exp(m, 0), mono::exp(m, 1), v});
  }
  return t;
}

E eval2(const SmallField& F, const std::vector<Term>& T, E u, E v) {
  E s = 0;
  for (auto& t : T) s = F.add(s, F.mul(t.c, F.mul(F.pow(u, t.i), F.pow(v, t.j))));
  return s;
}

// Tate normal form Y^2 + (1-c)XY - bY = X^3 - bX^2: is (0,0) of exact order N?
bool exact_order(const SmallField& F, E b, E c, int N) {
  E a1 = F.sub(1, c), a2 = F.neg(b), a3 = F.neg(b);
  E two = F.from_int(2), three = F.from_int(3);
  E x = 0, y = 0;  // current multiple k*P, k >= 1
  for (int k = 2; k <= N; ++k) {
    E lam, nu;
    if (x == 0) {
      if (y != 0) {  // k*P = -P
        return k == N;
      }
      // doubling P = (0,0)
      E den = F.add(F.add(F.mul(two, y), F.mul(a1, x)), a3);
      if (den == 0) return k == N;
      E num = F.sub(F.add(F.mul(three, F.mul(x, x)), F.mul(F.mul(two, a2), x)), F.mul(a1, y));
      lam = F.div(num, den);
      nu = F.div(F.sub(F.neg(F.mul(x, F.mul(x, x))), F.mul(a3, y)), den);
    } else {
      // add P = (0,0): slope through (x,y) and the origin
      lam = F.div(y, x);
      nu = 0;
    }
    E x3 = F.sub(F.sub(F.add(F.mul(lam, lam), F.mul(a1, lam)), a2), x);
    E y3 = F.sub(F.sub(F.neg(F.mul(F.add(lam, a1), x3)), nu), a3);
    x = x3, y = y3;
    if (k == N) return false;
  }
  return false;
}

struct ModelData {
  std::vector<Term> f, disc, r_num, r_den, s_num, s_den;
};

ModelData model_data(const SmallField& F, int N) {
  ModelData M;
  M.f = reduce_terms(F, modeq::f_poly(N).num);
  M.disc = reduce_terms(F, modeq::tate_discriminant());
  auto r = modeq::r_of_xy(), s = modeq::s_of_xy();
  M.r_num = reduce_terms(F, r.num());
  M.r_den = reduce_terms(F, r.den());
  M.s_num = reduce_terms(F, s.num());
  M.s_den = reduce_terms(F, s.den());
  return M;
}

// number of Y_1(N) points with this x-coordinate
long points_on_line(const SmallField& F, const ModelData& M, int N, E x0, unsigned dy) {
  Poly P(dy + 1, 0);
  for (auto& t : M.f) P[t.j] = F.add(P[t.j], F.mul(t.c, F.pow(x0, t.i)));
  trim(P);
  std::vector<E> ys;
  if (P.empty()) {
    for (E y = 0; y < F.size(); ++y) ys.push_back(y);
  } else {
    ys = roots(F, P, 0x9e37 + x0);
  }
  long n = 0;
  for (E y0 : ys) {
    E rd = eval2(F, M.r_den, x0, y0), sd = eval2(F, M.s_den, x0, y0);
    if (!rd || !sd) continue;  // a block vanishes: a cusp
    E r = F.div(eval2(F, M.r_num, x0, y0), rd), s = F.div(eval2(F, M.s_num, x0, y0), sd);
    E c = F.mul(s, F.sub(r, 1)), b = F.mul(r, c);
    if (eval2(F, M.disc, b, c) == 0) continue;
    if (exact_order(F, b, c, N)) ++n;
  }
  return n;
}

void check_args(int N, long q, int k) {
  if (N < 10) throw UnsupportedLevel("plane-model point count needs N >= 10");
  if (q < 2 || !nt::is_prime((uint64_t)q)) throw BadPrime("q must be prime");
  if (nt::gcd((uint64_t)q, (uint64_t)N) != 1) throw BadPrime("q divides the level");
  if (k < 1) throw std::invalid_argument("degree must be positive");
}

FqCensus census(int N, long q, int max_degree, bool parallel) {
  FqCensus C;
  C.N = N;
  C.q = q;
  C.max_degree = max_degree;
  for (int k = 1; k <= max_degree; ++k)
    C.moduli_points.push_back(parallel ? moduli_points(N, q, k) : moduli_points_serial(N, q, k));
  for (int k = 1; k <= max_degree; ++k) {
    long s = 0;
    for (auto j : nt::divisors((uint64_t)k)) s += nt::mobius((uint64_t)k / j) * C.moduli_points[j - 1];
    if (s % k) throw OrbitInconsistency("point counts are not a Frobenius census");
    long cu = cusp_places_fq(N, q, k);
    C.cusp_counts[k] = cu;
    C.degree_counts[k] = s / k + cu;
  }
  return C;
}

}  // namespace

long FqCensus::count(int k) const {
  auto it = degree_counts.find(k);
  if (it == degree_counts.end()) throw std::out_of_range("degree beyond the census");
  return it->second;
}

long moduli_points(int N, long q, int k) {
  check_args(N, q, k);
  SmallField F(q, k);
  ModelData M = model_data(F, N);
  unsigned dy = (unsigned)modeq::f_poly(N).num.degree(1);
  long total = 0;
  long Q = F.size();
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total)
  for (long x0 = 0; x0 < Q; ++x0) total += points_on_line(F, M, N, (E)x0, dy);
  return total;
}

long moduli_points_serial(int N, long q, int k) {
  check_args(N, q, k);
  SmallField F(q, k);
  ModelData M = model_data(F, N);
  unsigned dy = (unsigned)modeq::f_poly(N).num.degree(1);
  long total = 0;
  for (E x0 = 0; x0 < F.size(); ++x0) total += points_on_line(F, M, N, x0, dy);
  return total;
}

long moduli_points_bc(int N, long q, int k) {
  if (N < 4) throw UnsupportedLevel("Tate normal form needs N >= 4");
  if (nt::gcd((uint64_t)q, (uint64_t)N) != 1) throw BadPrime("q divides the level");
  SmallField F(q, k);
  auto disc = reduce_terms(F, modeq::tate_discriminant());
  long total = 0;
  long Q = F.size();
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total)
  for (long b = 0; b < Q; ++b)
    for (E c = 0; c < F.size(); ++c)
      if (eval2(F, disc, (E)b, c) != 0 && exact_order(F, (E)b, c, N)) ++total;
  return total;
}

long cusp_places_fq(int N, long q, int k) {
  if (nt::gcd((uint64_t)q, (uint64_t)N) != 1) throw BadPrime("q divides the level");
  long n = 0;
  for (auto& o : cusps::orbits(N)) {
    // Frobenius acts on the orbit as multiplication by q on (Z/d)^*, or its quotient by -1
    long d = o.d;
    long phi = (long)nt::euler_phi((uint64_t)d);
    bool pm = (d > 2 && o.degree * 2 == phi);
    if (!pm && o.degree != phi) throw OrbitInconsistency("orbit degree is not phi(d) or phi(d)/2");
    long ord = 1;
    if (d > 2) {
      uint64_t qq = (uint64_t)q % d, t = qq;
      while (t != 1 && !(pm && t == (uint64_t)d - 1)) t = t * qq % d, ++ord;
    }
    if (ord == k) n += o.degree / ord;
  }
  return n;
}

FqCensus count_places_fq(int N, long q, int max_degree) { return census(N, q, max_degree, true); }
FqCensus count_places_fq_serial(int N, long q, int max_degree) { return census(N, q, max_degree, false); }

}  // namespace x1gon::gonality
