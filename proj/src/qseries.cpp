#include "x1gon/qseries.hpp"

#include <algorithm>

#include "x1gon/errors.hpp"
#include "x1gon/ntheory.hpp"

namespace x1gon::qs {

namespace {

inline uint64_t addm(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t r = a + b;
  return r >= p ? r - p : r;
}
inline uint64_t subm(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }

void check(const Series& a, const Series& b) {
  if (a.p != b.p) throw FieldMismatch("series over different primes");
}

}  // namespace

Series Series::constant(uint64_t p, uint64_t a, int prec) { return monomial(p, a, 0, prec); }

Series Series::monomial(uint64_t p, uint64_t a, int e, int prec) {
  Series s;
  s.p = p;
  s.prec = prec;
  s.val = e;
  if (a % p && e < prec) s.c = {a % p};
  s.normalize();
  return s;
}

void Series::normalize() {
  size_t k = 0;
  while (k < c.size() && c[k] == 0) ++k;
  if (k) {
    c.erase(c.begin(), c.begin() + k);
    val += (int)k;
  }
  if ((int)c.size() > prec - val) c.resize(std::max(0, prec - val));
  if (c.empty()) val = prec;
}

int Series::valuation() const {
  if (c.empty()) throw PrecisionExhausted("series is zero to the working precision");
  return val;
}

Series Series::operator+(const Series& o) const {
  check(*this, o);
  Series r;
  r.p = p;
  r.prec = std::min(prec, o.prec);
  r.val = std::min(val, o.val);
  r.c.assign(std::max(0, r.prec - r.val), 0);
  for (size_t i = 0; i < c.size() && val + (int)i < r.prec; ++i) r.c[val + i - r.val] = c[i];
  for (size_t i = 0; i < o.c.size() && o.val + (int)i < r.prec; ++i) {
    auto& t = r.c[o.val + i - r.val];
    t = addm(t, o.c[i], p);
  }
  r.normalize();
  return r;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& v : r.c) v = v ? p - v : 0;
  return r;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::scale(uint64_t a) const {
  Series r = *this;
  a %= p;
  for (auto& v : r.c) v = v * a % p;
  r.normalize();
  return r;
}

Series Series::operator*(const Series& o) const {
  check(*this, o);
  Series r;
  r.p = p;
  if (is_zero() || o.is_zero()) {
    r.prec = std::min(prec + (o.is_zero() ? o.prec : o.val), o.prec + (is_zero() ? prec : val));
    r.val = r.prec;
    return r;
  }
  r.val = val + o.val;
  int rel = std::min(rel_prec(), o.rel_prec());
  r.prec = r.val + rel;
  r.c.assign(rel, 0);
  const size_t na = std::min<size_t>(c.size(), rel), nb = std::min<size_t>(o.c.size(), rel);
  // p < 2^31: four products fit in 64 bits before reduction
  for (size_t k = 0; k < (size_t)rel; ++k) {
    size_t lo = k >= nb ? k - nb + 1 : 0, hi = std::min(k, na - 1);
    if (lo > hi) continue;
    uint64_t acc = 0;
    size_t i = lo;
    for (; i + 3 <= hi; i += 4) {
      acc += c[i] * o.c[k - i] + c[i + 1] * o.c[k - i - 1];
      acc %= p;
      acc += c[i + 2] * o.c[k - i - 2] + c[i + 3] * o.c[k - i - 3];
      acc %= p;
    }
    for (; i <= hi; ++i) acc = (acc + c[i] * o.c[k - i]) % p;
    r.c[k] = acc;
  }
  r.normalize();
  return r;
}

Series Series::inv() const {
  if (is_zero()) throw PrecisionExhausted("inverting a series that is zero to the working precision");
  const int rel = rel_prec();
  Series r;
  r.p = p;
  r.val = -val;
  r.prec = r.val + rel;
  r.c.assign(rel, 0);
  uint64_t li = nt::invmod(c[0], p);
  r.c[0] = li;
  for (int k = 1; k < rel; ++k) {
    uint64_t acc = 0;
    for (int i = 1; i <= k && i < (int)c.size(); ++i) acc = (acc + c[i] * r.c[k - i]) % p;
    r.c[k] = (p - acc) % p * li % p;
  }
  r.normalize();
  return r;
}

Series Series::operator/(const Series& o) const { return *this * o.inv(); }

Series Series::pow(unsigned k) const {
  if (k == 0) return constant(p, 1, rel_prec());
  Series r, b = *this;
  bool have = false;
  for (; k; k >>= 1) {
    if (k & 1) r = have ? r * b : b, have = true;
    if (k > 1) b = b * b;
  }
  return r;
}

TatePoint tate_point(uint64_t p, uint64_t zeta, int N, long j, long n, int M) {
  // reduce to 0 <= n < N using invariance under u -> q u
  long nn = ((n % N) + N) % N;
  uint64_t z = nt::powmod(zeta, (uint64_t)(((j % N) + N) % N), p);
  std::vector<uint64_t> X(M, 0), Y(M, 0);
  uint64_t cX = 0, cY = 0;  // constant terms
  auto add_pos = [&](uint64_t w, int e) {
    // w s^e with e > 0: sum_k k w^k s^{ke} and sum_k k(k-1)/2 w^k s^{ke}
    uint64_t wk = 1;
    for (long k = 1; k * e < M; ++k) {
      wk = wk * w % p;
      X[k * e] = (X[k * e] + (uint64_t)k % p * wk) % p;
      Y[k * e] = (Y[k * e] + (uint64_t)(k * (k - 1) / 2 % (long)p) * wk) % p;
    }
  };
  auto add_neg = [&](uint64_t w, int e) {
    // term with w s^{-e}, e > 0: z = w^{-1} s^e; sum k z^k and -sum k(k+1)/2 z^k
    uint64_t zi = nt::invmod(w, p), zk = 1;
    for (long k = 1; k * e < M; ++k) {
      zk = zk * zi % p;
      X[k * e] = (X[k * e] + (uint64_t)k % p * zk) % p;
      Y[k * e] = (Y[k * e] + p - (uint64_t)(k * (k + 1) / 2 % (long)p) * zk % p) % p;
    }
  };
  if (nn == 0) {
    if (z == 1) throw DivisionError("identity point");
    uint64_t om = (1 + p - z) % p, om2 = om * om % p;
    cX = z * nt::invmod(om2, p) % p;
    cY = z * z % p * nt::invmod(om2 * om % p, p) % p;
  } else {
    add_pos(z, (int)nn);
  }
  for (long m = 1; m * N - nn < M || m * N + nn < M; ++m) {
    if (m * N + nn < M) add_pos(z, (int)(m * N + nn));
    if (m * N - nn < M) add_neg(z, (int)(m * N - nn));
  }
  // s1 = sum sigma_1(k) q^k
  for (long k = 1; k * N < M; ++k) {
    uint64_t sig = 0;
    for (long d = 1; d <= k; ++d)
      if (k % d == 0) sig += d;
    sig %= p;
    X[k * N] = (X[k * N] + 2 * (p - sig)) % p;
    Y[k * N] = (Y[k * N] + sig) % p;
  }
  X[0] = (X[0] + cX) % p;
  Y[0] = (Y[0] + cY) % p;
  TatePoint P;
  P.X.p = P.Y.p = p;
  P.X.val = P.Y.val = 0;
  P.X.prec = P.Y.prec = M;
  P.X.c = std::move(X);
  P.Y.c = std::move(Y);
  P.X.normalize();
  P.Y.normalize();
  return P;
}

}  // namespace x1gon::qs
