#include "x1gon/ntheory.hpp"

#include <algorithm>
#include <stdexcept>

#include "x1gon/errors.hpp"

namespace x1gon::nt {

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

uint64_t invmod(uint64_t a, uint64_t m) {
  __int128 t = 0, nt = 1, r = m, nr = a % m;
  while (nr) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw DivisionError("element not invertible");
  if (t < 0) t += m;
  return (uint64_t)t;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (n % p == 0) return n == p;
  uint64_t d = n - 1;
  int s = 0;
  while (!(d & 1)) d >>= 1, ++s;
  for (uint64_t a : {2, 325, 9375, 28178, 450775, 9780504, 1795265022}) {
    uint64_t x = powmod(a, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s && comp; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) comp = false;
    }
    if (comp) return false;
  }
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> f;
  for (uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      f.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) f.push_back(n);
  return f;
}

uint64_t euler_phi(uint64_t n) {
  uint64_t r = n;
  for (auto p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

uint64_t gcd(uint64_t a, uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

uint64_t mult_order(uint64_t a, uint64_t m) {
  if (m == 1) return 1;
  uint64_t o = euler_phi(m);
  for (auto p : prime_factors(o))
    while (o % p == 0 && powmod(a, o / p, m) == 1) o /= p;
  return o;
}

uint64_t split_prime(uint64_t n, int k, int bits) {
  uint64_t top = (1ULL << bits);
  uint64_t p = top - top % n + 1;
  if (p > top) p -= n;
  for (;; p -= n)
    if (is_prime(p) && k-- == 0) return p;
}

uint64_t root_of_unity(uint64_t n, uint64_t p) {
  auto fs = prime_factors(n);
  for (uint64_t h = 2;; ++h) {
    uint64_t z = powmod(h, (p - 1) / n, p);
    bool ok = true;
    for (auto l : fs)
      if (powmod(z, n / l, p) == 1) ok = false;
    if (ok) return z;
  }
}

int mobius(uint64_t n) {
  int r = 1;
  for (uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      r = -r;
    }
  if (n > 1) r = -r;
  return r;
}

std::vector<uint64_t> divisors(uint64_t n) {
  std::vector<uint64_t> d;
  for (uint64_t i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      d.push_back(i);
      if (i * i != n) d.push_back(n / i);
    }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace x1gon::nt
