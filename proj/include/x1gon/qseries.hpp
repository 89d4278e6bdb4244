#pragma once
// Truncated Laurent series over F_p (p < 2^31) with absolute precision tracking,
// and the Tate-curve parametrization used to read valuations at cusps.
#include <cstdint>
#include <vector>

namespace x1gon::qs {

struct Series {
  uint64_t p = 0;
  int val = 0;   // exponent of c[0]
  int prec = 0;  // known modulo t^prec
  std::vector<uint64_t> c;

  static Series constant(uint64_t p, uint64_t a, int prec);
  static Series monomial(uint64_t p, uint64_t a, int e, int prec);
  bool is_zero() const { return c.empty(); }  // zero to the known precision
  int rel_prec() const { return prec - val; }
  uint64_t lead() const { return c.at(0); }
  // valuation, or throws PrecisionExhausted when zero to known precision
  int valuation() const;
  void normalize();

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series operator/(const Series& o) const;
  Series operator-() const;
  Series scale(uint64_t a) const;
  Series inv() const;
  Series pow(unsigned k) const;
};

// Tate curve y^2 + xy = x^3 + a4 x + a6 over F_p((s)), q = s^N; coordinates of the point
// u = zeta^j s^n (zeta a fixed primitive N-th root of unity), valid to absolute precision M.
struct TatePoint {
  Series X, Y;
};
TatePoint tate_point(uint64_t p, uint64_t zeta, int N, long j, long n, int M);

}  // namespace x1gon::qs
