#pragma once
// Dense univariate polynomials over a field descriptor F.
#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "x1gon/fields.hpp"

namespace x1gon {

template <class F>
class UPoly {
public:
  using Elem = typename F::Elem;

  UPoly() = default;
  explicit UPoly(F f) : f_(std::move(f)) {}
  UPoly(F f, std::vector<Elem> c) : f_(std::move(f)), c_(std::move(c)) { trim(); }
  static UPoly constant(const F& f, const Elem& a) { return UPoly(f, {a}); }
  static UPoly monomial(const F& f, const Elem& a, size_t k) {
    std::vector<Elem> c(k + 1, f.zero());
    c[k] = a;
    return UPoly(f, std::move(c));
  }
  static UPoly x(const F& f) { return monomial(f, f.one(), 1); }

  const F& field() const { return f_; }
  int deg() const { return (int)c_.size() - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem coef(size_t i) const { return i < c_.size() ? c_[i] : f_.zero(); }
  const Elem& lc() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && f_.is_one(c_.back()); }

  UPoly operator+(const UPoly& o) const {
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), f_.zero());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = f_.add(r[i], o.c_[i]);
    return UPoly(f_, std::move(r));
  }
  UPoly operator-() const {
    std::vector<Elem> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = f_.neg(c_[i]);
    return UPoly(f_, std::move(r));
  }
  UPoly operator-(const UPoly& o) const { return *this + (-o); }
  UPoly operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly(f_);
    std::vector<Elem> r(c_.size() + o.c_.size() - 1, f_.zero());
    for (size_t i = 0; i < c_.size(); ++i) {
      if (f_.is_zero(c_[i])) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) f_.addmul(r[i + j], c_[i], o.c_[j]);
    }
    return UPoly(f_, std::move(r));
  }
  UPoly scale(const Elem& a) const {
    std::vector<Elem> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = f_.mul(a, c_[i]);
    return UPoly(f_, std::move(r));
  }
  UPoly shift(size_t k) const {
    if (is_zero()) return *this;
    std::vector<Elem> r(k, f_.zero());
    r.insert(r.end(), c_.begin(), c_.end());
    return UPoly(f_, std::move(r));
  }
  UPoly monic() const {
    if (is_zero()) return *this;
    return scale(f_.inv(lc()));
  }
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw DivisionError("polynomial division by zero");
    if (deg() < d.deg()) return {UPoly(f_), *this};
    std::vector<Elem> r = c_, q(c_.size() - d.c_.size() + 1, f_.zero());
    Elem il = f_.inv(d.lc());
    const size_t dn = d.c_.size();
    for (size_t i = r.size(); i-- >= dn;) {
      if (f_.is_zero(r[i])) continue;
      Elem c = f_.mul(r[i], il);
      q[i - dn + 1] = c;
      for (size_t j = 0; j < dn; ++j) r[i - dn + 1 + j] = f_.sub(r[i - dn + 1 + j], f_.mul(c, d.c_[j]));
    }
    r.resize(dn - 1);
    return {UPoly(f_, std::move(q)), UPoly(f_, std::move(r))};
  }
  UPoly operator/(const UPoly& d) const { return divmod(d).first; }
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }
  // exact division; throws DivisionError on nonzero remainder
  UPoly exact_div(const UPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw DivisionError("inexact polynomial division");
    return q;
  }
  bool operator==(const UPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
      if (!f_.eq(c_[i], o.c_[i])) return false;
    return true;
  }
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  Elem eval(const Elem& a) const {
    Elem r = f_.zero();
    for (size_t i = c_.size(); i-- > 0;) r = f_.add(f_.mul(r, a), c_[i]);
    return r;
  }
  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly(f_);
    std::vector<Elem> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = f_.mul(f_.from_int((long)i), c_[i]);
    return UPoly(f_, std::move(r));
  }
  // this(g(x))
  UPoly compose(const UPoly& g) const {
    UPoly r(f_);
    for (size_t i = c_.size(); i-- > 0;) r = r * g + constant(f_, c_[i]);
    return r;
  }
  UPoly pow(unsigned e) const {
    UPoly r = constant(f_, f_.one()), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }
  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
      if (f_.is_zero(c_[i])) continue;
      std::string cs = f_.str(c_[i]);
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      if (cs.find_first_of("+-*") != std::string::npos) cs = "(" + cs + ")";
      s += s.empty() ? (neg ? "-" : "") : (neg ? "-" : "+");
      if (i == 0)
        s += cs;
      else {
        if (cs != "1") s += cs + "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

private:
  void trim() {
    while (!c_.empty() && f_.is_zero(c_.back())) c_.pop_back();
  }
  F f_;
  std::vector<Elem> c_;
};

template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// returns (g, s, t) with s*a + t*b = g monic
template <class F>
std::tuple<UPoly<F>, UPoly<F>, UPoly<F>> xgcd(UPoly<F> a, UPoly<F> b) {
  const F& f = a.field();
  UPoly<F> s0 = UPoly<F>::constant(f, f.one()), s1(f), t0(f), t1 = UPoly<F>::constant(f, f.one());
  while (!b.is_zero()) {
    auto [q, r] = a.divmod(b);
    a = std::move(b);
    b = std::move(r);
    auto s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.is_zero()) return {a, s0, t0};
  auto il = f.inv(a.lc());
  return {a.scale(il), s0.scale(il), t0.scale(il)};
}

template <class F>
UPoly<F> powmod(UPoly<F> b, Integer e, const UPoly<F>& m) {
  const F& f = b.field();
  UPoly<F> r = UPoly<F>::constant(f, f.one()) % m;
  b = b % m;
  size_t nb = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = nb; i-- > 0;) {
    r = (r * r) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % m;
  }
  return r;
}

// resultant over a field via the Euclidean remainder sequence
template <class F>
typename F::Elem resultant(UPoly<F> a, UPoly<F> b) {
  const F& f = a.field();
  if (a.is_zero() || b.is_zero()) return f.zero();
  typename F::Elem res = f.one();
  while (b.deg() > 0) {
    int da = a.deg(), db = b.deg();
    auto r = a % b;
    if (r.is_zero()) return f.zero();
    int dr = r.deg();
    // res(a,b) = (-1)^{da db} lc(b)^{da-dr} res(b, r)
    if ((da & 1) && (db & 1)) res = f.neg(res);
    for (int i = 0; i < da - dr; ++i) res = f.mul(res, b.lc());
    a = std::move(b);
    b = std::move(r);
  }
  // b constant
  for (int i = 0; i < a.deg(); ++i) res = f.mul(res, b.lc());
  return res;
}

}  // namespace x1gon
