#pragma once
// Coefficient domains. A domain is a small value type describing the field;
// elements are plain data and every operation goes through the descriptor.
#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "x1gon/errors.hpp"
#include "x1gon/ntheory.hpp"

namespace x1gon {

using Integer = mpz_class;
using Rational = mpq_class;

struct Integers {
  using Elem = Integer;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long v) const { return v; }
  Elem from_integer(const Integer& v) const { return v; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  void addmul(Elem& acc, const Elem& a, const Elem& b) const {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  // exact quotient; throws DivisionError when b does not divide a
  Elem div(const Elem& a, const Elem& b) const {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
      throw DivisionError("inexact integer division");
    Elem q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  bool divides(const Elem& b, const Elem& a) const {
    return b != 0 && mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t());
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool negative(const Elem& a) const { return a < 0; }
  uint64_t char_p() const { return 0; }
  std::string str(const Elem& a) const { return a.get_str(); }
  bool operator==(const Integers&) const { return true; }
  static constexpr bool is_field = false;
};

struct Rationals {
  using Elem = Rational;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long v) const { return v; }
  Elem from_integer(const Integer& v) const { return Rational(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  void addmul(Elem& acc, const Elem& a, const Elem& b) const { acc += a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw DivisionError("inverse of zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool negative(const Elem& a) const { return a < 0; }
  uint64_t char_p() const { return 0; }
  bool is_finite() const { return false; }
  std::string str(const Elem& a) const { return a.get_str(); }
  Elem random(uint64_t& s) const { return Elem((long)(nt::splitmix64(s) % 2001) - 1000); }
  bool operator==(const Rationals&) const { return true; }
  static constexpr bool is_field = true;
};

// F_p for a prime p < 2^63
class PrimeField {
public:
  using Elem = uint64_t;
  PrimeField() = default;
  explicit PrimeField(uint64_t p) : p_(p) {}
  uint64_t p() const { return p_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long v) const {
    long r = v % (long)p_;
    return r < 0 ? (uint64_t)(r + (long)p_) : (uint64_t)r;
  }
  Elem from_integer(const Integer& v) const { return mpz_fdiv_ui(v.get_mpz_t(), p_); }
  Elem add(Elem a, Elem b) const {
    uint64_t s = a + b;
    return s >= p_ || s < a ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p_ - b); }
  Elem mul(Elem a, Elem b) const { return nt::mulmod(a, b, p_); }
  Elem neg(Elem a) const { return a ? p_ - a : 0; }
  void addmul(Elem& acc, Elem a, Elem b) const { acc = add(acc, mul(a, b)); }
  Elem inv(Elem a) const {
    if (!a) throw DivisionError("inverse of zero");
    return nt::invmod(a, p_);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, uint64_t e) const { return nt::powmod(a, e, p_); }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool eq(Elem a, Elem b) const { return a == b; }
  bool negative(Elem) const { return false; }
  uint64_t char_p() const { return p_; }
  bool is_finite() const { return true; }
  Integer size() const {
    Integer s;
    mpz_set_ui(s.get_mpz_t(), p_);
    return s;
  }
  unsigned ext_degree() const { return 1; }
  // symmetric lift to (-p/2, p/2]
  long long lift(Elem a) const { return a > p_ / 2 ? (long long)a - (long long)p_ : (long long)a; }
  std::string str(Elem a) const { return std::to_string(a); }
  Elem random(uint64_t& s) const { return nt::splitmix64(s) % p_; }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  static constexpr bool is_field = true;

private:
  uint64_t p_ = 2;
};

// Simple algebraic extension Base[t]/(m(t)) with m monic irreducible.
// Degree 1 is allowed and represents the base field itself, which lets
// extensible algorithms start from the base field with the same type.
template <class Base>
class Ext {
public:
  using BElem = typename Base::Elem;
  using Elem = std::vector<BElem>;  // length k, coefficients of 1, t, ..., t^{k-1}

  Ext() : Ext(Base()) {}
  explicit Ext(Base b) : Ext(b, {b.zero(), b.one()}) {}
  // modulus given low-to-high, monic, degree >= 1
  Ext(Base b, std::vector<BElem> modulus)
      : d_(std::make_shared<Data>(Data{b, std::move(modulus)})) {}

  const Base& base() const { return d_->base; }
  const std::vector<BElem>& modulus() const { return d_->mod; }
  unsigned degree() const { return (unsigned)d_->mod.size() - 1; }

  Elem zero() const { return Elem(degree(), base().zero()); }
  Elem one() const {
    Elem e = zero();
    e[0] = base().one();
    // degree-1 modulus t - a: the element 1 is still the constant 1
    return e;
  }
  Elem from_base(const BElem& v) const {
    Elem e = zero();
    e[0] = v;
    return e;
  }
  Elem gen() const {
    if (degree() == 1) return from_base(base().neg(d_->mod[0]));
    Elem e = zero();
    e[1] = base().one();
    return e;
  }
  Elem from_int(long v) const { return from_base(base().from_int(v)); }
  Elem from_integer(const Integer& v) const { return from_base(base().from_integer(v)); }
  Elem add(const Elem& a, const Elem& b) const {
    Elem r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = base().add(a[i], b[i]);
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = base().sub(a[i], b[i]);
    return r;
  }
  Elem neg(const Elem& a) const {
    Elem r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = base().neg(a[i]);
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    const unsigned k = degree();
    if (k == 1) return Elem{base().mul(a[0], b[0])};
    std::vector<BElem> t(2 * k - 1, base().zero());
    for (unsigned i = 0; i < k; ++i) {
      if (base().is_zero(a[i])) continue;
      for (unsigned j = 0; j < k; ++j) base().addmul(t[i + j], a[i], b[j]);
    }
    const auto& m = d_->mod;
    for (unsigned i = 2 * k - 2; i >= k; --i) {
      if (base().is_zero(t[i])) continue;
      BElem c = t[i];
      for (unsigned j = 0; j < k; ++j) t[i - k + j] = base().sub(t[i - k + j], base().mul(c, m[j]));
    }
    t.resize(k);
    return t;
  }
  void addmul(Elem& acc, const Elem& a, const Elem& b) const { acc = add(acc, mul(a, b)); }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, Integer e) const {
    Elem r = one();
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  bool is_zero(const Elem& a) const {
    for (auto& c : a)
      if (!base().is_zero(c)) return false;
    return true;
  }
  bool is_one(const Elem& a) const { return eq(a, one()); }
  bool eq(const Elem& a, const Elem& b) const {
    for (size_t i = 0; i < a.size(); ++i)
      if (!base().eq(a[i], b[i])) return false;
    return true;
  }
  bool negative(const Elem& a) const {
    for (size_t i = a.size(); i-- > 0;)
      if (!base().is_zero(a[i])) return base().negative(a[i]);
    return false;
  }
  uint64_t char_p() const { return base().char_p(); }
  bool is_finite() const { return base().is_finite(); }
  Integer size() const {
    Integer s;
    mpz_pow_ui(s.get_mpz_t(), base().size().get_mpz_t(), degree());
    return s;
  }
  Elem random(uint64_t& s) const {
    Elem e(degree());
    for (auto& c : e) c = base().random(s);
    return e;
  }
  std::string str(const Elem& a) const;
  bool operator==(const Ext& o) const {
    if (d_ == o.d_) return true;
    if (!(base() == o.base()) || d_->mod.size() != o.d_->mod.size()) return false;
    for (size_t i = 0; i < d_->mod.size(); ++i)
      if (!base().eq(d_->mod[i], o.d_->mod[i])) return false;
    return true;
  }
  static constexpr bool is_field = true;

private:
  struct Data {
    Base base;
    std::vector<BElem> mod;
  };
  std::shared_ptr<const Data> d_;
};

template <class Base>
typename Ext<Base>::Elem Ext<Base>::inv(const Elem& a) const {
  const Base& B = base();
  if (is_zero(a)) throw DivisionError("inverse of zero");
  if (degree() == 1) return Elem{B.inv(a[0])};
  using V = std::vector<BElem>;
  auto trim = [&](V& v) {
    while (!v.empty() && B.is_zero(v.back())) v.pop_back();
  };
  // extended Euclid on (m, a): track s with s*a = r mod m
  V r0 = d_->mod, r1 = a, s0, s1{B.one()};
  trim(r1);
  while (!r1.empty()) {
    V q;
    V r = r0;
    trim(r);
    if (r.size() >= r1.size()) q.assign(r.size() - r1.size() + 1, B.zero());
    BElem il = B.inv(r1.back());
    while (r.size() >= r1.size() && !r.empty()) {
      size_t sh = r.size() - r1.size();
      BElem c = B.mul(r.back(), il);
      q[sh] = c;
      for (size_t i = 0; i < r1.size(); ++i) r[sh + i] = B.sub(r[sh + i], B.mul(c, r1[i]));
      trim(r);
    }
    // s2 = s0 - q*s1
    V qs(q.size() + s1.size(), B.zero());
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < s1.size(); ++j) B.addmul(qs[i + j], q[i], s1[j]);
    V s2(std::max(s0.size(), qs.size()), B.zero());
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < qs.size(); ++i) s2[i] = B.sub(s2[i], qs[i]);
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since m is irreducible
  if (r0.size() != 1) throw DivisionError("modulus not irreducible");
  BElem c = B.inv(r0[0]);
  Elem res = zero();
  for (size_t i = 0; i < s0.size() && i < res.size(); ++i) res[i] = B.mul(s0[i], c);
  return res;
}

template <class Base>
std::string Ext<Base>::str(const Elem& a) const {
  if (degree() == 1) return base().str(a[0]);
  std::string s;
  for (size_t i = a.size(); i-- > 0;) {
    if (base().is_zero(a[i])) continue;
    if (!s.empty()) s += "+";
    s += "(" + base().str(a[i]) + ")";
    if (i) s += "*t^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

using FiniteField = Ext<PrimeField>;   // F_{p^k}
using NumberField = Ext<Rationals>;    // Q(alpha)

}  // namespace x1gon
