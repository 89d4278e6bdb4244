#include "x1gon/ratfunc.hpp"

namespace x1gon {

RatFunc::RatFunc(ZPoly n, ZPoly d, bool reduce) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw DivisionError("zero denominator");
  if (num_.is_zero()) {
    den_ = den_.constant(1);
    return;
  }
  if (reduce && !den_.is_constant()) {
    ZPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  // integer content and sign
  Integer cn = content(num_), cd = content(den_);
  Integer g;
  mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (cd < 0) g = -g;
  if (g != 1) {
    num_ = num_.map_coeffs(Integers{}, [&](const Integer& a) { return Integer(a / g); });
    den_ = den_.map_coeffs(Integers{}, [&](const Integer& a) { return Integer(a / g); });
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }
RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw DivisionError("division by zero rational function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}
RatFunc RatFunc::pow(int e) const {
  if (e < 0) return RatFunc(den_, num_).pow(-e);
  return RatFunc(num_.pow(e), den_.pow(e), false);
}

RatFunc RatFunc::compose(const std::vector<RatFunc>& vals) const {
  // over the common denominator prod d_i^e_i, reduced once at the end
  const int nv = num_.nvars();
  std::vector<int> e(nv, 0);
  for (const ZPoly* p : {&num_, &den_})
    for (int i = 0; i < nv; ++i) e[i] = std::max(e[i], p->degree(i));
  std::vector<std::vector<ZPoly>> np(nv), dp(nv);
  for (int i = 0; i < nv; ++i) {
    np[i] = {vals.at(i).num().constant(1)};
    dp[i] = {vals[i].num().constant(1)};
    for (int k = 1; k <= e[i]; ++k) {
      np[i].push_back(np[i].back() * vals[i].num());
      dp[i].push_back(dp[i].back() * vals[i].den());
    }
  }
  auto ev = [&](const ZPoly& p) {
    ZPoly acc = vals[0].num().zero();
    for (auto& [m, c] : p.terms()) {
      ZPoly t = acc.constant(c);
      for (int i = 0; i < nv; ++i) {
        unsigned k = mono::exp(m, i);
        if (k) t = t * np[i][k];
        if ((int)k < e[i]) t = t * dp[i][e[i] - k];
      }
      acc += t;
    }
    return acc;
  };
  ZPoly d = ev(den_);
  if (d.is_zero()) throw DegenerateSubstitution("denominator vanishes identically");
  return RatFunc(ev(num_), d);
}

std::string RatFunc::str() const {
  if (den_.is_constant() && den_.constant_term() == 1) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace x1gon
