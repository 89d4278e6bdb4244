#pragma once
// Sparse multivariate polynomials (at most 4 variables) with packed monomials.
// Terms are kept sorted descending in graded-lex order, first variable largest.
#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "x1gon/fields.hpp"

namespace x1gon {

namespace mono {
// [63:48] total degree, then four 12-bit exponents, variable 0 highest
constexpr int kMaxVars = 4;
constexpr unsigned kMaxExp = 4095;
inline unsigned exp(uint64_t m, int i) { return (unsigned)((m >> (36 - 12 * i)) & 0xFFF); }
inline unsigned total(uint64_t m) { return (unsigned)(m >> 48); }
inline uint64_t make(const std::vector<unsigned>& e) {
  uint64_t m = 0, t = 0;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] > kMaxExp) throw std::overflow_error("monomial exponent too large");
    m |= (uint64_t)e[i] << (36 - 12 * i);
    t += e[i];
  }
  return m | (t << 48);
}
inline uint64_t var(int i, unsigned k = 1) {
  std::vector<unsigned> e(i + 1, 0);
  e[i] = k;
  return make(e);
}
inline bool divides(uint64_t a, uint64_t b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (exp(a, i) > exp(b, i)) return false;
  return true;
}
}  // namespace mono

template <class R>
class MultiPoly {
public:
  using Elem = typename R::Elem;
  using Term = std::pair<uint64_t, Elem>;

  MultiPoly() = default;
  MultiPoly(R r, std::vector<std::string> vars) : r_(std::move(r)), vars_(std::move(vars)) {
    if (vars_.size() > (size_t)mono::kMaxVars) throw std::invalid_argument("too many variables");
  }
  MultiPoly(R r, std::vector<std::string> vars, std::vector<Term> terms) : MultiPoly(r, std::move(vars)) {
    std::sort(terms.begin(), terms.end(), [](auto& a, auto& b) { return a.first > b.first; });
    for (auto& t : terms) {
      if (!t_.empty() && t_.back().first == t.first)
        t_.back().second = r_.add(t_.back().second, t.second);
      else
        t_.push_back(std::move(t));
    }
    std::erase_if(t_, [&](auto& t) { return r_.is_zero(t.second); });
  }
  static MultiPoly constant(const R& r, std::vector<std::string> vars, const Elem& c) {
    MultiPoly p(r, std::move(vars));
    if (!r.is_zero(c)) p.t_.push_back({0, c});
    return p;
  }
  static MultiPoly variable(const R& r, std::vector<std::string> vars, int i) {
    MultiPoly p(r, std::move(vars));
    p.t_.push_back({mono::var(i), r.one()});
    return p;
  }
  MultiPoly zero() const { return MultiPoly(r_, vars_); }
  MultiPoly constant(const Elem& c) const { return constant(r_, vars_, c); }
  MultiPoly constant(long c) const { return constant(r_, vars_, r_.from_int(c)); }
  MultiPoly variable(int i) const { return variable(r_, vars_, i); }

  const R& ring() const { return r_; }
  const std::vector<std::string>& vars() const { return vars_; }
  int nvars() const { return (int)vars_.size(); }
  const std::vector<Term>& terms() const { return t_; }
  size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == 0); }
  Elem constant_term() const { return !t_.empty() && t_.back().first == 0 ? t_.back().second : r_.zero(); }
  const Term& leading() const { return t_.front(); }
  unsigned total_degree() const { return t_.empty() ? 0 : mono::total(t_.front().first); }
  int degree(int i) const {
    int d = -1;
    for (auto& t : t_) d = std::max(d, (int)mono::exp(t.first, i));
    return d;
  }
  Elem coeff(uint64_t m) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), m, [](const Term& t, uint64_t k) { return t.first > k; });
    return it != t_.end() && it->first == m ? it->second : r_.zero();
  }

  MultiPoly operator+(const MultiPoly& o) const { return merge(o, false); }
  MultiPoly operator-(const MultiPoly& o) const { return merge(o, true); }
  MultiPoly operator-() const {
    MultiPoly p = *this;
    for (auto& t : p.t_) t.second = r_.neg(t.second);
    return p;
  }
  MultiPoly scale(const Elem& c) const {
    if (r_.is_zero(c)) return zero();
    MultiPoly p = *this;
    for (auto& t : p.t_) t.second = r_.mul(t.second, c);
    std::erase_if(p.t_, [&](auto& t) { return r_.is_zero(t.second); });
    return p;
  }
  MultiPoly mul_term(uint64_t m, const Elem& c) const {
    MultiPoly p = scale(c);
    for (auto& t : p.t_) t.first += m;
    return p;
  }
  MultiPoly operator*(const MultiPoly& o) const {
    check(o);
    if (is_zero() || o.is_zero()) return zero();
    const MultiPoly& a = size() <= o.size() ? *this : o;
    const MultiPoly& b = size() <= o.size() ? o : *this;
    if (a.size() <= 48) {
      std::vector<MultiPoly> parts;
      for (auto& t : a.t_) parts.push_back(b.mul_term(t.first, t.second));
      while (parts.size() > 1) {
        std::vector<MultiPoly> nxt;
        for (size_t i = 0; i + 1 < parts.size(); i += 2) nxt.push_back(parts[i] + parts[i + 1]);
        if (parts.size() & 1) nxt.push_back(std::move(parts.back()));
        parts.swap(nxt);
      }
      return parts[0];
    }
    std::unordered_map<uint64_t, Elem> acc;
    acc.reserve(a.size() * 4 + b.size() * 4);
    for (auto& s : a.t_)
      for (auto& t : b.t_) {
        auto [it, fresh] = acc.try_emplace(s.first + t.first, r_.zero());
        r_.addmul(it->second, s.second, t.second);
      }
    std::vector<Term> v;
    v.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!r_.is_zero(c)) v.push_back({m, std::move(c)});
    MultiPoly p(r_, vars_);
    std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return x.first > y.first; });
    p.t_ = std::move(v);
    return p;
  }
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly pow(unsigned e) const {
    MultiPoly r = constant(r_.one()), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }
  bool operator==(const MultiPoly& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
      if (t_[i].first != o.t_[i].first || !r_.eq(t_[i].second, o.t_[i].second)) return false;
    return true;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // q with this = q*d, or nothing
  bool divides_by(const MultiPoly& d, MultiPoly* q) const {
    if (d.is_zero()) throw DivisionError("division by zero polynomial");
    if (is_zero()) {
      if (q) *q = zero();
      return true;
    }
    auto [ld, lc] = d.leading();
    if (d.size() == 1) {
      MultiPoly res(r_, vars_);
      for (auto& t : t_) {
        if (!mono::divides(ld, t.first)) return false;
        Elem c;
        if (!try_div(t.second, lc, c)) return false;
        res.t_.push_back({t.first - ld, c});
      }
      if (q) *q = std::move(res);
      return true;
    }
    std::map<uint64_t, Elem, std::greater<uint64_t>> rem;
    for (auto& t : t_) rem.emplace(t.first, t.second);
    std::vector<Term> quo;
    while (!rem.empty()) {
      auto it = rem.begin();
      if (!mono::divides(ld, it->first)) return false;
      Elem c;
      if (!try_div(it->second, lc, c)) return false;
      uint64_t m = it->first - ld;
      rem.erase(it);
      for (size_t i = 1; i < d.t_.size(); ++i) {
        uint64_t k = m + d.t_[i].first;
        auto [jt, fresh] = rem.try_emplace(k, r_.zero());
        jt->second = r_.sub(jt->second, r_.mul(c, d.t_[i].second));
        if (r_.is_zero(jt->second)) rem.erase(jt);
      }
      quo.push_back({m, c});
    }
    if (q) {
      MultiPoly res(r_, vars_);
      res.t_ = std::move(quo);
      *q = std::move(res);
    }
    return true;
  }
  MultiPoly exact_div(const MultiPoly& d) const {
    MultiPoly q;
    if (!divides_by(d, &q)) throw DivisionError("inexact polynomial division");
    return q;
  }

  // coefficients with respect to variable i: result[k] is the coefficient of v_i^k
  std::vector<MultiPoly> coefficients_in(int i) const {
    std::vector<MultiPoly> out(std::max(degree(i), 0) + 1, zero());
    std::vector<std::vector<Term>> buckets(out.size());
    for (auto& t : t_) {
      unsigned k = mono::exp(t.first, i);
      buckets[k].push_back({t.first - mono::var(i, k), t.second});
    }
    for (size_t k = 0; k < out.size(); ++k) out[k].t_ = std::move(buckets[k]);
    for (auto& p : out) p.resort();
    return out;
  }

  // substitute polynomials for every variable (vals over the same ring, any variable set)
  MultiPoly compose(const std::vector<MultiPoly>& vals) const {
    MultiPoly out = vals.at(0).zero();
    std::vector<std::vector<MultiPoly>> pw(vars_.size());
    auto power = [&](int i, unsigned k) -> const MultiPoly& {
      auto& v = pw[i];
      if (v.empty()) v.push_back(vals[i].constant(r_.one()));
      while (v.size() <= k) v.push_back(v.back() * vals[i]);
      return v[k];
    };
    for (auto& t : t_) {
      MultiPoly term = out.constant(t.second);
      for (int i = 0; i < nvars(); ++i) {
        unsigned k = mono::exp(t.first, i);
        if (k) term = term * power(i, k);
      }
      out += term;
    }
    return out;
  }

  // evaluate with a coefficient map into another domain
  template <class G, class Map>
  typename G::Elem eval(const G& g, const std::vector<typename G::Elem>& pt, Map cmap) const {
    typename G::Elem acc = g.zero();
    std::vector<std::vector<typename G::Elem>> pw(vars_.size());
    for (auto& t : t_) {
      typename G::Elem v = cmap(t.second);
      for (int i = 0; i < nvars(); ++i) {
        unsigned k = mono::exp(t.first, i);
        if (!k) continue;
        auto& P = pw[i];
        if (P.empty()) P.push_back(g.one());
        while (P.size() <= k) P.push_back(g.mul(P.back(), pt[i]));
        v = g.mul(v, P[k]);
      }
      acc = g.add(acc, v);
    }
    return acc;
  }
  Elem eval(const std::vector<Elem>& pt) const {
    return eval(r_, pt, [](const Elem& c) { return c; });
  }

  template <class R2, class Map>
  MultiPoly<R2> map_coeffs(const R2& r2, Map f) const {
    std::vector<typename MultiPoly<R2>::Term> v;
    for (auto& t : t_) v.push_back({t.first, f(t.second)});
    return MultiPoly<R2>(r2, vars_, std::move(v));
  }
  MultiPoly with_vars(std::vector<std::string> vars) const {
    MultiPoly p = *this;
    p.vars_ = std::move(vars);
    return p;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto& [m, c] : t_) {
      std::string cs = r_.str(c);
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      if (cs.find_first_of("+-*") != std::string::npos) cs = "(" + cs + ")";
      s += s.empty() ? (neg ? "-" : "") : (neg ? "-" : "+");
      std::string ms;
      for (int i = 0; i < nvars(); ++i) {
        unsigned k = mono::exp(m, i);
        if (!k) continue;
        if (!ms.empty()) ms += "*";
        ms += vars_[i];
        if (k > 1) ms += "^" + std::to_string(k);
      }
      if (ms.empty())
        s += cs;
      else if (cs == "1")
        s += ms;
      else
        s += cs + "*" + ms;
    }
    return s;
  }

private:
  bool try_div(const Elem& a, const Elem& b, Elem& out) const {
    if constexpr (R::is_field) {
      out = r_.div(a, b);
      return true;
    } else {
      if (!r_.divides(b, a)) return false;
      out = r_.div(a, b);
      return true;
    }
  }
  void resort() {
    std::sort(t_.begin(), t_.end(), [](auto& a, auto& b) { return a.first > b.first; });
  }
  void check(const MultiPoly& o) const {
    if (!(r_ == o.r_)) throw FieldMismatch("coefficient domains differ");
    if (!vars_.empty() && !o.vars_.empty() && vars_ != o.vars_) throw FieldMismatch("variable sets differ");
  }
  MultiPoly merge(const MultiPoly& o, bool minus) const {
    check(o);
    MultiPoly p(r_, vars_.size() >= o.vars_.size() ? vars_ : o.vars_);
    p.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
      if (j == o.t_.size() || (i < t_.size() && t_[i].first > o.t_[j].first)) {
        p.t_.push_back(t_[i++]);
      } else if (i == t_.size() || o.t_[j].first > t_[i].first) {
        p.t_.push_back({o.t_[j].first, minus ? r_.neg(o.t_[j].second) : o.t_[j].second});
        ++j;
      } else {
        Elem c = minus ? r_.sub(t_[i].second, o.t_[j].second) : r_.add(t_[i].second, o.t_[j].second);
        if (!r_.is_zero(c)) p.t_.push_back({t_[i].first, std::move(c)});
        ++i, ++j;
      }
    }
    return p;
  }

  R r_;
  std::vector<std::string> vars_;
  std::vector<Term> t_;
};

using ZPoly = MultiPoly<Integers>;
using QPoly = MultiPoly<Rationals>;

// content with sign so that the primitive part has positive leading coefficient
Integer content(const ZPoly& f);
ZPoly primitive_part(const ZPoly& f);
ZPoly gcd(const ZPoly& a, const ZPoly& b);
// rational content: f = content * primitive integer polynomial
Rational content(const QPoly& f);
QPoly primitive_part(const QPoly& f);
QPoly gcd(const QPoly& a, const QPoly& b);
ZPoly to_zpoly(const QPoly& f);  // requires integral coefficients
QPoly to_qpoly(const ZPoly& f);

ZPoly parse_zpoly(const std::string& s, const std::vector<std::string>& vars);
QPoly parse_qpoly(const std::string& s, const std::vector<std::string>& vars);

}  // namespace x1gon
