#include "x1gon/mpoly.hpp"

#include <cctype>
#include <optional>

namespace x1gon {

Integer content(const ZPoly& f) {
  Integer g = 0;
  for (auto& t : f.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
  if (!f.is_zero() && f.leading().second < 0) g = -g;
  return g;
}

ZPoly primitive_part(const ZPoly& f) {
  if (f.is_zero()) return f;
  Integer c = content(f);
  if (c == 1) return f;
  return f.map_coeffs(Integers{}, [&](const Integer& a) { return Integer(a / c); });
}

namespace {

int main_var(const ZPoly& f) {
  for (int i = 0; i < f.nvars(); ++i)
    if (f.degree(i) > 0) return i;
  return -1;
}

ZPoly zgcd(const ZPoly& a, const ZPoly& b);

// gcd of the coefficients of f viewed as a polynomial in variable v
ZPoly content_in(const ZPoly& f, int v) {
  auto cs = f.coefficients_in(v);
  ZPoly g = f.zero();
  for (auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? primitive_part(c).scale(content(c)) : zgcd(g, c);
    if (g.is_constant() && !g.is_zero()) {
      // only the integer part can remain
      Integer k = 0;
      for (auto& cc : cs)
        for (auto& t : cc.terms()) mpz_gcd(k.get_mpz_t(), k.get_mpz_t(), t.second.get_mpz_t());
      return f.constant(k);
    }
  }
  return g;
}

ZPoly vpow(const ZPoly& f, int v, unsigned k) {
  return f.variable(v).pow(k);
}

// pseudo-remainder of a by b in variable v
ZPoly prem(ZPoly a, const ZPoly& b, int v) {
  int db = b.degree(v);
  auto bc = b.coefficients_in(v);
  ZPoly lb = bc.back();
  while (!a.is_zero() && a.degree(v) >= db) {
    int da = a.degree(v);
    ZPoly la = a.coefficients_in(v).back();
    a = a * lb - la * vpow(a, v, da - db) * b;
  }
  return a;
}

ZPoly zgcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return primitive_part(b).scale(abs(content(b)));
  if (b.is_zero()) return primitive_part(a).scale(abs(content(a)));
  int va = main_var(a), vb = main_var(b);
  if (va < 0 || vb < 0) {
    Integer k = abs(content(a));
    mpz_gcd(k.get_mpz_t(), k.get_mpz_t(), content(b).get_mpz_t());
    return a.constant(k);
  }
  int v = std::min(va, vb);
  bool ina = a.degree(v) > 0, inb = b.degree(v) > 0;
  if (!ina) return zgcd(a, content_in(b, v));
  if (!inb) return zgcd(content_in(a, v), b);
  ZPoly ca = content_in(a, v), cb = content_in(b, v);
  ZPoly pa = a.exact_div(ca), pb = b.exact_div(cb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  while (true) {
    ZPoly r = prem(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree(v) <= 0) {
      pb = pb.constant(1);
      break;
    }
    pa = pb;
    pb = r.exact_div(content_in(r, v));
  }
  ZPoly g = zgcd(ca, cb) * primitive_part(pb.exact_div(content_in(pb, v)));
  return primitive_part(g).scale(abs(content(g)));
}

Integer max_norm(const ZPoly& f) {
  Integer m = 0;
  for (auto& t : f.terms())
    if (abs(t.second) > m) m = abs(t.second);
  return m;
}

int last_var(const ZPoly& a, const ZPoly& b) {
  for (int i = a.nvars() - 1; i >= 0; --i)
    if (a.degree(i) > 0 || b.degree(i) > 0) return i;
  return -1;
}

ZPoly eval_at(const ZPoly& f, int v, const Integer& xi) {
  auto cs = f.coefficients_in(v);
  ZPoly acc = f.zero();
  for (int i = (int)cs.size() - 1; i >= 0; --i) acc = acc.scale(xi) + cs[i];
  return acc;
}

Integer smod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

// heuristic gcd by evaluation at a large integer; nullopt when it gives up
std::optional<ZPoly> heugcd(const ZPoly& a, const ZPoly& b, int depth) {
  int v = last_var(a, b);
  if (v < 0) {
    Integer k = abs(content(a));
    mpz_gcd(k.get_mpz_t(), k.get_mpz_t(), content(b).get_mpz_t());
    return a.constant(k);
  }
  if (a.is_zero() || b.is_zero()) return zgcd(a, b);
  Integer ca = abs(content(a)), cb = abs(content(b)), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  ZPoly pa = primitive_part(a), pb = primitive_part(b);
  Integer xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
  ZPoly q;
  for (int attempt = 0; attempt < 6; ++attempt) {
    auto g = heugcd(eval_at(pa, v, xi), eval_at(pb, v, xi), depth + 1);
    if (!g) return std::nullopt;
    ZPoly gam = *g, G = a.zero(), xv = a.variable(v);
    ZPoly xpow = a.constant(1);
    while (!gam.is_zero()) {
      ZPoly digit = gam.map_coeffs(Integers{}, [&](const Integer& c) { return smod(c, xi); });
      G += digit * xpow;
      gam = (gam - digit).map_coeffs(Integers{}, [&](const Integer& c) { return Integer(c / xi); });
      xpow = xpow * xv;
    }
    if (!G.is_zero()) {
      G = primitive_part(G);
      if (G.leading().second < 0) G = -G;
      if (pa.divides_by(G, &q) && pb.divides_by(G, &q)) return G.scale(cg);
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return zgcd(a, b);
  ZPoly q;
  if (a.divides_by(b, &q)) return zgcd(b, b.zero());
  if (b.divides_by(a, &q)) return zgcd(a, a.zero());
  if (auto g = heugcd(a, b, 0)) return primitive_part(*g).scale(abs(content(*g)));
  return zgcd(a, b);
}

Rational content(const QPoly& f) {
  if (f.is_zero()) return 0;
  Integer den = 1, num = 0;
  for (auto& t : f.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.second.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.second.get_num_mpz_t());
  }
  Rational c(num, den);
  c.canonicalize();
  if (f.leading().second < 0) c = -c;
  return c;
}

QPoly primitive_part(const QPoly& f) {
  if (f.is_zero()) return f;
  Rational c = content(f);
  return f.scale(1 / c);
}

ZPoly to_zpoly(const QPoly& f) {
  return f.map_coeffs(Integers{}, [](const Rational& a) {
    if (a.get_den() != 1) throw DivisionError("non-integral coefficient");
    return Integer(a.get_num());
  });
}

QPoly to_qpoly(const ZPoly& f) {
  return f.map_coeffs(Rationals{}, [](const Integer& a) { return Rational(a); });
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) return a;
  return to_qpoly(primitive_part(gcd(to_zpoly(primitive_part(a.is_zero() ? b : a)),
                                     to_zpoly(primitive_part(b.is_zero() ? a : b)))));
}

namespace {

template <class P>
class Parser {
public:
  Parser(const std::string& s, const P& proto) : s_(s), proto_(proto) {}
  P run() {
    P r = expr();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string& m) { throw ParseError(m + " at offset " + std::to_string(i_)); }
  void skip() {
    while (i_ < s_.size() && std::isspace((unsigned char)s_[i_])) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  P expr() {
    P acc = proto_.zero();
    bool first = true;
    for (;;) {
      bool neg = false;
      if (eat('-'))
        neg = true;
      else if (!first && !eat('+'))
        break;
      else if (first)
        eat('+');
      P t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }
  P term() {
    P acc = power();
    for (;;) {
      if (eat('*'))
        acc = acc * power();
      else if (eat('/')) {
        P d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by non-constant");
        acc = acc.exact_div(d);
      } else
        break;
    }
    return acc;
  }
  P power() {
    P b = primary();
    if (eat('^')) {
      skip();
      size_t j = i_;
      while (i_ < s_.size() && std::isdigit((unsigned char)s_[i_])) ++i_;
      if (j == i_) fail("expected exponent");
      b = b.pow((unsigned)std::stoul(s_.substr(j, i_ - j)));
    }
    return b;
  }
  P primary() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    if (eat('(')) {
      P e = expr();
      if (!eat(')')) fail("expected )");
      return e;
    }
    if (eat('-')) return -power();
    if (std::isdigit((unsigned char)s_[i_])) {
      size_t j = i_;
      while (i_ < s_.size() && std::isdigit((unsigned char)s_[i_])) ++i_;
      return proto_.constant(proto_.ring().from_integer(Integer(s_.substr(j, i_ - j))));
    }
    if (std::isalpha((unsigned char)s_[i_]) || s_[i_] == '_') {
      size_t j = i_;
      while (i_ < s_.size() && (std::isalnum((unsigned char)s_[i_]) || s_[i_] == '_')) ++i_;
      std::string name = s_.substr(j, i_ - j);
      for (int v = 0; v < proto_.nvars(); ++v)
        if (proto_.vars()[v] == name) return proto_.variable(v);
      fail("unknown variable " + name);
    }
    fail(std::string("unexpected character '") + s_[i_] + "'");
  }
  std::string s_;
  size_t i_ = 0;
  P proto_;
};

}  // namespace

ZPoly parse_zpoly(const std::string& s, const std::vector<std::string>& vars) {
  return Parser<ZPoly>(s, ZPoly(Integers{}, vars)).run();
}

QPoly parse_qpoly(const std::string& s, const std::vector<std::string>& vars) {
  return Parser<QPoly>(s, QPoly(Rationals{}, vars)).run();
}

}  // namespace x1gon
