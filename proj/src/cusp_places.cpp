#include <map>
#include <set>

#include "x1gon/cusps.hpp"
#include "x1gon/ntheory.hpp"

namespace x1gon::cusps {

namespace {

UPoly<PrimeField> specialize_x(const ZPoly& f, const PrimeField& K, uint64_t x0) {
  auto cs = f.coefficients_in(1);
  std::vector<uint64_t> v;
  for (auto& c : cs) {
    uint64_t acc = 0;
    // Horner over the x-exponents
    std::map<unsigned, uint64_t> byexp;
    for (auto& [m, a] : c.terms()) byexp[mono::exp(m, 0)] = K.from_integer(a);
    unsigned top = byexp.empty() ? 0 : byexp.rbegin()->first;
    for (int e = (int)top; e >= 0; --e) {
      acc = K.mul(acc, x0);
      auto it = byexp.find((unsigned)e);
      if (it != byexp.end()) acc = K.add(acc, it->second);
    }
    v.push_back(acc);
  }
  return UPoly<PrimeField>(K, v);
}

UPoly<PrimeField> x_poly(const ZPoly& g, const PrimeField& K) {
  std::vector<uint64_t> v(std::max(g.degree(0), 0) + 1, 0);
  for (auto& [m, a] : g.terms()) v[mono::exp(m, 0)] = K.add(v[mono::exp(m, 0)], K.from_integer(a));
  return UPoly<PrimeField>(K, v);
}

}  // namespace

std::vector<uint64_t> resultant_roots(const ZPoly& f, const ZPoly& g, uint64_t p) {
  PrimeField K(p);
  if (g.degree(1) <= 0) {
    auto gx = x_poly(g, K);
    if (gx.deg() <= 0) return {};
    return roots_finite(gx);
  }
  const int dyf = f.degree(1), dyg = g.degree(1);
  const int D = std::max(f.degree(0), 0) * dyg + std::max(g.degree(0), 0) * dyf;
  std::vector<uint64_t> xs, ys;
  for (uint64_t x0 = 1; (int)xs.size() <= D; ++x0) {
    auto F = specialize_x(f, K, x0), G = specialize_x(g, K, x0);
    if (F.deg() != dyf || G.deg() != dyg) continue;
    xs.push_back(x0);
    ys.push_back(resultant(F, G));
  }
  // Newton interpolation
  std::vector<uint64_t> dd = ys;
  for (size_t j = 1; j < xs.size(); ++j)
    for (size_t i = xs.size() - 1; i >= j; --i)
      dd[i] = K.div(K.sub(dd[i], dd[i - 1]), K.sub(xs[i], xs[i - j]));
  UPoly<PrimeField> R = UPoly<PrimeField>::constant(K, dd.back());
  for (int i = (int)xs.size() - 2; i >= 0; --i)
    R = R * UPoly<PrimeField>(K, {K.neg(xs[i]), 1}) + UPoly<PrimeField>::constant(K, dd[i]);
  if (R.is_zero()) throw NotSquarefree("common component in resultant");
  return roots_finite(R);
}

long CuspPlaceSet::total_degree() const {
  long s = 0;
  for (auto& c : places) s += c.place.residue_degree;
  return s;
}

CuspPlaceSet cusp_places(int N) { return cusp_places(N, divisor_table(N)); }

CuspPlaceSet cusp_places(int N, const DivisorTable& T) {
  if (N < 10) throw UnsupportedLevel("the x,y model starts at level 10");
  CuspPlaceSet S;
  S.N = N;
  S.p = nt::split_prime(N, 0, 31);
  const ZPoly f = modeq::f_poly(N).num;
  std::vector<RatFunc> units;
  std::set<std::string> seen;
  std::vector<ZPoly> gs;
  for (int k = 2; k <= N / 2 + 1; ++k) {
    units.push_back(modeq::f_poly(k).value());
    for (const ZPoly* g : {&units.back().num(), &units.back().den()}) {
      if (g->is_constant()) continue;
      if (seen.insert(g->str()).second) gs.push_back(*g);
    }
  }
  std::set<uint64_t> xs;
  for (auto& g : gs)
    for (auto r : resultant_roots(f, g, S.p)) xs.insert(r);
  {
    auto cs = f.coefficients_in(1);
    for (auto r : resultant_roots(f, cs.back(), S.p)) xs.insert(r);
  }
  FiniteField K = make_finite_field(S.p, 1);
  std::vector<std::optional<FiniteField::Elem>> centers{std::nullopt};
  for (auto x0 : xs) centers.push_back(K.from_integer(Integer((unsigned long)x0)));
  for (auto& c : centers) {
    // every cusp is rational over F_p
    for (auto& P : puiseux::places_above(f, K, c, 1)) {
      CuspPlace cp{P, {}, -1};
      bool cusp = false;
      for (auto& u : units) {
        cp.valuations.push_back(cp.place.valuation(u));
        cusp |= cp.valuations.back() != 0;
      }
      if (cusp) S.places.push_back(std::move(cp));
    }
  }
  if (S.total_degree() != total_cusps(N)) throw OrbitInconsistency("cusp place count differs from the cusp count");
  // match against table columns
  const int m = num_orbits(N);
  std::map<std::vector<long>, std::vector<int>> cols;
  for (int n = 0; n < m; ++n) {
    std::vector<long> col;
    for (auto& r : T.rows) col.push_back(r[n]);
    cols[col].push_back(n);
  }
  std::vector<int> count(m, 0);
  for (auto& cp : S.places) {
    auto it = cols.find(cp.valuations);
    if (it == cols.end()) throw OrbitInconsistency("cusp place matches no orbit");
    if (it->second.size() > 1) throw LabelingAmbiguous("several orbits share a valuation vector");
    cp.label = it->second[0];
    count[cp.label] += cp.place.residue_degree;
  }
  for (int n = 0; n < m; ++n)
    if (count[n] != orbit_degree(N, n)) throw OrbitInconsistency("orbit C_" + std::to_string(n) + " has the wrong number of places");
  return S;
}

}  // namespace x1gon::cusps
