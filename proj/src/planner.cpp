// Lower-bound proof plans: subdivision cases, divisor types and their grouping.
#include <algorithm>
#include <json.hpp>

#include "x1gon/gonality.hpp"
#include "x1gon/ntheory.hpp"

namespace x1gon::gonality {

TypeSignature type_of(const std::vector<std::pair<int, long>>& D) {
  TypeSignature t;
  for (auto [e, m] : D) {
    if (m == 0) throw MalformedDivisor("zero coefficient in a divisor");
    if (e < 1) throw MalformedDivisor("place degree must be positive");
    t.push_back({e, m});
  }
  std::sort(t.begin(), t.end(), std::greater<>());
  return t;
}

long type_degree(const TypeSignature& t) {
  long s = 0;
  for (auto [e, m] : t) s += e * m;
  return s;
}

std::string type_str(const TypeSignature& t, bool shorthand) {
  std::string s = "(";
  for (size_t i = 0; i < t.size();) {
    size_t j = i;
    while (shorthand && j < t.size() && t[j] == t[i]) ++j;
    if (j == i) j = i + 1;
    if (i) s += ",";
    if (j - i > 1) s += std::to_string(j - i);
    s += "(" + std::to_string(t[i].first) + "," + std::to_string(t[i].second) + ")";
    i = j;
  }
  return s + ")";
}

long DivisorPattern::degree(long r) const { return cuspsum * r + type_degree(extra); }

std::vector<TypeSignature> realizable_types(const FqCensus& census, long e, int min_nonrational,
                                            bool only_rational) {
  std::vector<TypeSignature> out;
  if (e < 0) return out;
  if (e > census.max_degree && !only_rational)
    throw Undecided("census does not reach place degree " + std::to_string(e));
  std::vector<int> degs;
  for (auto [k, c] : census.degree_counts)
    if (c > 0 && k <= e && (!only_rational || k == 1)) degs.push_back(k);
  std::sort(degs.rbegin(), degs.rend());
  TypeSignature cur;
  std::map<int, long> used;
  // tuples in non-increasing lexicographic order
  auto rec = [&](auto&& self, long rem, std::pair<int, long> bound) -> void {
    if (rem == 0) {
      int nr = 0;
      for (auto& [d, m] : cur) nr += d > 1;
      if (nr >= min_nonrational) out.push_back(cur);
      return;
    }
    for (int d : degs) {
      if (d > bound.first || d > rem) continue;
      if (used[d] >= census.degree_counts.at(d)) continue;
      long mmax = rem / d;
      if (d == bound.first) mmax = std::min(mmax, bound.second);
      for (long m = mmax; m >= 1; --m) {
        cur.push_back({d, m});
        ++used[d];
        self(self, rem - d * m, std::make_pair(d, m));
        --used[d];
        cur.pop_back();
      }
    }
  };
  rec(rec, e, {(int)e, e});
  return out;
}

std::vector<DivisorPattern> dominating_family(const FqCensus& census, long d) {
  long n = pigeonhole_bound(census.q, census.rational());
  if (d < n) throw EmptyTarget("target degree is below the pigeonhole bound");
  std::vector<DivisorPattern> out;
  for (auto& t : realizable_types(census, d - n)) out.push_back({1, t});
  return out;
}

bool dominates(const DivisorPattern& p, const TypeSignature& t) {
  // non-rational places: greedy match within each degree, largest multiplicities first
  std::map<int, std::vector<long>> need, have;
  std::vector<long> a, b;
  for (auto [e, m] : t) (e > 1 ? need[e].push_back(m) : a.push_back(m));
  for (auto [e, m] : p.extra) (e > 1 ? have[e].push_back(m) : b.push_back(m));
  for (auto& [e, ms] : need) {
    auto& hs = have[e];
    if (hs.size() < ms.size()) return false;
    std::sort(ms.rbegin(), ms.rend());
    std::sort(hs.rbegin(), hs.rend());
    for (size_t i = 0; i < ms.size(); ++i)
      if (ms[i] > hs[i]) return false;
  }
  // rational places: the cuspsum beyond the first copy adds to every one of them
  std::sort(a.rbegin(), a.rend());
  std::sort(b.rbegin(), b.rend());
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > (i < b.size() ? b[i] : 0) + (p.cuspsum - 1)) return false;
  return true;
}

namespace {

int band(long rational_places) { return rational_places <= 2 ? 0 : rational_places == 3 ? 1 : 2; }

}  // namespace

std::vector<CalculationGroup> group_types(const std::vector<TypeSignature>& types, bool fix_one_place) {
  std::vector<CalculationGroup> out;
  std::map<std::pair<TypeSignature, int>, size_t> index;
  for (auto& t : types) {
    TypeSignature nonrat;
    std::vector<long> rat;
    for (auto& pm : t) (pm.first > 1 ? nonrat.push_back(pm) : rat.push_back(pm.second));
    auto key = std::make_pair(nonrat, band((long)rat.size()));
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, out.size()).first;
      CalculationGroup g;
      g.pattern.extra = nonrat;
      out.push_back(g);
    }
    auto& g = out[it->second];
    g.types.push_back(t);
    // rational part of the pattern: coefficient-wise maximum of the sorted multiplicities
    std::vector<long> cur;
    for (auto& pm : g.pattern.extra)
      if (pm.first == 1) cur.push_back(pm.second);
    std::sort(rat.rbegin(), rat.rend());
    if (rat.size() > cur.size()) cur.resize(rat.size(), 0);
    for (size_t i = 0; i < rat.size(); ++i) cur[i] = std::max(cur[i], rat[i]);
    TypeSignature ext = nonrat;
    for (long m : cur) ext.push_back({1, m});
    g.pattern.extra = type_of(ext);
    g.free_places = (long)cur.size() - (fix_one_place && !cur.empty() ? 1 : 0);
  }
  return out;
}

namespace {

// rational cusps all of orbit degree 1, and one orbit under n -> +-i n
bool diamond_transitive(int N, const FqCensus& C) {
  std::vector<int> labels;
  for (auto& o : cusps::orbits(N))
    if (o.degree == 1) labels.push_back(o.label);
  if ((long)labels.size() != C.rational() || labels.empty()) return false;
  std::vector<int> reach{labels[0]};
  for (long i = 1; i < N; ++i)
    if (nt::gcd((uint64_t)i, (uint64_t)N) == 1) reach.push_back(cusps::canonical_label(N, i * labels[0]));
  std::sort(reach.begin(), reach.end());
  reach.erase(std::unique(reach.begin(), reach.end()), reach.end());
  std::sort(labels.begin(), labels.end());
  return reach == labels;
}

}  // namespace

LowerBoundPlan plan_lower_bound(int N, long q, long d) {
  if (q < 2 || !nt::is_prime((uint64_t)q) || nt::gcd((uint64_t)q, (uint64_t)N) != 1)
    throw BadPrime("q must be a prime not dividing the level");
  LowerBoundPlan P;
  P.N = N;
  P.q = q;
  P.target = d;
  auto C1 = count_places_fq(N, q, 1);
  long r = C1.rational();
  P.rational_places = r;
  P.pigeonhole = pigeonhole_bound(q, r);
  if (d < P.pigeonhole) {
    P.census = C1.degree_counts;
    return P;
  }
  // every rational fiber but at most one holds a non-rational place; the best
  // fiber then has >= n rational places. Case 3 asks for t3 = n - 1, and case 2
  // takes the largest T2 whose complement still forces t3 into one of q fibers.
  long t3 = std::max<long>(1, P.pigeonhole - 1);
  long T2 = r - q * (t3 - 1);
  P.rational_pole_threshold = t3;
  P.distinct_pole_threshold = T2;
  long budget3 = d - t3, budget2 = d - T2;
  auto C = count_places_fq(N, q, (int)std::max<long>(1, budget3));
  P.census = C.degree_counts;
  P.diamond_transitive = diamond_transitive(N, C);

  PlanCase c1;
  c1.id = 1;
  c1.condition = "mdeg(f) = 1";
  c1.external = true;
  c1.note = "requires rational-place kernel lattice (external): principal divisors supported on the " +
            std::to_string(r) + " rational places, none of degree <= " + std::to_string(d);
  P.cases.push_back(c1);

  PlanCase c2;
  c2.id = 2;
  c2.condition = "all poles rational, >= " + std::to_string(T2) + " distinct poles";
  c2.extra_degree = budget2;
  if (budget2 >= 0) {
    c2.types = realizable_types(C, budget2, 0, true);
    c2.groups = group_types(c2.types, P.diamond_transitive);
  }
  PlanCase c3;
  c3.id = 3;
  c3.condition = "poles at >= " + std::to_string(t3) + " rational places and a non-rational pole";
  c3.extra_degree = budget3;
  if (budget3 >= 0) {
    c3.types = realizable_types(C, budget3, 1);
    c3.groups = group_types(c3.types, P.diamond_transitive);
  }
  if (P.diamond_transitive) {
    std::string n = "diamond operators act transitively on the rational places: one rational place of each "
                    "pattern may be fixed (functions are taken up to automorphisms of source and target)";
    c2.note = c3.note = n;
  }
  P.cases.push_back(c2);
  P.cases.push_back(c3);
  return P;
}

std::string LowerBoundPlan::to_json() const {
  using J = nlohmann::ordered_json;
  auto tj = [](const TypeSignature& t) {
    J a = J::array();
    for (auto [e, m] : t) a.push_back({e, m});
    return a;
  };
  J j;
  j["level"] = N;
  j["q"] = q;
  j["target_degree"] = target;
  j["rational_places"] = rational_places;
  j["pigeonhole"] = pigeonhole;
  j["distinct_pole_threshold"] = distinct_pole_threshold;
  j["rational_pole_threshold"] = rational_pole_threshold;
  j["diamond_transitive"] = diamond_transitive;
  J cj = J::object();
  for (auto [k, v] : census) cj[std::to_string(k)] = v;
  j["census"] = cj;
  J cs = J::array();
  for (auto& c : cases) {
    J x;
    x["id"] = c.id;
    x["condition"] = c.condition;
    x["external"] = c.external;
    x["note"] = c.note;
    x["extra_degree"] = c.extra_degree;
    J ts = J::array();
    for (auto& t : c.types) ts.push_back(tj(t));
    x["types"] = ts;
    J gs = J::array();
    for (auto& g : c.groups) {
      J gj;
      gj["cuspsum"] = g.pattern.cuspsum;
      gj["extra"] = tj(g.pattern.extra);
      gj["divisor_degree"] = g.pattern.degree(rational_places);
      gj["free_places"] = g.free_places;
      J gt = J::array();
      for (auto& t : g.types) gt.push_back(tj(t));
      gj["types"] = gt;
      gs.push_back(gj);
    }
    x["groups"] = gs;
    cs.push_back(x);
  }
  j["cases"] = cs;
  return j.dump(2);
}

}  // namespace x1gon::gonality
