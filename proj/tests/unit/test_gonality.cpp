#include <doctest.h>

#include <algorithm>
#include <json.hpp>
#include <set>

#include "x1gon/gonality.hpp"
#include "x1gon/ntheory.hpp"

using namespace x1gon;
using namespace x1gon::gonality;

namespace {

TypeSignature R(std::initializer_list<long> parts) {
  TypeSignature t;
  for (long m : parts) t.push_back({1, m});
  return t;
}

// number of integer partitions of n
long partitions(long n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (long k = 1; k <= n; ++k)
    for (long i = k; i <= n; ++i) p[i] += p[i - k];
  return p[n];
}

}  // namespace

TEST_CASE("gonality: index and spectral bounds") {
  CHECK(index_gamma1(1) == 1);
  CHECK(index_gamma1(2) == 3);
  CHECK(index_gamma1(25) == 300);
  CHECK(index_gamma1(37) == 684);
  CHECK(abramovich_bound(37, lambda_kim_sarnak()) == 7);
  CHECK(abramovich_bound(1, lambda_kim_sarnak()) == 1);
  CHECK(abramovich_bound(1, lambda_selberg()) == 1);
  // exact ceiling: 684 * 975 / (24 * 4096) = 6.78...
  CHECK(abramovich_bound(37, lambda_selberg()) == 6);
  Rational cap = Rational(24) / lambda_kim_sarnak();
  for (int N = 1; N <= kTable1Max; ++N) {
    long t = *table1_degree(N);
    CHECK(abramovich_bound(N, lambda_kim_sarnak()) <= t);
    CHECK(improvement_factor(N, t).factor <= cap);
  }
}

TEST_CASE("gonality: prime bound and improvement factors") {
  CHECK(sutherland_prime_bound(23) == 7);
  CHECK(sutherland_prime_bound(29) == 11);
  CHECK(sutherland_prime_bound(37) == 18);
  CHECK_THROWS_AS(sutherland_prime_bound(6), std::invalid_argument);
  // ties only at N = 210 mod 420, never at a prime
  for (int N = 7; N <= 2000; ++N)
    if (nt::is_prime(N)) CHECK_NOTHROW(sutherland_prime_bound(N));
  CHECK_THROWS_AS(sutherland_prime_bound(210), RoundingTie);
  CHECK(improvement_factor(25, 5).factor == 60);
  CHECK(improvement_factor(49, 21).factor == 56);
  CHECK(improvement_factor(37, 18).factor == 38);
  CHECK(improvement_factor(26, 6).factor == 42);
  CHECK(improvement_factor(38, 12).factor == 45);
  CHECK(improvement_factor(25, 5).level_class == LevelClass::BigSquareFactor);
  CHECK(improvement_factor(37, 18).level_class == LevelClass::Prime);
  CHECK(improvement_factor(26, 6).level_class == LevelClass::TwicePrime);
  CHECK(classify_level(36) == LevelClass::Other);
  CHECK(classify_level(18) == LevelClass::Other);
  CHECK_THROWS_AS(improvement_factor(25, 0), std::invalid_argument);
}

TEST_CASE("gonality: pigeonhole") {
  CHECK(pigeonhole_bound(2, 18) == 6);
  CHECK(pigeonhole_bound(2, 3) == 1);
  CHECK(pigeonhole_bound(3, 9) == 3);
  CHECK(pigeonhole_bound(3, 10) == 3);
  CHECK(pigeonhole_bound(3, 13) == 4);
}

TEST_CASE("gonality: table constants") {
  CHECK(*table1_degree(37) == 18);
  CHECK(*table1_degree(250) == 375);
  CHECK(*table1_degree(101) == 133);
  CHECK(!table1_degree(251));
  CHECK(minimal_function_name(18) == "h1");
  CHECK(minimal_function_name(36) == "h8");
}

TEST_CASE("census: elliptic level 11 over F_2") {
  // y^2 + y = x^3 - x^2 has 5 points over F_2; Frobenius trace -2
  auto C = count_places_fq(11, 2, 6);
  long s_prev = 2, s = -2;  // s_0, s_1 of alpha^k + beta^k, alpha beta = 2
  for (int k = 1; k <= 6; ++k) {
    long total = 0;
    for (int j = 1; j <= k; ++j)
      if (k % j == 0) total += j * C.count(j);
    CHECK(total == (1L << k) + 1 - s);
    long nx = -2 * s - 2 * s_prev;
    s_prev = s;
    s = nx;
  }
  CHECK(C.count(1) == 5);
}

TEST_CASE("census: plane model agrees with the Tate normal form enumeration") {
  struct Case {
    int N;
    long q;
    int k;
  };
  for (auto c : {Case{13, 3, 3}, Case{16, 3, 3}, Case{20, 3, 2}, Case{25, 2, 6}, Case{29, 5, 2}, Case{37, 2, 5}})
    for (int k = 1; k <= c.k; ++k) {
      INFO("N=" << c.N << " q=" << c.q << " k=" << k);
      CHECK(moduli_points(c.N, c.q, k) == moduli_points_bc(c.N, c.q, k));
    }
}

TEST_CASE("census: level 25 and 37 over F_2") {
  auto A = count_places_fq(25, 2, 2);
  CHECK(A.count(1) == 10);
  CHECK(A.count(2) == 0);
  auto B = count_places_fq(37, 2, 8);
  CHECK(B.count(1) == 18);
  for (int k : {2, 3, 4, 5, 8}) CHECK(B.count(k) == 0);
  CHECK(B.cusp_counts.at(1) == 18);
  CHECK(cusp_places_fq(37, 2, 18) == 1);  // the orbit C_0 stays one place
}

TEST_CASE("census: serial and parallel agree; cusps bound the rational count") {
  auto a = count_places_fq(29, 3, 3), b = count_places_fq_serial(29, 3, 3);
  CHECK(a.degree_counts == b.degree_counts);
  CHECK(a.moduli_points == b.moduli_points);
  for (int N : {13, 16, 21, 26})
    for (long q : {3L, 5L, 7L}) {
      if (N % q == 0) continue;
      auto C = count_places_fq(N, q, 1);
      CHECK(C.count(1) >= C.cusp_counts.at(1));
      long split = 0;
      for (auto& o : cusps::orbits(N))
        if (o.degree == 1) ++split;
      CHECK(C.cusp_counts.at(1) >= split);
    }
  CHECK_THROWS_AS(count_places_fq(22, 2, 1), BadPrime);
  CHECK_THROWS_AS(count_places_fq(9, 2, 1), UnsupportedLevel);
}

TEST_CASE("planner: type signatures") {
  CHECK(type_of({{1, 3}, {5, 1}}) == TypeSignature{{5, 1}, {1, 3}});
  CHECK(type_of({{1, 1}}) == TypeSignature{{1, 1}});
  CHECK(type_of({{1, 2}, {1, 2}}) == TypeSignature{{1, 2}, {1, 2}});
  CHECK(type_of({{1, 1}, {1, 3}, {6, 1}}) == TypeSignature{{6, 1}, {1, 3}, {1, 1}});
  CHECK_THROWS_AS(type_of({{1, 0}}), MalformedDivisor);
  CHECK(type_degree(type_of({{5, 1}, {1, 3}})) == 8);
  CHECK(type_str(TypeSignature{{6, 1}, {1, 2}, {1, 2}, {1, 1}}, true) == "((6,1),2(1,2),(1,1))");
  CHECK(type_str(TypeSignature{{1, 1}, {1, 1}}) == "((1,1),(1,1))");
}

TEST_CASE("planner: dominating families") {
  FqCensus C;
  C.N = 0;
  C.q = 2;
  C.max_degree = 4;
  C.degree_counts = {{1, 10}, {2, 0}, {3, 0}, {4, 0}};
  // n = ceil(10/3) = 4
  auto f = dominating_family(C, 6);
  REQUIRE(f.size() == 2);
  CHECK(f[0].extra == R({2}));
  CHECK(f[1].extra == R({1, 1}));
  auto g = dominating_family(C, 4);
  REQUIRE(g.size() == 1);
  CHECK(g[0].extra.empty());
  CHECK(g[0].cuspsum == 1);
  CHECK_THROWS_AS(dominating_family(C, 3), EmptyTarget);
  // distinct places are limited by the census
  C.degree_counts = {{1, 2}, {2, 1}, {3, 0}};
  auto t = realizable_types(C, 4);
  std::set<TypeSignature> s(t.begin(), t.end());
  CHECK(s == std::set<TypeSignature>{{{2, 2}}, {{2, 1}, {1, 2}}, {{2, 1}, {1, 1}, {1, 1}}, R({4}), R({3, 1}),
                                     R({2, 2})});
  // every partition of n on enough rational places
  C.degree_counts = {{1, 30}, {2, 0}, {3, 0}};
  for (long n = 1; n <= 12; ++n) CHECK((long)realizable_types(C, n, 0, true).size() == partitions(n));
}

TEST_CASE("planner: domination") {
  DivisorPattern p{1, {{6, 1}, {1, 6}, {1, 2}}};
  CHECK(dominates(p, {{6, 1}, {1, 5}, {1, 2}}));
  CHECK(!dominates(p, {{6, 1}, {1, 3}, {1, 3}}));
  CHECK(!dominates(p, {{7, 1}, {1, 1}}));
  DivisorPattern q{3, {}};
  CHECK(dominates(q, R({2, 2, 2, 1})));
  CHECK(!dominates(q, R({3, 1})));
}

TEST_CASE("planner: level 37 over F_2, target 17") {
  auto P = plan_lower_bound(37, 2, 17);
  CHECK(P.rational_places == 18);
  CHECK(P.pigeonhole == 6);
  CHECK(P.distinct_pole_threshold == 10);
  CHECK(P.rational_pole_threshold == 5);
  CHECK(P.diamond_transitive);
  REQUIRE(P.cases.size() == 3);
  CHECK(P.cases[0].external);
  CHECK(P.cases[1].extra_degree == 7);
  CHECK(P.cases[2].extra_degree == 12);
  // case 2: every partition of 7
  CHECK((long)P.cases[1].types.size() == partitions(7));
  // case 3: degree-12 divisors with a place of degree 6, 7, 9, 10, 11 or 12
  std::set<TypeSignature> want;
  want.insert({{12, 1}});
  want.insert({{11, 1}, {1, 1}});
  want.insert({{6, 2}});
  want.insert({{6, 1}, {6, 1}});
  for (auto [e, rest] : std::vector<std::pair<int, long>>{{10, 2}, {9, 3}, {7, 5}, {6, 6}}) {
    FqCensus C;
    C.degree_counts = {{1, 18}};
    C.max_degree = 1;
    for (auto& r : realizable_types(C, rest, 0, true)) {
      TypeSignature t{{e, 1}};
      t.insert(t.end(), r.begin(), r.end());
      want.insert(t);
    }
  }
  std::set<TypeSignature> got(P.cases[2].types.begin(), P.cases[2].types.end());
  CHECK(got == want);
  CHECK(got.size() == 27);
  // each group's pattern dominates its members, and groups partition the types
  for (size_t c = 1; c < 3; ++c) {
    size_t n = 0;
    for (auto& g : P.cases[c].groups) {
      n += g.types.size();
      for (auto& t : g.types) CHECK(dominates(g.pattern, t));
    }
    CHECK(n == P.cases[c].types.size());
  }
  auto j = nlohmann::json::parse(P.to_json());
  CHECK(j["pigeonhole"] == 6);
  CHECK(j["cases"].size() == 3);
  CHECK(j["cases"][0]["external"] == true);
  CHECK(j["census"]["1"] == 18);
  CHECK(j["cases"][2]["types"].size() == 27);
}

TEST_CASE("planner: targets below the pigeonhole bound and bad primes") {
  auto P = plan_lower_bound(37, 2, 5);
  CHECK(P.cases.empty());
  CHECK(P.pigeonhole == 6);
  CHECK_THROWS_AS(plan_lower_bound(37, 37, 17), BadPrime);
  CHECK_THROWS_AS(plan_lower_bound(26, 2, 5), BadPrime);
}

TEST_CASE("gonality: named units on small levels") {
  struct Case {
    const char* name;
    int N;
    long degree;
  };
  for (auto c : {Case{"x", 11, 2}, Case{"x", 13, 2}, Case{"y", 16, 2}, Case{"h1", 18, 2}, Case{"x", 17, 4},
                 Case{"h1", 21, 4}, Case{"h1", 24, 4}, Case{"h2", 25, 5}}) {
    INFO(c.name << " on " << c.N);
    auto T = cusps::divisor_table(c.N);
    auto L = lattice::UnitLattice::from_table(T);
    auto& u = named_unit(c.name);
    auto D = named_divisor(u, c.N);
    CHECK(lattice::weighted_degree(D, L.weights) == c.degree);
    CHECK(L.combine(named_exponents(u, c.N)) == D);
  }
}

TEST_CASE("gonality: unit census wrapper") {
  CHECK(degree_d_unit_census(25, 5).exists);
  CHECK(!degree_d_unit_census(25, 6).exists);
  auto u = degree_d_unit_census(20, 3);
  REQUIRE(u.exists);
  auto L = lattice::UnitLattice::from_table(cusps::divisor_table(20));
  CHECK(lattice::weighted_degree(L.combine(u.exponents), L.weights) == 3);
  CHECK_THROWS_AS(degree_d_unit_census(40, 13, 1000), Undecided);
}
