// Bounds arithmetic, the unit census wrapper, named minimal functions and reports.
#include "x1gon/gonality.hpp"

#include <json.hpp>

#include "x1gon/ntheory.hpp"

namespace x1gon::gonality {

long index_gamma1(int N) {
  if (N < 1) throw std::invalid_argument("level must be positive");
  return cusps::psl2_index(N);
}

Rational lambda_selberg() { return Rational(21, 100); }
Rational lambda_kim_sarnak() { return Rational(975, 4096); }

long abramovich_bound(int N, const Rational& lambda) {
  Rational v = lambda * index_gamma1(N) / 24;
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return c.get_si();
}

long sutherland_prime_bound(int N) {
  if (N <= 6) throw std::invalid_argument("N > 6 required");
  long num = 11L * N * N, den = 840;
  long q = num / den, r = num % den;
  if (2 * r == den) throw RoundingTie("11N^2/840 is a half-integer");
  return 2 * r > den ? q + 1 : q;
}

const char* level_class_name(LevelClass c) {
  switch (c) {
    case LevelClass::Prime: return "prime";
    case LevelClass::TwicePrime: return "2*prime";
    case LevelClass::BigSquareFactor: return "big-square-factor";
    default: return "other";
  }
}

LevelClass classify_level(int N) {
  if (N >= 2 && nt::is_prime((uint64_t)N)) return LevelClass::Prime;
  if (N % 2 == 0 && N > 4 && nt::is_prime((uint64_t)N / 2)) return LevelClass::TwicePrime;
  for (auto p : nt::prime_factors((uint64_t)N))
    if (p > 3 && N % (long)(p * p) == 0) return LevelClass::BigSquareFactor;
  return LevelClass::Other;
}

Improvement improvement_factor(int N, long degree) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  Rational f(index_gamma1(N), degree);
  f.canonicalize();
  return {f, classify_level(N)};
}

long pigeonhole_bound(long q, long n_places) {
  if (n_places < 1 || q < 1) throw std::invalid_argument("positive arguments required");
  return (n_places + q) / (q + 1);
}

namespace {
// degrees of the best known functions, N = 1..250
const long kTable1[250] = {
    1,   1,   1,   1,   1,   1,   1,   1,   1,   1,   2,   1,   2,   2,   2,   2,   4,   2,   5,   3,
    4,   4,   7,   4,   5,   6,   6,   6,   11,  6,   12,  8,   10,  10,  12,  8,   18,  12,  14,  12,
    22,  12,  24,  15,  18,  19,  29,  16,  21,  15,  24,  21,  37,  18,  30,  24,  30,  31,  46,  24,
    49,  36,  36,  32,  42,  30,  58,  36,  44,  36,  66,  32,  70,  51,  40,  45,  60,  42,  82,  48,
    54,  58,  90,  48,  72,  64,  70,  60,  104, 48,  84,  66,  80,  83,  90,  56,  123, 63,  90,  60,
    133, 72,  139, 84,  96,  105, 150, 72,  156, 90,  114, 96,  167, 90,  132, 105, 126, 120, 144, 96,
    132, 139, 140, 120, 125, 96,  211, 112, 154, 126, 225, 120, 180, 156, 144, 144, 246, 132, 253, 144,
    184, 189, 210, 128, 210, 184, 168, 171, 291, 120, 299, 180, 216, 180, 240, 168, 323, 234, 234, 184,
    264, 162, 348, 210, 240, 240, 365, 192, 260, 216, 270, 231, 392, 210, 240, 240, 290, 274, 420, 192,
    429, 252, 310, 264, 342, 240, 360, 276, 288, 270, 478, 224, 488, 328, 336, 252, 508, 240, 519, 240,
    374, 382, 420, 288, 420, 398, 396, 336, 450, 288, 583, 351, 420, 396, 462, 288, 480, 445, 444, 360,
    504, 342, 651, 384, 360, 444, 675, 360, 687, 396, 480, 420, 711, 336, 552, 435, 520, 432, 748, 384,
    761, 396, 486, 465, 504, 420, 630, 480, 574, 375};
}  // namespace

std::optional<long> table1_degree(int N) {
  if (N < 1 || N > kTable1Max) return std::nullopt;
  return kTable1[N - 1];
}

UnitCensus degree_d_unit_census(int N, long d, long max_divisors) {
  auto L = lattice::UnitLattice::from_table(cusps::divisor_table(N));
  auto r = lattice::unit_of_exact_degree(L, d, max_divisors);
  UnitCensus U;
  U.exists = r.exists;
  U.exponents = r.exponents;
  U.divisor = r.divisor;
  U.divisors_examined = r.divisors;
  return U;
}

// ---- named units ----

const std::vector<NamedUnit>& named_units() {
  // x = f7/f8, y = f8/f9, 1-x ~ f5 f6/(f4 f8), 1-y ~ f6 f7/f9, and
  // f10 = x-y+1, f11 = x^2y-xy^2+y-1, f12 = x-y, f14 = x^2y-xy^2-xy+y^2-1
  static const std::vector<NamedUnit> U{
      {"x", {{7, 1}, {8, -1}}},
      {"y", {{8, 1}, {9, -1}}},
      {"h1", {{8, 1}, {9, 1}, {11, 1}, {7, -2}, {12, -1}}},
      {"h2", {{6, 1}, {7, 2}, {14, 1}, {8, -1}, {9, -1}, {10, -1}, {11, -1}}},
      {"h3", {{5, 1}, {6, 1}, {14, 1}, {4, -1}, {8, -1}, {11, -1}, {12, -1}}},
      {"h4", {{5, 1}, {9, 1}, {11, 1}, {4, -1}, {7, -2}}},
      {"h5", {{6, 1}, {7, 1}, {14, 1}, {8, -1}, {10, -1}, {12, -1}}},
      {"h6", {{10, 1}, {11, 1}, {12, 1}, {17, -1}}},
      {"h7", {{17, 1}, {18, -1}}},
      {"h8", {{14, 1}, {17, 2}, {19, -2}}},
      {"h9", {{12, 1}, {13, 1}, {14, 1}, {19, -1}}},
  };
  return U;
}

const NamedUnit& named_unit(const std::string& name) {
  for (auto& u : named_units())
    if (u.name == name) return u;
  throw std::invalid_argument("unknown unit " + name);
}

std::string minimal_function_name(int N) {
  static const char* names[30] = {"x",  "x",  "x",  "x",  "x",  "y",  "x",  "h1", "x",  "x",
                                  "h1", "x",  "x",  "h1", "h2", "y",  "h3", "h3", "x",  "h5",
                                  "h1", "h4", "h6", "h1", "h7", "h8", "x",  "h2", "h9", "h5"};
  if (N < 11 || N > 40) throw std::out_of_range("minimal functions are listed for 11 <= N <= 40");
  return names[N - 11];
}

cusps::DivisorVec named_divisor(const NamedUnit& u, int N) {
  auto T = cusps::divisor_table(N);
  int top = N / 2 + 1;
  cusps::DivisorVec D(cusps::num_orbits(N), 0);
  for (auto [k, e] : u.f_exponents) {
    if (k >= N) throw NotAFunction("f_" + std::to_string(k) + " vanishes on level " + std::to_string(N));
    auto row = k <= top ? T.rows[k - 2] : cusps::divisor_of(N, cusps::unit_function(k));
    for (size_t i = 0; i < D.size(); ++i) D[i] += e * row[i];
  }
  return D;
}

lattice::ExponentVec named_exponents(const NamedUnit& u, int N) {
  auto x = cusps::express_in_lattice(cusps::divisor_table(N), named_divisor(u, N));
  lattice::ExponentVec v;
  for (auto& c : x) v.push_back(c.get_si());
  return v;
}

// ---- reports ----

BoundReport bound_report(int N, const lattice::SearchOptions& opt, std::optional<long> q) {
  BoundReport R;
  R.N = N;
  auto L = lattice::UnitLattice::from_table(cusps::divisor_table(N));
  auto s = lattice::search_min_degree(L, opt);
  R.upper = s.degree;
  R.exponents = s.exponents;
  R.lower_abramovich = abramovich_bound(N, lambda_kim_sarnak());
  if (R.lower_abramovich > R.upper) throw Inconsistency("index lower bound exceeds the unit degree");
  if (q) {
    auto C = count_places_fq(N, *q, 1);
    R.lower_pigeonhole = std::make_pair(*q, pigeonhole_bound(*q, C.rational()));
  }
  auto t = table1_degree(N);
  R.exact = N <= kTable1Exact && t && *t == R.upper;
  return R;
}

std::string BoundReport::to_json() const {
  nlohmann::ordered_json j;
  j["level"] = N;
  j["upper"] = upper;
  j["exponents"] = exponents;
  j["lower_abramovich"] = lower_abramovich;
  if (lower_pigeonhole)
    j["lower_pigeonhole"] = {{"q", lower_pigeonhole->first}, {"value", lower_pigeonhole->second}};
  else
    j["lower_pigeonhole"] = nullptr;
  j["status"] = exact ? "exact" : "bounded";
  return j.dump(2);
}

}  // namespace x1gon::gonality
