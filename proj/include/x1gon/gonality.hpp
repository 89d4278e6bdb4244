#pragma once
// Gonality bounds: index and spectral lower bounds, point counts over finite
// fields, the degree-d unit census, and lower-bound proof plans.
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "x1gon/lattice.hpp"

namespace x1gon::gonality {

long index_gamma1(int N);

Rational lambda_selberg();     // 21/100
Rational lambda_kim_sarnak();  // 975/4096
// ceil(lambda * index / 24)
long abramovich_bound(int N, const Rational& lambda);
// nearest integer to 11 N^2 / 840, N > 6
long sutherland_prime_bound(int N);

enum class LevelClass { Prime, TwicePrime, BigSquareFactor, Other };
const char* level_class_name(LevelClass c);
LevelClass classify_level(int N);
struct Improvement {
  Rational factor;
  LevelClass level_class;
};
Improvement improvement_factor(int N, long degree);

long pigeonhole_bound(long q, long n_places);

// known degrees: exact gonality for N <= 40, best known upper bound up to 250
std::optional<long> table1_degree(int N);
constexpr int kTable1Exact = 40;
constexpr int kTable1Max = 250;

// ---- point counts ----

struct FqCensus {
  int N = 0;
  long q = 0;
  int max_degree = 0;
  std::map<int, long> degree_counts;  // all places
  std::map<int, long> cusp_counts;    // cusp places only
  std::vector<long> moduli_points;    // #Y_1(N)(F_{q^k}), k = 1..max_degree
  long count(int k) const;
  long rational() const { return count(1); }
};
// Places of X_1(N) over F_q of degree <= max_degree. Non-cuspidal places come from
// the Tate normal form points (b,c) with (0,0) of exact order N, read off the x,y
// model for N >= 10; cusps from the Frobenius action on each orbit.
FqCensus count_places_fq(int N, long q, int max_degree);
FqCensus count_places_fq_serial(int N, long q, int max_degree);
// #Y_1(N)(F_{q^k}) from the plane model (N >= 10); OpenMP over x
long moduli_points(int N, long q, int k);
long moduli_points_serial(int N, long q, int k);
// same count by running over all (b,c); slow oracle
long moduli_points_bc(int N, long q, int k);
// cusp places of degree k over F_q
long cusp_places_fq(int N, long q, int k);

// ---- unit census ----

struct UnitCensus {
  bool exists = false;
  lattice::ExponentVec exponents;  // witness in the f_k basis
  std::vector<long> divisor;
  long divisors_examined = 0;
};
// complete decision whether a unit of degree exactly d exists; Undecided over budget
UnitCensus degree_d_unit_census(int N, long d, long max_divisors = 400'000'000);

// ---- planner ----

// (place degree, multiplicity), lexicographically non-increasing
using TypeSignature = std::vector<std::pair<int, long>>;
TypeSignature type_of(const std::vector<std::pair<int, long>>& D);
long type_degree(const TypeSignature& t);
// "((6,1),(1,2),(1,2))"; with shorthand, runs become a(c,d)
std::string type_str(const TypeSignature& t, bool shorthand = false);

struct DivisorPattern {
  int cuspsum = 1;       // multiple of the sum of the rational places
  TypeSignature extra;   // further places by (degree, multiplicity)
  long degree(long r) const;
};

// All types of effective divisors of degree d - n, n = pigeonhole bound,
// realizable with the place counts of the census; each paired with cuspsum + D.
std::vector<DivisorPattern> dominating_family(const FqCensus& census, long d);

// types of effective divisors of degree e realizable in the census;
// min_nonrational: at least this many places of degree > 1
std::vector<TypeSignature> realizable_types(const FqCensus& census, long e, int min_nonrational = 0,
                                            bool only_rational = false);

// every divisor of type t lies below some placement of the pattern
bool dominates(const DivisorPattern& p, const TypeSignature& t);

struct CalculationGroup {
  DivisorPattern pattern;             // one Riemann-Roch family
  std::vector<TypeSignature> types;   // types it dominates
  long free_places = 0;               // rational places in the pattern left to choose
};
// Groups of one case: types with the same non-rational part and a similar number of
// rational places share one pattern, the coefficient-wise maximum of their members.
std::vector<CalculationGroup> group_types(const std::vector<TypeSignature>& types, bool fix_one_place);

struct PlanCase {
  int id = 0;
  std::string condition;
  bool external = false;              // obligation not expanded here
  std::string note;
  long extra_degree = 0;              // degree of D beyond the cuspsum
  std::vector<TypeSignature> types;
  std::vector<CalculationGroup> groups;
};

struct LowerBoundPlan {
  int N = 0;
  long q = 0;
  long target = 0;     // show no function of degree <= target
  long rational_places = 0;
  long pigeonhole = 0;
  long distinct_pole_threshold = 0;   // case 2
  long rational_pole_threshold = 0;   // case 3
  bool diamond_transitive = false;
  std::map<int, long> census;
  std::vector<PlanCase> cases;
  std::string to_json() const;
};
LowerBoundPlan plan_lower_bound(int N, long q, long d);

// ---- reports ----

struct BoundReport {
  int N = 0;
  long upper = 0;
  lattice::ExponentVec exponents;
  long lower_abramovich = 0;
  std::optional<std::pair<long, long>> lower_pigeonhole;  // (q, bound)
  bool exact = false;
  std::string to_json() const;
};
// upper from the search; lower bounds from the index and (when q given) point counts
BoundReport bound_report(int N, const lattice::SearchOptions& opt, std::optional<long> q = std::nullopt);

// minimal functions: x, y and the h_i as exponent maps over f_k
struct NamedUnit {
  std::string name;
  std::map<int, long> f_exponents;  // k -> exponent of f_k
};
const std::vector<NamedUnit>& named_units();
const NamedUnit& named_unit(const std::string& name);
// the name of a minimal function for 11 <= N <= 40
std::string minimal_function_name(int N);
// divisor on X_1(N): table rows, and cusp expansions for f_k beyond the table
cusps::DivisorVec named_divisor(const NamedUnit& u, int N);
// exponents over the table rows f_2 .. f_{N/2+1}
lattice::ExponentVec named_exponents(const NamedUnit& u, int N);

}  // namespace x1gon::gonality
