#pragma once
// Lattice of cuspidal unit divisors: LLL, short-vector enumeration, randomized
// 1-norm search and the class-group quotient.
#include <cstdint>
#include <functional>
#include <vector>

#include "x1gon/cusps.hpp"
#include "x1gon/intmatrix.hpp"

namespace x1gon::lattice {

using ExponentVec = std::vector<long>;

struct UnitLattice {
  int N = 0;
  IntMatrix basis;             // rows div(f_k)
  std::vector<long> weights;   // orbit degrees per column

  static UnitLattice from_table(const cusps::DivisorTable& T);
  size_t dim() const { return basis.rows(); }
  size_t cols() const { return basis.cols(); }
  // sum_k n_k row_k
  std::vector<long> combine(const ExponentVec& n) const;
};

// sum of the positive weighted entries (= half the weighted 1-norm on degree-0 vectors)
long weighted_degree(const std::vector<long>& v, const std::vector<long>& w);

struct LLLResult {
  IntMatrix B;  // reduced rows
  IntMatrix H;  // unimodular, H * input = B
};
// Exact integral LLL for the form <a,b> = sum_i w_i a_i b_i (w empty: all 1).
LLLResult lll_reduce(const IntMatrix& B, const Rational& delta = Rational(99, 100),
                     const std::vector<long>& w = {});
// Lovasz and size conditions, checked with exact Gram-Schmidt
bool is_lll_reduced(const IntMatrix& B, const Rational& delta = Rational(99, 100),
                    const std::vector<long>& w = {});

struct ShortVector {
  ExponentVec exponents;  // in the basis rows of the lattice
  std::vector<long> v;
  long norm2 = 0;         // value of the quadratic form
  long degree = 0;
};
struct EnumOptions {
  bool weighted = false;    // form sum w_i v_i^2 instead of sum v_i^2
  long cap = 5'000'000;     // EnumerationBudgetExceeded beyond this many vectors
};
// Fincke-Pohst: every nonzero lattice vector (one of +-v) with form value <= bound2.
// The visitor may return false to stop early. Returns the number visited.
long for_each_short(const UnitLattice& L, long bound2, const EnumOptions& opt,
                    const std::function<bool(const ShortVector&)>& fn);
std::vector<ShortVector> enumerate_short(const UnitLattice& L, long bound2, const EnumOptions& opt = {});

struct SearchOptions {
  long budget = 200;          // restarts
  uint64_t seed = 1;
  Rational delta = Rational(99, 100);
  int max_scale = 64;
};
struct SearchResult {
  ExponentVec exponents;
  std::vector<long> divisor;
  long degree = 0;
  long restarts = 0;
  bool exhaustive = false;  // never set by the randomized search
};
SearchResult search_min_degree(const UnitLattice& L, const SearchOptions& opt);
// single-threaded reference; same result as the parallel search
SearchResult search_min_degree_serial(const UnitLattice& L, const SearchOptions& opt);
// one restart; exposed for benchmarks
SearchResult search_restart(const UnitLattice& L, const SearchOptions& opt, long r);

// true when a is the better search result (degree, then lexicographic exponents)
bool better(const SearchResult& a, const SearchResult& b);

// Decisions by divisor classes: a unit of degree exactly d exists iff two effective
// cuspidal divisors of degree d with disjoint supports share a class modulo the
// unit rows; no unit of degree <= d exists iff classes of effective degree-d
// divisors are pairwise distinct. Complete; budget counts effective divisors.
struct UnitDegreeResult {
  bool exists = false;
  ExponentVec exponents;      // witness when exists
  std::vector<long> divisor;
  long degree = 0;
  long divisors = 0;          // effective divisors examined
};
// Undecided when the number of effective divisors exceeds max_divisors
UnitDegreeResult unit_of_exact_degree(const UnitLattice& L, long d, long max_divisors = 400'000'000);
// some unit of degree in [1, d] (witness of smallest degree found is not guaranteed minimal)
UnitDegreeResult unit_up_to_degree(const UnitLattice& L, long d, long max_divisors = 400'000'000);
// number of effective divisors of degree d on the orbit weights (saturates at LONG_MAX)
long count_effective(const std::vector<long>& weights, long d);

struct ClassGroup {
  std::vector<Integer> invariants;  // elementary divisors > 1
  size_t free_rank = 0;             // > 0: unit rows do not span a finite-index sublattice
  Integer order() const;            // 0 when infinite
};
ClassGroup class_group_quotient(const UnitLattice& L);

}  // namespace x1gon::lattice
