#pragma once
// Cusps of X_1(N): Galois orbits C_0..C_{N/2}, divisors of the units f_k, diamond operators.
#include <functional>
#include <optional>

#include "x1gon/intmatrix.hpp"
#include "x1gon/modeq.hpp"
#include "x1gon/puiseux.hpp"
#include "x1gon/qseries.hpp"

namespace x1gon::cusps {

using DivisorVec = std::vector<long>;  // coefficients on C_0..C_{N/2}

struct CuspOrbit {
  int label;   // n
  int d;       // gcd(n, N), with gcd(0, N) = N
  int degree;  // degree of the orbit as a divisor over Q
  int width;   // cusp width N/d of each member
};

int num_orbits(int N);
int orbit_gcd(int N, int n);
int orbit_degree(int N, int n);
std::vector<CuspOrbit> orbits(int N);
long total_cusps(int N);      // (1/2) sum_{d|N} phi(d) phi(N/d), N > 4
long psl2_index(int N);       // index of +-Gamma_1(N) in PSL_2(Z)
long degree(int N, const DivisorVec& D);
int canonical_label(int N, long n);  // representative of +-n mod N in [0, N/2]
DivisorVec diamond_permute(int N, long i, const DivisorVec& D);

// Function values at the cusp u = zeta^j s^n of the Tate curve over F_p((s)), q = s^N.
class CuspEvaluator {
public:
  CuspEvaluator(int N, int n, long j, uint64_t p, int M);
  int N() const { return N_; }
  int prec() const { return M_; }
  const qs::Series& b() const { return b_; }
  const qs::Series& c() const { return c_; }
  const qs::Series& x();
  const qs::Series& y();
  qs::Series eval_bc(const ZPoly& f);
  qs::Series eval_xy(const ZPoly& f);
  // valuation in the local parameter at the cusp
  int local_valuation(const qs::Series& v) const;

private:
  qs::Series eval(const ZPoly& f, const qs::Series& u, const qs::Series& v, std::vector<qs::Series>& pu,
                  std::vector<qs::Series>& pv);
  int N_, n_, d_;
  uint64_t p_;
  int M_;
  qs::Series b_, c_;
  std::optional<qs::Series> x_, y_;
  std::vector<qs::Series> pb_, pc_, px_, py_;
};

// A function on X_1(N) given in b,c or x,y coordinates.
struct CuspFunction {
  enum Coords { BC, XY } coords;
  ZPoly num, den;
};
CuspFunction unit_function(int k);  // f_k in the coordinates in which it is polynomial-rational
CuspFunction from_xy(const RatFunc& g);
CuspFunction from_bc(const RatFunc& g);

// Divisor of g on X_1(N), read from cusp expansions (g must be supported on cusps).
// Checks every Galois conjugate inside each orbit when check_orbits is set.
DivisorVec divisor_of(int N, const CuspFunction& g, bool check_orbits = false);

struct DivisorTable {
  int N = 0;
  std::vector<DivisorVec> rows;  // f_2 .. f_{N/2+1}
  bool labels_provisional = false;
  IntMatrix matrix() const;
};

DivisorTable compute_divisor_table(int N, bool check_orbits = true);
DivisorTable compute_divisor_table_serial(int N, bool check_orbits = true);
// levels up to kBuiltinTables are built in; larger ones cached in $X1GON_CACHE (or not at all when unset)
constexpr int kBuiltinTables = 12;
DivisorTable divisor_table(int N);

std::string to_rowvec(const DivisorTable& T);
DivisorTable parse_rowvec(const std::string& text);

// exponents n_k with sum n_k row(f_k) = D; NotInLattice otherwise
std::vector<Integer> express_in_lattice(const DivisorTable& T, const DivisorVec& D);

// Cusp places of f_N(x,y) = 0 over a prime p = 1 mod N, where every cusp is rational.
// Each place carries the valuation vector of f_2..f_{N/2+1} and the label whose table
// column matches it.
struct CuspPlace {
  puiseux::Place<FiniteField> place;
  std::vector<long> valuations;
  int label = -1;
};
struct CuspPlaceSet {
  int N = 0;
  uint64_t p = 0;
  std::vector<CuspPlace> places;
  long total_degree() const;
};
CuspPlaceSet cusp_places(int N);
CuspPlaceSet cusp_places(int N, const DivisorTable& T);

// roots in F_p of Res_y(f, g) (of g itself when g is free of y)
std::vector<uint64_t> resultant_roots(const ZPoly& f, const ZPoly& g, uint64_t p);

// verifies the canonical labeling against the level-29 reference vector
bool labeling_certified();

}  // namespace x1gon::cusps
