#include "x1gon/cusps.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "x1gon/ntheory.hpp"

namespace x1gon::cusps {

using qs::Series;

int num_orbits(int N) { return N / 2 + 1; }

int orbit_gcd(int N, int n) { return (int)nt::gcd((uint64_t)n, (uint64_t)N); }

int orbit_degree(int N, int n) {
  int d = orbit_gcd(N, n);
  int ph = (int)nt::euler_phi(d);
  if (n == 0 || 2 * n == N) return (ph + 1) / 2;
  return ph;
}

std::vector<CuspOrbit> orbits(int N) {
  std::vector<CuspOrbit> out;
  for (int n = 0; n <= N / 2; ++n) {
    int d = orbit_gcd(N, n);
    out.push_back({n, d, orbit_degree(N, n), N / d});
  }
  return out;
}

long total_cusps(int N) {
  long s = 0;
  for (auto d : nt::divisors(N)) s += (long)nt::euler_phi(d) * (long)nt::euler_phi(N / d);
  return s / 2;
}

long psl2_index(int N) {
  long r = (long)N * N;
  for (auto l : nt::prime_factors(N)) r = r / (long)(l * l) * (long)(l * l - 1);
  return N <= 2 ? (N == 1 ? 1 : 3) : r / 2;
}

long degree(int N, const DivisorVec& D) {
  if ((int)D.size() != num_orbits(N)) throw MalformedDivisor("divisor length does not match level");
  long s = 0;
  for (int n = 0; n < (int)D.size(); ++n) s += D[n] * orbit_degree(N, n);
  return s;
}

int canonical_label(int N, long n) {
  long r = ((n % N) + N) % N;
  return (int)std::min(r, N - r);
}

DivisorVec diamond_permute(int N, long i, const DivisorVec& D) {
  if (nt::gcd((uint64_t)(((i % N) + N) % N), (uint64_t)N) != 1) throw NotADiamond("index not coprime to level");
  if ((int)D.size() != num_orbits(N)) throw MalformedDivisor("divisor length does not match level");
  DivisorVec out(D.size(), 0);
  for (int n = 0; n < (int)D.size(); ++n) out[canonical_label(N, (long)n * i)] += D[n];
  return out;
}

CuspEvaluator::CuspEvaluator(int N, int n, long j, uint64_t p, int M)
    : N_(N), n_(n), d_(orbit_gcd(N, n)), p_(p), M_(M) {
  uint64_t z = nt::root_of_unity(N, p);
  auto P1 = qs::tate_point(p, z, N, j, n, M);
  auto P2 = qs::tate_point(p, z, N, 2 * j, 2L * n, M);
  auto Pm2 = qs::tate_point(p, z, N, -2 * j, -2L * n, M);
  // -2P is the third point on the tangent at P. With sigma = slope(P,2P) - slope(P,-2P) and
  // tau = a1 + 2 slope(P,-2P), the Tate normal form has sigma = c, tau = 1 - c, x(2P) - x(P) = b,
  // and under scaling they have weights 1, 1, 2.
  Series d2 = P2.X - P1.X;
  Series lt = (Pm2.Y - P1.Y) / d2;
  Series sigma = (P2.Y - P1.Y) / d2 - lt;
  Series w = sigma + lt.scale(2) + Series::constant(p, 1, M);
  c_ = sigma / w;
  b_ = d2 / (w * w);
}

const Series& CuspEvaluator::x() {
  if (!x_) {
    Series one = Series::constant(p_, 1, M_);
    Series r = b_ / c_, s = c_ * c_ / (b_ - c_);
    Series f8 = r * s - r.scale(2) + one;
    x_ = (s - r) / f8;
    y_ = f8 / (s * s - s - r + one);
  }
  return *x_;
}

const Series& CuspEvaluator::y() {
  x();
  return *y_;
}

Series CuspEvaluator::eval(const ZPoly& f, const Series& u, const Series& v, std::vector<Series>& pu,
                           std::vector<Series>& pv) {
  auto power = [&](std::vector<Series>& P, const Series& a, unsigned k) -> const Series& {
    if (P.empty()) P.push_back(Series::constant(p_, 1, M_));
    while (P.size() <= k) P.push_back(P.back() * a);
    return P[k];
  };
  Series acc = Series::constant(p_, 0, M_);
  for (auto& [m, coef] : f.terms()) {
    uint64_t cm = mpz_fdiv_ui(coef.get_mpz_t(), p_);
    if (!cm) continue;
    unsigned a = mono::exp(m, 0), b = mono::exp(m, 1);
    Series t = power(pu, u, a);
    if (b) t = t * power(pv, v, b);
    acc = acc + t.scale(cm);
  }
  return acc;
}

Series CuspEvaluator::eval_bc(const ZPoly& f) { return eval(f, b_, c_, pb_, pc_); }

Series CuspEvaluator::eval_xy(const ZPoly& f) {
  x();
  return eval(f, *x_, *y_, px_, py_);
}

int CuspEvaluator::local_valuation(const Series& v) const {
  int e = v.valuation();
  int w = n_ == 0 ? N_ : d_;
  if (e % w) throw OrbitInconsistency("valuation not a multiple of the ramification of the parameter");
  return e / w;
}

CuspFunction from_xy(const RatFunc& g) { return {CuspFunction::XY, g.num(), g.den()}; }
CuspFunction from_bc(const RatFunc& g) { return {CuspFunction::BC, g.num(), g.den()}; }

CuspFunction unit_function(int k) {
  if (k < 2) throw std::invalid_argument("k >= 2 required");
  if (k >= 10) return from_xy(RatFunc(modeq::f_poly(k).num));
  auto P = [](const char* s) { return RatFunc(parse_zpoly(s, modeq::BC)); };
  RatFunc b = P("b"), c = P("c"), one = P("1");
  RatFunc r = b / c, s = c * c / (b - c);
  switch (k) {
    case 2: return from_bc(RatFunc(parse_zpoly("b", modeq::BC), modeq::tate_discriminant().exact_div(parse_zpoly("b^3", modeq::BC))));
    case 3: return from_bc(b);
    case 4: return from_bc(c);
    case 5: return from_bc(b - c);
    case 6: return from_bc(s - one);
    case 7: return from_bc(s - r);
    case 8: return from_bc(r * s - P("2") * r + one);
    default: return from_bc(s * s - s - r + one);
  }
}

namespace {

constexpr int kMaxPrecFactor = 256;

// valuations of all functions at one cusp, raising precision on demand
std::vector<long> valuations_at(int N, int n, long j, uint64_t p, const std::vector<CuspFunction>& fs) {
  std::vector<long> out(fs.size());
  int M = 8 * N + 64;
  std::optional<CuspEvaluator> E;
  for (size_t i = 0; i < fs.size(); ++i) {
    while (true) {
      if (!E || E->prec() < M) E.emplace(N, n, j, p, M);
      try {
        auto ev = [&](const ZPoly& f) { return fs[i].coords == CuspFunction::BC ? E->eval_bc(f) : E->eval_xy(f); };
        out[i] = E->local_valuation(ev(fs[i].num)) - E->local_valuation(ev(fs[i].den));
        break;
      } catch (const PrecisionExhausted&) {
        M *= 2;
        if (M > kMaxPrecFactor * N + 1024) throw NotAFunction("function vanishes identically at a cusp");
      }
    }
  }
  return out;
}

struct CuspRep {
  int n;
  long j;
  uint64_t p;
};

std::vector<CuspRep> representatives(int N, bool all_conjugates) {
  uint64_t p1 = nt::split_prime(N, 0, 31), p2 = nt::split_prime(N, 1, 31);
  std::vector<CuspRep> reps;
  for (int n = 0; n <= N / 2; ++n) {
    reps.push_back({n, 1, p1});
    reps.push_back({n, 1, p2});
    if (!all_conjugates) continue;
    int d = n == 0 ? N : orbit_gcd(N, n);
    bool pm = n == 0 || 2 * n == N;
    for (long j = 2; j < d; ++j) {
      if (nt::gcd(j, d) != 1) continue;
      if (pm && 2 * j > d) continue;
      reps.push_back({n, j, p1});
    }
  }
  return reps;
}

std::vector<DivisorVec> divisors_of(int N, const std::vector<CuspFunction>& fs, bool check_orbits,
                                    bool parallel = true) {
  if (N < 4) throw UnsupportedLevel("cusp expansions need N >= 4");
  auto reps = representatives(N, check_orbits);
  std::vector<std::vector<long>> vals(reps.size());
  std::exception_ptr err;
  std::mutex mu;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long r = 0; r < (long)reps.size(); ++r) {
    try {
      vals[r] = valuations_at(N, reps[r].n, reps[r].j, reps[r].p, fs);
    } catch (...) {
      std::lock_guard<std::mutex> lk(mu);
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  std::vector<DivisorVec> out(fs.size(), DivisorVec(num_orbits(N), 0));
  std::vector<bool> seen(num_orbits(N), false);
  for (size_t r = 0; r < reps.size(); ++r) {
    int n = reps[r].n;
    for (size_t i = 0; i < fs.size(); ++i) {
      if (!seen[n]) out[i][n] = vals[r][i];
      else if (out[i][n] != vals[r][i])
        throw OrbitInconsistency("valuations differ inside orbit C_" + std::to_string(n));
    }
    seen[n] = true;
  }
  return out;
}

}  // namespace

DivisorVec divisor_of(int N, const CuspFunction& g, bool check_orbits) {
  return divisors_of(N, {g}, check_orbits)[0];
}

IntMatrix DivisorTable::matrix() const {
  IntMatrix A(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) A(i, j) = rows[i][j];
  return A;
}

namespace {

// levels 4..9 live on the b,c model; rows of F_2..F_{N/2+1}
const std::vector<std::vector<DivisorVec>>& small_tables();

}  // namespace

namespace {

DivisorTable build_table(int N, bool check_orbits, bool parallel) {
  if (N < 4) throw UnsupportedLevel("divisor tables need N >= 4");
  std::vector<CuspFunction> fs;
  for (int k = 2; k <= N / 2 + 1; ++k) fs.push_back(unit_function(k));
  DivisorTable T;
  T.N = N;
  T.rows = divisors_of(N, fs, check_orbits, parallel);
  for (auto& r : T.rows)
    if (degree(N, r) != 0) throw OrbitInconsistency("row of nonzero degree");
  T.labels_provisional = !labeling_certified();
  return T;
}

}  // namespace

DivisorTable compute_divisor_table(int N, bool check_orbits) { return build_table(N, check_orbits, true); }
DivisorTable compute_divisor_table_serial(int N, bool check_orbits) { return build_table(N, check_orbits, false); }

std::string to_rowvec(const DivisorTable& T) {
  std::ostringstream os;
  os << "# X1 N=" << T.N << " orbits=" << num_orbits(T.N) << " format=rowvec-v1\n";
  for (auto& r : T.rows) {
    for (size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << r[i];
    os << "\n";
  }
  return os.str();
}

DivisorTable parse_rowvec(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty rowvec file");
  int N = 0, m = 0;
  if (std::sscanf(line.c_str(), "# X1 N=%d orbits=%d format=rowvec-v1", &N, &m) != 2 || m != num_orbits(N))
    throw ParseError("bad rowvec header");
  DivisorTable T;
  T.N = N;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    DivisorVec r;
    long v;
    while (ls >> v) r.push_back(v);
    if (!ls.eof() || (int)r.size() != m) throw ParseError("bad rowvec row");
    T.rows.push_back(r);
  }
  if ((int)T.rows.size() != N / 2) throw ParseError("wrong number of rows");
  return T;
}

DivisorTable divisor_table(int N) {
  if (N < 4) throw UnsupportedLevel("divisor tables need N >= 4");
  if (N <= kBuiltinTables) {
    DivisorTable T;
    T.N = N;
    T.rows = small_tables()[N];
    return T;
  }
  const char* dir = std::getenv("X1GON_CACHE");
  std::filesystem::path path;
  if (dir && *dir) {
    path = std::filesystem::path(dir) / ("X1_" + std::to_string(N) + ".rowvec");
    std::ifstream in(path);
    if (in) {
      std::stringstream ss;
      ss << in.rdbuf();
      try {
        DivisorTable T = parse_rowvec(ss.str());
        if (T.N == N) return T;
      } catch (const ParseError&) {
      }
    }
  }
  DivisorTable T = compute_divisor_table(N);
  if (!path.empty() && !T.labels_provisional) {
    std::filesystem::create_directories(path.parent_path());
    auto tmp = path;
    tmp += ".tmp." + std::to_string(::getpid()) + "." +
           std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
      std::ofstream out(tmp);
      out << to_rowvec(T);
    }
    std::filesystem::rename(tmp, path);
  }
  return T;
}

std::vector<Integer> express_in_lattice(const DivisorTable& T, const DivisorVec& D) {
  if (D.size() != (size_t)num_orbits(T.N)) throw MalformedDivisor("divisor length does not match level");
  std::vector<Integer> b(D.begin(), D.end());
  auto s = solve_left(T.matrix(), b);
  if (s.status == SolveStatus::NoRationalSolution) throw NotInLattice("no rational solution");
  if (s.status == SolveStatus::RationalNotInteger) throw NotInLattice("rational but not integral");
  return s.x;
}

bool labeling_certified() {
  static const bool ok = [] {
    const DivisorVec ref{0, -1, -2, -3, -1, 0, 0, 0, 3, 2, -1, -3, 2, 3, 1};
    try {
      return divisor_of(29, from_xy(RatFunc(parse_zpoly("x", modeq::XY))), false) == ref;
    } catch (const Error&) {
      return false;
    }
  }();
  return ok;
}

namespace {

const std::vector<std::vector<DivisorVec>>& small_tables() {
  // level 4 has an irregular cusp C_2: on the b-line F_3 = b and F_2 = 1/(16b+1)
  static const std::vector<std::vector<DivisorVec>> t = {
      {}, {}, {}, {},
      {{-1, 0, 1}, {0, 1, -1}},
      {{-1, -1, 3}, {0, 1, -1}},
      {{-1, -2, 1, 2}, {0, 1, 1, -2}, {0, 1, 0, -1}},
      {{-1, -3, 1, 5}, {0, 1, 2, -3}, {0, 1, 1, -2}},
      {{-1, -4, 0, 4, 2}, {0, 1, 1, 0, -2}, {0, 1, 1, -1, -1}, {0, 2, 1, -1, -2}},
      {{-1, -5, -1, 1, 7}, {0, 1, 2, 1, -5}, {0, 1, 2, 0, -3}, {0, 2, 3, 0, -5}},
      {{-1, -6, -1, 2, 3, 2}, {0, 1, 1, 3, -1, -2}, {0, 1, 1, 1, -1, -1}, {0, 2, 2, 1, -1, -2}, {0, 1, 0, 0, -1, 0}},
      {{-1, -7, -3, 1, 5, 9}, {0, 1, 2, 3, 1, -7}, {0, 1, 2, 2, -1, -4}, {0, 2, 4, 2, -1, -7}, {0, 1, 1, 0, -1, -1}},
      {{-1, -8, -2, 0, 1, 8, 2},
       {0, 1, 1, 1, 1, -4, -2},
       {0, 1, 1, 1, 0, -3, -1},
       {0, 2, 2, 1, 0, -4, -2},
       {0, 1, 1, 0, 0, -2, 0},
       {0, 2, 1, 0, 0, -2, -1}},
  };
  return t;
}

}  // namespace

}  // namespace x1gon::cusps
