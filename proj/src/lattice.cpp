#include "x1gon/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "x1gon/errors.hpp"
#include "x1gon/ntheory.hpp"

namespace x1gon::lattice {

UnitLattice UnitLattice::from_table(const cusps::DivisorTable& T) {
  UnitLattice L;
  L.N = T.N;
  L.basis = T.matrix();
  for (auto& o : cusps::orbits(T.N)) L.weights.push_back(o.degree);
  return L;
}

std::vector<long> UnitLattice::combine(const ExponentVec& n) const {
  std::vector<long> v(cols(), 0);
  for (size_t i = 0; i < dim(); ++i) {
    if (!n[i]) continue;
    for (size_t j = 0; j < cols(); ++j) v[j] += n[i] * basis(i, j).get_si();
  }
  return v;
}

long weighted_degree(const std::vector<long>& v, const std::vector<long>& w) {
  long d = 0;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] > 0) d += w[i] * v[i];
  return d;
}

namespace {

Integer dotw(const IntMatrix& B, size_t i, size_t j, const std::vector<long>& w) {
  Integer s = 0;
  for (size_t k = 0; k < B.cols(); ++k) {
    Integer t = B(i, k) * B(j, k);
    if (!w.empty()) t *= w[k];
    s += t;
  }
  return s;
}

// nearest integer to a/b, b > 0
Integer round_div(const Integer& a, const Integer& b) {
  Integer r, n = 2 * a + b, d = 2 * b;
  mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}

}  // namespace

// integral LLL: d[i] Gram determinants, lam[k][j] = d[j+1] * mu_kj
LLLResult lll_reduce(const IntMatrix& B0, const Rational& delta, const std::vector<long>& w) {
  if (delta <= Rational(1, 4) || delta > 1) throw std::invalid_argument("delta must lie in (1/4, 1]");
  size_t n = B0.rows();
  LLLResult R{B0, IntMatrix::identity(n)};
  if (n == 0) return R;
  IntMatrix& B = R.B;
  IntMatrix& H = R.H;
  const Integer a = delta.get_num(), b = delta.get_den();
  std::vector<Integer> d(n + 1);
  std::vector<std::vector<Integer>> lam(n, std::vector<Integer>(n));
  d[0] = 1;
  d[1] = dotw(B, 0, 0, w);
  if (d[1] == 0) throw RankDeficient("zero basis vector");
  // d index i+1 belongs to vector i
  auto red = [&](size_t k, size_t l) {
    Integer& lk = lam[k][l];
    if (2 * abs(lk) <= d[l + 1]) return;
    Integer q = round_div(lk, d[l + 1]);
    H.add_row(k, l, -q);
    B.add_row(k, l, -q);
    lk -= q * d[l + 1];
    for (size_t i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };
  size_t k = 1, kmax = 0;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      for (size_t j = 0; j <= k; ++j) {
        Integer u = dotw(B, k, j, w);
        for (size_t i = 0; i < j; ++i) u = (d[i + 1] * u - lam[k][i] * lam[j][i]) / d[i];
        if (j < k)
          lam[k][j] = u;
        else {
          d[k + 1] = u;
          if (u == 0) throw RankDeficient("basis rows are linearly dependent");
        }
      }
    }
    red(k, k - 1);
    Integer lhs = b * (d[k + 1] * d[k - 1] + lam[k][k - 1] * lam[k][k - 1]);
    if (lhs < a * d[k] * d[k]) {
      // swap k-1, k
      H.swap_rows(k, k - 1);
      B.swap_rows(k, k - 1);
      for (size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
      Integer l = lam[k][k - 1];
      Integer Bn = (d[k - 1] * d[k + 1] + l * l) / d[k];
      for (size_t i = k + 1; i <= kmax; ++i) {
        Integer t = lam[i][k];
        lam[i][k] = (d[k + 1] * lam[i][k - 1] - l * t) / d[k];
        lam[i][k - 1] = (Bn * t + l * lam[i][k]) / d[k + 1];
      }
      d[k] = Bn;
      if (k > 1) --k;
    } else {
      for (size_t l = k - 1; l-- > 0;) red(k, l);
      ++k;
    }
  }
  return R;
}

bool is_lll_reduced(const IntMatrix& B, const Rational& delta, const std::vector<long>& w) {
  size_t n = B.rows(), m = B.cols();
  std::vector<std::vector<Rational>> bs(n, std::vector<Rational>(m));
  std::vector<Rational> nn(n);
  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
  auto ip = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    Rational s = 0;
    for (size_t t = 0; t < m; ++t) s += x[t] * y[t] * (w.empty() ? 1 : w[t]);
    return s;
  };
  for (size_t i = 0; i < n; ++i) {
    std::vector<Rational> bi(m);
    for (size_t t = 0; t < m; ++t) bi[t] = Rational(B(i, t));
    bs[i] = bi;
    for (size_t j = 0; j < i; ++j) {
      mu[i][j] = ip(bi, bs[j]) / nn[j];
      for (size_t t = 0; t < m; ++t) bs[i][t] -= mu[i][j] * bs[j][t];
    }
    nn[i] = ip(bs[i], bs[i]);
    if (nn[i] == 0) return false;
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < i; ++j)
      if (2 * abs(mu[i][j]) > 1) return false;
  for (size_t i = 1; i < n; ++i)
    if (nn[i] < (delta - mu[i][i - 1] * mu[i][i - 1]) * nn[i - 1]) return false;
  return true;
}

long for_each_short(const UnitLattice& L, long bound2, const EnumOptions& opt,
                    const std::function<bool(const ShortVector&)>& fn) {
  size_t n = L.dim(), m = L.cols();
  if (n == 0 || bound2 < 1) return 0;
  std::vector<long> w = opt.weighted ? L.weights : std::vector<long>(m, 1);
  auto R = lll_reduce(L.basis, Rational(99, 100), w);
  std::vector<std::vector<long>> b(n, std::vector<long>(m)), h(n, std::vector<long>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) b[i][j] = R.B(i, j).get_si();
    for (size_t j = 0; j < n; ++j) h[i][j] = R.H(i, j).get_si();
  }
  // q_ii and q_ij (i < j) with Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2
  std::vector<std::vector<long double>> q(n, std::vector<long double>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      long double s = 0;
      for (size_t t = 0; t < m; ++t) s += (long double)w[t] * b[i][t] * b[j][t];
      q[i][j] = s;
    }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (size_t k = i + 1; k < n; ++k)
      for (size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  const long double slack = 1e-9L * bound2 + 1e-9L;
  std::vector<long> x(n, 0), hi(n, 0);
  std::vector<long double> T(n + 1, 0), c(n, 0);
  std::vector<size_t> nz_above(n + 1, 0);  // number of nonzero x_j, j > i
  T[n] = (long double)bound2;
  long count = 0;
  ShortVector sv;
  sv.v.assign(m, 0);
  sv.exponents.assign(n, 0);
  auto init = [&](size_t i) {
    long double s = 0;
    for (size_t j = i + 1; j < n; ++j) s += q[i][j] * x[j];
    c[i] = -s;
    long double r = T[i + 1] / q[i][i] + slack;
    if (r < 0) r = 0;
    long double z = std::sqrt(r);
    long lo = (long)std::ceil(c[i] - z);
    hi[i] = (long)std::floor(c[i] + z);
    if (nz_above[i + 1] == 0 && lo < 0) lo = 0;
    x[i] = lo - 1;
  };
  size_t i = n - 1;
  nz_above[n] = 0;
  init(i);
  for (;;) {
    ++x[i];
    if (x[i] > hi[i]) {
      if (i == n - 1) break;
      ++i;
      continue;
    }
    long double y = x[i] - c[i];
    T[i] = T[i + 1] - q[i][i] * y * y;
    if (T[i] < -slack) continue;
    nz_above[i] = nz_above[i + 1] + (x[i] != 0);
    if (i > 0) {
      --i;
      init(i);
      continue;
    }
    if (nz_above[0] == 0) continue;
    std::fill(sv.v.begin(), sv.v.end(), 0);
    for (size_t r = 0; r < n; ++r)
      if (x[r])
        for (size_t t = 0; t < m; ++t) sv.v[t] += x[r] * b[r][t];
    long nrm = 0;
    for (size_t t = 0; t < m; ++t) nrm += w[t] * sv.v[t] * sv.v[t];
    if (nrm > bound2) continue;
    std::fill(sv.exponents.begin(), sv.exponents.end(), 0);
    for (size_t r = 0; r < n; ++r)
      if (x[r])
        for (size_t t = 0; t < n; ++t) sv.exponents[t] += x[r] * h[r][t];
    sv.norm2 = nrm;
    sv.degree = weighted_degree(sv.v, L.weights);
    if (++count > opt.cap) throw EnumerationBudgetExceeded("more than " + std::to_string(opt.cap) + " short vectors");
    if (!fn(sv)) return count;
  }
  return count;
}

std::vector<ShortVector> enumerate_short(const UnitLattice& L, long bound2, const EnumOptions& opt) {
  std::vector<ShortVector> out;
  for_each_short(L, bound2, opt, [&](const ShortVector& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

bool better(const SearchResult& a, const SearchResult& b) {
  if (b.exponents.empty()) return !a.exponents.empty();
  if (a.exponents.empty()) return false;
  if (a.degree != b.degree) return a.degree < b.degree;
  return a.exponents < b.exponents;
}

namespace {

// first nonzero exponent positive (g and 1/g have the same degree)
void canonical_sign(ExponentVec& e, std::vector<long>& v) {
  for (long x : e)
    if (x) {
      if (x < 0) {
        for (auto& y : e) y = -y;
        for (auto& y : v) y = -y;
      }
      return;
    }
}

struct Cand {
  ExponentVec e;
  std::vector<long> v;
  long deg;
};

// greedy descent: add +-rows while the degree drops
void descend(Cand& c, const std::vector<Cand>& rows, const std::vector<long>& w) {
  bool improved = true;
  std::vector<long> t(c.v.size());
  while (improved) {
    improved = false;
    for (auto& r : rows)
      for (int s : {1, -1}) {
        for (size_t k = 0; k < t.size(); ++k) t[k] = c.v[k] + s * r.v[k];
        long d = weighted_degree(t, w);
        if (d > 0 && d < c.deg) {
          c.v = t;
          for (size_t k = 0; k < c.e.size(); ++k) c.e[k] += s * r.e[k];
          c.deg = d;
          improved = true;
        }
      }
  }
}

void offer(SearchResult& best, Cand c) {
  if (c.deg <= 0) return;
  canonical_sign(c.e, c.v);
  SearchResult s;
  s.exponents = std::move(c.e);
  s.divisor = std::move(c.v);
  s.degree = c.deg;
  if (better(s, best)) best = std::move(s);
}

}  // namespace

SearchResult search_restart(const UnitLattice& L, const SearchOptions& opt, long r) {
  size_t n = L.dim(), m = L.cols();
  uint64_t st = opt.seed ^ (0x9E3779B97F4A7C15ULL * (uint64_t)(r + 1));
  std::mt19937_64 rng(nt::splitmix64(st));
  std::uniform_real_distribution<double> U(0.0, std::log((double)opt.max_scale));
  IntMatrix S = L.basis;
  if (r > 0)
    for (size_t j = 0; j < m; ++j) {
      long s = std::lround(std::exp(U(rng)));
      for (size_t i = 0; i < n; ++i) S(i, j) *= s;
    }
  auto R = lll_reduce(S, opt.delta);
  std::vector<Cand> rows;
  for (size_t i = 0; i < n; ++i) {
    Cand c;
    c.e.resize(n);
    bool fits = true;
    for (size_t k = 0; k < n; ++k) {
      fits = fits && R.H(i, k).fits_slong_p();
      c.e[k] = R.H(i, k).get_si();
    }
    if (!fits) continue;
    c.v = L.combine(c.e);
    c.deg = weighted_degree(c.v, L.weights);
    rows.push_back(std::move(c));
  }
  SearchResult best;
  for (size_t i = 0; i < rows.size(); ++i) {
    Cand c = rows[i];
    descend(c, rows, L.weights);
    offer(best, c);
    for (size_t j = i + 1; j < rows.size(); ++j)
      for (int s : {1, -1}) {
        Cand p = rows[i];
        for (size_t k = 0; k < m; ++k) p.v[k] += s * rows[j].v[k];
        for (size_t k = 0; k < n; ++k) p.e[k] += s * rows[j].e[k];
        p.deg = weighted_degree(p.v, L.weights);
        offer(best, p);
      }
  }
  best.restarts = 1;
  return best;
}

SearchResult search_min_degree_serial(const UnitLattice& L, const SearchOptions& opt) {
  if (opt.budget < 1) throw std::invalid_argument("budget must be >= 1");
  SearchResult best;
  for (long r = 0; r < opt.budget; ++r) {
    auto s = search_restart(L, opt, r);
    if (better(s, best)) best = std::move(s);
  }
  best.restarts = opt.budget;
  return best;
}

SearchResult search_min_degree(const UnitLattice& L, const SearchOptions& opt) {
  if (opt.budget < 1) throw std::invalid_argument("budget must be >= 1");
  std::vector<SearchResult> res(opt.budget);
#pragma omp parallel for schedule(dynamic)
  for (long r = 0; r < opt.budget; ++r) res[r] = search_restart(L, opt, r);
  SearchResult best;
  for (auto& s : res)
    if (better(s, best)) best = std::move(s);
  best.restarts = opt.budget;
  return best;
}

Integer ClassGroup::order() const {
  if (free_rank) return 0;
  Integer o = 1;
  for (auto& d : invariants) o *= d;
  return o;
}

ClassGroup class_group_quotient(const UnitLattice& L) {
  ClassGroup G;
  auto S = smith_normal_form(L.basis);
  for (auto& d : S.diagonal())
    if (abs(d) > 1) G.invariants.push_back(abs(d));
  size_t r = S.rank();
  size_t full = L.cols() > 0 ? L.cols() - 1 : 0;
  G.free_rank = full > r ? full - r : 0;
  return G;
}

}  // namespace x1gon::lattice
