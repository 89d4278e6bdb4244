#include "x1gon/intmatrix.hpp"

#include <sstream>

namespace x1gon {

IntMatrix::IntMatrix(const std::vector<std::vector<Integer>>& rows)
    : r_(rows.size()), c_(rows.empty() ? 0 : rows[0].size()) {
  for (auto& row : rows) a_.insert(a_.end(), row.begin(), row.end());
}

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::set_row(size_t i, const std::vector<Integer>& v) {
  for (size_t j = 0; j < c_; ++j) (*this)(i, j) = v[j];
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix m(r_, o.c_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t k = 0; k < c_; ++k) {
      const Integer& x = (*this)(i, k);
      if (x == 0) continue;
      for (size_t j = 0; j < o.c_; ++j) mpz_addmul(m(i, j).get_mpz_t(), x.get_mpz_t(), o(k, j).get_mpz_t());
    }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix m(c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Integer IntMatrix::det() const {
  if (r_ != c_) throw std::invalid_argument("det of non-square matrix");
  size_t n = r_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Integer prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

size_t IntMatrix::rank() const { return smith_normal_form(*this).rank(); }

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < r_; ++i) {
    for (size_t j = 0; j < c_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "\n";
  }
  return os.str();
}

void IntMatrix::swap_rows(size_t i, size_t j) {
  if (i == j) return;
  for (size_t k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}
void IntMatrix::swap_cols(size_t i, size_t j) {
  if (i == j) return;
  for (size_t k = 0; k < r_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}
void IntMatrix::add_row(size_t dst, size_t src, const Integer& k) {
  for (size_t j = 0; j < c_; ++j) mpz_addmul((*this)(dst, j).get_mpz_t(), k.get_mpz_t(), (*this)(src, j).get_mpz_t());
}
void IntMatrix::add_col(size_t dst, size_t src, const Integer& k) {
  for (size_t i = 0; i < r_; ++i) mpz_addmul((*this)(i, dst).get_mpz_t(), k.get_mpz_t(), (*this)(i, src).get_mpz_t());
}
void IntMatrix::neg_row(size_t i) {
  for (size_t j = 0; j < c_; ++j) (*this)(i, j) = -(*this)(i, j);
}

std::vector<Integer> SNF::diagonal() const {
  std::vector<Integer> d;
  for (size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

size_t SNF::rank() const {
  size_t r = 0;
  for (auto& d : diagonal())
    if (d != 0) ++r;
  return r;
}

SNF smith_normal_form(const IntMatrix& A) {
  const size_t m = A.rows(), n = A.cols();
  IntMatrix S = A, U = IntMatrix::identity(m), V = IntMatrix::identity(n);
  for (size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // smallest nonzero entry in the trailing block becomes the pivot
      size_t pi = m, pj = n;
      for (size_t i = t; i < m; ++i)
        for (size_t j = t; j < n; ++j)
          if (S(i, j) != 0 && (pi == m || abs(S(i, j)) < abs(S(pi, pj)))) pi = i, pj = j;
      if (pi == m) return {U, S, V};
      S.swap_rows(t, pi);
      U.swap_rows(t, pi);
      S.swap_cols(t, pj);
      V.swap_cols(t, pj);
      bool clean = true;
      for (size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), S(i, t).get_mpz_t(), S(t, t).get_mpz_t());
        S.add_row(i, t, -q);
        U.add_row(i, t, -q);
        if (S(i, t) != 0) clean = false;
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), S(t, j).get_mpz_t(), S(t, t).get_mpz_t());
        S.add_col(j, t, -q);
        V.add_col(j, t, -q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold in any row whose entries the pivot does not divide
      bool fixed = true;
      for (size_t i = t + 1; i < m && fixed; ++i)
        for (size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
            S.add_row(t, i, 1);
            U.add_row(t, i, 1);
            fixed = false;
            break;
          }
      if (fixed) break;
    }
    if (S(t, t) < 0) {
      S.neg_row(t);
      U.neg_row(t);
    }
  }
  return {U, S, V};
}

IntSolve solve_left(const IntMatrix& A, const std::vector<Integer>& b) {
  // x A = b  <=>  (x U^-1) S = b V
  SNF f = smith_normal_form(A);
  const size_t m = A.rows(), n = A.cols();
  std::vector<Integer> bv(n, 0);
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k) bv[j] += b[k] * f.V(k, j);
  size_t r = f.rank();
  IntSolve out{SolveStatus::Ok, {}, IntMatrix(m - r, m)};
  for (size_t i = r; i < m; ++i) out.kernel.set_row(i - r, f.U.row(i));
  for (size_t j = r; j < n; ++j)
    if (bv[j] != 0) {
      out.status = SolveStatus::NoRationalSolution;
      return out;
    }
  std::vector<Integer> y(m, 0);
  for (size_t i = 0; i < r; ++i) {
    if (!mpz_divisible_p(bv[i].get_mpz_t(), f.S(i, i).get_mpz_t())) {
      out.status = SolveStatus::RationalNotInteger;
      return out;
    }
    y[i] = bv[i] / f.S(i, i);
  }
  out.x.assign(m, 0);
  for (size_t i = 0; i < m; ++i)
    for (size_t k = 0; k < m; ++k) out.x[i] += y[k] * f.U(k, i);
  return out;
}

}  // namespace x1gon
