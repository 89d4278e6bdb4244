#pragma once
#include <string>
#include <vector>

#include "x1gon/fields.hpp"

namespace x1gon {

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(size_t r, size_t c) : r_(r), c_(c), a_(r * c, 0) {}
  IntMatrix(const std::vector<std::vector<Integer>>& rows);
  static IntMatrix identity(size_t n);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  Integer& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const Integer& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }
  std::vector<Integer> row(size_t i) const { return {a_.begin() + i * c_, a_.begin() + (i + 1) * c_}; }
  void set_row(size_t i, const std::vector<Integer>& v);
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  IntMatrix transpose() const;
  Integer det() const;  // square only, fraction-free elimination
  size_t rank() const;
  std::string str() const;

  void swap_rows(size_t i, size_t j);
  void swap_cols(size_t i, size_t j);
  void add_row(size_t dst, size_t src, const Integer& k);  // row dst += k * row src
  void add_col(size_t dst, size_t src, const Integer& k);
  void neg_row(size_t i);

private:
  size_t r_ = 0, c_ = 0;
  std::vector<Integer> a_;
};

struct SNF {
  IntMatrix U, S, V;  // U*A*V = S
  std::vector<Integer> diagonal() const;
  size_t rank() const;
};
SNF smith_normal_form(const IntMatrix& A);

// integer row vector x with x*A = b
enum class SolveStatus { Ok, NoRationalSolution, RationalNotInteger };
struct IntSolve {
  SolveStatus status;
  std::vector<Integer> x;
  IntMatrix kernel;  // rows spanning {y : y*A = 0}
};
IntSolve solve_left(const IntMatrix& A, const std::vector<Integer>& b);

}  // namespace x1gon
