#pragma once
// Tate normal form Y^2 + (1-c)XY - bY = X^3 - bX^2 with base point (0,0),
// its modular equations F_N(b,c), and the x,y model polynomials f_k.
#include <array>

#include "x1gon/ratfunc.hpp"

namespace x1gon::modeq {

extern const std::vector<std::string> BC;  // {"b","c"}
extern const std::vector<std::string> XY;  // {"x","y"}

ZPoly tate_discriminant();
// value of the n-th division polynomial at (0,0): W_0=0, W_1=1, W_2=-b, ...
const ZPoly& eds(int n);
// coordinates of k*(0,0) as reduced rational functions in b,c
std::pair<RatFunc, RatFunc> tate_multiple(int k);
ZPoly modular_equation_F(int N);
// F_k as a rational function in b,c (k >= 2)
RatFunc unit_F(int k);

// Fixed factors in which the b,c -> x,y substitution is supported.
// order: x, y, x-1, y-1, xy-1, xy-y+1, x^2y-xy+y-1
constexpr int kBlocks = 7;
const std::array<ZPoly, kBlocks>& blocks();

struct BlockForm {
  Integer unit = 1;                   // rational constant numerator
  Integer unit_den = 1;
  std::array<int, kBlocks> exps{};    // block exponents (negative = denominator)
  ZPoly residual;                     // primitive, positive grlex leading coefficient
  ZPoly residual_den;                 // usually 1
  RatFunc to_ratfunc() const;
};
// g(b,c) with b,c replaced by their expressions in x,y
BlockForm transform_blocks(const ZPoly& g);
RatFunc transform_to_xy(const RatFunc& g);

// the printed maps between coordinate systems
RatFunc r_of_xy();
RatFunc s_of_xy();
RatFunc b_of_xy();
RatFunc c_of_xy();

struct UnitSymbol {
  char kind;  // 'F' or 'f'
  int k;
  ZPoly num, den;
  RatFunc value() const { return RatFunc(num, den); }
};
UnitSymbol F_symbol(int k);
// f_k: for k <= 9 a rational function in x,y, for k >= 10 the polynomial obtained by
// transforming F_k and stripping the block factors
UnitSymbol f_poly(int k);
// f_k for k above this comes from modular evaluation and interpolation
constexpr int kSymbolicLimit = 24;
// exponents of the blocks in g(b(x,y), c(x,y)), read along lines crossing each block
std::array<int, kBlocks> block_exponents(const RatFunc& g_bc, uint64_t seed = 1);
// same result as transform_blocks(modular_equation_F(k)).residual, computed mod primes
ZPoly residual_modular(int k);

}  // namespace x1gon::modeq
