#pragma once
#include "x1gon/mpoly.hpp"

namespace x1gon {

// reduced quotient of integer polynomials; denominator has positive leading coefficient
class RatFunc {
public:
  RatFunc() = default;
  explicit RatFunc(ZPoly n) : num_(std::move(n)), den_(num_.constant(1)) {}
  RatFunc(ZPoly n, ZPoly d, bool reduce = true);
  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const { return RatFunc(-num_, den_, false); }
  RatFunc pow(int e) const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  // substitute rational functions for the variables
  RatFunc compose(const std::vector<RatFunc>& vals) const;
  std::string str() const;

private:
  ZPoly num_, den_;
};

}  // namespace x1gon
