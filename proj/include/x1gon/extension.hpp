#pragma once
// Growing residue fields: adjoin a root of an irreducible polynomial and
// flatten the tower to a single primitive element over the prime field.
#include "x1gon/factor.hpp"

namespace x1gon {

template <class F>
struct FieldEmbedding {
  F from, to;
  typename F::Elem alpha;  // image of the old generator
  typename F::Elem beta;   // a root of the adjoined polynomial
  typename F::Elem operator()(const typename F::Elem& x) const {
    auto r = to.zero();
    auto pw = to.one();
    for (size_t i = 0; i < x.size(); ++i) {
      r = to.add(r, to.mul(to.from_base(x[i]), pw));
      pw = to.mul(pw, alpha);
    }
    return r;
  }
  UPoly<F> map(const UPoly<F>& p) const {
    std::vector<typename F::Elem> c;
    for (auto& e : p.coeffs()) c.push_back((*this)(e));
    return UPoly<F>(to, c);
  }
};

// g irreducible over K, degree >= 1
FieldEmbedding<FiniteField> extend_field(const FiniteField& K, const UPoly<FiniteField>& g);
FieldEmbedding<NumberField> extend_field(const NumberField& K, const UPoly<NumberField>& g);

// prime-field view helpers
FiniteField make_finite_field(uint64_t p, int k, uint64_t seed = 1);

}  // namespace x1gon
