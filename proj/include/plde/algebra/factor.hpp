#pragma once

#include <vector>

#include "plde/algebra/poly.hpp"

namespace plde {

struct Factorization {
  Constant content;          // the leading coefficient
  std::vector<Poly> factors;  // monic irreducibles, repeated by multiplicity
};

// p = content * prod factors. Over Q the factors are irreducible. When p has
// non-rational cyclotomic coefficients only linear factors with integer
// roots are split off and the square-free cofactors are returned as they are.
Factorization factor_univariate(const Poly& p);

// All monic divisors of p up to associates (products of sub-multisets of the
// factorization), without duplicates, sorted by degree.
std::vector<Poly> monic_divisors(const Poly& p);

}  // namespace plde
