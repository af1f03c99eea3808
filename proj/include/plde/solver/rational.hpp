#pragma once

#include <vector>

#include "plde/algebra/lattice.hpp"
#include "plde/algebra/ratfun.hpp"

namespace plde {

class DegreeBoundExhausted : public Error {
 public:
  DegreeBoundExhausted(int cap, const std::string& what) : Error(what), cap(cap) {}
  int cap;
};
class DegenerateCoefficients : public Error {
 public:
  using Error::Error;
};
class UnsupportedConstantField : public Error {
 public:
  using Error::Error;
};

struct RationalTuple {
  std::vector<Constant> c;
  RatFun g;
};

// Basis of {(c, g) in K^d x K(x) : sum_k a_k g(x + k*shift) = sum_j c_j f_j}.
std::vector<RationalTuple> solve_rational(const std::vector<RatFun>& a,
                                          const std::vector<RatFun>& f,
                                          const Constant& shift = Constant(1));

// Abramov's universal denominator for sum_{k=0}^{m} p_k g(x + k), shift 1.
Poly universal_denominator(const Poly& p0, const Poly& pm, int m);

// Degree bound for polynomial solutions of sum_k p_k p(x + k) = rhs of the
// given degree (-1 for a zero rhs); -1 if only p = 0 is possible.
int polynomial_degree_bound(const std::vector<Poly>& p, int rhs_degree);

// Finite set S such that every r in K(x)* with sum_k a_k prod_{l<k}
// sigma^l(r) = 0 has the form u sigma(v)/v with u in S.
std::vector<RatFun> hypergeometric_candidates(const std::vector<RatFun>& a,
                                              const Constant& shift = Constant(1));

// Lattice basis of {z in Z^d : prod f_i^z_i = sigma(g)/g for some g in
// K(x)*}. Constants must be rational multiples of roots of unity.
std::vector<IntVec> pseudo_orbit_basis(const std::vector<RatFun>& f,
                                       const Constant& shift = Constant(1));

// Roots in K = Q(zeta_m) of the form q * (root of unity), q rational.
std::vector<Constant> roots_in_field(const Poly& p, int m);

}  // namespace plde
