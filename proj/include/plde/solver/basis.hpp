#pragma once

#include <map>
#include <vector>

#include "plde/algebra/matrix.hpp"
#include "plde/tower/tower.hpp"

namespace plde {

// (c_1..c_d, g) with L(g) = sum_j c_j f_j.
struct SolutionTuple {
  std::vector<Constant> c;
  TowerElement g;
};
using SolutionBasis = std::vector<SolutionTuple>;

// K-coordinates against a monomial layout shared by a finite set of
// elements: each monomial gets the lcm of its coefficient denominators and
// one slot per power of x in the numerators.
class CoordinateSpace {
 public:
  explicit CoordinateSpace(const std::vector<TowerElement>& elems);

  int dim() const { return dim_; }
  // g must be a K-combination of the elements the space was built from.
  std::vector<Constant> coords(const TowerElement& g) const;
  TowerElement element(const std::vector<Constant>& v, const Tower* t) const;

 private:
  struct Slot {
    Exponents e;
    Poly den;
    int maxdeg;
    int offset;
  };
  std::vector<Slot> slots_;  // descending monomial order
  std::map<Exponents, int> index_;
  int dim_ = 0;
};

// Basis of {k in K^p : sum_i k_i f_i = 0}.
std::vector<std::vector<Constant>> constant_annihilator(const std::vector<TowerElement>& f);

// Reduced row echelon basis of the span, with columns ordered c first and
// then the coordinates of g. Dependent tuples are dropped.
SolutionBasis canonical_basis(const SolutionBasis& b);

// Whether v lies in the K-span of b.
bool span_contains(const SolutionBasis& b, const SolutionTuple& v);

}  // namespace plde
