#pragma once

#include <vector>

#include "plde/algebra/constant.hpp"

namespace plde {

using IntVec = std::vector<Integer>;

// Row Hermite normal form of the lattice spanned by the given vectors:
// nonzero rows only, positive pivots, entries above each pivot reduced
// into [0, pivot).
std::vector<IntVec> hermite_normal_form(std::vector<IntVec> rows, int ncols);

// Basis (in Hermite normal form) of {z in Z^n : A z = 0}.
std::vector<IntVec> integer_kernel(const std::vector<IntVec>& a, int n);

}  // namespace plde
