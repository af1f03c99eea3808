#pragma once

#include <optional>
#include <vector>

#include "plde/algebra/matrix.hpp"
#include "plde/tower/tower.hpp"

namespace plde {

// Row j holds pi(sigma^j(a_i)) at column i + j; ((m+1)lambda - m) rows and
// (m+1)lambda columns, entries in E~.
Matrix<TowerElement> shift_projection_matrix(const std::vector<TowerElement>& a);

bool is_non_degenerate(const std::vector<TowerElement>& a);

// divisor * sum_i b[i] sigma_k^i(g_k) = phi_k for every solution g of
// L(g) = phi, where phi_k = sum_l f[l] * pi_k(sigma^(l + offset)(phi)) and pi_k
// substitutes the component-k value of y.
struct ComponentEquation {
  int k = 0;
  std::vector<TowerElement> b;
  std::vector<TowerElement> f;
  int offset = 0;
  TowerElement divisor;  // common factor removed from b

  TowerElement rhs_numerator(const TowerElement& phi) const;
  // phi_k / divisor; nullopt if that quotient is not in E~.
  std::optional<TowerElement> rhs(const TowerElement& phi) const;
};

// nullopt when no relation exists (possible only for degenerate a).
std::optional<ComponentEquation> extract_component_equation(const std::vector<TowerElement>& a,
                                                            int k);

// b and one right-hand side per parameter. The divisor is folded back into b
// when some phi_k is not divisible by it.
struct ComponentPLDE {
  std::vector<TowerElement> b;
  std::vector<TowerElement> f;  // one per parameter
};

std::optional<ComponentPLDE> extract_component_plde(const std::vector<TowerElement>& a,
                                                    const std::vector<TowerElement>& f, int k);

}  // namespace plde
