#pragma once

#include <optional>
#include <vector>

#include "plde/tower/tower.hpp"

namespace plde {

// alpha^(lambda-1-s): the value of y on component s.
Constant component_root(const Tower& t, int s);

// e_0..e_{lambda-1}; [1] without an R-generator.
std::vector<TowerElement> idempotents(const Tower& t);

// g_s = g with y -> alpha^(lambda-1-s), as elements free of y.
std::vector<TowerElement> decompose(const TowerElement& g);
TowerElement project(const TowerElement& g);
// y -> alpha^(lambda-1-k)
TowerElement project(const TowerElement& g, int k);
TowerElement recombine(const Tower& t, const std::vector<TowerElement>& components);

// (E~, sigma_s): x -> x + lambda, Pi t -> (prod_{l<lambda} sigma^l(alpha)) t,
// Sigma t -> t + (sum_{l<lambda} sigma^l(beta)) evaluated on component s.
struct ComponentRing {
  int s;
  Automorphism sigma;
};
ComponentRing component_ring(const Tower& t, int s);

// Units of E~ are the nonzero K(x)-multiples of Pi-monomials; g is a unit of
// E iff every component is one.
bool is_unit(const TowerElement& g);
std::optional<TowerElement> unit_inverse_general(const TowerElement& g);

}  // namespace plde
