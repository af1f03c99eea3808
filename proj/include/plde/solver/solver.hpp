#pragma once

#include <utility>
#include <vector>

#include "plde/solver/basis.hpp"
#include "plde/solver/rational.hpp"
#include "plde/tower/tower.hpp"

namespace plde {

struct SolverOptions {
  // Sigma degree cap = max deg f + order + slack, doubled once if a solution
  // reaches it.
  int sigma_slack = 2;
  bool deepen = true;
};

struct ComponentReport {
  int k = 0;
  int order = 0;
  int dimension = 0;
};

struct SolveReport {
  bool non_degenerate = true;
  std::vector<ComponentReport> components;
  int candidates = 0;  // joint candidates before the final filter
  int max_sigma_cap = 0;
};

// sum_i a_i sig^i(g)
TowerElement apply_operator(const Automorphism& sig, const std::vector<TowerElement>& a,
                            const TowerElement& g);

// Pi generators, then Sigma generators, each in tower order. Solving peels
// from the back of this list.
std::vector<int> peel_order(const Tower& t);

int bound_sigma_degree(const std::vector<TowerElement>& a, const std::vector<TowerElement>& f,
                       int gen, int slack);

// [lo, hi] for the exponent of the Pi generator order[level-1] in solutions
// over the subring generated by order[0..level). Empty when lo > hi.
std::pair<int, int> bound_pi_degrees(const Automorphism& sig, const std::vector<int>& order,
                                     int level, const std::vector<TowerElement>& a,
                                     const std::vector<TowerElement>& f);

// Basis of {(c, g) : sum_i a_i sig^i(g) = sum_j c_j f_j} over the R-free part
// of the tower (sig = sigma for towers without R, or a component ring).
SolutionBasis solve_sigma_tower(const Automorphism& sig, const std::vector<TowerElement>& a,
                                const std::vector<TowerElement>& f,
                                const SolverOptions& opt = SolverOptions(),
                                SolveReport* report = nullptr);

// Basis of V(a, f, E) via the component equations. Throws
// DegenerateCoefficients if some component admits no equation.
SolutionBasis solve_plde_idempotent(const Tower& t, const std::vector<TowerElement>& a,
                                    const std::vector<TowerElement>& f,
                                    const SolverOptions& opt = SolverOptions(),
                                    SolveReport* report = nullptr);

}  // namespace plde
