#include "plde/idempotent/idempotent.hpp"
#include "plde/reduction/reduction.hpp"
#include "plde/solver/solver.hpp"

namespace plde {

SolutionBasis solve_plde_idempotent(const Tower& t, const std::vector<TowerElement>& a0,
                                    const std::vector<TowerElement>& f0, const SolverOptions& opt,
                                    SolveReport* report) {
  if (a0.empty()) throw Error("empty operator");
  std::vector<TowerElement> a, f;
  for (const auto& v : a0) a.push_back(t.zero() + v);
  for (const auto& v : f0) f.push_back(t.zero() + v);
  bool all_zero = true;
  for (const auto& v : a) all_zero = all_zero && v.is_zero();
  if (all_zero) throw Error("zero operator");
  int d = static_cast<int>(f.size());
  int lam = t.lambda();
  if (lam == 1) {
    auto out = solve_sigma_tower(t.sigma(), a, f, opt, report);
    if (report) report->components.push_back({0, static_cast<int>(a.size()) - 1, static_cast<int>(out.size())});
    return out;
  }
  if (report) report->non_degenerate = is_non_degenerate(a);

  std::vector<SolutionBasis> comp(lam);
  for (int k = 0; k < lam; ++k) {
    auto eq = extract_component_plde(a, f, k);
    if (!eq) throw DegenerateCoefficients("no equation for component " + std::to_string(k));
    ComponentRing ring = component_ring(t, k);
    comp[k] = solve_sigma_tower(ring.sigma, eq->b, eq->f, opt, report);
    if (report)
      report->components.push_back({k, static_cast<int>(eq->b.size()) - 1, static_cast<int>(comp[k].size())});
  }

  // Joint constants: d_k in K^{r_k} with d_0 C_0 = d_k C_k for every k.
  std::vector<int> offset(lam + 1, 0);
  for (int k = 0; k < lam; ++k) offset[k + 1] = offset[k] + static_cast<int>(comp[k].size());
  int cols = offset[lam];
  std::vector<std::vector<Constant>> joint;
  if (cols > 0) {
    Matrix<Constant> M(std::max(1, (lam - 1) * d), cols);
    for (int k = 1; k < lam; ++k) {
      for (int j = 0; j < d; ++j) {
        int row = (k - 1) * d + j;
        for (size_t i = 0; i < comp[0].size(); ++i) M(row, offset[0] + static_cast<int>(i)) = comp[0][i].c[j];
        for (size_t i = 0; i < comp[k].size(); ++i)
          M(row, offset[k] + static_cast<int>(i)) = -comp[k][i].c[j];
      }
    }
    joint = nullspace(M);
  }

  SolutionBasis cands;
  std::vector<TowerElement> residuals;
  for (const auto& v : joint) {
    SolutionTuple s;
    s.c.assign(d, Constant());
    std::vector<TowerElement> parts(lam, t.zero());
    for (int k = 0; k < lam; ++k) {
      for (size_t i = 0; i < comp[k].size(); ++i) {
        const Constant& w = v[offset[k] + i];
        if (w.is_zero()) continue;
        if (k == 0)
          for (int j = 0; j < d; ++j) s.c[j] += w * comp[0][i].c[j];
        parts[k] += comp[k][i].g * RatFun(w);
      }
    }
    // with no component-0 basis the common c is forced to 0
    s.g = recombine(t, parts);
    TowerElement r = apply_operator(t.sigma(), a, s.g);
    for (int j = 0; j < d; ++j)
      if (!s.c[j].is_zero()) r -= f[j] * RatFun(s.c[j]);
    residuals.push_back(std::move(r));
    cands.push_back(std::move(s));
  }
  if (report) report->candidates = static_cast<int>(cands.size());
  if (cands.empty()) return {};

  // Keep the combinations that solve the full equation on every component.
  SolutionBasis out;
  for (const auto& k : constant_annihilator(residuals)) {
    SolutionTuple s{std::vector<Constant>(d), t.zero()};
    for (size_t l = 0; l < cands.size(); ++l) {
      if (k[l].is_zero()) continue;
      for (int j = 0; j < d; ++j) s.c[j] += k[l] * cands[l].c[j];
      s.g += cands[l].g * RatFun(k[l]);
    }
    out.push_back(std::move(s));
  }
  return canonical_basis(out);
}

}  // namespace plde
