#include "properties.hpp"

#include "plde/idempotent/idempotent.hpp"
#include "plde/reduction/reduction.hpp"
#include "plde/solver/solver.hpp"
#include "support.hpp"

namespace plde::testing {

namespace {

void fail(PropertyResult& r, const std::string& what) {
  if (r.ok) r.detail = what;
  r.ok = false;
}

struct Instance {
  std::shared_ptr<const Tower> t;
  std::vector<TowerElement> a;
  TowerElement g, f;
};

// Non-degenerate operator of order 1 or 2 with polynomial coefficients and a
// planted solution g; f = L(g).
Instance planted(Rng& rng, std::shared_ptr<const Tower> t) {
  Instance in;
  in.t = std::move(t);
  const Tower& tw = *in.t;
  for (;;) {
    in.a.clear();
    int m = rng.uniform(1, 2);
    for (int i = 0; i <= m; ++i) in.a.push_back(rng.element(tw, 2, false));
    if (in.a.back().is_zero() || in.a.front().is_zero()) continue;
    if (tw.lambda() == 1 || is_non_degenerate(in.a)) break;
  }
  in.g = rng.element(tw, 2);
  in.f = apply_operator(tw.sigma(), in.a, in.g);
  return in;
}

std::shared_ptr<const Tower> tower_for(int variant) {
  switch (variant % 3) {
    case 0:
      return r_tower(2);
    case 1:
      return r_tower(3);
    default:
      return harmonic_tower();
  }
}

}  // namespace

PropertyResult prop_idempotents(int lam) {
  PropertyResult r;
  auto t = r_tower(lam);
  auto e = idempotents(*t);
  if (static_cast<int>(e.size()) != lam) {
    fail(r, "wrong number of idempotents");
    return r;
  }
  TowerElement sum = t->zero();
  for (int s = 0; s < lam; ++s) {
    sum += e[s];
    for (int u = 0; u < lam; ++u) {
      ++r.cases;
      TowerElement p = e[s] * e[u];
      if (s == u ? p != e[s] : !p.is_zero())
        fail(r, "e" + std::to_string(s) + "*e" + std::to_string(u) + " = " + p.str());
      TowerElement want = s == u ? t->one() : t->zero();
      if (project(e[s], u) != want) fail(r, "pi_" + std::to_string(u) + "(e" + std::to_string(s) + ")");
    }
    if (sigma(e[s]) != e[(s + 1) % lam]) fail(r, "sigma(e" + std::to_string(s) + ") is not the next idempotent");
  }
  if (!sum.is_one()) fail(r, "idempotents do not sum to 1: " + sum.str());
  return r;
}

PropertyResult prop_projection_homomorphism(unsigned seed, int pairs) {
  PropertyResult r;
  Rng rng(seed);
  std::shared_ptr<const Tower> towers[] = {harmonic_tower(), r_tower(3), r_tower(4)};
  for (int i = 0; i < pairs; ++i, ++r.cases) {
    const Tower& t = *towers[i % 3];
    TowerElement a = rng.element(t), b = rng.element(t);
    int k = rng.uniform(0, t.lambda() - 1);
    if (project(a + b, k) != project(a, k) + project(b, k)) fail(r, "additivity: " + a.str() + " ; " + b.str());
    if (project(a * b, k) != project(a, k) * project(b, k))
      fail(r, "multiplicativity: " + a.str() + " ; " + b.str());
    if (!project(t.one(), k).is_one()) fail(r, "pi(1) != 1");
  }
  return r;
}

PropertyResult prop_eval_sigma_commute(unsigned seed, int elements, long n_max) {
  PropertyResult r;
  Rng rng(seed);
  auto t = harmonic_tower();
  Evaluator ev(*t);
  for (int i = 0; i < elements; ++i) {
    TowerElement g = rng.element(*t);
    TowerElement sg = sigma(g);
    for (long n = 0; n <= n_max; ++n, ++r.cases)
      if (ev.eval(sg, n) != ev.eval(g, n + 1))
        fail(r, "eval(sigma(g), " + std::to_string(n) + ") for g = " + g.str());
  }
  return r;
}

PropertyResult prop_decompose_roundtrip(unsigned seed, int elements) {
  PropertyResult r;
  Rng rng(seed);
  std::shared_ptr<const Tower> towers[] = {harmonic_tower(), r_tower(3), r_tower(4), r_tower(6)};
  for (int i = 0; i < elements; ++i, ++r.cases) {
    const Tower& t = *towers[i % 4];
    TowerElement g = rng.element(t);
    auto parts = decompose(g);
    if (recombine(t, parts) != g) fail(r, "recombine(decompose(g)) != g for " + g.str());
    for (const auto& p : parts)
      if (t.has_r() && p.degree(0) > 0) fail(r, "component still mentions y: " + p.str());
  }
  return r;
}

PropertyResult prop_cyclic_shift(unsigned seed, int elements) {
  PropertyResult r;
  Rng rng(seed);
  std::shared_ptr<const Tower> towers[] = {harmonic_tower(), r_tower(3), r_tower(4)};
  for (int i = 0; i < elements; ++i) {
    const Tower& t = *towers[i % 3];
    int lam = t.lambda();
    TowerElement g = rng.element(t);
    auto parts = decompose(g);
    auto shifted = decompose(sigma(g));
    auto rotated = decompose(sigma(g, lam));
    for (int s = 0; s < lam; ++s, ++r.cases) {
      // sigma moves component s to s+1
      if (shifted[(s + 1) % lam] != project(sigma(parts[s]), (s + 1) % lam))
        fail(r, "sigma does not rotate component " + std::to_string(s) + " of " + g.str());
      // sigma^lambda acts on component s as sigma_s
      if (rotated[s] != component_ring(t, s).sigma.apply(parts[s]))
        fail(r, "sigma^lambda differs from sigma_" + std::to_string(s) + " on " + g.str());
    }
  }
  return r;
}

PropertyResult prop_component_soundness(unsigned seed, int instances) {
  PropertyResult r;
  Rng rng(seed);
  for (int i = 0; i < instances; ++i) {
    Instance in = planted(rng, tower_for(i));
    const Tower& t = *in.t;
    for (int k = 0; k < t.lambda(); ++k, ++r.cases) {
      auto eq = extract_component_equation(in.a, k);
      if (!eq) {
        fail(r, "no component equation for a non-degenerate operator");
        continue;
      }
      Automorphism sk = component_ring(t, k).sigma;
      TowerElement gk = project(in.g, k);
      TowerElement lhs = t.zero();
      for (size_t j = 0; j < eq->b.size(); ++j) lhs += eq->b[j] * sk.power(static_cast<int>(j)).apply(gk);
      if (eq->divisor * lhs != eq->rhs_numerator(in.f))
        fail(r, "component " + std::to_string(k) + " equation violated by planted g = " + in.g.str());
      auto pl = extract_component_plde(in.a, {in.f}, k);
      TowerElement lhs2 = t.zero();
      for (size_t j = 0; j < pl->b.size(); ++j) lhs2 += pl->b[j] * sk.power(static_cast<int>(j)).apply(gk);
      if (lhs2 != pl->f[0]) fail(r, "component PLDE violated by planted g = " + in.g.str());
    }
  }
  return r;
}

PropertyResult prop_dimension_bound(unsigned seed, int instances) {
  PropertyResult r;
  Rng rng(seed);
  for (int i = 0; i < instances; ++i) {
    // harmonic instances are covered by the end-to-end example
    Instance in = planted(rng, tower_for(i % 2));
    SolveReport rep;
    auto basis = solve_plde_idempotent(*in.t, in.a, {in.f}, SolverOptions(), &rep);
    if (basis.empty()) fail(r, "planted solution lost");
    for (const auto& c : rep.components) {
      ++r.cases;
      if (c.dimension > c.order + 1)
        fail(r, "component " + std::to_string(c.k) + " has dimension " + std::to_string(c.dimension) +
                    " > order " + std::to_string(c.order) + " + 1");
    }
  }
  return r;
}

}  // namespace plde::testing
