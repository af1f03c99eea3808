#include "plde/idempotent/idempotent.hpp"

namespace plde {

Constant component_root(const Tower& t, int s) {
  int lam = t.lambda();
  return t.alpha().pow(((lam - 1 - s) % lam + lam) % lam);
}

std::vector<TowerElement> idempotents(const Tower& t) {
  int lam = t.lambda();
  if (lam == 1) return {t.one()};
  Constant alpha = t.alpha();
  TowerElement y = t.gen_element(0);
  std::vector<TowerElement> es;
  for (int s = 0; s < lam; ++s) {
    int skip = lam - 1 - s;
    TowerElement num = t.one();
    Constant den(1);
    for (int j = 0; j < lam; ++j) {
      if (j == skip) continue;
      num *= y - t.constant(RatFun(alpha.pow(j)));
      den *= alpha.pow(skip) - alpha.pow(j);
    }
    es.push_back(num * RatFun(den.inverse()));
  }
  return es;
}

TowerElement project(const TowerElement& g, int k) {
  if (!g.tower() || !g.tower()->has_r()) return g;
  return g.substitute_r(component_root(*g.tower(), k));
}

TowerElement project(const TowerElement& g) { return project(g, 0); }

std::vector<TowerElement> decompose(const TowerElement& g) {
  if (!g.tower()) return {g};
  int lam = g.tower()->lambda();
  std::vector<TowerElement> out;
  for (int s = 0; s < lam; ++s) out.push_back(project(g, s));
  return out;
}

TowerElement recombine(const Tower& t, const std::vector<TowerElement>& components) {
  auto es = idempotents(t);
  if (components.size() != es.size()) throw Error("recombine: wrong number of components");
  TowerElement r = t.zero();
  for (size_t s = 0; s < es.size(); ++s) r += es[s] * components[s];
  return r;
}

ComponentRing component_ring(const Tower& t, int s) {
  int lam = t.lambda();
  std::vector<Automorphism::Image> im;
  Constant root = component_root(t, s);
  for (int i = 0; i < t.size(); ++i) {
    const Generator& g = t.gen(i);
    switch (g.spec.kind) {
      case GenKind::R:
        im.push_back({RatFun(1), t.zero()});
        break;
      case GenKind::Pi:
        im.push_back({sigma_factorial(g.ratio, lam), t.zero()});
        break;
      case GenKind::Sigma: {
        TowerElement acc = t.zero(), cur = g.delta;
        for (int l = 0; l < lam; ++l) {
          acc += cur;
          if (l + 1 < lam) cur = sigma(cur, 1);
        }
        im.push_back({RatFun(1), t.has_r() ? acc.substitute_r(root) : acc});
        break;
      }
    }
  }
  return ComponentRing{s, Automorphism(&t, Constant(lam), std::move(im))};
}

namespace {

bool is_unit_tilde(const TowerElement& h) {
  if (h.size() != 1) return false;
  const auto& e = h.terms().begin()->first;
  const Tower* t = h.tower();
  for (int i = 0; i < t->size(); ++i)
    if (e[i] != 0 && t->gen(i).spec.kind == GenKind::Sigma) return false;
  return true;
}

}  // namespace

bool is_unit(const TowerElement& g) {
  if (g.is_zero()) return false;
  for (const auto& h : decompose(g)) {
    if (h.is_zero() || !is_unit_tilde(h)) return false;
  }
  return true;
}

std::optional<TowerElement> unit_inverse_general(const TowerElement& g) {
  if (!is_unit(g)) return std::nullopt;
  auto comps = decompose(g);
  for (auto& h : comps) h = *h.unit_inverse();
  return recombine(*g.tower(), comps);
}

}  // namespace plde
