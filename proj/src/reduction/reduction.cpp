#include "plde/reduction/reduction.hpp"

#include "plde/idempotent/idempotent.hpp"

namespace plde {

namespace {

const Tower& tower_of(const std::vector<TowerElement>& a) {
  for (const auto& v : a)
    if (v.tower()) return *v.tower();
  throw Error("coefficient vector has no tower (all zero)");
}

TowerElement gcd_of(const std::vector<TowerElement>& v) {
  TowerElement g;
  for (const auto& e : v) {
    if (e.is_zero()) continue;
    g = g.is_zero() ? gcd(e, e) : gcd(g, e);
    if (g.is_one()) break;
  }
  return g;
}

void divide_all(std::vector<TowerElement>& v, const TowerElement& g) {
  if (g.is_zero() || g.is_one()) return;
  for (auto& e : v)
    if (!e.is_zero()) e = exact_quotient(e, g);
}

// Scale (b, w) so that b has polynomial coefficients in x without content and
// the highest b has a positive leading numeric coefficient.
void normalize_scaling(std::vector<TowerElement>& b, std::vector<TowerElement>& w) {
  Poly den(1);
  for (const auto& v : b)
    for (const auto& [e, c] : v.terms()) den = lcm(den, c.den());
  Poly content;
  for (const auto& v : b)
    for (const auto& [e, c] : v.terms()) content = gcd(content, (c * RatFun(den)).num());
  RatFun scale = RatFun(den) / RatFun(content.is_zero() ? Poly(1) : content);
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& v : b) {
    for (const auto& [e, c] : v.terms()) {
      Poly p = (c * scale).num();
      for (const auto& k : p.coeffs()) {
        int deg = k.field() ? k.field()->degree() : 1;
        for (const auto& q : k.coords(deg)) {
          if (sgn(q) == 0) continue;
          mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
          mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
        }
      }
    }
  }
  if (num_gcd != 0) scale *= RatFun(Constant(Rational(den_lcm, num_gcd)));
  for (int i = static_cast<int>(b.size()) - 1; i >= 0; --i) {
    if (b[i].is_zero()) continue;
    const RatFun& lc = b[i].terms().rbegin()->second;
    Constant l = (lc * scale).num().lc();
    if (l.leading_sign() < 0) scale = -scale;
    break;
  }
  for (auto* vec : {&b, &w})
    for (auto& v : *vec) v *= scale;
}

}  // namespace

Matrix<TowerElement> shift_projection_matrix(const std::vector<TowerElement>& a) {
  const Tower& t = tower_of(a);
  int lam = t.lambda();
  int m = static_cast<int>(a.size()) - 1;
  int rows = (m + 1) * lam - m, cols = (m + 1) * lam;
  Matrix<TowerElement> M(rows, cols);
  for (int i = 0; i <= m; ++i) {
    TowerElement s = t.zero() + a[i];
    for (int j = 0; j < rows; ++j) {
      M(j, i + j) = project(s);
      if (j + 1 < rows) s = sigma(s, 1);
    }
  }
  return M;
}

bool is_non_degenerate(const std::vector<TowerElement>& a) {
  if (is_unit(a.front()) || is_unit(a.back())) return true;
  Matrix<TowerElement> M = shift_projection_matrix(a);
  return ff_rank(M) == M.rows();
}

TowerElement ComponentEquation::rhs_numerator(const TowerElement& phi) const {
  TowerElement r;
  if (phi.is_zero()) return r;
  for (size_t l = 0; l < f.size(); ++l) {
    if (f[l].is_zero()) continue;
    r += f[l] * project(sigma(phi, static_cast<int>(l) + offset), k);
  }
  return r;
}

std::optional<TowerElement> ComponentEquation::rhs(const TowerElement& phi) const {
  TowerElement r = rhs_numerator(phi);
  if (r.is_zero() || divisor.is_zero() || divisor.is_one()) return r;
  return r.divide(divisor);
}

std::optional<ComponentEquation> extract_component_equation(const std::vector<TowerElement>& a,
                                                            int k) {
  const Tower& t = tower_of(a);
  int lam = t.lambda();
  int m = static_cast<int>(a.size()) - 1;
  if (k < 0 || k >= lam) throw Error("component index out of range");
  if (lam == 1) {
    ComponentEquation eq;
    eq.k = 0;
    for (const auto& v : a) eq.b.push_back(t.zero() + v);
    eq.f = {t.one()};
    eq.divisor = t.one();
    return eq;
  }
  Matrix<TowerElement> M = shift_projection_matrix(a);
  int r = (lam - k) % lam;
  std::vector<int> window, rest;
  for (int c = 0; c < M.cols(); ++c) {
    if (c % lam == r && c / lam <= m) {
      window.push_back(c);
    } else {
      rest.push_back(c);
    }
  }
  // Left kernel of the non-window block: combinations of the rows that only
  // involve window unknowns.
  std::vector<std::vector<TowerElement>> kernel;
  if (rest.empty()) {
    for (int j = 0; j < M.rows(); ++j) {
      std::vector<TowerElement> e(M.rows(), t.zero());
      e[j] = t.one();
      kernel.push_back(std::move(e));
    }
  } else {
    kernel = ff_nullspace(M.select_columns(rest).transpose(), t.one());
  }
  std::optional<std::vector<TowerElement>> best_w, best_b;
  int best_count = 0;
  for (const auto& w : kernel) {
    std::vector<TowerElement> b(m + 1, t.zero());
    int count = 0;
    for (int i = 0; i <= m; ++i) {
      for (int j = 0; j < M.rows(); ++j) {
        if (!w[j].is_zero() && !M(j, window[i]).is_zero()) b[i] += w[j] * M(j, window[i]);
      }
      count += !b[i].is_zero();
    }
    if (count == 0) continue;
    if (!best_b || count < best_count) {
      best_b = b;
      best_w = w;
      best_count = count;
    }
  }
  if (!best_b) return std::nullopt;
  // Common factors are removed here, before transport adds x-denominators.
  TowerElement gw = gcd_of(*best_w);
  divide_all(*best_w, gw);
  divide_all(*best_b, gw);
  TowerElement q = gcd_of(*best_b);
  divide_all(*best_b, q);
  // Transport from the component-0 picture to component k.
  Constant root = component_root(t, k);
  auto transport = [&](const TowerElement& u) {
    return sigma(t.zero() + u, -r).substitute_r(root);
  };
  ComponentEquation eq;
  eq.k = k;
  eq.offset = -r;
  for (const auto& v : *best_b) eq.b.push_back(transport(v));
  for (const auto& v : *best_w) eq.f.push_back(transport(v));
  eq.divisor = q.is_zero() ? t.one() : transport(q);
  normalize_scaling(eq.b, eq.f);
  return eq;
}

std::optional<ComponentPLDE> extract_component_plde(const std::vector<TowerElement>& a,
                                                    const std::vector<TowerElement>& f, int k) {
  auto eq = extract_component_equation(a, k);
  if (!eq) return std::nullopt;
  ComponentPLDE out;
  out.b = eq->b;
  bool exact = true;
  for (const auto& fj : f) {
    auto r = eq->rhs(fj);
    if (!r) {
      exact = false;
      break;
    }
    out.f.push_back(*r);
  }
  if (!exact) {
    // keep the divisor on the operator side
    out.f.clear();
    for (auto& v : out.b) v *= eq->divisor;
    for (const auto& fj : f) out.f.push_back(eq->rhs_numerator(fj));
  }
  return out;
}

}  // namespace plde
