#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "plde/cli/parser.hpp"
#include "plde/tower/tower.hpp"

namespace plde::testing {

// Q(x)[y][s][sb]: sigma(y) = -y, s harmonic numbers, sb = sum (-1)^i / i.
inline std::shared_ptr<const Tower> harmonic_tower() {
  TowerBuilder b(2, {{"y", GenKind::R, 2}, {"s", GenKind::Sigma, 0}, {"sb", GenKind::Sigma, 0}});
  const Tower* d = b.draft();
  RatFun inv(Poly(1), Poly::x() + Poly(1));
  b.set_r_ratio(0, Constant(-1));
  b.set_sigma_delta(1, d->constant(inv));
  b.set_sigma_delta(2, -d->gen_element(0) * inv);
  return b.build();
}

// K(x)[y] with K = Q(zeta_lam) and sigma(y) = zeta_lam * y; no generators
// for lam = 1.
inline std::shared_ptr<const Tower> r_tower(int lam) {
  if (lam == 1) return TowerBuilder(1, {}).build();
  TowerBuilder b(lam, {{"y", GenKind::R, lam}});
  b.set_r_ratio(0, Constant::zeta(lam));
  return b.build();
}

inline TowerElement E(const Tower& t, const std::string& s) { return t.zero() + parse_expression(s, t); }

class Rng {
 public:
  explicit Rng(unsigned seed) : g_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }

  Constant constant(int m, int range = 3) {
    Constant c(uniform(-range, range));
    if (m > 2 && uniform(0, 1)) c += Constant(uniform(-range, range)) * Constant::zeta(m).pow(uniform(1, m - 1));
    return c;
  }

  Poly poly(int m, int maxdeg) {
    std::vector<Constant> cs;
    for (int i = 0, d = uniform(0, maxdeg); i <= d; ++i) cs.push_back(constant(m));
    return Poly(std::move(cs));
  }

  // Denominators are 1 or (x + k), k >= 1, so evaluation at n >= 0 is safe.
  RatFun ratfun(int m, int maxdeg = 2, bool fractions = true) {
    Poly den(1);
    if (fractions && uniform(0, 2) == 0) den = Poly::x() + Poly(uniform(1, 3));
    return RatFun(poly(m, maxdeg), den);
  }

  // Up to `terms` monomials; R exponents below lambda, Sigma up to 2, Pi in [-1, 1].
  TowerElement element(const Tower& t, int terms = 3, bool fractions = true) {
    TowerElement g = t.zero();
    int m = t.cyclotomic_index();
    for (int k = uniform(1, terms); k > 0; --k) {
      TowerElement mono = t.constant(ratfun(m, 2, fractions));
      for (int i = 0; i < t.size(); ++i) {
        int e = 0;
        switch (t.gen(i).spec.kind) {
          case GenKind::R:
            e = uniform(0, t.lambda() - 1);
            break;
          case GenKind::Sigma:
            e = uniform(0, 2);
            break;
          case GenKind::Pi:
            e = uniform(-1, 1);
            break;
        }
        if (e != 0) mono = mono * t.gen_element(i, e);
      }
      g += mono;
    }
    return g;
  }

 private:
  std::mt19937 g_;
};

}  // namespace plde::testing
