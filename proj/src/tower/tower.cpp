#include "plde/tower/tower.hpp"

#include <set>

namespace plde {

// ---- Automorphism ----

Automorphism::Automorphism(const Tower* t, Constant shift, std::vector<Image> images)
    : tower_(t), shift_(std::move(shift)), images_(std::move(images)) {}

Automorphism Automorphism::identity(const Tower* t) {
  std::vector<Image> im(t->size(), Image{RatFun(1), TowerElement(t)});
  return Automorphism(t, Constant(0), std::move(im));
}

TowerElement Automorphism::apply(const TowerElement& g) const {
  TowerElement result(g.tower() ? g.tower() : tower_);
  if (g.is_zero()) return result;
  int n = tower_->size();
  // powers of (u t + b) for generators with an additive part, by exponent
  std::vector<std::vector<TowerElement>> powers(n);
  auto image_power = [&](int i, int k) -> const TowerElement& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(tower_->one());
    while (static_cast<int>(p.size()) <= k) {
      TowerElement img = tower_->gen_element(i) * images_[i].mult + images_[i].add;
      p.push_back(p.back() * img);
    }
    return p[k];
  };
  for (const auto& [e, c] : g.terms()) {
    RatFun coef = apply(c);
    Exponents mono(n, 0);
    std::vector<int> expand;
    for (int i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      if (images_[i].add.is_zero()) {
        coef *= images_[i].mult.pow(e[i]);
        mono[i] = e[i];
      } else {
        if (e[i] < 0) throw Error("negative power of a generator with additive image");
        expand.push_back(i);
      }
    }
    TowerElement term = TowerElement::monomial(tower_, mono, coef);
    for (int i : expand) term *= image_power(i, e[i]);
    result += term;
  }
  return result;
}

Automorphism Automorphism::compose(const Automorphism& other) const {
  // (this o other)(t) = this(u' t + b') = this(u') (u t + b) + this(b')
  std::vector<Image> im(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) {
    RatFun u2 = apply(other.images_[i].mult);
    im[i].mult = u2 * images_[i].mult;
    im[i].add = images_[i].add * u2 + apply(other.images_[i].add);
  }
  return Automorphism(tower_, shift_ + other.shift_, std::move(im));
}

Automorphism Automorphism::inverse() const {
  // Filled bottom-up: images below i are final when image i is computed.
  Automorphism inv = identity(tower_);
  inv.shift_ = -shift_;
  for (size_t i = 0; i < images_.size(); ++i) {
    RatFun u = inv.apply(images_[i].mult);
    RatFun uinv = u.inverse();
    inv.images_[i].mult = uinv;
    inv.images_[i].add = -(inv.apply(images_[i].add) * uinv);
  }
  return inv;
}

Automorphism Automorphism::power(int j) const {
  if (j < 0) return inverse().power(-j);
  Automorphism r = identity(tower_);
  for (int k = 0; k < j; ++k) r = compose(r);
  return r;
}

// ---- Tower ----

int Tower::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (gens_[i].spec.name == name) return i;
  return -1;
}

TowerBuilder::TowerBuilder(int m, std::vector<GeneratorSpec> gens)
    : tower_(new Tower(m)), defined_(gens.size(), false) {
  if (m < 1) throw Error("cyclotomic index must be positive");
  int rcount = 0;
  std::set<std::string> names;
  for (size_t i = 0; i < gens.size(); ++i) {
    const auto& g = gens[i];
    if (g.name.empty() || g.name == "x" || g.name == "zeta")
      throw Error("invalid generator name '" + g.name + "'");
    if (!names.insert(g.name).second) throw Error("duplicate generator '" + g.name + "'");
    if (g.kind == GenKind::R) {
      if (++rcount > 1) throw MultipleRGenerators("at most one R-generator is supported");
      if (i != 0)
        throw SubringViolation("R-generator '" + g.name + "' must directly follow the base field");
      if (g.order < 2) throw Error("R-generator order must be at least 2");
    }
    tower_->gens_.push_back(Generator{g, Constant(1), RatFun(1), TowerElement(tower_.get())});
  }
}

void TowerBuilder::set_r_ratio(int i, const Constant& alpha) {
  auto& g = tower_->gens_.at(i);
  if (g.spec.kind != GenKind::R) throw Error("'" + g.spec.name + "' is not an R-generator");
  if (!alpha.is_rational() && alpha.field_index() != tower_->m_)
    throw Error("ratio of '" + g.spec.name + "' lies outside the constant field");
  int lam = g.spec.order;
  bool primitive = alpha.pow(lam).is_one();
  for (int k = 1; k < lam && primitive; ++k)
    if (alpha.pow(k).is_one()) primitive = false;
  if (!primitive)
    throw NotPrimitiveRoot(alpha.str() + " is not a primitive root of unity of order " +
                           std::to_string(lam));
  g.alpha = alpha;
  defined_[i] = true;
}

void TowerBuilder::set_pi_ratio(int i, const TowerElement& ratio) {
  auto& g = tower_->gens_.at(i);
  if (g.spec.kind != GenKind::Pi) throw Error("'" + g.spec.name + "' is not a Pi-generator");
  if (!ratio.in_base())
    throw SubringViolation("ratio of '" + g.spec.name + "' must lie in K(x): " + ratio.str());
  if (ratio.is_zero()) throw SubringViolation("ratio of '" + g.spec.name + "' is zero");
  g.ratio = ratio.base_value();
  defined_[i] = true;
}

void TowerBuilder::set_sigma_delta(int i, const TowerElement& delta) {
  auto& g = tower_->gens_.at(i);
  if (g.spec.kind != GenKind::Sigma) throw Error("'" + g.spec.name + "' is not a Sigma-generator");
  if (!delta.in_subring(i))
    throw SubringViolation("delta of '" + g.spec.name +
                           "' must lie in the ring below it: " + delta.str());
  g.delta = TowerElement(tower_.get()) + delta;
  defined_[i] = true;
}

std::shared_ptr<const Tower> TowerBuilder::build() {
  Tower& t = *tower_;
  for (int i = 0; i < t.size(); ++i) {
    if (!defined_[i]) throw Error("generator '" + t.gens_[i].spec.name + "' is not defined");
  }
  std::vector<Automorphism::Image> im;
  for (const auto& g : t.gens_) {
    switch (g.spec.kind) {
      case GenKind::R:
        im.push_back({RatFun(g.alpha), TowerElement(&t)});
        break;
      case GenKind::Pi:
        im.push_back({g.ratio, TowerElement(&t)});
        break;
      case GenKind::Sigma:
        im.push_back({RatFun(1), g.delta});
        break;
    }
  }
  t.sigma_ = Automorphism(&t, Constant(1), std::move(im));
  t.sigma_inv_ = t.sigma_.inverse();
  return tower_;
}

// ---- sigma helpers ----

TowerElement sigma(const TowerElement& g, int j) {
  if (g.is_zero() || j == 0) return g;
  const Tower* t = g.tower();
  const Automorphism& s = j > 0 ? t->sigma() : t->sigma_inverse();
  TowerElement r = g;
  for (int k = 0; k < std::abs(j); ++k) r = s.apply(r);
  return r;
}

TowerElement sigma_factorial(const TowerElement& f, int n) {
  if (n < 0) throw Error("sigma_factorial needs n >= 0");
  if (!f.tower()) {
    if (n == 0) throw Error("sigma_factorial of a tower-less zero");
    return f;
  }
  TowerElement r = f.tower()->one(), cur = f;
  for (int i = 0; i < n; ++i) {
    r *= cur;
    if (i + 1 < n) cur = sigma(cur, 1);
  }
  return r;
}

RatFun sigma_factorial(const RatFun& f, int n, const Constant& shift) {
  RatFun r(1);
  for (int i = 0; i < n; ++i) r *= f.shift(shift * Constant(i));
  return r;
}

// ---- Evaluator ----

Evaluator::Evaluator(const Tower& t) : tower_(t), cache_(t.size()), pole_(t.size(), -1) {}

Constant Evaluator::eval(const RatFun& c, long n) {
  Constant v(n);
  Constant d = c.den().eval(v);
  if (d.is_zero())
    throw PoleAtIndex(n, "denominator " + c.den().str() + " vanishes at " + std::to_string(n));
  return c.num().eval(v) / d;
}

Constant Evaluator::generator_value(int i, long n) {
  if (n < 0) throw Error("evaluation at a negative index");
  const Generator& g = tower_.gen(i);
  if (g.spec.kind == GenKind::R) return g.alpha.pow(n % g.spec.order);
  if (pole_[i] >= 0 && n >= pole_[i])
    throw PoleAtIndex(n, "generator " + g.spec.name + " undefined from index " +
                             std::to_string(pole_[i]));
  auto& c = cache_[i];
  if (c.empty()) c.push_back(g.spec.kind == GenKind::Pi ? Constant(1) : Constant(0));
  while (static_cast<long>(c.size()) <= n) {
    long k = static_cast<long>(c.size());  // next index; uses data at k - 1
    try {
      if (g.spec.kind == GenKind::Pi) {
        c.push_back(c.back() * eval(g.ratio, k - 1));
      } else {
        c.push_back(c.back() + eval(g.delta, k - 1));
      }
    } catch (const PoleAtIndex&) {
      pole_[i] = k;
      throw PoleAtIndex(n, "generator " + g.spec.name + " undefined from index " +
                               std::to_string(k));
    }
  }
  return c[n];
}

Constant Evaluator::eval(const TowerElement& g, long n) {
  Constant total;
  for (const auto& [e, c] : g.terms()) {
    Constant v = eval(c, n);
    for (int i = 0; i < static_cast<int>(e.size()); ++i) {
      if (e[i] == 0) continue;
      Constant gv = generator_value(i, n);
      if (e[i] < 0 && gv.is_zero())
        throw PoleAtIndex(n, "generator " + tower_.gen(i).spec.name + " vanishes at " +
                                 std::to_string(n));
      v *= gv.pow(e[i]);
    }
    total += v;
  }
  return total;
}

}  // namespace plde
