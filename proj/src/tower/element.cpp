#include <algorithm>
#include <climits>
#include <map>
#include <sstream>

#include "plde/tower/tower.hpp"

namespace plde {

namespace {

const Tower* pick(const Tower* a, const Tower* b) {
  if (a && b && a != b) throw Error("mixing elements of different towers");
  return a ? a : b;
}

bool has_r(const Tower* t) { return t && t->has_r(); }

// The leading coefficient's numerator decides the printed sign.
bool looks_negative(const RatFun& c) {
  const Constant& lc = c.num().lc();
  return lc.is_rational() ? sgn(lc.rational()) < 0 : lc.leading_sign() < 0;
}

}  // namespace

TowerElement::TowerElement(const Tower* t, const RatFun& c) : tower_(t) {
  if (!c.is_zero()) terms_.emplace(Exponents(t ? t->size() : 0, 0), c);
}

TowerElement TowerElement::monomial(const Tower* t, Exponents e, const RatFun& c) {
  TowerElement r(t);
  r.add_term(e, c);
  return r;
}

TowerElement TowerElement::generator(const Tower* t, int i, int power) {
  Exponents e(t->size(), 0);
  e.at(i) = power;
  return monomial(t, std::move(e));
}

void TowerElement::add_term(const Exponents& e, const RatFun& c) {
  if (c.is_zero()) return;
  if (has_r(tower_)) {
    int lam = tower_->lambda();
    if (e[0] < 0 || e[0] >= lam) {
      Exponents f = e;
      f[0] = ((f[0] % lam) + lam) % lam;
      add_term(f, c);
      return;
    }
  }
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void TowerElement::adopt(const TowerElement& o) { tower_ = pick(tower_, o.tower_); }

bool TowerElement::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  return c.is_one() && std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

bool TowerElement::in_base() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

RatFun TowerElement::base_value() const {
  if (!in_base()) throw Error("element is not in K(x): " + str());
  return terms_.empty() ? RatFun() : terms_.begin()->second;
}

bool TowerElement::in_subring(int k) const {
  for (const auto& [e, c] : terms_) {
    for (size_t i = k; i < e.size(); ++i)
      if (e[i] != 0) return false;
  }
  return true;
}

int TowerElement::degree(int gen) const {
  int d = INT_MIN;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(gen));
  return d;
}

int TowerElement::min_degree(int gen) const {
  int d = INT_MAX;
  for (const auto& [e, c] : terms_) d = std::min(d, e.at(gen));
  return d;
}

int TowerElement::top_generator() const {
  int top = -1;
  for (const auto& [e, c] : terms_) {
    for (int i = static_cast<int>(e.size()) - 1; i > top; --i) {
      if (e[i] != 0) {
        top = i;
        break;
      }
    }
  }
  return top;
}

TowerElement TowerElement::coeff(int gen, int power) const {
  TowerElement r(tower_);
  for (const auto& [e, c] : terms_) {
    if (e.at(gen) != power) continue;
    Exponents f = e;
    f[gen] = 0;
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

TowerElement TowerElement::times_gen(int gen, int power) const {
  if (power == 0) return *this;
  TowerElement r(tower_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f.at(gen) += power;
    r.add_term(f, c);
  }
  return r;
}

TowerElement TowerElement::operator-() const {
  TowerElement r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

TowerElement& TowerElement::operator+=(const TowerElement& o) {
  adopt(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TowerElement& TowerElement::operator-=(const TowerElement& o) {
  adopt(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TowerElement operator*(const TowerElement& a, const TowerElement& b) {
  TowerElement r(pick(a.tower_, b.tower_));
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

TowerElement& TowerElement::operator*=(const TowerElement& o) { return *this = *this * o; }

TowerElement& TowerElement::operator*=(const RatFun& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

std::optional<TowerElement> TowerElement::unit_inverse() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  for (int i = 0; i < static_cast<int>(e.size()); ++i) {
    if (e[i] != 0 && tower_->gen(i).spec.kind == GenKind::Sigma) return std::nullopt;
  }
  Exponents f(e.size());
  for (size_t i = 0; i < e.size(); ++i) f[i] = -e[i];
  return monomial(tower_, f, c.inverse());
}

TowerElement TowerElement::pow(long e) const {
  if (e < 0) {
    auto inv = unit_inverse();
    if (!inv) throw Error("negative power of a non-unit: " + str());
    return inv->pow(-e);
  }
  TowerElement result(tower_, RatFun(1)), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

TowerElement TowerElement::substitute_r(const Constant& c) const {
  if (!has_r(tower_)) return *this;
  TowerElement r(tower_);
  for (const auto& [e, v] : terms_) {
    Exponents f = e;
    int k = f[0];
    f[0] = 0;
    r.add_term(f, v * RatFun(c.pow(k)));
  }
  return r;
}

std::optional<TowerElement> TowerElement::divide(const TowerElement& b) const {
  if (b.is_zero()) throw Error("division by zero element");
  const Tower* t = pick(tower_, b.tower_);
  if (is_zero()) return TowerElement(t);
  if (b.terms_.size() == 1) {
    auto inv = b.unit_inverse();
    if (inv) return *this * *inv;
  }
  if (has_r(t)) {
    for (const auto& [e, c] : terms_)
      if (e[0] != 0) throw Error("polynomial division with R-exponents");
    for (const auto& [e, c] : b.terms_)
      if (e[0] != 0) throw Error("polynomial division with R-exponents");
  }
  int n = static_cast<int>(terms_.begin()->first.size());
  // Any exact quotient has its exponents inside this box.
  std::vector<int> lo(n), hi(n);
  for (int v = 0; v < n; ++v) {
    lo[v] = min_degree(v) - b.min_degree(v);
    hi[v] = degree(v) - b.degree(v);
    if (lo[v] > hi[v]) return std::nullopt;
  }
  TowerElement q(t), r = *this;
  const auto& [eb, cb] = *b.terms_.rbegin();
  RatFun cb_inv = cb.inverse();
  while (!r.is_zero()) {
    const auto& [er, cr] = *r.terms_.rbegin();
    Exponents e(n);
    for (int v = 0; v < n; ++v) {
      e[v] = er[v] - eb[v];
      if (e[v] < lo[v] || e[v] > hi[v]) return std::nullopt;
    }
    RatFun c = cr * cb_inv;
    q.add_term(e, c);
    r -= monomial(t, e, c) * b;
  }
  return q;
}

TowerElement exact_quotient(const TowerElement& a, const TowerElement& b) {
  auto q = a.divide(b);
  if (!q) throw Error("inexact division in tower ring");
  return *q;
}

std::string TowerElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += tower_->gen(static_cast<int>(i)).spec.name;
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    bool neg = looks_negative(c);
    RatFun mag = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string cs = mag.str();
    bool sum = mag.is_poly() && [&] {
      int nz = 0;
      for (const auto& v : mag.num().coeffs()) nz += !v.is_zero();
      return nz > 1;
    }();
    if (mono.empty()) {
      os << (sum && neg ? "(" + cs + ")" : cs);
    } else if (mag.is_one()) {
      os << mono;
    } else {
      os << (sum ? "(" + cs + ")" : cs) << "*" << mono;
    }
  }
  return os.str();
}

// ---- gcd in the R-free ring ----

namespace {

// Scale by the inverse leading coefficient in K(x) and shift Pi exponents
// so their minimum is 0.
TowerElement normalize_gcd(const TowerElement& g) {
  if (g.is_zero()) return g;
  const Tower* t = g.tower();
  TowerElement r = g * g.terms().rbegin()->second.inverse();
  for (int v = 0; v < t->size(); ++v) {
    if (t->gen(v).spec.kind != GenKind::Pi) continue;
    int lo = r.min_degree(v);
    if (lo != 0) r = r.times_gen(v, -lo);
  }
  return r;
}

// Arguments of poly_gcd have coefficients in K[x].
TowerElement clear_denominators(const TowerElement& a) {
  Poly d(1);
  for (const auto& [e, c] : a.terms()) d = lcm(d, c.den());
  return d.is_one() ? a : a * RatFun(d);
}

// Sparse polynomials over K in x and the generators: slot 0 holds the
// x-exponent, slot i + 1 that of generator i.
using Mono = std::vector<int>;
using MPoly = std::map<Mono, Constant>;

void add_to(MPoly& p, const Mono& m, const Constant& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = p.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

Mono without(Mono m, int j) {
  m[j] = 0;
  return m;
}

// Coefficients in K[x_j] of the monomials in the later slots.
std::map<Mono, Poly> by_rest(const MPoly& p, int j) {
  std::map<Mono, std::vector<Constant>> cs;
  for (const auto& [m, c] : p) {
    auto& v = cs[without(m, j)];
    if (static_cast<int>(v.size()) <= m[j]) v.resize(m[j] + 1);
    v[m[j]] = c;
  }
  std::map<Mono, Poly> out;
  for (auto& [m, v] : cs) out.emplace(m, Poly(std::move(v)));
  return out;
}

MPoly from_rest(const std::map<Mono, Poly>& parts, int j) {
  MPoly out;
  for (const auto& [m, p] : parts) {
    for (int i = 0; i <= p.degree(); ++i) {
      Mono k = m;
      k[j] = i;
      add_to(out, k, p.coeff(i));
    }
  }
  return out;
}

MPoly eval_at(const MPoly& p, int j, const Constant& v) {
  MPoly out;
  for (const auto& [m, c] : p) add_to(out, without(m, j), c * v.pow(m[j]));
  return out;
}

int degree_in(const MPoly& p, int j) {
  int d = 0;
  for (const auto& [m, c] : p) d = std::max(d, m[j]);
  return d;
}

MPoly to_mpoly(const TowerElement& a) {
  MPoly out;
  for (const auto& [e, c] : a.terms()) {
    Mono m(e.size() + 1);
    std::copy(e.begin(), e.end(), m.begin() + 1);
    for (int i = 0; i <= c.num().degree(); ++i) {
      m[0] = i;
      add_to(out, m, c.num().coeff(i));
    }
  }
  return out;
}

TowerElement to_element(const Tower* t, const MPoly& p) {
  TowerElement out(t);
  for (const auto& [m, c] : p)
    out.add_term(Exponents(m.begin() + 1, m.end()), RatFun(Poly::monomial(c, m[0])));
  return out;
}

// Remove the content in K[x_j]; returns it.
Poly remove_content(MPoly& p, int j) {
  auto parts = by_rest(p, j);
  Poly c;
  for (const auto& [m, q] : parts) {
    c = gcd(c, q);
    if (c.degree() == 0) return Poly(1);
  }
  for (auto& [m, q] : parts) q = exact_div(q, c);
  p = from_rest(parts, j);
  return c;
}

// gcd in K[x_j, ..., x_last] of nonzero a, b (earlier slots are zero), by
// evaluating x_j at integers, recursing and interpolating. Leading monomials
// expose unlucky points; the result is confirmed by trial division.
MPoly dense_gcd(MPoly a, MPoly b, int j, const Tower* t) {
  int last = static_cast<int>(a.begin()->first.size()) - 1;
  if (j == last || (degree_in(a, j) == 0 && degree_in(b, j) == 0)) {
    if (j < last) return dense_gcd(std::move(a), std::move(b), j + 1, t);
    Poly g = gcd(by_rest(a, j).begin()->second, by_rest(b, j).begin()->second);
    return from_rest({{without(a.begin()->first, j), g}}, j);
  }
  Poly c = gcd(remove_content(a, j), remove_content(b, j));
  auto lead = [&](const MPoly& p) { return by_rest(p, j).rbegin()->second; };
  Poly la = lead(a), lb = lead(b);
  Poly gam = gcd(la, lb);
  int bound = std::min(degree_in(a, j), degree_in(b, j)) + gam.degree();
  Mono zero(last + 1, 0);
  MPoly h;
  Poly q(1);
  Mono lm;
  int count = 0;
  for (long p = 1; p < 100000; ++p) {
    Constant v(p);
    if (la.eval(v).is_zero() || lb.eval(v).is_zero()) continue;
    MPoly g = dense_gcd(eval_at(a, j, v), eval_at(b, j, v), j + 1, t);
    if (g.size() == 1 && g.begin()->first == zero) return from_rest({{zero, c}}, j);
    const Mono& glm = g.rbegin()->first;
    if (count > 0 && glm > lm) continue;
    if (count == 0 || glm < lm) {
      h.clear();
      q = Poly(1);
      lm = glm;
      count = 0;
    }
    Constant scale = gam.eval(v) / g.rbegin()->second;
    MPoly diff = eval_at(h, j, v);
    for (auto& [m, x] : diff) x = -x;
    for (const auto& [m, x] : g) add_to(diff, m, x * scale);
    bool stable = count > 0 && diff.empty();
    if (!diff.empty()) {
      Constant s = q.eval(v).inverse();
      for (int i = 0; i <= q.degree(); ++i) {
        if (q.coeff(i).is_zero()) continue;
        for (const auto& [m, x] : diff) {
          Mono k = m;
          k[j] = i;
          add_to(h, k, x * q.coeff(i) * s);
        }
      }
    }
    q *= Poly::x() - Poly(v);
    ++count;
    if (!stable && count <= bound + 1) continue;
    MPoly pp = h;
    remove_content(pp, j);
    TowerElement pe = to_element(t, pp);
    if (to_element(t, a).divide(pe) && to_element(t, b).divide(pe)) {
      auto parts = by_rest(pp, j);
      for (auto& [m, r] : parts) r = r * c;
      return from_rest(parts, j);
    }
    // every point so far was unlucky in the same way
    if (count > bound + 1) count = 0;
  }
  throw Error("gcd interpolation did not converge");
}

// Arguments have nonnegative exponents and K[x] coefficients. The result is
// determined up to a factor in K.
TowerElement poly_gcd(const TowerElement& a, const TowerElement& b) {
  const Tower* t = a.tower() ? a.tower() : b.tower();
  return to_element(t, dense_gcd(to_mpoly(a), to_mpoly(b), 0, t));
}

// Divide out t^min for every generator; returns the removed exponents.
TowerElement strip_monomial(const TowerElement& a, Exponents& mins) {
  int n = a.tower()->size();
  mins.assign(n, 0);
  TowerElement r = a;
  for (int v = 0; v < n; ++v) {
    mins[v] = a.min_degree(v);
    if (mins[v] != 0) r = r.times_gen(v, -mins[v]);
  }
  return r;
}

}  // namespace

TowerElement gcd(const TowerElement& a, const TowerElement& b) {
  if (a.is_zero()) return normalize_gcd(b);
  if (b.is_zero() || a == b) return normalize_gcd(a);
  const Tower* t = pick(a.tower(), b.tower());
  if (has_r(t)) {
    for (const auto* g : {&a, &b})
      for (const auto& [e, c] : g->terms())
        if (e[0] != 0) throw Error("gcd of elements with R-exponents");
  }
  Exponents ma, mb;
  TowerElement pa = strip_monomial(a, ma), pb = strip_monomial(b, mb);
  TowerElement g = poly_gcd(clear_denominators(pa), clear_denominators(pb));
  // Sigma monomials are not units: keep their common power.
  for (int v = 0; v < t->size(); ++v) {
    if (t->gen(v).spec.kind != GenKind::Sigma) continue;
    int k = std::min(ma[v], mb[v]);
    if (k > 0) g = g.times_gen(v, k);
  }
  return normalize_gcd(g);
}

}  // namespace plde
