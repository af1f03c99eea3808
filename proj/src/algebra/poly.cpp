#include "plde/algebra/poly.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace plde {

Poly::Poly(const Constant& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Constant> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return monomial(Constant(1), 1); }

Poly Poly::monomial(const Constant& c, int degree) {
  Poly p;
  if (c.is_zero()) return p;
  p.c_.assign(degree + 1, Constant());
  p.c_[degree] = c;
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Constant Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Constant();
  return c_[i];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.c_.empty() || b.c_.empty()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Constant());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Constant& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

Poly Poly::monic() const {
  if (c_.empty() || c_.back().is_one()) return *this;
  return *this * c_.back().inverse();
}

Poly Poly::shift(const Constant& j) const {
  if (j.is_zero() || c_.size() <= 1) return *this;
  // Horner in (x + j)
  std::vector<Constant> r(c_.size());
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    // r := r * (x + j) + c_i
    for (size_t k = c_.size() - 1; k > 0; --k) r[k] = r[k - 1] + r[k] * j;
    r[0] = r[0] * j + c_[i];
  }
  return Poly(std::move(r));
}

Poly Poly::scale(const Constant& c) const {
  Poly r = *this;
  Constant p(1);
  for (auto& x : r.c_) {
    x *= p;
    p *= c;
  }
  r.trim();
  return r;
}

Constant Poly::eval(const Constant& v) const {
  Constant r;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) r = r * v + c_[i];
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Constant> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Constant(static_cast<long>(i));
  return Poly(std::move(r));
}

Poly Poly::pow(int e) const {
  Poly result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Constant& c = c_[i];
    if (c.is_zero()) continue;
    bool neg = c.is_rational() && sgn(c.rational()) < 0;
    Constant mag = neg ? -c : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.str();
      continue;
    }
    if (!mag.is_one()) os << mag.str() << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Constant> r = a.coeffs();
  std::vector<Constant> q(a.degree() - b.degree() + 1);
  Constant inv = b.lc().inverse();
  const auto& bc = b.coeffs();
  int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i].is_zero()) continue;
    Constant c = r[i] * inv;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) {
      if (!bc[j].is_zero()) r[i - db + j] -= c * bc[j];
    }
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return q;
}

namespace {

using ZPoly = std::vector<Integer>;  // lowest degree first

bool all_rational(const Poly& p) {
  for (const auto& c : p.coeffs())
    if (!c.is_rational()) return false;
  return true;
}

// Primitive integer multiple of a rational polynomial.
ZPoly primitive_z(const Poly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
  ZPoly z;
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Rational q = c.rational() * l;
    z.push_back(q.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
  }
  if (g > 1)
    for (auto& v : z) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return z;
}

Poly from_z(const ZPoly& z) {
  std::vector<Constant> c;
  for (const auto& v : z) c.emplace_back(v);
  return Poly(std::move(c));
}

Integer max_norm(const ZPoly& z) {
  Integer m = 0;
  for (const auto& v : z) m = std::max(m, Integer(abs(v)));
  return m;
}

Integer eval_z(const ZPoly& z, const Integer& x) {
  Integer r = 0;
  for (auto it = z.rbegin(); it != z.rend(); ++it) r = r * x + *it;
  return r;
}

bool divides(const Poly& d, const Poly& p) { return divmod(p, d).second.is_zero(); }

// Heuristic gcd: the gcd of f(xi) and g(xi), expanded in balanced base xi,
// is the gcd when xi is large enough and the candidate divides both.
std::optional<Poly> heuristic_gcd(const ZPoly& f, const ZPoly& g) {
  Poly pf = from_z(f), pg = from_z(g);
  Integer nf = max_norm(f), ng = max_norm(g);
  Integer xi = 2 * std::min(nf, ng) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Integer ef = eval_z(f, xi), eg = eval_z(g, xi);
    if (ef != 0 && eg != 0) {
      Integer h;
      mpz_gcd(h.get_mpz_t(), ef.get_mpz_t(), eg.get_mpz_t());
      ZPoly digits;
      Integer half = xi / 2;
      while (h != 0) {
        Integer r = h % xi;
        if (r < 0) r += xi;
        if (r > half) r -= xi;
        digits.push_back(r);
        h = (h - r) / xi;
      }
      Poly cand = from_z(digits);
      if (cand.degree() >= 0 && divides(cand, pf) && divides(cand, pg)) return cand.monic();
    }
    xi = xi * 73794 / 27011 + 1;
  }
  return std::nullopt;
}

// Pseudo-remainder sequence with content removal over Z.
Poly primitive_prs_gcd(ZPoly f, ZPoly g) {
  Poly a = from_z(f), b = from_z(g);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return Poly(1);
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : from_z(primitive_z(r));
  }
  return a.monic();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return Poly(1);
  if (all_rational(a) && all_rational(b)) {
    ZPoly f = primitive_z(a), g = primitive_z(b);
    if (auto h = heuristic_gcd(f, g)) return *h;
    return primitive_prs_gcd(std::move(f), std::move(g));
  }
  Poly r0 = a, r1 = b;
  if (r0.degree() < r1.degree()) std::swap(r0, r1);
  while (!r1.is_zero()) {
    if (r1.degree() == 0) return Poly(1);
    Poly r = divmod(r0, r1).second;
    r0 = std::move(r1);
    r1 = r.monic();
  }
  return r0.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  return (exact_div(a, gcd(a, b)) * b).monic();
}

Constant resultant(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Constant();
  Poly f = a, g = b;
  Constant sign(1);
  if (f.degree() < g.degree()) {
    std::swap(f, g);
    if ((f.degree() % 2) && (g.degree() % 2)) sign = -sign;
  }
  if (g.degree() == 0) return sign * g.lc().pow(f.degree());
  // Subresultant PRS (Collins/Brown), specialized from Cohen, Alg. 3.3.7.
  Constant gg(1), h(1);
  while (true) {
    int delta = f.degree() - g.degree();
    if ((f.degree() % 2) && (g.degree() % 2)) sign = -sign;
    // pseudo-remainder
    Poly r = divmod(f * g.lc().pow(delta + 1), g).second;
    f = g;
    if (r.is_zero()) return Constant();
    Constant denom = gg * h.pow(delta);
    g = r * denom.inverse();
    gg = f.lc();
    h = h.pow(1 - delta) * gg.pow(delta);
    if (g.degree() == 0) {
      int df = f.degree();
      Constant hn = h.pow(1 - df) * g.lc().pow(df);
      return sign * hn;
    }
  }
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& a) {
  std::vector<std::pair<Poly, int>> out;
  if (a.degree() <= 0) return out;
  Poly f = a.monic();
  Poly fp = f.derivative();
  Poly g = gcd(f, fp);
  Poly c = exact_div(f, g);
  Poly d = exact_div(fp, g) - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    Poly y = gcd(c, d);
    if (y.degree() > 0) out.emplace_back(y, i);
    Poly c2 = exact_div(c, y);
    d = exact_div(d, y) - c2.derivative();
    c = c2;
    ++i;
  }
  return out;
}

Rational root_bound(const Poly& p) {
  if (p.degree() <= 0) return Rational(0);
  // abs_bound dominates the complex modulus of every coefficient.
  Poly q = p.monic();
  Rational m = 0;
  for (int i = 0; i < q.degree(); ++i) m = std::max(m, q.coeff(i).abs_bound());
  return m + 1;
}

namespace {

// Rational-coefficient polynomials whose common integer roots are the
// integer roots of p (one per power-basis coordinate).
std::vector<std::vector<Rational>> rational_components(const Poly& p) {
  int deg = 1;
  for (const auto& c : p.coeffs()) deg = std::max(deg, c.field() ? c.field()->degree() : 1);
  std::vector<std::vector<Rational>> comps(deg, std::vector<Rational>(p.degree() + 1));
  for (int i = 0; i <= p.degree(); ++i) {
    auto co = p.coeff(i).coords(deg);
    for (int k = 0; k < deg; ++k) comps[k][i] = co[k];
  }
  return comps;
}

Rational eval_q(const std::vector<Rational>& c, const Rational& v) {
  Rational r = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) r = r * v + c[i];
  return r;
}

}  // namespace

std::vector<long> integer_roots(const Poly& p, long lo, long hi) {
  if (p.is_zero()) throw Error("integer_roots of the zero polynomial");
  std::vector<long> roots;
  if (p.degree() == 0 || lo > hi) return roots;
  auto comps = rational_components(p);
  // Restrict to the Cauchy bound.
  Rational b = root_bound(p);
  Integer bi = b.get_num() / b.get_den() + 1;
  if (bi.fits_slong_p()) {
    lo = std::max(lo, -bi.get_si());
    hi = std::min(hi, bi.get_si());
  }
  if (hi - lo > 50'000'000) throw Error("integer root search range too large");
  // Integer roots divide the lowest nonzero coefficient of every nonzero
  // rational component (after clearing denominators); zero is handled apart.
  std::vector<Integer> trailing;
  bool zero_root = true;
  for (auto& c : comps) {
    Integer den = 1;
    for (auto& v : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    int k = 0;
    while (k < static_cast<int>(c.size()) && sgn(c[k]) == 0) ++k;
    if (k == static_cast<int>(c.size())) continue;
    if (k == 0) zero_root = false;
    trailing.push_back(abs(Integer(c[k] * den)));
  }
  for (long j = lo; j <= hi; ++j) {
    if (j == 0) {
      if (zero_root) roots.push_back(0);
      continue;
    }
    bool cand = true;
    Integer aj = std::abs(j);
    for (const auto& t : trailing) {
      if (!mpz_divisible_p(t.get_mpz_t(), aj.get_mpz_t())) {
        cand = false;
        break;
      }
    }
    if (!cand) continue;
    Rational v(j);
    bool ok = true;
    for (const auto& c : comps) {
      if (sgn(eval_q(c, v)) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) roots.push_back(j);
  }
  return roots;
}

std::vector<long> nonnegative_integer_roots(const Poly& p) {
  Rational b = root_bound(p);
  Integer bi = b.get_num() / b.get_den() + 1;
  if (!bi.fits_slong_p()) throw Error("root bound too large");
  return integer_roots(p, 0, bi.get_si());
}

Poly interpolate(const std::vector<long>& xs, const std::vector<Constant>& ys) {
  // Newton divided differences.
  size_t n = xs.size();
  std::vector<Constant> dd = ys;
  for (size_t k = 1; k < n; ++k) {
    for (size_t i = n - 1; i >= k; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Constant(xs[i] - xs[i - k]);
    }
  }
  Poly r;
  for (size_t k = n; k-- > 0;) {
    r = r * (Poly::x() - Poly(Constant(xs[k]))) + Poly(dd[k]);
  }
  return r;
}

std::vector<long> dispersion(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) throw Error("dispersion of a zero polynomial");
  std::vector<long> out;
  if (p.degree() <= 0 || q.degree() <= 0) return out;
  // R(j) = Res_x(p(x), q(x + j)) has degree <= deg p * deg q in j.
  int n = p.degree() * q.degree() + 1;
  std::vector<long> xs(n);
  std::vector<Constant> ys(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = i;
    ys[i] = resultant(p, q.shift(Constant(static_cast<long>(i))));
  }
  Poly r = interpolate(xs, ys);
  // Roots of R are differences of roots of p and q.
  Rational bound = root_bound(p) + root_bound(q);
  Integer bi = bound.get_num() / bound.get_den() + 1;
  if (!bi.fits_slong_p()) throw Error("dispersion bound too large");
  for (long j : integer_roots(r, 0, bi.get_si())) {
    if (gcd(p, q.shift(Constant(j))).degree() > 0) out.push_back(j);
  }
  return out;
}

}  // namespace plde
