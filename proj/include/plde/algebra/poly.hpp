#pragma once

#include <string>
#include <utility>
#include <vector>

#include "plde/algebra/constant.hpp"

namespace plde {

// Dense univariate polynomial over K, lowest degree first, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(long c) : Poly(Constant(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(const Constant& c);             // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Constant> coeffs);

  static Poly x();
  static Poly monomial(const Constant& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  // Coefficient of x^i (zero outside the stored range).
  Constant coeff(int i) const;
  const Constant& lc() const { return c_.back(); }
  const std::vector<Constant>& coeffs() const { return c_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Constant& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Constant& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly monic() const;
  // p(x + j)
  Poly shift(const Constant& j) const;
  // p(c * x)
  Poly scale(const Constant& c) const;
  Constant eval(const Constant& v) const;
  Poly derivative() const;
  Poly pow(int e) const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Constant> c_;
};

// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Quotient of an exact division; throws if the remainder is nonzero.
Poly exact_div(const Poly& a, const Poly& b);
// Monic gcd (zero only if both are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);

// Res_x(a, b) via the subresultant PRS.
Constant resultant(const Poly& a, const Poly& b);

// Yun square-free decomposition: a = lc * prod f_i^i, f_i monic square-free.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& a);

// Integer roots in [lo, hi] of a nonzero polynomial over K, ascending.
std::vector<long> integer_roots(const Poly& p, long lo, long hi);
// All nonnegative integer roots of a nonzero polynomial over K, ascending.
std::vector<long> nonnegative_integer_roots(const Poly& p);
// Cauchy bound on the absolute values of the complex roots.
Rational root_bound(const Poly& p);

// Values j >= 0 with deg gcd(p(x), q(x + j)) > 0, ascending.
std::vector<long> dispersion(const Poly& p, const Poly& q);

// Interpolating polynomial through (x_i, y_i) with distinct integer nodes.
Poly interpolate(const std::vector<long>& xs, const std::vector<Constant>& ys);

}  // namespace plde
