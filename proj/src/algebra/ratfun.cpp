#include "plde/algebra/ratfun.hpp"

namespace plde {

RatFun::RatFun(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw Error("rational function with zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  if (!den_.lc().is_one()) {
    Constant inv = den_.lc().inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

Constant RatFun::constant() const {
  if (!is_constant()) throw Error("rational function is not constant: " + str());
  return num_.coeff(0);
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.degree() > 0) normalize();
    return *this;
  }
  // a/b + c/d with g = gcd(b, d): (a*(d/g) + c*(b/g)) / (b*d/g)
  Poly g = gcd(den_, o.den_);
  Poly bg = exact_div(den_, g), dg = exact_div(o.den_, g);
  num_ = num_ * dg + o.num_ * bg;
  den_ = den_ * dg;
  normalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFun();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  // cross-cancel before multiplying
  Poly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  num_ = exact_div(num_, g1) * exact_div(o.num_, g2);
  den_ = exact_div(den_, g2) * exact_div(o.den_, g1);
  normalize();
  return *this;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw Error("division by zero rational function");
  return RatFun(den_, num_);
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

RatFun RatFun::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RatFun r;
  r.num_ = num_.pow(static_cast<int>(e));
  r.den_ = den_.pow(static_cast<int>(e));
  return r;
}

RatFun RatFun::shift(const Constant& j) const {
  RatFun r;
  r.num_ = num_.shift(j);
  r.den_ = den_.shift(j);
  return r;
}

RatFun RatFun::scale(const Constant& c) const {
  return RatFun(num_.scale(c), den_.scale(c));
}

Constant RatFun::eval(const Constant& v) const {
  Constant d = den_.eval(v);
  if (d.is_zero()) throw Error("pole of rational function");
  return num_.eval(v) / d;
}

std::string RatFun::str(const std::string& var) const {
  // Single-term polynomials read unambiguously inside a product.
  auto wrap = [&](const Poly& p) {
    int nz = 0;
    for (const auto& c : p.coeffs()) nz += !c.is_zero();
    std::string s = p.str(var);
    return nz <= 1 ? s : "(" + s + ")";
  };
  if (den_.is_one()) return num_.str(var);
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace plde
