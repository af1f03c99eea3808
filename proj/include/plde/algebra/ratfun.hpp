#pragma once

#include <string>

#include "plde/algebra/poly.hpp"

namespace plde {

// Element of F = K(x): num/den with den monic and gcd(num, den) = 1.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(const Constant& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(const Poly& p) : num_(p), den_(1) {}      // NOLINT(google-explicit-constructor)
  RatFun(const Poly& num, const Poly& den);

  static RatFun x() { return RatFun(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_poly() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  Constant constant() const;  // requires is_constant()

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFun inverse() const;
  RatFun pow(long e) const;
  RatFun shift(const Constant& j) const;
  RatFun scale(const Constant& c) const;
  // Throws if the denominator vanishes at v.
  Constant eval(const Constant& v) const;

  std::string str(const std::string& var = "x") const;

 private:
  void normalize();
  Poly num_, den_;
};

}  // namespace plde
