#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace plde {

using Integer = mpz_class;
using Rational = mpq_class;

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
std::vector<Integer> cyclotomic_polynomial(int m);

// Q(zeta_m) as Q[z]/Phi_m(z). Instances are interned per index.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> of(int m);

  int index() const { return m_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  const std::vector<Integer>& modulus() const { return modulus_; }

 private:
  explicit CyclotomicField(int m);

  int m_;
  std::vector<Integer> modulus_;
};

// An exact element of K = Q(zeta_m).
//
// Rational values never carry a field; arithmetic between a rational and a
// cyclotomic element promotes on demand, and results that land in Q are
// demoted again, so equality is structural.
class Constant {
 public:
  Constant() = default;
  Constant(long v) : rat_(v) {}  // NOLINT(google-explicit-constructor)
  Constant(const Rational& r) : rat_(r) {}  // NOLINT(google-explicit-constructor)
  Constant(const Integer& z) : rat_(z) {}  // NOLINT(google-explicit-constructor)

  // exp(2 pi i / m). For m <= 2 this is the rational 1 or -1.
  static Constant zeta(int m);
  static Constant from_coords(std::shared_ptr<const CyclotomicField> field,
                              std::vector<Rational> coords);

  bool is_zero() const { return cyc_.empty() && sgn(rat_) == 0; }
  bool is_one() const { return cyc_.empty() && rat_ == 1; }
  bool is_rational() const { return cyc_.empty(); }
  const Rational& rational() const;

  // Cyclotomic index of the field this value needs (1 when rational).
  int field_index() const { return field_ ? field_->index() : 1; }
  const std::shared_ptr<const CyclotomicField>& field() const { return field_; }

  // Coordinates in the power basis 1, z, ..., z^(deg-1).
  std::vector<Rational> coords(int degree) const;

  Constant inverse() const;
  Constant pow(long e) const;

  Constant operator-() const;
  Constant& operator+=(const Constant& o);
  Constant& operator-=(const Constant& o);
  Constant& operator*=(const Constant& o);
  Constant& operator/=(const Constant& o);

  friend Constant operator+(Constant a, const Constant& b) { return a += b; }
  friend Constant operator-(Constant a, const Constant& b) { return a -= b; }
  friend Constant operator*(Constant a, const Constant& b) { return a *= b; }
  friend Constant operator/(Constant a, const Constant& b) { return a /= b; }
  friend bool operator==(const Constant& a, const Constant& b);

  // Sign of the first nonzero coordinate; 0 for zero.
  int leading_sign() const;
  // Upper bound on the complex absolute value (sum of |coordinates|).
  Rational abs_bound() const;

  // Parseable text: "3", "-1/2", "(1/2 + 3*zeta^2)".
  std::string str() const;

 private:
  static std::shared_ptr<const CyclotomicField> common_field(const Constant& a,
                                                             const Constant& b);
  void demote();

  std::shared_ptr<const CyclotomicField> field_;
  Rational rat_;
  std::vector<Rational> cyc_;  // nonempty iff the value is not rational
};

std::string rational_str(const Rational& r);

}  // namespace plde
