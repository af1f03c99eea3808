#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "plde/algebra/ratfun.hpp"

namespace plde {

class NotPrimitiveRoot : public Error {
 public:
  using Error::Error;
};
class MultipleRGenerators : public Error {
 public:
  using Error::Error;
};
class SubringViolation : public Error {
 public:
  using Error::Error;
};
class PoleAtIndex : public Error {
 public:
  PoleAtIndex(long n, const std::string& what) : Error(what), index(n) {}
  long index;
};

enum class GenKind { R, Pi, Sigma };

struct GeneratorSpec {
  std::string name;
  GenKind kind;
  int order = 0;  // R only
};

class Tower;

// Exponent of every generator, in tower order.
using Exponents = std::vector<int>;

// Sparse Laurent polynomial in the tower generators with coefficients in
// K(x). The default value is a tower-less zero that adopts the tower of the
// first operand it meets.
class TowerElement {
 public:
  using Terms = std::map<Exponents, RatFun>;

  TowerElement() = default;
  explicit TowerElement(const Tower* t) : tower_(t) {}
  TowerElement(const Tower* t, const RatFun& c);
  static TowerElement monomial(const Tower* t, Exponents e, const RatFun& c = RatFun(1));
  static TowerElement generator(const Tower* t, int i, int power = 1);

  const Tower* tower() const { return tower_; }
  const Terms& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // Only the constant monomial occurs (the element lies in K(x)).
  bool in_base() const;
  RatFun base_value() const;  // requires in_base()
  // Only generators with index < k occur.
  bool in_subring(int k) const;
  int degree(int gen) const;      // max exponent; INT_MIN for zero
  int min_degree(int gen) const;  // min exponent; INT_MAX for zero
  // Highest generator index that occurs; -1 if in K(x).
  int top_generator() const;

  // Coefficient of t_gen^power, as an element free of t_gen.
  TowerElement coeff(int gen, int power) const;
  // Multiply by t_gen^power.
  TowerElement times_gen(int gen, int power) const;

  TowerElement operator-() const;
  TowerElement& operator+=(const TowerElement& o);
  TowerElement& operator-=(const TowerElement& o);
  TowerElement& operator*=(const TowerElement& o);
  TowerElement& operator*=(const RatFun& c);
  friend TowerElement operator+(TowerElement a, const TowerElement& b) { return a += b; }
  friend TowerElement operator-(TowerElement a, const TowerElement& b) { return a -= b; }
  friend TowerElement operator*(const TowerElement& a, const TowerElement& b);
  friend TowerElement operator*(TowerElement a, const RatFun& c) { return a *= c; }
  friend TowerElement operator*(const RatFun& c, TowerElement a) { return a *= c; }
  friend bool operator==(const TowerElement& a, const TowerElement& b) {
    return a.terms_ == b.terms_;
  }

  // Negative exponents require a unit (single term, no Sigma exponents).
  TowerElement pow(long e) const;
  // Inverse of a unit; nullopt otherwise.
  std::optional<TowerElement> unit_inverse() const;

  // y -> c; the result has R-exponent 0.
  TowerElement substitute_r(const Constant& c) const;
  // Apply a map to every coefficient.
  template <class F>
  TowerElement map_coeffs(F&& f) const {
    TowerElement r(tower_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  // Exact quotient in the Laurent ring; nullopt if b does not divide *this.
  std::optional<TowerElement> divide(const TowerElement& b) const;

  std::string str() const;

  // Low-level: add c * monomial(e).
  void add_term(const Exponents& e, const RatFun& c);

 private:
  void adopt(const TowerElement& o);
  const Tower* tower_ = nullptr;
  Terms terms_;
};

// Exact quotient, throwing if inexact (used by fraction-free elimination).
TowerElement exact_quotient(const TowerElement& a, const TowerElement& b);

// gcd in the R-free ring (polynomial in Sigma, Laurent in Pi generators over
// K(x)), normalized to leading coefficient 1 with no monomial factor.
TowerElement gcd(const TowerElement& a, const TowerElement& b);

// Ring endomorphism of the form x -> x + shift, t_i -> u_i t_i + b_i with
// u_i in K(x)* and b_i free of t_i and of all later generators.
class Automorphism {
 public:
  struct Image {
    RatFun mult;
    TowerElement add;
  };

  Automorphism() = default;
  Automorphism(const Tower* t, Constant shift, std::vector<Image> images);
  static Automorphism identity(const Tower* t);

  const Tower* tower() const { return tower_; }
  const Constant& shift() const { return shift_; }
  const Image& image(int i) const { return images_.at(i); }

  RatFun apply(const RatFun& c) const { return c.shift(shift_); }
  TowerElement apply(const TowerElement& g) const;
  // this o other
  Automorphism compose(const Automorphism& other) const;
  Automorphism inverse() const;
  Automorphism power(int j) const;

 private:
  const Tower* tower_ = nullptr;
  Constant shift_;
  std::vector<Image> images_;
};

struct Generator {
  GeneratorSpec spec;
  Constant alpha;      // R: sigma(y) = alpha * y
  RatFun ratio;        // Pi: sigma(t) = ratio * t
  TowerElement delta;  // Sigma: sigma(t) = t + delta
};

// E = K(x)[y]<t_1>...<t_e>. Immutable once built; elements keep a raw
// pointer, so the tower must outlive them.
class Tower {
 public:
  Tower(const Tower&) = delete;
  Tower& operator=(const Tower&) = delete;

  int cyclotomic_index() const { return m_; }
  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& gen(int i) const { return gens_.at(i); }
  int index_of(const std::string& name) const;
  bool has_r() const { return !gens_.empty() && gens_[0].spec.kind == GenKind::R; }
  // Order of the R-generator, 1 without one.
  int lambda() const { return has_r() ? gens_[0].spec.order : 1; }
  Constant alpha() const { return has_r() ? gens_[0].alpha : Constant(1); }

  const Automorphism& sigma() const { return sigma_; }
  const Automorphism& sigma_inverse() const { return sigma_inv_; }

  TowerElement zero() const { return TowerElement(this); }
  TowerElement one() const { return TowerElement(this, RatFun(1)); }
  TowerElement constant(const RatFun& c) const { return TowerElement(this, c); }
  TowerElement x() const { return TowerElement(this, RatFun::x()); }
  TowerElement gen_element(int i, int power = 1) const {
    return TowerElement::generator(this, i, power);
  }

 private:
  friend class TowerBuilder;
  explicit Tower(int m) : m_(m) {}
  int m_;
  std::vector<Generator> gens_;
  Automorphism sigma_, sigma_inv_;
};

// Two-phase construction: declare generators, define their ratios and
// deltas against draft(), then build() validates.
class TowerBuilder {
 public:
  TowerBuilder(int cyclotomic_index, std::vector<GeneratorSpec> gens);
  const Tower* draft() const { return tower_.get(); }

  void set_r_ratio(int i, const Constant& alpha);
  void set_pi_ratio(int i, const TowerElement& ratio);
  void set_sigma_delta(int i, const TowerElement& delta);

  std::shared_ptr<const Tower> build();

 private:
  std::shared_ptr<Tower> tower_;
  std::vector<bool> defined_;
};

// sigma^j(g); negative j uses the inverse.
TowerElement sigma(const TowerElement& g, int j = 1);
// prod_{i<n} sigma^i(f)
TowerElement sigma_factorial(const TowerElement& f, int n);
RatFun sigma_factorial(const RatFun& f, int n, const Constant& shift = Constant(1));

// Numeric sequence model: x -> n, y -> alpha^n, Pi t -> prod_{i<n} ratio(i),
// Sigma t -> sum_{i=1}^{n} delta(i-1). Caches generator values; use from one
// thread at a time.
class Evaluator {
 public:
  explicit Evaluator(const Tower& t);
  Constant eval(const TowerElement& g, long n);
  Constant eval(const RatFun& c, long n);
  Constant generator_value(int i, long n);

 private:
  const Tower& tower_;
  std::vector<std::vector<Constant>> cache_;  // per generator, by n
  std::vector<long> pole_;                    // first failing index, or -1
};

}  // namespace plde
