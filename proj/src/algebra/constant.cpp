#include "plde/algebra/constant.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace plde {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

std::vector<Integer> int_poly_divexact(std::vector<Integer> a, const std::vector<Integer>& b) {
  // b monic
  std::vector<Integer> q(a.size() - b.size() + 1);
  for (int i = static_cast<int>(a.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
    Integer c = a[i];
    int shift = i - (static_cast<int>(b.size()) - 1);
    q[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  return q;
}

// Remainder of a modulo the monic polynomial mod.
void reduce_mod(QPoly& a, const std::vector<Integer>& mod) {
  int dm = static_cast<int>(mod.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    if (sgn(a[i]) == 0) continue;
    Rational c = a[i];
    for (int j = 0; j <= dm; ++j) a[i - dm + j] -= c * Rational(mod[j]);
  }
  if (static_cast<int>(a.size()) > dm) a.resize(dm);
  trim(a);
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Polynomial division with remainder over Q.
void qdivmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  Rational lc = b.back();
  while (r.size() >= b.size() && !r.empty()) {
    size_t shift = r.size() - b.size();
    Rational c = r.back() / lc;
    q[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    trim(r);
  }
  trim(q);
}

QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int m) {
  if (m < 1) throw Error("cyclotomic index must be positive");
  // x^m - 1 = prod_{d | m} Phi_d(x)
  std::vector<Integer> p(m + 1);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = int_poly_divexact(p, cyclotomic_polynomial(d));
  }
  return p;
}

CyclotomicField::CyclotomicField(int m) : m_(m), modulus_(cyclotomic_polynomial(m)) {}

std::shared_ptr<const CyclotomicField> CyclotomicField::of(int m) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  auto field = std::shared_ptr<const CyclotomicField>(new CyclotomicField(m));
  cache.emplace(m, field);
  return field;
}

Constant Constant::zeta(int m) {
  if (m == 1) return Constant(1);
  if (m == 2) return Constant(-1);
  auto field = CyclotomicField::of(m);
  std::vector<Rational> c(field->degree());
  c[1] = 1;
  return from_coords(field, std::move(c));
}

Constant Constant::from_coords(std::shared_ptr<const CyclotomicField> field,
                               std::vector<Rational> coords) {
  Constant r;
  if (!field || field->degree() == 1) {
    r.rat_ = coords.empty() ? Rational(0) : coords[0];
    return r;
  }
  coords.resize(field->degree());
  r.field_ = std::move(field);
  r.cyc_ = std::move(coords);
  r.demote();
  return r;
}

const Rational& Constant::rational() const {
  if (!cyc_.empty()) throw Error("constant is not rational: " + str());
  return rat_;
}

std::vector<Rational> Constant::coords(int degree) const {
  std::vector<Rational> c(std::max(degree, 1));
  if (cyc_.empty()) {
    c[0] = rat_;
  } else {
    for (size_t i = 0; i < cyc_.size() && i < c.size(); ++i) c[i] = cyc_[i];
  }
  return c;
}

void Constant::demote() {
  if (cyc_.empty()) return;
  for (size_t i = 1; i < cyc_.size(); ++i) {
    if (sgn(cyc_[i]) != 0) return;
  }
  rat_ = cyc_[0];
  cyc_.clear();
  field_.reset();
}

std::shared_ptr<const CyclotomicField> Constant::common_field(const Constant& a,
                                                              const Constant& b) {
  if (a.field_ && b.field_ && a.field_ != b.field_) {
    throw Error("mixing constants of different cyclotomic fields");
  }
  return a.field_ ? a.field_ : b.field_;
}

Constant Constant::operator-() const {
  Constant r = *this;
  r.rat_ = -r.rat_;
  for (auto& c : r.cyc_) c = -c;
  return r;
}

Constant& Constant::operator+=(const Constant& o) {
  if (cyc_.empty() && o.cyc_.empty()) {
    rat_ += o.rat_;
    return *this;
  }
  auto field = common_field(*this, o);
  auto a = coords(field->degree());
  auto b = o.coords(field->degree());
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  *this = from_coords(field, std::move(a));
  return *this;
}

Constant& Constant::operator-=(const Constant& o) { return *this += -o; }

Constant& Constant::operator*=(const Constant& o) {
  if (cyc_.empty() && o.cyc_.empty()) {
    rat_ *= o.rat_;
    return *this;
  }
  if (o.cyc_.empty()) {
    for (auto& c : cyc_) c *= o.rat_;
    demote();
    return *this;
  }
  if (cyc_.empty()) {
    Rational s = rat_;
    *this = o;
    for (auto& c : cyc_) c *= s;
    demote();
    return *this;
  }
  auto field = common_field(*this, o);
  QPoly a = cyc_, b = o.cyc_;
  trim(a);
  trim(b);
  QPoly p = qmul(a, b);
  reduce_mod(p, field->modulus());
  *this = from_coords(field, std::move(p));
  return *this;
}

Constant Constant::inverse() const {
  if (is_zero()) throw Error("division by zero constant");
  if (cyc_.empty()) return Constant(Rational(1) / rat_);
  // Extended Euclid of (a, Phi): s*a + t*Phi = 1.
  QPoly mod;
  for (const auto& c : field_->modulus()) mod.emplace_back(c);
  QPoly r0 = mod, r1 = cyc_;
  trim(r1);
  QPoly s0, s1 = {Rational(1)};
  while (!r1.empty()) {
    QPoly q, r;
    qdivmod(r0, r1, q, r);
    QPoly s2 = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi is irreducible.
  Rational inv = Rational(1) / r0[0];
  for (auto& c : s0) c *= inv;
  reduce_mod(s0, field_->modulus());
  return from_coords(field_, std::move(s0));
}

Constant& Constant::operator/=(const Constant& o) {
  if (o.cyc_.empty()) {
    if (sgn(o.rat_) == 0) throw Error("division by zero constant");
    if (cyc_.empty()) {
      rat_ /= o.rat_;
    } else {
      for (auto& c : cyc_) c /= o.rat_;
    }
    return *this;
  }
  return *this *= o.inverse();
}

Constant Constant::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Constant result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Constant& a, const Constant& b) {
  if (a.cyc_.empty() != b.cyc_.empty()) return false;
  if (a.cyc_.empty()) return a.rat_ == b.rat_;
  return a.field_ == b.field_ && a.cyc_ == b.cyc_;
}

int Constant::leading_sign() const {
  if (cyc_.empty()) return sgn(rat_);
  for (const auto& c : cyc_) {
    if (sgn(c) != 0) return sgn(c);
  }
  return 0;
}

Rational Constant::abs_bound() const {
  if (cyc_.empty()) return abs(rat_);
  Rational s = 0;
  for (const auto& c : cyc_) s += abs(c);
  return s;
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r.get_num();
  if (r.get_den() != 1) os << '/' << r.get_den();
  return os.str();
}

std::string Constant::str() const {
  if (cyc_.empty()) return rational_str(rat_);
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (size_t i = 0; i < cyc_.size(); ++i) {
    if (sgn(cyc_[i]) == 0) continue;
    Rational c = cyc_[i];
    if (!first) {
      os << (sgn(c) < 0 ? " - " : " + ");
      c = abs(c);
    } else if (sgn(c) < 0 && i > 0) {
      os << '-';
      c = -c;
    }
    first = false;
    if (i == 0) {
      os << rational_str(c);
    } else {
      if (c != 1) os << rational_str(c) << '*';
      os << "zeta";
      if (i > 1) os << '^' << i;
    }
  }
  os << ')';
  return os.str();
}

}  // namespace plde
