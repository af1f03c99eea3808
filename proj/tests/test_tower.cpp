#include <doctest.h>

#include "properties.hpp"
#include "support.hpp"

using namespace plde;
using namespace plde::testing;

TEST_CASE("R generator reduces modulo y^lambda - 1") {
  auto t = harmonic_tower();
  TowerElement y = t->gen_element(0);
  CHECK((y * y).is_one());
  CHECK(sigma(y) == -y);
  CHECK(y.pow(3) == y);
}

TEST_CASE("sigma on the harmonic tower") {
  auto t = harmonic_tower();
  CHECK(sigma(E(*t, "s")) == E(*t, "s + 1/(x+1)"));
  CHECK(sigma(E(*t, "sb")) == E(*t, "sb - y/(x+1)"));
  CHECK(sigma(E(*t, "x*s^2")) == E(*t, "(x+1)*(s + 1/(x+1))^2"));
  CHECK(sigma(sigma(E(*t, "s*y"), 1), -1) == E(*t, "s*y"));
  CHECK(sigma_factorial(E(*t, "x+1"), 3) == E(*t, "(x+1)*(x+2)*(x+3)"));
}

TEST_CASE("Pi generators are Laurent") {
  TowerBuilder b(1, {{"p", GenKind::Pi, 0}});
  b.set_pi_ratio(0, b.draft()->constant(RatFun(2)));
  auto t = b.build();
  TowerElement p = t->gen_element(0);
  CHECK(sigma(p) == E(*t, "2*p"));
  CHECK((p * p.pow(-1)).is_one());
  CHECK(sigma(p.pow(-2)) == E(*t, "p^-2/4"));
  CHECK(p.unit_inverse().has_value());
  CHECK_FALSE((p + t->one()).unit_inverse().has_value());
}

TEST_CASE("builder validation") {
  SUBCASE("alpha must be a primitive root") {
    TowerBuilder b(4, {{"y", GenKind::R, 4}});
    CHECK_THROWS_AS(b.set_r_ratio(0, Constant(-1)), NotPrimitiveRoot);
  }
  SUBCASE("only one R generator") {
    CHECK_THROWS_AS(TowerBuilder(2, {{"y", GenKind::R, 2}, {"z", GenKind::R, 2}}), MultipleRGenerators);
  }
  SUBCASE("definitions stay in the subring below") {
    TowerBuilder b(1, {{"s", GenKind::Sigma, 0}, {"u", GenKind::Sigma, 0}});
    const Tower* d = b.draft();
    CHECK_THROWS_AS(b.set_sigma_delta(0, d->gen_element(1)), SubringViolation);
  }
}

TEST_CASE("gcd and exact division in the tower") {
  auto t = harmonic_tower();
  TowerElement a = E(*t, "(s + x)*(sb - 1)"), b = E(*t, "(s + x)*(s*x + 2)");
  TowerElement g = gcd(a, b);
  CHECK(exact_quotient(g, E(*t, "s + x")).in_base());
  CHECK(a.divide(E(*t, "sb - 1")).value() == E(*t, "s + x"));
  CHECK_FALSE(a.divide(E(*t, "s - 1")).has_value());
}

TEST_CASE("evaluation matches the sequence model") {
  auto t = harmonic_tower();
  Evaluator ev(*t);
  CHECK(ev.eval(E(*t, "s"), 3) == Constant(Rational(11, 6)));   // 1 + 1/2 + 1/3
  CHECK(ev.eval(E(*t, "sb"), 3) == Constant(Rational(-5, 6)));  // -1 + 1/2 - 1/3
  CHECK(ev.eval(E(*t, "y*x"), 5) == Constant(-5));
  CHECK_THROWS_AS(ev.eval(E(*t, "1/x"), 0), PoleAtIndex);
}

TEST_CASE("property: evaluation commutes with sigma") {
  auto r = prop_eval_sigma_commute(1234, 100, 20);
  INFO(r.detail);
  CHECK(r.ok);
  CHECK(r.cases == 2100);
}
