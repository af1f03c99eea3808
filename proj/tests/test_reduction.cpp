#include <doctest.h>

#include "plde/idempotent/idempotent.hpp"
#include "plde/reduction/reduction.hpp"
#include "plde/solver/solver.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace plde;
using namespace plde::testing;

TEST_CASE("shift projection matrix shape") {
  auto t = harmonic_tower();
  std::vector<TowerElement> a = {E(*t, "x"), E(*t, "1"), E(*t, "y")};
  auto m = shift_projection_matrix(a);
  CHECK(m.rows() == 4);  // (m+1) lambda - m
  CHECK(m.cols() == 6);
  CHECK(m(0, 2) == E(*t, "-1"));
  CHECK(m(1, 3) == E(*t, "1"));
}

TEST_CASE("operators that are multiples of an idempotent are degenerate") {
  auto t = harmonic_tower();
  CHECK_FALSE(is_non_degenerate({E(*t, "1+y"), E(*t, "x*(1+y)")}));
  CHECK(is_non_degenerate({E(*t, "x"), E(*t, "1")}));
}

TEST_CASE("lambda = 1 passes the operator through") {
  auto t = r_tower(1);
  std::vector<TowerElement> a = {E(*t, "x"), E(*t, "-1")};
  auto eq = extract_component_equation(a, 0);
  REQUIRE(eq.has_value());
  CHECK(eq->b == a);
  CHECK(eq->divisor.is_one());
}

TEST_CASE("extracted equation holds for a known solution") {
  auto t = harmonic_tower();
  std::vector<TowerElement> a = {E(*t, "x"), E(*t, "x"), E(*t, "1"), E(*t, "y")};
  TowerElement g = E(*t, "s*y + x^2");
  TowerElement f = apply_operator(t->sigma(), a, g);
  for (int k = 0; k < 2; ++k) {
    auto pl = extract_component_plde(a, {f}, k);
    REQUIRE(pl.has_value());
    auto sk = component_ring(*t, k).sigma;
    TowerElement gk = project(g, k), lhs = t->zero();
    for (size_t i = 0; i < pl->b.size(); ++i) lhs += pl->b[i] * sk.power(static_cast<int>(i)).apply(gk);
    CHECK(lhs == pl->f[0]);
  }
}

TEST_CASE("property: component equations are sound") {
  auto r = prop_component_soundness(4242, 20);
  INFO(r.detail);
  CHECK(r.ok);
  CHECK(r.cases > 20);
}
