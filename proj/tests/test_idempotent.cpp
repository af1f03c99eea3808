#include <doctest.h>

#include "plde/idempotent/idempotent.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace plde;
using namespace plde::testing;

TEST_CASE("idempotents of order 2") {
  auto t = harmonic_tower();
  auto e = idempotents(*t);
  REQUIRE(e.size() == 2);
  CHECK(e[0] == E(*t, "(1-y)/2"));
  CHECK(e[1] == E(*t, "(1+y)/2"));
  CHECK(component_root(*t, 0) == Constant(-1));
}

TEST_CASE("decompose splits on the value of y") {
  auto t = harmonic_tower();
  auto parts = decompose(E(*t, "s*y + x"));
  CHECK(parts[0] == E(*t, "x - s"));
  CHECK(parts[1] == E(*t, "x + s"));
  CHECK(project(E(*t, "s*y + x")) == parts[0]);
}

TEST_CASE("component ring automorphism") {
  auto t = harmonic_tower();
  auto r0 = component_ring(*t, 0);
  CHECK(r0.sigma.apply(E(*t, "x")) == E(*t, "x + 2"));
  CHECK(r0.sigma.apply(E(*t, "s")) == E(*t, "s + 1/(x+1) + 1/(x+2)"));
  // y = -1 on component 0
  CHECK(r0.sigma.apply(E(*t, "sb")) == E(*t, "sb + 1/(x+1) - 1/(x+2)"));
  auto r1 = component_ring(*t, 1);
  CHECK(r1.sigma.apply(E(*t, "sb")) == E(*t, "sb - 1/(x+1) + 1/(x+2)"));
}

TEST_CASE("units of the idempotent ring") {
  auto t = harmonic_tower();
  CHECK(is_unit(E(*t, "x + y")));
  CHECK_FALSE(is_unit(E(*t, "1 + y")));  // a zero divisor
  auto inv = unit_inverse_general(E(*t, "x + y"));
  REQUIRE(inv.has_value());
  CHECK((*inv * E(*t, "x + y")).is_one());
}

TEST_CASE("property: idempotent identities") {
  for (int lam : {1, 2, 3, 4, 6}) {
    CAPTURE(lam);
    auto r = prop_idempotents(lam);
    INFO(r.detail);
    CHECK(r.ok);
  }
}

TEST_CASE("property: projection is a ring homomorphism") {
  auto r = prop_projection_homomorphism(77, 200);
  INFO(r.detail);
  CHECK(r.ok);
}

TEST_CASE("property: decompose then recombine") {
  auto r = prop_decompose_roundtrip(78, 100);
  INFO(r.detail);
  CHECK(r.ok);
}

TEST_CASE("property: sigma rotates components") {
  auto r = prop_cyclic_shift(79, 60);
  INFO(r.detail);
  CHECK(r.ok);
}
