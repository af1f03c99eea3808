#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "plde/cli/commands.hpp"
#include "plde/cli/files.hpp"
#include "plde/idempotent/idempotent.hpp"
#include "support.hpp"

using namespace plde;
using namespace plde::testing;

namespace {

const std::string kData = PLDE_TEST_DATA;

struct Result {
  int code;
  std::string out, err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / ("plde_test_" + name);
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST_CASE("expression examples") {
  auto t = harmonic_tower();
  CHECK(parse_expression("(1-y)/2", *t) == idempotents(*t)[0]);
  CHECK(parse_expression("x^2 + 0*s", *t) == t->x() * t->x());
  TowerElement x = t->x(), s = t->gen_element(1), sb = t->gen_element(2), y = t->gen_element(0);
  TowerElement one = t->one();
  TowerElement two = one + one;
  CHECK(parse_expression("s*(1+x) + (2+x)^2 - 2*sb*(1+x)^3*y", *t) ==
        s * (one + x) + (two + x) * (two + x) - two * sb * (one + x) * (one + x) * (one + x) * y);
  CHECK(parse_expression("-x^2", *t) == -(x * x));
  CHECK(parse_expression("2^-1*x", *t) == E(*t, "x/2"));
  CHECK(parse_expression("1/(x+y)", *t) * (x + y) == one);
}

TEST_CASE("expression errors") {
  auto t = harmonic_tower();
  try {
    parse_expression("x + * 2", *t);
    FAIL("no error");
  } catch (const SyntaxError& e) {
    CHECK(e.position == 4);
  }
  CHECK_THROWS_AS(parse_expression("(x + 1", *t), SyntaxError);
  CHECK_THROWS_AS(parse_expression("x 1", *t), SyntaxError);
  CHECK_THROWS_AS(parse_expression("q + 1", *t), UnknownIdentifier);
  CHECK_THROWS_AS(parse_expression("1/(1+y)", *t), NonUnitDivisor);
  CHECK_THROWS_AS(parse_expression("x/0", *t), NonUnitDivisor);
  CHECK_THROWS_AS(parse_expression("1/s", *t), NonUnitDivisor);
  // generators declared later are not visible
  CHECK_THROWS_AS(parse_expression("sb", *t, 2), UnknownIdentifier);
}

TEST_CASE("zeta refers to the field generator") {
  auto t = r_tower(3);
  TowerElement z = parse_expression("zeta", *t);
  CHECK(z * z * z == t->one());
  CHECK(sigma(parse_expression("y", *t)) == z * parse_expression("y", *t));
}

TEST_CASE("property: parse(print(g)) = g") {
  Rng rng(31337);
  std::shared_ptr<const Tower> towers[] = {harmonic_tower(), r_tower(3), r_tower(6)};
  TowerBuilder b(1, {{"p", GenKind::Pi, 0}, {"s", GenKind::Sigma, 0}});
  b.set_pi_ratio(0, b.draft()->x() + b.draft()->one());
  b.set_sigma_delta(1, b.draft()->gen_element(0));
  auto pt = b.build();
  for (int i = 0; i < 200; ++i) {
    const Tower& t = i % 4 == 3 ? *pt : *towers[i % 4 == 3 ? 0 : i % 3];
    TowerElement g = rng.element(t);
    CAPTURE(g.str());
    CHECK(parse_expression(g.str(), t) == g);
  }
}

TEST_CASE("tower files") {
  auto t = parse_tower_file(read_file(kData + "/harmonic.tower"));
  CHECK(t->lambda() == 2);
  CHECK(t->size() == 3);
  CHECK(t->index_of("sb") == 2);
  CHECK_THROWS_AS(parse_tower_file("base x : shift\nsgen s : delta u\nsgen u : delta 1\n"), FileFormatError);
  CHECK_THROWS_AS(parse_tower_file("base x : shift\nsgen x : delta 1\n"), FileFormatError);
  CHECK_THROWS_AS(parse_tower_file("base x : shift\nfoo\n"), FileFormatError);
  CHECK_THROWS_AS(parse_tower_file("sgen s : delta 1\n"), FileFormatError);
  CHECK_THROWS_AS(parse_tower_file("constants cyclotomic 4\nbase x : shift\nrgen y : order 4, ratio -1\n"),
                  NotPrimitiveRoot);
}

TEST_CASE("problem files") {
  auto t = parse_tower_file(read_file(kData + "/harmonic.tower"));
  Problem p = parse_problem_file(read_file(kData + "/harmonic.problem"), *t);
  CHECK(p.a.size() == 3);
  CHECK(p.f.size() == 1);
  CHECK_THROWS_AS(parse_problem_file("order 1\na0 = x\nrhs f1 = 1\n", *t), FileFormatError);
  CHECK_THROWS_AS(parse_problem_file("order 1\na0 = x\na1 = 1\nrhs f2 = 1\n", *t), FileFormatError);
}

TEST_CASE("solve command") {
  auto r = cli({"solve", kData + "/harmonic.tower", kData + "/harmonic.problem"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["dimension"] == 3);
  CHECK(j["basis"].size() == 3);
  CHECK(j["basis"][0]["c"][0] == "1");
  CHECK(j["diagnostics"]["non_degenerate"] == true);
  // byte-identical reruns
  CHECK(cli({"solve", kData + "/harmonic.tower", kData + "/harmonic.problem"}).out == r.out);
}

TEST_CASE("matrix and reduce commands") {
  auto m = cli({"matrix", kData + "/harmonic.tower", kData + "/matrix.problem"});
  REQUIRE(m.code == 0);
  auto j = nlohmann::json::parse(m.out);
  CHECK(j.size() == 5);
  CHECK(j[0].size() == 8);
  CHECK(j[0][3] == "-1");
  CHECK(j[4][4] == "x + 4");

  auto r = cli({"reduce", kData + "/harmonic.tower", kData + "/matrix.problem", "--component", "1"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["absent"] == false);

  std::string degen = temp_file("degen.problem", "order 3\na0 = y-1\na1 = x*(y+1)\na2 = y-1\na3 = x*(y+1)\nrhs f1 = 1\n");
  auto d = cli({"reduce", kData + "/harmonic.tower", degen, "--component", "1"});
  CHECK(d.code == 0);
  CHECK(nlohmann::json::parse(d.out)["absent"] == true);
  CHECK(cli({"solve", kData + "/harmonic.tower", degen}).code == 1);
  CHECK(cli({"reduce", kData + "/harmonic.tower", degen, "--component", "5"}).code == 2);
}

TEST_CASE("check command") {
  auto s = cli({"solve", kData + "/harmonic.tower", kData + "/harmonic.problem"});
  std::string good = temp_file("good.json", s.out);
  auto ok = cli({"check", kData + "/harmonic.tower", kData + "/harmonic.problem", good, "--n-max", "12"});
  CHECK(ok.code == 0);
  CHECK(nlohmann::json::parse(ok.out)["ok"] == true);

  auto j = nlohmann::json::parse(s.out);
  j["basis"][1]["g"] = j["basis"][1]["g"].get<std::string>() + " + x";
  std::string bad = temp_file("bad.json", j.dump());
  auto ko = cli({"check", kData + "/harmonic.tower", kData + "/harmonic.problem", bad, "--n-max", "12"});
  CHECK(ko.code == 1);
  auto rep = nlohmann::json::parse(ko.out);
  CHECK(rep["ok"] == false);
  CHECK(rep["failures"][0]["element"] == 1);
  CHECK(rep["failures"][0]["n"] == 0);
}

TEST_CASE("input errors exit with 2") {
  CHECK(cli({"solve", "/nonexistent.tower", "/nonexistent.problem"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  std::string bad = temp_file("bad.problem", "order 1\na0 = x +\na1 = 1\nrhs f1 = 1\n");
  auto r = cli({"solve", kData + "/harmonic.tower", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
}
