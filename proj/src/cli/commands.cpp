#include "plde/cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "plde/cli/files.hpp"
#include "plde/reduction/reduction.hpp"
#include "plde/solver/solver.hpp"

namespace plde {

namespace {

using Json = nlohmann::ordered_json;

Json strings(const std::vector<TowerElement>& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(e.str());
  return out;
}

struct Inputs {
  std::shared_ptr<const Tower> tower;
  Problem problem;
};

Inputs load(const std::string& tower_path, const std::string& problem_path) {
  Inputs in;
  in.tower = parse_tower_file(read_file(tower_path));
  in.problem = parse_problem_file(read_file(problem_path), *in.tower);
  return in;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_solve(const Inputs& in, int slack, std::ostream& out) {
  SolverOptions opt;
  opt.sigma_slack = slack;
  SolveReport rep;
  SolutionBasis basis = solve_plde_idempotent(*in.tower, in.problem.a, in.problem.f, opt, &rep);
  Json j;
  j["dimension"] = basis.size();
  j["basis"] = Json::array();
  for (const auto& s : basis) {
    Json c = Json::array();
    for (const auto& v : s.c) c.push_back(v.str());
    j["basis"].push_back({{"c", c}, {"g", s.g.str()}});
  }
  Json comps = Json::array();
  for (const auto& r : rep.components)
    comps.push_back({{"component", r.k}, {"order", r.order}, {"dimension", r.dimension}});
  j["diagnostics"] = {{"lambda", in.tower->lambda()},
                      {"non_degenerate", rep.non_degenerate},
                      {"components", comps},
                      {"candidates", rep.candidates},
                      {"max_sigma_cap", rep.max_sigma_cap}};
  emit(out, j);
  return kExitOk;
}

int cmd_reduce(const Inputs& in, int k, std::ostream& out, std::ostream& err) {
  int lam = in.tower->lambda();
  if (k < 0 || k >= lam) {
    err << "component must lie in [0, " << lam - 1 << "]\n";
    return kExitInput;
  }
  Json j;
  j["component"] = k;
  auto eq = extract_component_equation(in.problem.a, k);
  if (!eq) {
    // no relation on this component; reported, not an error
    j["absent"] = true;
    emit(out, j);
    return kExitOk;
  }
  j["absent"] = false;
  j["b"] = strings(eq->b);
  j["functional"] = {{"coefficients", strings(eq->f)}, {"offset", eq->offset}};
  j["divisor"] = eq->divisor.str();
  auto plde = extract_component_plde(in.problem.a, in.problem.f, k);
  j["plde"] = {{"b", strings(plde->b)}, {"rhs", strings(plde->f)}};
  emit(out, j);
  return kExitOk;
}

int cmd_matrix(const Inputs& in, std::ostream& out) {
  Matrix<TowerElement> m = shift_projection_matrix(in.problem.a);
  Json j = Json::array();
  for (int r = 0; r < m.rows(); ++r) j.push_back(strings(m.row(r)));
  emit(out, j);
  return kExitOk;
}

int cmd_check(const Inputs& in, const std::string& basis_path, long n_max, std::ostream& out,
              std::ostream& err) {
  const Tower& t = *in.tower;
  Json doc = Json::parse(read_file(basis_path));
  if (!doc.contains("basis") || !doc["basis"].is_array()) {
    err << "basis file has no \"basis\" array\n";
    return kExitInput;
  }
  const auto& a = in.problem.a;
  const auto& f = in.problem.f;
  std::vector<SolutionTuple> basis;
  for (const auto& e : doc["basis"]) {
    SolutionTuple s;
    for (const auto& c : e.at("c")) s.c.push_back(parse_constant(c.get<std::string>(), t));
    if (s.c.size() != f.size()) {
      err << "basis entry has " << s.c.size() << " constants, problem has " << f.size() << "\n";
      return kExitInput;
    }
    s.g = t.zero() + parse_expression(e.at("g").get<std::string>(), t);
    basis.push_back(std::move(s));
  }

  Evaluator ev(t);
  Json failures = Json::array(), skipped = Json::array();
  long checked = 0;
  for (size_t b = 0; b < basis.size(); ++b) {
    const auto& s = basis[b];
    for (long n = 0; n <= n_max; ++n) {
      Constant lhs, rhs;
      try {
        for (size_t i = 0; i < a.size(); ++i) lhs += ev.eval(a[i], n) * ev.eval(s.g, n + static_cast<long>(i));
        for (size_t l = 0; l < f.size(); ++l) rhs += s.c[l] * ev.eval(f[l], n);
      } catch (const PoleAtIndex&) {
        skipped.push_back({{"element", b}, {"n", n}});
        continue;
      }
      ++checked;
      if (lhs != rhs) failures.push_back({{"element", b}, {"n", n}, {"lhs", lhs.str()}, {"rhs", rhs.str()}});
    }
  }
  Json j;
  j["ok"] = failures.empty();
  j["n_max"] = n_max;
  j["checked"] = checked;
  j["failures"] = failures;
  j["skipped"] = skipped;
  emit(out, j);
  return failures.empty() ? kExitOk : kExitMath;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parameterized linear difference equations in towers with one R-generator", "plde"};
  app.require_subcommand(1);
  std::string tower_path, problem_path, basis_path;
  int slack = 2, component = 0;
  long n_max = 20;

  auto* solve = app.add_subcommand("solve", "Basis of all (c, g) with L(g) = c.f, as JSON");
  solve->add_option("tower", tower_path)->required();
  solve->add_option("problem", problem_path)->required();
  solve->add_option("--sigma-slack", slack, "extra Sigma degrees tried beyond the rhs degree")
      ->check(CLI::NonNegativeNumber);

  auto* reduce = app.add_subcommand("reduce", "Component equation for one idempotent component");
  reduce->add_option("tower", tower_path)->required();
  reduce->add_option("problem", problem_path)->required();
  reduce->add_option("--component,-k", component)->required();

  auto* matrix = app.add_subcommand("matrix", "Shift-projection matrix as JSON strings");
  matrix->add_option("tower", tower_path)->required();
  matrix->add_option("problem", problem_path)->required();

  auto* check = app.add_subcommand("check", "Verify a solution basis numerically");
  check->add_option("tower", tower_path)->required();
  check->add_option("problem", problem_path)->required();
  check->add_option("basis", basis_path, "JSON as written by solve")->required();
  check->add_option("--n-max", n_max)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  }

  try {
    Inputs in = load(tower_path, problem_path);
    if (*solve) return cmd_solve(in, slack, out);
    if (*reduce) return cmd_reduce(in, component, out, err);
    if (*matrix) return cmd_matrix(in, out);
    return cmd_check(in, basis_path, n_max, out, err);
  } catch (const DegenerateCoefficients& e) {
    err << "degenerate coefficients: " << e.what() << "\n";
    return kExitMath;
  } catch (const DegreeBoundExhausted& e) {
    err << "degree bound exhausted at " << e.cap << ": " << e.what() << "\n";
    return kExitMath;
  } catch (const UnsupportedConstantField& e) {
    err << "unsupported constant field: " << e.what() << "\n";
    return kExitMath;
  } catch (const nlohmann::json::exception& e) {
    err << "bad JSON: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"plde"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace plde
