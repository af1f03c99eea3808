#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace plde {

enum ExitCode { kExitOk = 0, kExitMath = 1, kExitInput = 2 };

// plde solve   <tower> <problem> [--sigma-slack N]
// plde reduce  <tower> <problem> --component k
// plde matrix  <tower> <problem>
// plde check   <tower> <problem> <basis.json> --n-max N
// JSON goes to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace plde
