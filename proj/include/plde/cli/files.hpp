#pragma once

#include <memory>
#include <string>
#include <vector>

#include "plde/cli/parser.hpp"

namespace plde {

// Malformed tower or problem file; line is 1-based.
class FileFormatError : public Error {
 public:
  FileFormatError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

// One declaration per line, '#' starts a comment:
//   constants cyclotomic <m>
//   base x : shift
//   rgen <name> : order <lambda>, ratio <expr>
//   pgen <name> : ratio <expr>
//   sgen <name> : delta <expr>
// Expressions may only mention generators declared on earlier lines.
std::shared_ptr<const Tower> parse_tower_file(const std::string& text);

struct Problem {
  std::vector<TowerElement> a;  // a_0..a_m
  std::vector<TowerElement> f;  // f_1..f_d
};

//   order <m>
//   a<i> = <expr>      for every 0 <= i <= m
//   rhs f<j> = <expr>  for j = 1..d
Problem parse_problem_file(const std::string& text, const Tower& t);

std::string read_file(const std::string& path);

}  // namespace plde
