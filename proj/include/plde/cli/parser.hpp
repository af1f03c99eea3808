#pragma once

#include <string>

#include "plde/tower/tower.hpp"

namespace plde {

class SyntaxError : public Error {
 public:
  SyntaxError(size_t pos, const std::string& msg)
      : Error("syntax error at " + std::to_string(pos) + ": " + msg), position(pos) {}
  size_t position;
};
class NonUnitDivisor : public Error {
 public:
  using Error::Error;
};
class UnknownIdentifier : public Error {
 public:
  explicit UnknownIdentifier(const std::string& name)
      : Error("unknown identifier '" + name + "'"), name(name) {}
  std::string name;
};

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*
// factor := '-' factor | base ('^' ['+'|'-'] integer)?
// base   := integer | identifier | '(' expr ')'
// Identifiers: x, zeta (the primitive m-th root of unity) and the first
// `visible` generators of t (all when negative). Division and negative
// powers need a nonzero element of K(x) or a unit.
TowerElement parse_expression(const std::string& text, const Tower& t, int visible = -1);

// An expression that evaluates to an element of K.
Constant parse_constant(const std::string& text, const Tower& t);

}  // namespace plde
