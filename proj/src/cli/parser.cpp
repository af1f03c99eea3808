#include "plde/cli/parser.hpp"

#include <cctype>

#include "plde/idempotent/idempotent.hpp"

namespace plde {

namespace {

class Parser {
 public:
  Parser(const std::string& s, const Tower& t, int visible) : s_(s), t_(t), visible_(visible) {}

  TowerElement parse() {
    TowerElement r = expr();
    skip();
    if (pos_ != s_.size()) throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  TowerElement expr() {
    TowerElement r = t_.zero();
    bool neg = false;
    if (accept('-')) {
      neg = true;
    } else {
      accept('+');
    }
    TowerElement first = term();
    r = neg ? -first : first;
    for (;;) {
      if (accept('+')) {
        r += term();
      } else if (accept('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  TowerElement term() {
    TowerElement r = factor();
    for (;;) {
      if (accept('*')) {
        r = r * factor();
      } else if (accept('/')) {
        size_t at = pos_;
        r = r * invert(factor(), at);
      } else {
        return r;
      }
    }
  }

  TowerElement factor() {
    if (accept('-')) return -factor();
    TowerElement b = base();
    if (!accept('^')) return b;
    size_t at = pos_;
    bool neg = false;
    if (accept('-')) {
      neg = true;
    } else {
      accept('+');
    }
    Integer e = integer();
    if (!e.fits_slong_p() || e > 100000) throw SyntaxError(at, "exponent too large");
    long k = e.get_si();
    if (!neg) return b.pow(k);
    return invert(b, at).pow(k);
  }

  TowerElement base() {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError(pos_, "unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return t_.constant(RatFun(Constant(integer())));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (accept('(')) {
      TowerElement r = expr();
      if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
      return r;
    }
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  Integer integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, "expected integer");
    return Integer(s_.substr(start, pos_ - start));
  }

  TowerElement identifier() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    if (name == "x") return t_.x();
    if (name == "zeta") return t_.constant(RatFun(Constant::zeta(t_.cyclotomic_index())));
    int i = t_.index_of(name);
    if (i < 0 || (visible_ >= 0 && i >= visible_)) throw UnknownIdentifier(name);
    return t_.gen_element(i);
  }

  TowerElement invert(const TowerElement& v, size_t at) {
    if (v.is_zero()) throw NonUnitDivisor("division by zero at " + std::to_string(at));
    if (v.in_base()) return t_.constant(v.base_value().inverse());
    auto inv = unit_inverse_general(v);
    if (!inv) throw NonUnitDivisor("divisor at " + std::to_string(at) + " is not a unit: " + v.str());
    return *inv;
  }

  const std::string& s_;
  const Tower& t_;
  int visible_;
  size_t pos_ = 0;
};

}  // namespace

TowerElement parse_expression(const std::string& text, const Tower& t, int visible) {
  return Parser(text, t, visible).parse();
}

Constant parse_constant(const std::string& text, const Tower& t) {
  TowerElement v = parse_expression(text, t);
  if (v.is_zero()) return Constant();
  if (!v.in_base() || !v.base_value().is_constant()) throw Error("not a constant: " + text);
  return v.base_value().constant();
}

}  // namespace plde
