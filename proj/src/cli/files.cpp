#include "plde/cli/files.hpp"

#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace plde {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// (line number, stripped content) for every non-blank line
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (!line.empty()) out.emplace_back(no, line);
  }
  return out;
}

int small_int(const std::string& s, int line) {
  if (s.size() > 6) throw FileFormatError(line, "number too large: " + s);
  return std::stoi(s);
}

struct Decl {
  int line;
  GeneratorSpec spec;
  std::string expr;
};

}  // namespace

std::shared_ptr<const Tower> parse_tower_file(const std::string& text) {
  static const std::regex re_const(R"(constants\s+cyclotomic\s+(\d+))");
  static const std::regex re_base(R"(base\s+x\s*:\s*shift(\s+1)?)");
  static const std::regex re_r(R"(rgen\s+([A-Za-z_]\w*)\s*:\s*order\s+(\d+)\s*,\s*ratio\s+(.+))");
  static const std::regex re_p(R"(pgen\s+([A-Za-z_]\w*)\s*:\s*ratio\s+(.+))");
  static const std::regex re_s(R"(sgen\s+([A-Za-z_]\w*)\s*:\s*delta\s+(.+))");

  int m = 1;
  bool seen_const = false, seen_base = false;
  std::vector<Decl> decls;
  std::set<std::string> names;
  for (const auto& [no, line] : content_lines(text)) {
    std::smatch mt;
    if (std::regex_match(line, mt, re_const)) {
      if (seen_const || !decls.empty()) throw FileFormatError(no, "constants must come first and only once");
      m = small_int(mt[1], no);
      if (m < 1) throw FileFormatError(no, "cyclotomic index must be positive");
      seen_const = true;
      continue;
    }
    if (std::regex_match(line, mt, re_base)) {
      if (seen_base) throw FileFormatError(no, "duplicate base declaration");
      seen_base = true;
      continue;
    }
    Decl d{no, {}, {}};
    if (std::regex_match(line, mt, re_r)) {
      d.spec = {mt[1], GenKind::R, small_int(mt[2], no)};
      d.expr = mt[3];
    } else if (std::regex_match(line, mt, re_p)) {
      d.spec = {mt[1], GenKind::Pi, 0};
      d.expr = mt[2];
    } else if (std::regex_match(line, mt, re_s)) {
      d.spec = {mt[1], GenKind::Sigma, 0};
      d.expr = mt[2];
    } else {
      throw FileFormatError(no, "unrecognized declaration: " + line);
    }
    const std::string& name = d.spec.name;
    if (name == "x" || name == "zeta") throw FileFormatError(no, "reserved name '" + name + "'");
    if (!names.insert(name).second) throw FileFormatError(no, "duplicate generator '" + name + "'");
    decls.push_back(std::move(d));
  }
  if (!seen_base) throw FileFormatError(0, "missing 'base x : shift' declaration");

  std::vector<GeneratorSpec> specs;
  for (const auto& d : decls) specs.push_back(d.spec);
  TowerBuilder b(m, specs);
  const Tower& draft = *b.draft();
  for (size_t i = 0; i < decls.size(); ++i) {
    const Decl& d = decls[i];
    TowerElement v;
    try {
      v = parse_expression(d.expr, draft, static_cast<int>(i));
    } catch (const Error& e) {
      throw FileFormatError(d.line, e.what());
    }
    int idx = static_cast<int>(i);
    switch (d.spec.kind) {
      case GenKind::R:
        if (v.is_zero() || !v.in_base() || !v.base_value().is_constant())
          throw FileFormatError(d.line, "R ratio must be a constant");
        b.set_r_ratio(idx, v.base_value().constant());
        break;
      case GenKind::Pi:
        b.set_pi_ratio(idx, v);
        break;
      case GenKind::Sigma:
        b.set_sigma_delta(idx, v);
        break;
    }
  }
  return b.build();
}

Problem parse_problem_file(const std::string& text, const Tower& t) {
  static const std::regex re_order(R"(order\s+(\d+))");
  static const std::regex re_a(R"(a(\d+)\s*=\s*(.+))");
  static const std::regex re_f(R"(rhs\s+f(\d+)\s*=\s*(.+))");

  int order = -1;
  std::map<int, TowerElement> as, fs;
  auto expr = [&](const std::string& s, int no) {
    try {
      return parse_expression(s, t);
    } catch (const Error& e) {
      throw FileFormatError(no, e.what());
    }
  };
  for (const auto& [no, line] : content_lines(text)) {
    std::smatch mt;
    if (std::regex_match(line, mt, re_order)) {
      if (order >= 0) throw FileFormatError(no, "duplicate order");
      order = small_int(mt[1], no);
    } else if (std::regex_match(line, mt, re_a)) {
      if (order < 0) throw FileFormatError(no, "order must be declared first");
      int i = small_int(mt[1], no);
      if (i > order) throw FileFormatError(no, "coefficient index exceeds order");
      if (!as.emplace(i, expr(mt[2], no)).second) throw FileFormatError(no, "duplicate coefficient");
    } else if (std::regex_match(line, mt, re_f)) {
      int j = small_int(mt[1], no);
      if (j < 1) throw FileFormatError(no, "right-hand sides are numbered from 1");
      if (!fs.emplace(j, expr(mt[2], no)).second) throw FileFormatError(no, "duplicate right-hand side");
    } else {
      throw FileFormatError(no, "unrecognized line: " + line);
    }
  }
  if (order < 0) throw FileFormatError(0, "missing order");
  Problem p;
  for (int i = 0; i <= order; ++i) {
    auto it = as.find(i);
    if (it == as.end()) throw FileFormatError(0, "missing a" + std::to_string(i));
    p.a.push_back(t.zero() + it->second);
  }
  int j = 1;
  for (const auto& [k, v] : fs) {
    if (k != j++) throw FileFormatError(0, "right-hand sides must be f1..fd without gaps");
    p.f.push_back(t.zero() + v);
  }
  if (p.f.empty()) throw FileFormatError(0, "no right-hand side");
  return p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace plde
