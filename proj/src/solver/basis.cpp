#include "plde/solver/basis.hpp"

namespace plde {

CoordinateSpace::CoordinateSpace(const std::vector<TowerElement>& elems) {
  std::map<Exponents, Poly> dens;
  for (const auto& g : elems)
    for (const auto& [e, c] : g.terms()) {
      auto it = dens.find(e);
      if (it == dens.end()) {
        dens.emplace(e, c.den());
      } else {
        it->second = lcm(it->second, c.den());
      }
    }
  std::map<Exponents, int> maxdeg;
  for (const auto& g : elems)
    for (const auto& [e, c] : g.terms()) {
      int d = (c * RatFun(dens[e])).num().degree();
      auto [it, fresh] = maxdeg.emplace(e, d);
      if (!fresh) it->second = std::max(it->second, d);
    }
  for (auto it = dens.rbegin(); it != dens.rend(); ++it) {
    Slot s{it->first, it->second, maxdeg[it->first], dim_};
    index_[s.e] = static_cast<int>(slots_.size());
    dim_ += s.maxdeg + 1;
    slots_.push_back(std::move(s));
  }
}

std::vector<Constant> CoordinateSpace::coords(const TowerElement& g) const {
  std::vector<Constant> v(dim_);
  for (const auto& [e, c] : g.terms()) {
    auto it = index_.find(e);
    if (it == index_.end()) throw Error("element outside coordinate space");
    const Slot& s = slots_[it->second];
    RatFun scaled = c * RatFun(s.den);
    if (!scaled.is_poly() || scaled.num().degree() > s.maxdeg)
      throw Error("element outside coordinate space");
    // highest power first
    for (int p = 0; p <= scaled.num().degree(); ++p) v[s.offset + s.maxdeg - p] = scaled.num().coeff(p);
  }
  return v;
}

TowerElement CoordinateSpace::element(const std::vector<Constant>& v, const Tower* t) const {
  TowerElement g(t);
  for (const auto& s : slots_) {
    std::vector<Constant> cs(s.maxdeg + 1);
    bool any = false;
    for (int p = 0; p <= s.maxdeg; ++p) {
      cs[p] = v[s.offset + s.maxdeg - p];
      any = any || !cs[p].is_zero();
    }
    if (any) g.add_term(s.e, RatFun(Poly(std::move(cs)), s.den));
  }
  return g;
}

std::vector<std::vector<Constant>> constant_annihilator(const std::vector<TowerElement>& f) {
  int p = static_cast<int>(f.size());
  CoordinateSpace space(f);
  Matrix<Constant> m(space.dim(), p);
  for (int i = 0; i < p; ++i) {
    auto v = space.coords(f[i]);
    for (int r = 0; r < space.dim(); ++r) m(r, i) = v[r];
  }
  return nullspace(m);
}

namespace {

const Tower* tower_of(const SolutionBasis& b) {
  for (const auto& t : b)
    if (t.g.tower()) return t.g.tower();
  return nullptr;
}

}  // namespace

SolutionBasis canonical_basis(const SolutionBasis& b) {
  if (b.empty()) return {};
  int d = static_cast<int>(b.front().c.size());
  std::vector<TowerElement> gs;
  for (const auto& t : b) gs.push_back(t.g);
  CoordinateSpace space(gs);
  Matrix<Constant> m(static_cast<int>(b.size()), d + space.dim());
  for (size_t i = 0; i < b.size(); ++i) {
    for (int j = 0; j < d; ++j) m(static_cast<int>(i), j) = b[i].c[j];
    auto v = space.coords(b[i].g);
    for (int j = 0; j < space.dim(); ++j) m(static_cast<int>(i), d + j) = v[j];
  }
  auto pivots = rref(m);
  const Tower* t = tower_of(b);
  SolutionBasis out;
  for (size_t i = 0; i < pivots.size(); ++i) {
    auto row = m.row(static_cast<int>(i));
    SolutionTuple s;
    s.c.assign(row.begin(), row.begin() + d);
    s.g = space.element(std::vector<Constant>(row.begin() + d, row.end()), t);
    out.push_back(std::move(s));
  }
  return out;
}

bool span_contains(const SolutionBasis& b, const SolutionTuple& v) {
  SolutionBasis all = b;
  all.push_back(v);
  return canonical_basis(all).size() == canonical_basis(b).size();
}

}  // namespace plde
