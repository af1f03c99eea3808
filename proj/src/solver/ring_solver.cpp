#include <climits>

#include "plde/solver/solver.hpp"

namespace plde {

TowerElement apply_operator(const Automorphism& sig, const std::vector<TowerElement>& a,
                            const TowerElement& g) {
  TowerElement r(sig.tower());
  TowerElement s = g;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !s.is_zero()) r += a[i] * s;
    if (i + 1 < a.size()) s = sig.apply(s);
  }
  return r;
}

std::vector<int> peel_order(const Tower& t) {
  std::vector<int> order;
  for (int i = 0; i < t.size(); ++i)
    if (t.gen(i).spec.kind == GenKind::Pi) order.push_back(i);
  for (int i = 0; i < t.size(); ++i)
    if (t.gen(i).spec.kind == GenKind::Sigma) order.push_back(i);
  return order;
}

int bound_sigma_degree(const std::vector<TowerElement>& a, const std::vector<TowerElement>& f,
                       int gen, int slack) {
  int fdeg = 0;
  for (const auto& v : f)
    if (!v.is_zero()) fdeg = std::max(fdeg, v.degree(gen));
  return fdeg + static_cast<int>(a.size()) - 1 + slack;
}

namespace {

struct Context {
  const Tower* t;
  const Automorphism* sig;
  std::vector<int> order;
  SolverOptions opt;
  SolveReport* report;
};

struct Candidate {
  std::vector<Constant> c;
  TowerElement g;
  TowerElement r;  // sum_j c_j f_j - L(g)
};

SolutionBasis solve_level(const Context& ctx, int level, const std::vector<TowerElement>& a0,
                          const std::vector<TowerElement>& f);

Candidate combine(const std::vector<Candidate>& cs, const std::vector<Constant>& k, const Tower* t) {
  Candidate out{std::vector<Constant>(cs.front().c.size()), TowerElement(t), TowerElement(t)};
  for (size_t i = 0; i < cs.size(); ++i) {
    if (k[i].is_zero()) continue;
    RatFun ki(k[i]);
    for (size_t j = 0; j < out.c.size(); ++j) out.c[j] += k[i] * cs[i].c[j];
    if (!cs[i].g.is_zero()) out.g += cs[i].g * ki;
    if (!cs[i].r.is_zero()) out.r += cs[i].r * ki;
  }
  return out;
}

std::vector<Candidate> annihilate(const std::vector<Candidate>& cs, const std::vector<TowerElement>& v,
                                  const Tower* t) {
  bool all_zero = true;
  for (const auto& e : v) all_zero = all_zero && e.is_zero();
  if (all_zero) return cs;
  std::vector<Candidate> out;
  for (const auto& k : constant_annihilator(v)) out.push_back(combine(cs, k, t));
  return out;
}

// Ansatz g = sum_{n=lo}^{hi} g_n t^n for t = order[level-1], matched from the
// top t-degree of the residuals down.
SolutionBasis descend(const Context& ctx, int level, const std::vector<TowerElement>& a,
                      const std::vector<TowerElement>& f, int lo, int hi) {
  const Tower* t = ctx.t;
  int gen = ctx.order[level - 1];
  const Generator& G = t->gen(gen);
  int d = static_cast<int>(f.size());
  int dhi = INT_MIN;
  for (const auto& v : a)
    if (!v.is_zero()) dhi = std::max(dhi, v.degree(gen));
  std::vector<Candidate> cs;
  for (int j = 0; j < d; ++j) {
    std::vector<Constant> c(d);
    c[j] = Constant(1);
    cs.push_back({std::move(c), TowerElement(t), f[j]});
  }
  // with no parameters the homogeneous space still needs a seed tuple
  if (d == 0) cs.push_back({{}, TowerElement(t), TowerElement(t)});
  auto residual_degree = [&] {
    int m = INT_MIN;
    for (const auto& c : cs)
      if (!c.r.is_zero()) m = std::max(m, c.r.degree(gen));
    return m;
  };
  bool seeded_empty = d == 0;
  if (lo <= hi) {
    int top = std::max(residual_degree(), hi + dhi);
    for (int D = top; D >= lo + dhi && !cs.empty(); --D) {
      std::vector<TowerElement> params;
      for (const auto& c : cs) params.push_back(c.r.coeff(gen, D));
      int n = D - dhi;
      if (n > hi) {
        cs = annihilate(cs, params, t);
        continue;
      }
      std::vector<TowerElement> sub_a;
      for (size_t k = 0; k < a.size(); ++k) {
        TowerElement ak = a[k].coeff(gen, dhi);
        if (G.spec.kind == GenKind::Pi && !ak.is_zero())
          ak *= sigma_factorial(ctx.sig->image(gen).mult, static_cast<int>(k), ctx.sig->shift()).pow(n);
        sub_a.push_back(std::move(ak));
      }
      SolutionBasis sub = solve_level(ctx, level - 1, sub_a, params);
      std::vector<Candidate> next;
      for (const auto& s : sub) {
        Candidate nc = combine(cs, s.c, t);
        if (!s.g.is_zero()) {
          TowerElement h = s.g.times_gen(gen, n);
          nc.g += h;
          nc.r -= apply_operator(*ctx.sig, a, h);
        }
        next.push_back(std::move(nc));
      }
      cs = std::move(next);
    }
  }
  std::vector<TowerElement> res;
  for (const auto& c : cs) res.push_back(c.r);
  SolutionBasis out;
  if (cs.empty()) return out;
  for (const auto& c : annihilate(cs, res, t)) {
    if (seeded_empty && c.g.is_zero()) continue;
    out.push_back({c.c, c.g});
  }
  return canonical_basis(out);
}

bool reaches(const SolutionBasis& b, int gen, int cap) {
  for (const auto& s : b)
    if (!s.g.is_zero() && s.g.degree(gen) >= cap) return true;
  return false;
}

SolutionBasis sigma_level(const Context& ctx, int level, const std::vector<TowerElement>& a,
                          const std::vector<TowerElement>& f) {
  int gen = ctx.order[level - 1];
  int cap = std::max(1, bound_sigma_degree(a, f, gen, ctx.opt.sigma_slack));
  SolutionBasis out = descend(ctx, level, a, f, 0, cap);
  if (reaches(out, gen, cap) && ctx.opt.deepen) {
    cap *= 2;
    out = descend(ctx, level, a, f, 0, cap);
    if (reaches(out, gen, cap))
      throw DegreeBoundExhausted(cap, "degree cap " + std::to_string(cap) + " reached for " +
                                          ctx.t->gen(gen).spec.name);
  }
  if (ctx.report) ctx.report->max_sigma_cap = std::max(ctx.report->max_sigma_cap, cap);
  return out;
}

SolutionBasis solve_level(const Context& ctx, int level, const std::vector<TowerElement>& a0,
                          const std::vector<TowerElement>& f) {
  int lo = 0, hi = static_cast<int>(a0.size()) - 1;
  while (lo <= hi && a0[lo].is_zero()) ++lo;
  while (hi >= lo && a0[hi].is_zero()) --hi;
  if (lo > hi) throw Error("zero operator");
  std::vector<TowerElement> a(a0.begin() + lo, a0.begin() + hi + 1);
  SolutionBasis out;
  if (level == 0) {
    auto base = [](const TowerElement& v) {
      if (v.is_zero()) return RatFun();
      if (!v.in_base()) throw Error("internal: coefficient outside the ground field");
      return v.base_value();
    };
    std::vector<RatFun> ra, rf;
    for (const auto& v : a) ra.push_back(base(v));
    for (const auto& v : f) rf.push_back(base(v));
    for (auto& rt : solve_rational(ra, rf, ctx.sig->shift()))
      out.push_back({std::move(rt.c), TowerElement(ctx.t, rt.g)});
  } else if (ctx.t->gen(ctx.order[level - 1]).spec.kind == GenKind::Sigma) {
    out = sigma_level(ctx, level, a, f);
  } else {
    auto [plo, phi] = bound_pi_degrees(*ctx.sig, ctx.order, level, a, f);
    out = descend(ctx, level, a, f, plo, phi);
  }
  if (lo > 0) {
    Automorphism back = ctx.sig->power(-lo);
    for (auto& s : out) s.g = back.apply(s.g);
  }
  return out;
}

// F-coefficients of the largest monomial (lex, later peel position more
// significant) occurring in the A_k, which are free of order[level-1..].
std::vector<RatFun> leading_coefficients(const std::vector<TowerElement>& A,
                                         const std::vector<int>& order, int level) {
  auto key = [&](const Exponents& e) {
    std::vector<int> k;
    for (int i = level - 2; i >= 0; --i) k.push_back(e[order[i]]);
    return k;
  };
  bool have = false;
  std::vector<int> best;
  Exponents best_e;
  for (const auto& v : A)
    for (const auto& [e, c] : v.terms()) {
      auto k = key(e);
      if (!have || k > best) {
        best = k;
        best_e = e;
        have = true;
      }
    }
  std::vector<RatFun> out;
  for (const auto& v : A) {
    auto it = v.terms().find(best_e);
    out.push_back(it == v.terms().end() ? RatFun() : it->second);
  }
  return out;
}

std::vector<long> pi_exponent_candidates(const Automorphism& sig, const std::vector<int>& order, int level,
                                         const std::vector<TowerElement>& A) {
  const Tower* t = sig.tower();
  int gen = order[level - 1];
  std::vector<RatFun> fs_tail{sig.image(gen).mult};
  for (int i = 0; i < level - 1; ++i)
    if (t->gen(order[i]).spec.kind == GenKind::Pi) fs_tail.push_back(sig.image(order[i]).mult);
  std::vector<long> out;
  for (const auto& w : hypergeometric_candidates(leading_coefficients(A, order, level), sig.shift())) {
    std::vector<RatFun> fs{w.inverse()};
    fs.insert(fs.end(), fs_tail.begin(), fs_tail.end());
    auto basis = pseudo_orbit_basis(fs, sig.shift());
    if (basis.empty() || basis[0][0] != 1) continue;
    for (size_t r = 1; r < basis.size(); ++r)
      if (basis[r][1] != 0) throw Error("Pi generators are not independent");
    if (!basis[0][1].fits_slong_p()) throw Error("Pi exponent candidate out of range");
    out.push_back(basis[0][1].get_si());
  }
  return out;
}

}  // namespace

std::pair<int, int> bound_pi_degrees(const Automorphism& sig, const std::vector<int>& order, int level,
                                     const std::vector<TowerElement>& a,
                                     const std::vector<TowerElement>& f) {
  int gen = order[level - 1];
  int dhi = INT_MIN, dlo = INT_MAX;
  for (const auto& v : a)
    if (!v.is_zero()) {
      dhi = std::max(dhi, v.degree(gen));
      dlo = std::min(dlo, v.min_degree(gen));
    }
  if (dhi == INT_MIN) throw Error("zero operator");
  long hi = LONG_MIN, lo = LONG_MAX;
  for (const auto& v : f)
    if (!v.is_zero()) {
      hi = std::max<long>(hi, v.degree(gen) - dhi);
      lo = std::min<long>(lo, v.min_degree(gen) - dlo);
    }
  std::vector<TowerElement> top, bottom;
  for (const auto& v : a) {
    top.push_back(v.coeff(gen, dhi));
    bottom.push_back(v.coeff(gen, dlo));
  }
  for (long n : pi_exponent_candidates(sig, order, level, top)) hi = std::max(hi, n);
  for (long n : pi_exponent_candidates(sig, order, level, bottom)) lo = std::min(lo, n);
  if (hi == LONG_MIN || lo == LONG_MAX || lo > hi) return {1, 0};
  return {static_cast<int>(lo), static_cast<int>(hi)};
}

SolutionBasis solve_sigma_tower(const Automorphism& sig, const std::vector<TowerElement>& a,
                                const std::vector<TowerElement>& f, const SolverOptions& opt,
                                SolveReport* report) {
  const Tower* t = sig.tower();
  if (!t) throw Error("automorphism without tower");
  if (t->has_r()) {
    for (const auto* vec : {&a, &f})
      for (const auto& v : *vec)
        for (const auto& [e, c] : v.terms())
          if (e[0] != 0) throw Error("R-generator in a component equation");
  }
  Context ctx{t, &sig, peel_order(*t), opt, report};
  std::vector<TowerElement> aa, ff;
  for (const auto& v : a) aa.push_back(t->zero() + v);
  for (const auto& v : f) ff.push_back(t->zero() + v);
  return canonical_basis(solve_level(ctx, static_cast<int>(ctx.order.size()), aa, ff));
}

}  // namespace plde
