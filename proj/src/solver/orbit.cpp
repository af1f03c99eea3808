#include "plde/algebra/factor.hpp"
#include "plde/solver/rational.hpp"

namespace plde {

namespace {

// Generator and order of the roots of unity in Q(zeta_m).
std::pair<Constant, int> unity_group(int m) {
  if (m <= 2) return {Constant(-1), 2};
  if (m % 2 == 0) return {Constant::zeta(m), m};
  return {-Constant::zeta(m), 2 * m};
}

int field_index_of(const Poly& p) {
  int m = 1;
  for (const auto& c : p.coeffs())
    if (!c.is_rational()) m = c.field_index();
  return m;
}

// Rational roots of a polynomial whose coefficients lie in Q(zeta_m): the
// common rational roots of all coordinate polynomials.
std::vector<Rational> rational_roots(const Poly& p, int m) {
  int deg = m <= 2 ? 1 : CyclotomicField::of(m)->degree();
  Poly g;
  for (int i = 0; i < deg; ++i) {
    std::vector<Constant> cs;
    for (const auto& c : p.coeffs()) cs.push_back(Constant(c.coords(deg)[i]));
    g = gcd(g, Poly(std::move(cs)));
  }
  std::vector<Rational> out;
  if (g.degree() <= 0) return out;
  for (const auto& fac : factor_univariate(g).factors) {
    if (fac.degree() != 1) continue;
    Rational r = (-fac.coeff(0) / fac.coeff(1)).rational();
    bool seen = false;
    for (const auto& o : out) seen = seen || o == r;
    if (!seen) out.push_back(r);
  }
  return out;
}

}  // namespace

std::vector<Constant> roots_in_field(const Poly& p, int m) {
  if (p.is_zero()) throw Error("roots of the zero polynomial");
  m = std::max(m, field_index_of(p));
  auto [gen, order] = unity_group(m);
  std::vector<Constant> out;
  Constant w(1);
  for (int k = 0; k < order; ++k, w *= gen) {
    for (const auto& r : rational_roots(p.scale(w), m)) {
      Constant root = Constant(r) * w;
      bool seen = false;
      for (const auto& o : out) seen = seen || o == root;
      if (!seen) out.push_back(root);
    }
  }
  return out;
}

std::vector<RatFun> hypergeometric_candidates(const std::vector<RatFun>& a0, const Constant& shift) {
  if (!shift.is_one()) {
    std::vector<RatFun> as;
    for (const auto& v : a0) as.push_back(v.scale(shift));
    auto out = hypergeometric_candidates(as, Constant(1));
    for (auto& u : out) u = u.scale(shift.inverse());
    return out;
  }
  int lo = 0, hi = static_cast<int>(a0.size()) - 1;
  while (lo <= hi && a0[lo].is_zero()) ++lo;
  while (hi >= lo && a0[hi].is_zero()) --hi;
  if (lo >= hi) return {};
  int rho = hi - lo;
  Poly den(1);
  for (int k = lo; k <= hi; ++k) den = lcm(den, a0[k].den());
  std::vector<Poly> p;
  int m = 1;
  for (int k = lo; k <= hi; ++k) {
    p.push_back((a0[k] * RatFun(den)).num());
    m = std::max(m, field_index_of(p.back()));
  }
  std::vector<RatFun> out;
  auto As = monic_divisors(p[0]);
  auto Bs = monic_divisors(p[rho].shift(Constant(1 - rho)));
  for (const auto& A : As) {
    for (const auto& B : Bs) {
      std::vector<Constant> lcs(rho + 1);
      std::vector<int> degs(rho + 1);
      int D = -1;
      for (int k = 0; k <= rho; ++k) {
        if (p[k].is_zero()) {
          degs[k] = -1;
          continue;
        }
        // leading term of p_k * prod_{j<k} A(x+j) * prod_{k<=j<rho} B(x+j)
        degs[k] = p[k].degree() + k * A.degree() + (rho - k) * B.degree();
        lcs[k] = p[k].lc();
        D = std::max(D, degs[k]);
      }
      std::vector<Constant> zc(rho + 1);
      for (int k = 0; k <= rho; ++k)
        if (degs[k] == D) zc[k] = lcs[k];
      Poly zpoly(std::move(zc));
      if (zpoly.degree() <= 0) continue;
      for (const auto& z : roots_in_field(zpoly, m)) {
        if (z.is_zero()) continue;
        RatFun u = RatFun(A, B) * RatFun(z);
        // the relation for r' = sigma^lo(r); shift back
        if (lo > 0) u = u.shift(Constant(-lo));
        bool seen = false;
        for (const auto& o : out) seen = seen || o == u;
        if (!seen) out.push_back(u);
      }
    }
  }
  return out;
}

namespace {

// Split a set of monic polynomials into pieces that are, pairwise, either
// shift-equivalent or coprime at every shift.
std::vector<Poly> shift_coprime_base(std::vector<Poly> work) {
  std::vector<Poly> base;
  while (!work.empty()) {
    Poly p = work.back().monic();
    work.pop_back();
    if (p.degree() <= 0) continue;
    bool consumed = false;
    // self-overlap under a nonzero shift
    for (long j : dispersion(p, p)) {
      if (j == 0) continue;
      Poly g = gcd(p, p.shift(Constant(j)));
      work.push_back(g);
      work.push_back(exact_div(p, g));
      consumed = true;
      break;
    }
    if (consumed) continue;
    for (size_t i = 0; i < base.size() && !consumed; ++i) {
      const Poly& b = base[i];
      std::vector<long> shifts = dispersion(p, b);
      for (long j : dispersion(b, p)) shifts.push_back(-j);
      for (long j : shifts) {
        Poly bj = b.shift(Constant(j));
        Poly g = gcd(p, bj);
        if (g.degree() <= 0) continue;
        if (g == p && g == bj) {
          // a duplicate is dropped; a proper shift of b is kept as its own element
          if (j == 0) {
            consumed = true;
            break;
          }
          continue;
        }
        consumed = true;
        Poly b_old = b;
        base.erase(base.begin() + static_cast<long>(i));
        work.push_back(g);
        work.push_back(exact_div(p, g));
        Poly gb = g.shift(Constant(-j));
        work.push_back(gb);
        work.push_back(exact_div(b_old, gb));
        break;
      }
    }
    if (!consumed) base.push_back(p);
  }
  return base;
}

int multiplicity(Poly p, const Poly& b) {
  int k = 0;
  while (p.degree() >= b.degree()) {
    auto [q, r] = divmod(p, b);
    if (!r.is_zero()) break;
    p = q;
    ++k;
  }
  return k;
}

std::vector<Integer> integer_coprime_base(std::vector<Integer> work) {
  std::vector<Integer> base;
  while (!work.empty()) {
    Integer p = abs(work.back());
    work.pop_back();
    if (p <= 1) continue;
    bool consumed = false;
    for (size_t i = 0; i < base.size(); ++i) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), base[i].get_mpz_t());
      if (g == 1) continue;
      consumed = true;
      if (g == p && g == base[i]) break;
      Integer b = base[i];
      base.erase(base.begin() + static_cast<long>(i));
      work.push_back(g);
      work.push_back(p / g);
      work.push_back(b / g);
      break;
    }
    if (!consumed) base.push_back(p);
  }
  return base;
}

int valuation(Integer n, const Integer& p) {
  int k = 0;
  while (n != 0 && mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++k;
  }
  return k;
}

}  // namespace

std::vector<IntVec> pseudo_orbit_basis(const std::vector<RatFun>& f0, const Constant& shift) {
  std::vector<RatFun> f;
  for (const auto& v : f0) {
    if (v.is_zero()) throw Error("pseudo_orbit_basis of zero");
    f.push_back(shift.is_one() ? v : v.scale(shift));
  }
  int d = static_cast<int>(f.size());
  // monic parts
  std::vector<Poly> polys;
  int m = 1;
  for (const auto& v : f) {
    for (const auto* p : {&v.num(), &v.den()}) {
      m = std::max(m, field_index_of(*p));
      for (const auto& [q, e] : squarefree_decomposition(*p)) polys.push_back(q);
    }
  }
  auto base = shift_coprime_base(polys);
  // classes of shift-equivalent base elements
  std::vector<int> cls(base.size(), -1);
  int ncls = 0;
  for (size_t i = 0; i < base.size(); ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = ncls;
    for (size_t k = i + 1; k < base.size(); ++k) {
      if (cls[k] >= 0 || base[k].degree() != base[i].degree()) continue;
      for (long j : dispersion(base[i], base[k])) {
        if (base[i] == base[k].shift(Constant(j))) cls[k] = ncls;
      }
      for (long j : dispersion(base[k], base[i])) {
        if (base[k] == base[i].shift(Constant(j))) cls[k] = ncls;
      }
    }
    ++ncls;
  }
  // constants: c = q * w^k with q > 0 rational
  auto [gen, order] = unity_group(m);
  std::vector<Rational> qs(d);
  std::vector<int> ks(d);
  for (int i = 0; i < d; ++i) {
    Constant c = f[i].num().lc();
    Constant w(1);
    bool found = false;
    for (int k = 0; k < order && !found; ++k, w *= gen) {
      Constant q = c / w;
      if (q.is_rational() && sgn(q.rational()) > 0) {
        qs[i] = q.rational();
        ks[i] = k;
        found = true;
      }
    }
    if (!found) throw UnsupportedConstantField("constant " + c.str() + " is not a rational multiple of a root of unity");
  }
  std::vector<Integer> ints;
  for (const auto& q : qs) {
    ints.push_back(q.get_num());
    ints.push_back(q.get_den());
  }
  auto ibase = integer_coprime_base(ints);
  // rows: polynomial classes, integer base, roots of unity (extra unknown w)
  std::vector<IntVec> rows;
  std::vector<IntVec> cls_rows(ncls, IntVec(d + 1, Integer(0)));
  for (int i = 0; i < d; ++i) {
    for (size_t b = 0; b < base.size(); ++b) {
      int e = multiplicity(f[i].num(), base[b]) - multiplicity(f[i].den(), base[b]);
      cls_rows[cls[b]][i] += e;
    }
  }
  for (auto& r : cls_rows) rows.push_back(std::move(r));
  for (const auto& p : ibase) {
    IntVec r(d + 1, Integer(0));
    for (int i = 0; i < d; ++i) r[i] = valuation(qs[i].get_num(), p) - valuation(qs[i].get_den(), p);
    rows.push_back(std::move(r));
  }
  IntVec ru(d + 1, Integer(0));
  for (int i = 0; i < d; ++i) ru[i] = ks[i];
  ru[d] = -order;
  rows.push_back(std::move(ru));
  std::vector<IntVec> proj;
  for (auto& v : integer_kernel(rows, d + 1)) {
    v.pop_back();
    proj.push_back(std::move(v));
  }
  return hermite_normal_form(std::move(proj), d);
}

}  // namespace plde
