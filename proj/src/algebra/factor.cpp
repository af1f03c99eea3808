#include "plde/algebra/factor.hpp"

#include <algorithm>
#include <random>

namespace plde {

namespace {

// ---- dense polynomials over Z/p, lowest degree first ----

using ModPoly = std::vector<long>;

void mtrim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long mod(long a, long p) {
  a %= p;
  return a < 0 ? a + p : a;
}

long inv_mod(long a, long p) {
  long t = 0, nt = 1, r = p, nr = mod(a, p);
  while (nr) {
    long q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  return mod(t, p);
}

ModPoly msub(const ModPoly& a, const ModPoly& b, long p) {
  ModPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = mod(r[i] - b[i], p);
  mtrim(r);
  return r;
}

ModPoly mmul(const ModPoly& a, const ModPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  mtrim(r);
  return r;
}

void mdivmod(const ModPoly& a, const ModPoly& b, long p, ModPoly& q, ModPoly& r) {
  r = a;
  mtrim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
  long inv = inv_mod(b.back(), p);
  while (r.size() >= b.size() && !r.empty()) {
    size_t s = r.size() - b.size();
    long c = r.back() * inv % p;
    q[s] = c;
    for (size_t j = 0; j < b.size(); ++j) r[s + j] = mod(r[s + j] - c * b[j], p);
    mtrim(r);
  }
  mtrim(q);
}

ModPoly mrem(const ModPoly& a, const ModPoly& b, long p) {
  ModPoly q, r;
  mdivmod(a, b, p, q, r);
  return r;
}

ModPoly mmonic(ModPoly a, long p) {
  if (a.empty()) return a;
  long inv = inv_mod(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

ModPoly mgcd(ModPoly a, ModPoly b, long p) {
  mtrim(a);
  mtrim(b);
  while (!b.empty()) {
    ModPoly r = mrem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mmonic(a, p);
}

ModPoly mpowmod(ModPoly base, Integer e, const ModPoly& f, long p) {
  ModPoly result = {1};
  base = mrem(base, f, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = mrem(mmul(result, base, p), f, p);
    e >>= 1;
    if (e > 0) base = mrem(mmul(base, base, p), f, p);
  }
  return result;
}

ModPoly mderiv(const ModPoly& a, long p) {
  ModPoly r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(static_cast<long>(i) % p * a[i] % p);
  mtrim(r);
  return r;
}

// Extended Euclid: s*a + t*b = 1 mod p for coprime a, b.
void mbezout(const ModPoly& a, const ModPoly& b, long p, ModPoly& s, ModPoly& t) {
  ModPoly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    ModPoly q, r;
    mdivmod(r0, r1, p, q, r);
    ModPoly s2 = msub(s0, mmul(q, s1, p), p);
    ModPoly t2 = msub(t0, mmul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  long inv = inv_mod(r0.at(0), p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  s = s0;
  t = t0;
}

// Cantor-Zassenhaus for a monic square-free f over Z/p, p odd.
void equal_degree_split(const ModPoly& f, int d, long p, std::mt19937_64& rng,
                        std::vector<ModPoly>& out) {
  int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<long> dist(0, p - 1);
  while (true) {
    ModPoly a(n);
    for (auto& c : a) c = dist(rng);
    mtrim(a);
    if (a.size() < 2) continue;
    ModPoly g = mgcd(a, f, p);
    if (g.size() > 1 && g.size() < f.size()) {
      ModPoly q, r;
      mdivmod(f, g, p, q, r);
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(mmonic(q, p), d, p, rng, out);
      return;
    }
    ModPoly b = mpowmod(a, e, f, p);
    b = msub(b, {1}, p);
    g = mgcd(b, f, p);
    if (g.size() > 1 && g.size() < f.size()) {
      ModPoly q, r;
      mdivmod(f, g, p, q, r);
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(mmonic(q, p), d, p, rng, out);
      return;
    }
  }
}

std::vector<ModPoly> factor_mod(const ModPoly& f_in, long p) {
  std::mt19937_64 rng(0x5eed);
  std::vector<ModPoly> out;
  ModPoly f = mmonic(f_in, p);
  ModPoly h = {0, 1};
  int i = 0;
  while (static_cast<int>(f.size()) - 1 >= 2 * (i + 1)) {
    ++i;
    h = mpowmod(h, Integer(p), f, p);
    ModPoly g = mgcd(msub(h, {0, 1}, p), f, p);
    if (g.size() > 1) {
      equal_degree_split(g, i, p, rng, out);
      ModPoly q, r;
      mdivmod(f, g, p, q, r);
      f = mmonic(q, p);
      h = mrem(h, f, p);
    }
  }
  if (f.size() > 1) out.push_back(f);
  return out;
}

// ---- integer polynomials ----

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly to_mod(const ZPoly& a, long p) {
  ModPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    Integer m = a[i] % p;
    if (m < 0) m += p;
    r[i] = m.get_si();
  }
  mtrim(r);
  return r;
}

ZPoly to_z(const ModPoly& a) {
  ZPoly r(a.begin(), a.end());
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

// Reduce coefficients into the symmetric range of Z/q.
void zsym(ZPoly& a, const Integer& q) {
  Integer half = q / 2;
  for (auto& c : a) {
    c %= q;
    if (c < 0) c += q;
    if (c > half) c -= q;
  }
  ztrim(a);
}

Integer zcontent(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// Exact division over Z; returns false if b does not divide a.
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  ZPoly r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (r.size() >= b.size() && !r.empty()) {
    size_t s = r.size() - b.size();
    if (!mpz_divisible_p(r.back().get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer c = r.back() / b.back();
    q[s] = c;
    for (size_t j = 0; j < b.size(); ++j) r[s + j] -= c * b[j];
    ztrim(r);
  }
  ztrim(q);
  return r.empty();
}

// Lift F = lc * g_1 ... g_r (mod p), g_i monic, to the same form mod q.
std::vector<ZPoly> hensel_lift(const ZPoly& F, const std::vector<ModPoly>& gs, long p,
                               const Integer& target) {
  std::vector<ZPoly> lifted;
  ZPoly rest = F;
  for (size_t idx = 0; idx + 1 < gs.size(); ++idx) {
    // Split rest = g * h with g monic; h carries the remaining factors.
    ModPoly gm = gs[idx];
    ModPoly hm = {rest.empty() ? 0 : to_mod({rest.back()}, p).at(0)};
    for (size_t k = idx + 1; k < gs.size(); ++k) hm = mmul(hm, gs[k], p);
    ModPoly s, t;
    mbezout(gm, hm, p, s, t);
    ZPoly g = to_z(gm), h = to_z(hm);
    Integer q = p;
    while (q < target) {
      ZPoly e = rest;
      ZPoly gh = zmul(g, h);
      for (size_t i = 0; i < gh.size(); ++i) {
        if (i >= e.size()) e.resize(i + 1);
        e[i] -= gh[i];
      }
      ztrim(e);
      for (auto& c : e) c /= q;  // exact: rest = g*h mod q
      ModPoly em = to_mod(e, p);
      ModPoly quo, rem;
      mdivmod(mmul(t, em, p), gm, p, quo, rem);
      ModPoly dh = msub(mmul(s, em, p), msub({}, mmul(quo, hm, p), p), p);
      ZPoly dg = to_z(rem), dhz = to_z(dh);
      for (size_t i = 0; i < dg.size(); ++i) {
        if (i >= g.size()) g.resize(i + 1);
        g[i] += q * dg[i];
      }
      for (size_t i = 0; i < dhz.size(); ++i) {
        if (i >= h.size()) h.resize(i + 1);
        h[i] += q * dhz[i];
      }
      q *= p;
      gm = to_mod(g, p);
      hm = to_mod(h, p);
      ztrim(g);
      ztrim(h);
    }
    zsym(g, q);
    zsym(h, q);
    lifted.push_back(g);
    rest = h;
  }
  // The last factor: make it monic modulo q.
  Integer q = p;
  while (q < target) q *= p;
  Integer lc = rest.back();
  Integer inv;
  mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), q.get_mpz_t());
  for (auto& c : rest) c *= inv;
  zsym(rest, q);
  lifted.push_back(rest);
  return lifted;
}

// Irreducible factors of a primitive square-free integer polynomial with
// positive leading coefficient and no rational roots.
std::vector<ZPoly> zassenhaus(const ZPoly& F) {
  int n = static_cast<int>(F.size()) - 1;
  if (n <= 1) return {F};
  if (n <= 3) return {F};  // no rational roots, so irreducible
  // Choose a prime with F mod p square-free and deg preserved.
  long p = 3;
  auto is_prime = [](long v) {
    for (long d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  };
  ModPoly fm;
  for (;; p += 2) {
    if (!is_prime(p)) continue;
    fm = to_mod(F, p);
    if (static_cast<int>(fm.size()) - 1 != n) continue;
    if (mgcd(fm, mderiv(fm, p), p).size() == 1) break;
  }
  auto gs = factor_mod(fm, p);
  if (gs.size() == 1) return {F};
  // Coefficient bound for factors (Mignotte), times the leading coefficient.
  Integer norm = 0;
  for (const auto& c : F) norm += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm.get_mpz_t());
  root += 1;
  Integer bound = root * F.back();
  bound <<= static_cast<unsigned long>(n);
  Integer target = 2 * bound + 1;
  std::sort(gs.begin(), gs.end(), [](const ModPoly& a, const ModPoly& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  auto lifted = hensel_lift(F, gs, p, target);
  Integer q = p;
  while (q < target) q *= p;

  std::vector<ZPoly> result;
  ZPoly rest = F;
  std::vector<ZPoly> pool = lifted;
  int s = 1;
  while (2 * s <= static_cast<int>(pool.size())) {
    bool found = false;
    int r = static_cast<int>(pool.size());
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ZPoly cand = {rest.back()};
      for (int i : idx) cand = zmul(cand, pool[i]);
      zsym(cand, q);
      Integer c = zcontent(cand);
      for (auto& v : cand) v /= c;
      ZPoly quo;
      if (zdivides(rest, cand, quo)) {
        if (cand.back() < 0)
          for (auto& v : cand) v = -v;
        result.push_back(cand);
        rest = quo;
        std::vector<ZPoly> np;
        for (int i = 0; i < r; ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) np.push_back(pool[i]);
        pool = np;
        found = true;
        break;
      }
      // next combination
      int k = s - 1;
      while (k >= 0 && idx[k] == r - s + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int i = k + 1; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.size() > 1) {
    Integer c = zcontent(rest);
    for (auto& v : rest) v /= c;
    if (rest.back() < 0)
      for (auto& v : rest) v = -v;
    result.push_back(rest);
  }
  return result;
}

Poly from_z(const ZPoly& a) {
  std::vector<Constant> c(a.begin(), a.end());
  return Poly(std::move(c)).monic();
}

bool all_rational(const Poly& p) {
  for (const auto& c : p.coeffs())
    if (!c.is_rational()) return false;
  return true;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    auto ca = a.coeff(i).coords(1)[0], cb = b.coeff(i).coords(1)[0];
    if (ca != cb) return ca < cb;
  }
  return a.str() < b.str();
}

// Rational roots of a rational polynomial via candidates num | a0, den | lc.
std::vector<Rational> rational_roots(const Poly& f) {
  ZPoly z;
  Integer den = 1;
  for (const auto& c : f.coeffs())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  for (const auto& c : f.coeffs()) z.push_back(Integer(c.rational() * den));
  std::vector<Rational> roots;
  int k = 0;
  while (k < static_cast<int>(z.size()) && z[k] == 0) ++k;
  if (k > 0) roots.emplace_back(0);
  if (k + 1 >= static_cast<int>(z.size())) return roots;
  auto divisors = [](Integer v) {
    v = abs(v);
    std::vector<Integer> ds;
    // trial division; coefficients in this setting are small
    for (Integer d = 1; d * d <= v; ++d) {
      if (v % d == 0) {
        ds.push_back(d);
        if (d * d != v) ds.push_back(v / d);
      }
      if (d > 2000000) throw Error("coefficient too large for rational root search");
    }
    return ds;
  };
  auto nums = divisors(z[k]);
  auto dens = divisors(z.back());
  std::vector<Rational> seen;
  for (const auto& a : nums) {
    for (const auto& b : dens) {
      for (int sgnv : {1, -1}) {
        Rational r(Integer(a * sgnv), b);
        r.canonicalize();
        if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
        seen.push_back(r);
        if (f.eval(Constant(r)).is_zero()) roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

Factorization factor_univariate(const Poly& p) {
  if (p.is_zero()) throw Error("factor_univariate of zero");
  Factorization out;
  out.content = p.lc();
  if (p.degree() <= 0) return out;
  for (const auto& [sqf, mult] : squarefree_decomposition(p)) {
    Poly f = sqf;
    std::vector<Poly> irr;
    if (all_rational(f)) {
      for (const auto& r : rational_roots(f)) {
        Poly lin = Poly::x() - Poly(Constant(r));
        irr.push_back(lin);
        f = exact_div(f, lin);
      }
      if (f.degree() > 0) {
        Integer den = 1;
        for (const auto& c : f.coeffs())
          mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
        ZPoly z;
        for (const auto& c : f.coeffs()) z.push_back(Integer(c.rational() * den));
        Integer cont = zcontent(z);
        for (auto& v : z) v /= cont;
        if (z.back() < 0)
          for (auto& v : z) v = -v;
        for (const auto& g : zassenhaus(z)) irr.push_back(from_z(g));
      }
    } else {
      // Linear factors with integer roots only.
      std::vector<Rational> roots;
      for (long r : integer_roots(f, -1000, 1000)) roots.emplace_back(r);
      for (const auto& r : roots) {
        Poly lin = Poly::x() - Poly(Constant(r));
        irr.push_back(lin);
        f = exact_div(f, lin);
      }
      if (f.degree() > 0) irr.push_back(f.monic());
    }
    for (const auto& g : irr)
      for (int i = 0; i < mult; ++i) out.factors.push_back(g);
  }
  std::sort(out.factors.begin(), out.factors.end(), poly_less);
  return out;
}

std::vector<Poly> monic_divisors(const Poly& p) {
  auto fac = factor_univariate(p);
  // group equal factors
  std::vector<std::pair<Poly, int>> groups;
  for (const auto& f : fac.factors) {
    if (!groups.empty() && groups.back().first == f) {
      ++groups.back().second;
    } else {
      groups.emplace_back(f, 1);
    }
  }
  std::vector<Poly> divs = {Poly(1)};
  for (const auto& [f, e] : groups) {
    std::vector<Poly> next;
    for (const auto& d : divs) {
      Poly cur = d;
      for (int i = 0; i <= e; ++i) {
        next.push_back(cur);
        cur *= f;
      }
    }
    divs = std::move(next);
  }
  std::stable_sort(divs.begin(), divs.end(),
                   [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
  return divs;
}

}  // namespace plde
