#include "plde/solver/rational.hpp"

#include "plde/algebra/matrix.hpp"

namespace plde {

namespace {

Poly lcm_den(const std::vector<RatFun>& v, Poly d = Poly(1)) {
  for (const auto& r : v) d = lcm(d, r.den());
  return d;
}

// n (n-1) ... (n-i+1) as a polynomial in n
Poly falling_factorial(int i) {
  Poly r(1);
  for (int j = 0; j < i; ++j) r *= Poly::x() - Poly(Constant(j));
  return r;
}

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::vector<RationalTuple> solve_shift1(const std::vector<RatFun>& a, const std::vector<RatFun>& f);

}  // namespace

Poly universal_denominator(const Poly& p0, const Poly& pm, int m) {
  Poly A = pm.shift(Constant(-m)), B = p0;
  Poly U(1);
  if (A.degree() <= 0 || B.degree() <= 0) return U;
  auto disp = dispersion(A, B);
  if (disp.empty()) return U;
  for (long i = disp.back(); i >= 0; --i) {
    Poly d = gcd(A, B.shift(Constant(i)));
    if (d.degree() <= 0) continue;
    A = exact_div(A, d);
    B = exact_div(B, d.shift(Constant(-i)));
    for (long j = 0; j <= i; ++j) U *= d.shift(Constant(-j));
  }
  return U.monic();
}

int polynomial_degree_bound(const std::vector<Poly>& p, int rhs_degree) {
  int m = static_cast<int>(p.size()) - 1;
  // sum_k p_k sigma^k = sum_i b_i Delta^i with b_i = sum_{k>=i} C(k,i) p_k
  std::vector<Poly> b(m + 1);
  for (int i = 0; i <= m; ++i)
    for (int k = i; k <= m; ++k) b[i] += p[k] * Constant(Rational(binomial(k, i)));
  bool have = false;
  int beta = 0;
  for (int i = 0; i <= m; ++i) {
    if (b[i].is_zero()) continue;
    int v = b[i].degree() - i;
    if (!have || v > beta) beta = v;
    have = true;
  }
  if (!have) throw Error("zero operator");
  Poly ind;
  for (int i = 0; i <= m; ++i)
    if (!b[i].is_zero() && b[i].degree() - i == beta) ind += falling_factorial(i) * b[i].lc();
  int bound = rhs_degree >= 0 ? rhs_degree - beta : -1;
  for (long r : nonnegative_integer_roots(ind)) bound = std::max<long>(bound, r);
  return bound;
}

std::vector<RationalTuple> solve_rational(const std::vector<RatFun>& a, const std::vector<RatFun>& f,
                                          const Constant& shift) {
  if (shift.is_one()) return solve_shift1(a, f);
  // x = shift * z turns sigma: x -> x + shift into z -> z + 1
  std::vector<RatFun> as, fs;
  for (const auto& v : a) as.push_back(v.scale(shift));
  for (const auto& v : f) fs.push_back(v.scale(shift));
  auto out = solve_shift1(as, fs);
  Constant inv = shift.inverse();
  for (auto& t : out) t.g = t.g.scale(inv);
  return out;
}

namespace {

std::vector<RationalTuple> solve_shift1(const std::vector<RatFun>& a0, const std::vector<RatFun>& f) {
  int d = static_cast<int>(f.size());
  int lo = 0, hi = static_cast<int>(a0.size()) - 1;
  while (lo <= hi && a0[lo].is_zero()) ++lo;
  while (hi >= lo && a0[hi].is_zero()) --hi;
  if (lo > hi) throw Error("zero operator");
  std::vector<RatFun> a(a0.begin() + lo, a0.begin() + hi + 1);
  int m = hi - lo;
  std::vector<RationalTuple> out;
  auto unit = [&](int j) {
    std::vector<Constant> c(d);
    c[j] = Constant(1);
    return c;
  };
  if (m == 0) {
    RatFun inv = a[0].inverse();
    for (int j = 0; j < d; ++j) out.push_back({unit(j), f[j] * inv});
  } else {
    Poly den = lcm_den(f, lcm_den(a));
    std::vector<Poly> P;
    for (const auto& v : a) P.push_back((v * RatFun(den)).num());
    std::vector<Poly> Q;
    for (const auto& v : f) Q.push_back((v * RatFun(den)).num());
    Poly U = universal_denominator(P[0], P[m], m);
    Poly L(1);
    for (int k = 0; k <= m; ++k) L = lcm(L, U.shift(Constant(k)));
    std::vector<Poly> A;
    for (int k = 0; k <= m; ++k) A.push_back(P[k] * exact_div(L, U.shift(Constant(k))));
    int rhs_deg = -1;
    for (auto& q : Q) {
      q = q * L;
      if (!q.is_zero()) rhs_deg = std::max(rhs_deg, q.degree());
    }
    int N = polynomial_degree_bound(A, rhs_deg);
    // unknowns: c_1..c_d, p_0..p_N
    int maxA = 0;
    for (const auto& p : A)
      if (!p.is_zero()) maxA = std::max(maxA, p.degree());
    int rows = std::max(rhs_deg, N + maxA) + 1;
    int cols = d + std::max(N + 1, 0);
    Matrix<Constant> M(std::max(rows, 1), cols);
    for (int j = 0; j < d; ++j)
      for (int e = 0; e <= Q[j].degree(); ++e) M(e, j) = -Q[j].coeff(e);
    for (int n = 0; n <= N; ++n) {
      Poly img;
      for (int k = 0; k <= m; ++k) img += A[k] * Poly::monomial(Constant(1), n).shift(Constant(k));
      for (int e = 0; e <= img.degree(); ++e) M(e, d + n) = img.coeff(e);
    }
    for (const auto& v : nullspace(M)) {
      RationalTuple t;
      t.c.assign(v.begin(), v.begin() + d);
      std::vector<Constant> pc(v.begin() + d, v.end());
      t.g = RatFun(Poly(std::move(pc)), U);
      out.push_back(std::move(t));
    }
  }
  // a0 = (0..0, a): g(x) = G(x - lo)
  if (lo > 0)
    for (auto& t : out) t.g = t.g.shift(Constant(-lo));
  return out;
}

}  // namespace

}  // namespace plde
