#include <vector>

#include "lsm/mahler/mahler.hpp"
#include "lsm/specfun/hypergeometric.hpp"
#include "lsm/specfun/zeta.hpp"

namespace lsm {

namespace {

// weights w_j, j = -m..m, with sum w_j j^p = k! [p == k] for p = 0..2m
std::vector<Rational> stencil(int k, int m) {
  const int n = 2 * m + 1;
  std::vector<std::vector<Rational>> a(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n + 1)));
  for (int p = 0; p < n; ++p) {
    for (int j = -m; j <= m; ++j) {
      Rational v(1);
      for (int e = 0; e < p; ++e) v *= j;
      a[p][j + m] = v;
    }
    a[p][n] = p == k ? Rational(factorial(k)) : Rational(0);
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[c], a[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (int q = c; q <= n; ++q) a[r][q] -= f * a[c][q];
    }
  }
  std::vector<Rational> w(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r) w[r] = a[r][n] / a[r][r];
  return w;
}

}  // namespace

Real walk_moment(int n, const Real& s, const PrecisionContext& ctx) {
  auto g = ctx.activate();
  Real r;
  {
    auto g2 = PrecisionGuard::bits(working_bits() + 16);
    if (n == 2) {
      r = gamma(1 + s) / pow(gamma(1 + s / 2), 2L);
    } else if (n == 3) {
      if (!(abs(s) < 2)) throw DomainError("walk_moment: W_3 needs |s| < 2");
      const Real a = (s + 2) / 2;
      Real f = hypergeometric_pfq(std::vector<Real>{a, a, a}, std::vector<Real>{Real(1), (s + 3) / 2}, Real(1) / 4,
                                  ctx.raised(3));
      r = sqrt(Real(3)) / (2 * pi()) * pow(Real(3), s + 1) * pow(gamma(1 + s / 2), 2L) / gamma(s + 2) * f;
    } else {
      throw DomainError("walk_moment: only n = 2 and n = 3 are implemented");
    }
  }
  return rounded(r);
}

// Central differences on 2k+3 points with step h = 10^(-D/(k+1)), evaluated
// with k D/(k+1) extra digits.
Real walk_derivative(int n, int k, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("walk_derivative: k must be at least 1");
  if (n == 4) {
    auto g = ctx.activate();
    if (k == 1) return rounded(Real(7) / 2 * zeta(3, ctx) / (pi() * pi()));
    if (k == 2) return mu2_1pxyz().eval(ctx);
    throw DomainError("walk_derivative: no closed form for W_4 beyond k = 2");
  }
  if (n != 2 && n != 3) throw DomainError("walk_derivative: n must be 2, 3 or 4");
  const int D = ctx.target_digits;
  const int extra = k * D / (k + 1) + 5;
  const PrecisionContext raised = ctx.raised(extra);
  const int m = k + 1;
  std::vector<Rational> w = stencil(k, m);
  Real r;
  {
    auto g = raised.activate();
    const Real h = pow(Real(10), Real(-D) / Real(k + 1));
    Real sum(0);
    for (int j = -m; j <= m; ++j) {
      const Rational& wj = w[static_cast<size_t>(j + m)];
      if (wj == 0) continue;
      sum += Real(wj) * walk_moment(n, h * Real(j), raised);
    }
    r = sum / pow(h, static_cast<long>(k));
  }
  auto g = ctx.activate();
  return rounded(r);
}

}  // namespace lsm
