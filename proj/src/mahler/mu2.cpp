#include "lsm/logsine/logsine.hpp"
#include "lsm/mahler/mahler.hpp"
#include "lsm/quadrature/tanh_sinh.hpp"
#include "lsm/specfun/polylog.hpp"
#include "lsm/specfun/zeta.hpp"
#include "lsm/symconst/table.hpp"

namespace lsm {

namespace {

Real li2_real(const Real& x, const PrecisionContext& ctx) { return polylog(2, Complex(x), ctx).re; }

}  // namespace

Complex dilog_tau(const Real& z, const PrecisionContext& ctx) {
  if (z > 1) throw DomainError("dilog_tau: z must be at most 1");
  auto g = ctx.activate();
  Complex r;
  {
    auto g2 = PrecisionGuard::bits(working_bits() + 16);
    const Real d = 1 - 4 * z;
    Complex s = d >= 0 ? Complex(sqrt(d)) : Complex(Real(0), -sqrt(-d));
    Complex w = (Complex(1) - s) / 2L, v = (Complex(1) + s) / 2L;
    Complex lv = log(v);
    r = polylog(2, w, ctx.raised(3)) * 4L - lv * lv * 2L;
  }
  return {rounded(r.re), rounded(r.im)};
}

Real mu2_1pxy(const PrecisionContext& ctx) {
  auto g = ctx.activate();
  Real ls3 = ls_numeric(3, 0, 2 * pi() / 3, ctx.raised(2));
  return rounded(pi() * pi() / 4 + 3 * ls3 / pi());
}

Real mu2_1pxy_glaisher_form(const PrecisionContext& ctx) {
  auto g = ctx.activate();
  Real ls3 = ls_weight4_tau(Weight4Form::Ls3, 2 * pi() / 3, ctx.raised(2));
  return rounded(pi() * pi() / 4 + 3 * ls3 / pi());
}

Real mu2_1pxy_ti3_form(const PrecisionContext& ctx) {
  auto g = ctx.activate();
  const PrecisionContext inner = ctx.raised(3);
  Real r;
  {
    auto g2 = PrecisionGuard::bits(working_bits() + 16);
    const Real p = pi(), l3 = log(Real(3));
    Real ti3 = inverse_tangent_integral(3, Real(1) / sqrt(Real(3)), inner);
    Real cl2 = clausen2(p / 3);
    r = Real(24) / (5 * p) * ti3 + 2 * l3 / p * cl2 - l3 * l3 / 10 - 19 * p * p / 180;
  }
  return rounded(r);
}

Real mu2_1pxy_dilog_form(const PrecisionContext& ctx) {
  auto g = ctx.activate();
  const PrecisionContext inner = ctx.raised(2);
  auto f = [&](const Real& x) {
    Real s = sin(x);
    return li2_real(4 * s * s, inner);
  };
  Real v = integrate_1d(f, Real(0), pi() / 6, ctx).value;
  return rounded(pi() * pi() / 36 + 2 * v / pi());
}

Real dilog_re_integral(const PrecisionContext& ctx) {
  auto g = ctx.activate();
  const PrecisionContext inner = ctx.raised(2);
  auto f = [&](const Real& x, const Real&, const Real&) {
    Real s = sin(x);
    return li2_real(4 * s * s, inner);
  };
  const Real p = pi();
  Real v = integrate_1d_split(f, {Real(0), p / 6, p / 2, 5 * p / 6, p}, ctx).value;
  return rounded(2 * v / p);
}

Real dilog_inversion_integral(const PrecisionContext& ctx) {
  auto g = ctx.activate();
  const PrecisionContext inner = ctx.raised(2);
  auto f = [&](const Real& x) {
    Real s = sin(x);
    Real a = 4 * s * s;
    return li2_real(a, inner) + li2_real(Real(1) / a, inner);
  };
  return integrate_1d(f, pi() / 6, pi() / 2, ctx).value;
}

Real w3d2_series(bool printed_sign, const PrecisionContext& ctx) {
  auto g = ctx.activate();
  Real r;
  {
    auto g2 = PrecisionGuard::bits(working_bits() + 16);
    const Real p = pi();
    const Real eps = ldexp(Real(1), -working_bits());
    Real c(1), h(0), sum(0);
    for (long n = 0;; ++n) {
      if (n > ctx.max_terms) throw PrecisionExhausted("w3d2_series: too many terms");
      h += Real(1) / Real(2 * n + 1);
      Real t = c * h / (Real(2 * n + 1) * Real(2 * n + 1));
      sum += t;
      if (n > 0 && t < eps * sum) break;
      c *= Real(2 * (2 * n + 1)) / Real(16 * (n + 1));
    }
    Real cl = 4 * ln2() / p * clausen2(p / 3);
    r = p * p / 12 + (printed_sign ? -cl : cl) - Real(4) / p * sum;
  }
  return rounded(r);
}

ConstExpr mu2_1pxyz() { return closed_form("mu2.1pxyz"); }

Real mu2_1pxyz_li4_form(const PrecisionContext& ctx) {
  auto g = ctx.activate();
  const PrecisionContext inner = ctx.raised(3);
  Real r;
  {
    auto g2 = PrecisionGuard::bits(working_bits() + 16);
    const Real p = pi(), l2 = ln2();
    Real li4 = polylog(4, Complex(Real(1) / 2), inner).re;
    Real z2 = p * p / 6, z4 = pow(p, 4L) / 90;
    r = (24 * li4 - 18 * z4 + 21 * zeta(3, inner) * l2 - 6 * z2 * l2 * l2 + pow(l2, 4L)) / (p * p);
  }
  return rounded(r);
}

}  // namespace lsm
