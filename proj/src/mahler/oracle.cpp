#include <cmath>
#include <complex>

#include "lsm/mahler/mahler.hpp"
#include "lsm/quadrature/tanh_sinh.hpp"
#include "lsm/specfun/eta.hpp"
#include "lsm/specfun/zeta.hpp"

namespace lsm {

namespace {

using cd = std::complex<double>;
constexpr double kTwoPi = 2 * M_PI;

double frac(double t) { return t - std::floor(t); }
cd circle(double u) { return std::polar(1.0, kTwoPi * u); }

// Cl_2 on [0, pi] in double: theta - theta log theta + sum |B_2k| theta^{2k+1} / (2k (2k+1) (2k)!)
double clausen2_d(double t) {
  static const std::vector<double> coeff = [] {
    std::vector<double> c;
    for (int k = 1; k <= 30; ++k) {
      Rational b = abs(bernoulli(2 * k)) / (Rational(2 * k * (2 * k + 1)) * Rational(factorial(2 * k)));
      c.push_back(b.convert_to<double>());
    }
    return c;
  }();
  if (t <= 0) return 0;
  double s = t - t * std::log(t), p = t, t2 = t * t;
  for (double c : coeff) {
    p *= t2;
    double term = c * p;
    s += term;
    if (term < 1e-18 * std::abs(s)) break;
  }
  return s;
}

// angles phi/(2 pi) in [0,1) with |b + e^{i phi}| = r
std::vector<double> circle_crossings(cd b, double r) {
  double m = std::abs(b);
  if (m == 0) return {};
  double c = (r * r - m * m - 1) / (2 * m);
  if (c <= -1 || c >= 1) return {};
  double base = std::arg(b), off = std::acos(c);
  return {frac((base - off) / kTwoPi), frac((base + off) / kTwoPi)};
}

OracleValue from_nd(const NdResult& r) { return {Real(r.value), Real(r.error)}; }

// log|2 cos(pi t)| on [0,1] with its zero at t = 1/2 resolved from endpoint distances
Real log_one_plus_circle(const Real& x, const Real& fa, const Real& tb, const Real& a, const Real& b) {
  const Real half(Real(1) / 2);
  Real d;
  if (b == half) {
    d = tb;
  } else if (a == half) {
    d = fa;
  } else {
    d = abs(x - half);
  }
  return log(2 * sin(pi() * d));
}

OracleValue one_plus_x_moment(int k, bool star, const PrecisionContext& ctx) {
  auto g = ctx.activate();
  std::vector<Real> pts;
  if (star) {
    pts = {Real(0), Real(1) / 3};
  } else {
    pts = {Real(0), Real(1) / 3, Real(1) / 2, Real(2) / 3, Real(1)};
  }
  Real total(0), err(0);
  const PrecisionContext piece = ctx.with_tolerance(ctx.tail_log10 - 1);
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    const Real a = pts[i], b = pts[i + 1];
    auto f = [&](const Real& x, const Real& fa, const Real& tb) {
      if ((b == Real(1) / 2 && tb.is_zero()) || (a == Real(1) / 2 && fa.is_zero())) return Real(0);
      return pow(log_one_plus_circle(x, fa, tb, a, b), static_cast<long>(k));
    };
    QuadResult r = integrate_1d_ends(f, a, b, piece);
    total += r.value;
    err += r.error;
  }
  // the star measure integrates over [0,1/3] and [2/3,1], which are mirror images
  if (star) {
    total *= 2;
    err *= 2;
  }
  return {rounded(total), rounded(err)};
}

NdOptions options(double tol) {
  NdOptions o;
  o.tolerance = tol;
  return o;
}

// (1/pi^2) int int max{log(2 sin(theta/2)), log(2 sin(t/2))} raised to the power k
// inside the outer integral
OracleValue max_form(int k, const PrecisionContext& ctx) {
  NdOptions o = options(1e-12);
  o.breakpoints = [](size_t axis, const std::vector<double>& outer) -> std::vector<double> {
    if (axis == 0) return {1.0 / 3};
    return {outer[0]};
  };
  auto L = [](double u) { return std::log(2 * std::sin(M_PI * u / 2)); };
  if (k == 0) {
    // plain measure mu(1+x+y+z)
    auto f = [&](const std::vector<double>& x) { return std::max(L(x[0]), L(x[1])); };
    return from_nd(integrate_nd(f, 2, NdMethod::NestedTanhSinh, ctx, o));
  }
  // mu_k(1+x+y_*+z_*): outer over theta of the k-th power of the inner mean
  auto inner = [&](double u) {
    auto g = [&](double v, double, double) { return std::max(L(u), L(v)); };
    double a = tanh_sinh_d(g, 0, u, 1e-14).value;
    double b = tanh_sinh_d(g, u, 1, 1e-14).value;
    return a + b;
  };
  auto f = [&](double u, double, double) { return std::pow(inner(u), k); };
  QuadResultD r1 = tanh_sinh_d(f, 0, 1.0 / 3, 1e-12), r2 = tanh_sinh_d(f, 1.0 / 3, 1, 1e-12);
  if (!r1.converged || !r2.converged) throw PrecisionExhausted("mu_oracle: outer integral did not converge");
  return {Real(r1.value + r2.value), Real(r1.error + r2.error + 1e-13)};
}

OracleValue smyth(const PrecisionContext& ctx) {
  NdOptions o = options(1e-12);
  o.breakpoints = [](size_t axis, const std::vector<double>& outer) -> std::vector<double> {
    if (axis == 0) return {1.0 / 3, 2.0 / 3};
    return {frac(std::arg(-(1.0 + circle(outer[0]))) / kTwoPi)};
  };
  auto f = [](const std::vector<double>& x) {
    return std::log(std::max(1e-300, std::abs(1.0 + circle(x[0]) + circle(x[1]))));
  };
  return from_nd(integrate_nd(f, 2, NdMethod::NestedTanhSinh, ctx, o));
}

// mu(1+x, ..., 1+x, 1+x+y+z) = int_x log^k|1+x| int_y log^+|1+x+y|
OracleValue mixed(int k, const PrecisionContext& ctx) {
  NdOptions o = options(1e-12);
  o.breakpoints = [](size_t axis, const std::vector<double>& outer) -> std::vector<double> {
    if (axis == 0) return {1.0 / 3, 0.5, 2.0 / 3};
    return circle_crossings(1.0 + circle(outer[0]), 1.0);
  };
  auto f = [k](const std::vector<double>& x) {
    cd b = 1.0 + circle(x[0]);
    double lb = std::log(std::max(1e-300, std::abs(b)));
    double lp = std::max(0.0, std::log(std::abs(b + circle(x[1]))));
    return std::pow(lb, k) * lp;
  };
  return from_nd(integrate_nd(f, 2, NdMethod::NestedTanhSinh, ctx, o));
}

}  // namespace

double rv_inner(double a) {
  if (std::isinf(a) && a < 0) return 0;
  if (a >= M_LN2) return a;
  double th = 2 * std::asin(std::exp(a) / 2);
  return (a * th + clausen2_d(th)) / M_PI;
}

OracleValue mu2_1pxy_torus(const PrecisionContext& ctx) {
  NdOptions o = options(1e-11);
  o.breakpoints = [](size_t axis, const std::vector<double>&) -> std::vector<double> {
    if (axis == 0) return {1.0 / 12, 0.25, 5.0 / 12, 0.5, 7.0 / 12, 0.75, 11.0 / 12};
    return {0.5};
  };
  auto f = [](const std::vector<double>& x) {
    double l = std::log(std::max(1e-300, std::abs(1.0 - 2 * std::sin(kTwoPi * x[0]) * circle(x[1]))));
    return l * l;
  };
  return from_nd(integrate_nd(f, 2, NdMethod::NestedTanhSinh, ctx, o));
}

OracleValue mu_1px_1pxy_torus(const PrecisionContext& ctx) {
  NdOptions o = options(1e-12);
  o.breakpoints = [](size_t axis, const std::vector<double>& outer) -> std::vector<double> {
    if (axis == 0) return {1.0 / 3, 0.5, 2.0 / 3};
    return {frac(std::arg(-(1.0 + circle(outer[0]))) / kTwoPi)};
  };
  auto f = [](const std::vector<double>& x) {
    cd b = 1.0 + circle(x[0]);
    double lb = std::log(std::max(1e-300, std::abs(b)));
    return lb * std::log(std::max(1e-300, std::abs(b + circle(x[1]))));
  };
  return from_nd(integrate_nd(f, 2, NdMethod::NestedTanhSinh, ctx, o));
}

OracleValue mu2_1pxyz_torus(const PrecisionContext& ctx) {
  NdOptions o = options(1e-9);
  o.breakpoints = [](size_t axis, const std::vector<double>& outer) -> std::vector<double> {
    if (axis == 0) return {0.5};
    cd b = 1.0 + circle(outer[0]);
    if (axis == 1) return circle_crossings(b, 1.0);
    return {frac(std::arg(-(b + circle(outer[1]))) / kTwoPi)};
  };
  auto f = [](const std::vector<double>& x) {
    double l = std::log(std::max(1e-300, std::abs(1.0 + circle(x[0]) + circle(x[1]) + circle(x[2]))));
    return l * l;
  };
  return from_nd(integrate_nd(f, 3, NdMethod::NestedTanhSinh, ctx, o));
}

namespace {

OracleValue rv_lhs(RvConjecture which, const PrecisionContext& ctx) {
  if (which == RvConjecture::FiveTerm) {
    NdOptions o = options(1e-11);
    o.breakpoints = [](size_t axis, const std::vector<double>& outer) -> std::vector<double> {
      if (axis == 0) return {1.0 / 3, 0.5, 2.0 / 3};
      cd b = 1.0 + circle(outer[0]);
      std::vector<double> pts = circle_crossings(b, 2.0);
      pts.push_back(frac(std::arg(-b) / kTwoPi));
      return pts;
    };
    auto f = [](const std::vector<double>& x) {
      return rv_inner(std::log(std::abs(1.0 + circle(x[0]) + circle(x[1]))));
    };
    return from_nd(integrate_nd(f, 2, NdMethod::NestedTanhSinh, ctx, o));
  }
  NdOptions o;
  o.qmc_points = 1L << 17;
  o.qmc_replicas = 10;
  auto f = [](const std::vector<double>& x) {
    return rv_inner(std::log(std::abs(1.0 + circle(x[0]) + circle(x[1]) + circle(x[2]))));
  };
  return from_nd(integrate_nd(f, 3, NdMethod::Qmc, ctx, o));
}

}  // namespace

Real rv_eta_integral(RvConjecture which, const PrecisionContext& ctx) {
  auto g = ctx.activate();
  const PrecisionContext inner = ctx.raised(2);
  // integrand in t, including the power of t
  auto h = [&](const Real& t) -> Real {
    auto e = [&](long m) { return eta_q(t * Real(m), inner); };
    if (which == RvConjecture::FiveTerm) {
      Real a = e(3) * e(5), b = e(1) * e(15);
      return (pow(a, 3L) + pow(b, 3L)) * pow(t, 3L);
    }
    Real a = e(1) * e(2) * e(3) * e(6);
    return a * a * pow(t, 4L);
  };
  // [0,1] directly, [1,inf) through t = 1/s
  auto f1 = [&](const Real&, const Real& fa, const Real&) { return fa.is_zero() ? Real(0) : h(fa); };
  auto f2 = [&](const Real&, const Real& fa, const Real&) {
    if (fa.is_zero()) return Real(0);
    return h(Real(1) / fa) / (fa * fa);
  };
  Real v = integrate_1d_ends(f1, Real(0), Real(1), ctx).value + integrate_1d_ends(f2, Real(0), Real(1), ctx).value;
  Real c;
  {
    auto g2 = PrecisionGuard::bits(working_bits() + 16);
    const Real p2 = pi() * pi();
    if (which == RvConjecture::FiveTerm) {
      c = pow(Real(15) / (4 * p2), Real(5) / 2);
    } else {
      c = pow(Real(3) / p2, 3L);
    }
  }
  return rounded(c * v);
}

ConjectureCheck rv_conjecture_check(RvConjecture which, const PrecisionContext& ctx) {
  OracleValue l = rv_lhs(which, ctx);
  Real r = rv_eta_integral(which, ctx);
  auto g = ctx.activate();
  return {l.value, l.error, r, abs(l.value - r)};
}

OracleValue mu_oracle(const MeasureSpec& spec, const PrecisionContext& ctx) {
  spec.validate();
  switch (spec.family) {
    case MeasureFamily::MuK1px:
      return one_plus_x_moment(spec.k, false, ctx);
    case MeasureFamily::MuK1pxyStar:
      return one_plus_x_moment(spec.k, true, ctx);
    case MeasureFamily::MuK1pxyzStar:
      return max_form(spec.k, ctx);
    case MeasureFamily::MuMixed1x1xyz:
      return mixed(spec.k, ctx);
    case MeasureFamily::Mu2_1pxy:
      return mu2_1pxy_torus(ctx);
    case MeasureFamily::Mu2_1pxyz:
      return mu2_1pxyz_torus(ctx);
    case MeasureFamily::Mu1pxy:
      return smyth(ctx);
    case MeasureFamily::Mu1pxyz:
      return max_form(0, ctx);
    case MeasureFamily::MuLinear: {
      auto g = ctx.activate();
      return {max(log(abs(spec.a)), log(abs(spec.b))), Real(0)};
    }
    case MeasureFamily::Mu5Term:
      return rv_lhs(RvConjecture::FiveTerm, ctx);
    case MeasureFamily::Mu6Term:
      return rv_lhs(RvConjecture::SixTerm, ctx);
  }
  throw DomainError("mu_oracle: unsupported family");
}

}  // namespace lsm
