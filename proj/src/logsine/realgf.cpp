#include <string>

#include "lsm/logsine/logsine.hpp"
#include "lsm/mpcore/accel.hpp"
#include "lsm/quadrature/tanh_sinh.hpp"

namespace lsm {

namespace {

// binom(x, n) for n = 0, 1, ... requested in order
struct BinomialRun {
  Real x;
  Real value;
  const Real& operator()(long n) {
    if (n == 0) {
      value = Real(1);
    } else {
      value *= (x - Real(n - 1)) / Real(n);
    }
    return value;
  }
};

void require_unit(const Real& x, const char* who) {
  if (!(abs(x) < 1)) throw DomainError(std::string(who) + ": need |x| < 1");
}

}  // namespace

Real realgf_integral(const Real& x, const Real& y, const PrecisionContext& ctx) {
  auto g = ctx.activate();
  auto f = [&](const Real& t, const Real& fa, const Real&) {
    if (fa.is_zero()) return Real(0);
    return pow(2 * sin(fa / 2), x) * exp(t * y);
  };
  return integrate_1d_ends(f, Real(0), pi(), ctx).value;
}

// sum_n (-1)^n binom(x,n) [y((-1)^n e^{pi y} - cos(pi x/2)) - (n - x/2) sin(pi x/2)] / ((n - x/2)^2 + y^2),
// summed as a one-signed part plus an alternating part.
Real realgf_series(const Real& x, const Real& y, const PrecisionContext& ctx) {
  require_unit(x, "realgf_series");
  auto g = ctx.activate();
  Real r;
  {
    auto g2 = PrecisionGuard::bits(working_bits() + 16);
    const Real p = pi();
    Real s, c;
    sin_cos(p * x / 2, s, c);
    const Real ey = exp(p * y);
    BinomialRun b1{x, Real(1)}, b2{x, Real(1)};
    auto den = [&](long n) {
      Real d = Real(n) - x / 2;
      return d * d + y * y;
    };
    Real mono = levin_sum([&](long n) { return b1(n) * y * ey / den(n); }, ctx, "realgf_series");
    Real alt = levin_sum(
        [&](long n) {
          Real t = -b2(n) * (y * c + (Real(n) - x / 2) * s) / den(n);
          return n % 2 == 0 ? t : -t;
        },
        ctx, "realgf_series");
    r = mono + alt;
  }
  return rounded(r);
}

Real ls1_gf_integral(const Real& lambda, const PrecisionContext& ctx) {
  auto g = ctx.activate();
  auto f = [&](const Real& t, const Real& fa, const Real&) {
    if (fa.is_zero()) return Real(0);
    return t * pow(2 * sin(fa / 2), lambda);
  };
  return -integrate_1d_ends(f, Real(0), pi(), ctx).value;
}

// sum_n binom(lambda,n) ((-1)^n cos(pi lambda/2) - 1) / (n - lambda/2)^2
Real ls1_gf_series(const Real& lambda, const PrecisionContext& ctx) {
  require_unit(lambda, "ls1_gf_series");
  auto g = ctx.activate();
  Real r;
  {
    auto g2 = PrecisionGuard::bits(working_bits() + 16);
    const Real c = cos(pi() * lambda / 2);
    BinomialRun b1{lambda, Real(1)}, b2{lambda, Real(1)};
    auto den = [&](long n) {
      Real d = Real(n) - lambda / 2;
      return d * d;
    };
    Real mono = levin_sum(
        [&](long n) {
          Real t = b1(n) * c / den(n);
          return n % 2 == 0 ? t : -t;
        },
        ctx, "ls1_gf_series");
    Real alt = levin_sum([&](long n) { return -b2(n) / den(n); }, ctx, "ls1_gf_series");
    r = mono + alt;
  }
  return rounded(r);
}

}  // namespace lsm
