#include "lsm/logsine/logsine.hpp"

#include <string>

#include "lsm/logsine/binomial_sums.hpp"
#include "lsm/quadrature/tanh_sinh.hpp"
#include "lsm/specfun/polylog.hpp"
#include "lsm/specfun/zeta.hpp"
#include "lsm/symconst/table.hpp"

namespace lsm {

void LogSineSpec::validate() const {
  if (n < 1) throw DomainError("LogSineSpec: n must be at least 1");
  if (k < 0 || k > n - 1) throw DomainError("LogSineSpec: need 0 <= k <= n-1");
  if (sigma_over_pi <= 0 || sigma_over_pi > 2) throw DomainError("LogSineSpec: sigma must lie in (0, 2pi]");
}

Real LogSineSpec::sigma() const { return Real(sigma_over_pi) * pi(); }

Real ls_numeric(const LogSineSpec& spec, const PrecisionContext& ctx) {
  spec.validate();
  auto g = ctx.activate();
  return ls_numeric(spec.n, spec.k, spec.sigma(), ctx);
}

Real ls_numeric(int n, int k, const Real& sigma, const PrecisionContext& ctx) {
  if (n < 1 || k < 0 || k > n - 1) throw DomainError("ls_numeric: need n >= 1 and 0 <= k <= n-1");
  auto g = ctx.activate();
  const Real two_pi = 2 * pi();
  if (!(sigma > 0) || sigma > two_pi + ldexp(abs(two_pi), -working_bits() + 4)) {
    throw DomainError("ls_numeric: sigma must lie in (0, 2pi]");
  }
  const long m = n - 1 - k;
  Real total(0);
  {
    auto g2 = PrecisionGuard::bits(working_bits() + 16);
    const Real p = pi();
    // log(2 sin(theta/2)) changes sign at pi/3 and 5pi/3
    std::vector<Real> pts{Real(0)};
    for (const Real& z : {p / 3, 5 * p / 3}) {
      if (z < sigma) pts.push_back(z);
    }
    pts.push_back(min(sigma, 2 * p));
    const PrecisionContext piece = ctx.with_tolerance(ctx.tail_log10 - 1);
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
      const bool at_zero = i == 0;
      const bool at_two_pi = pts[i + 1] == 2 * p;
      auto f = [&](const Real& x, const Real& fa, const Real& tb) {
        const Real theta = at_zero ? fa : x;
        const Real half = at_two_pi ? tb / 2 : theta / 2;
        const Real s = 2 * sin(half);
        if (s.is_zero() || theta.is_zero()) return Real(0);
        Real v = pow(log(abs(s)), m);
        if (k > 0) v *= pow(theta, static_cast<long>(k));
        return v;
      };
      total += integrate_1d_ends(f, pts[i], pts[i + 1], piece).value;
    }
    total = -total;
  }
  return rounded(total);
}

Real ls_pi3_series(int n, const PrecisionContext& ctx) {
  if (n < 0) throw DomainError("ls_pi3_series: n must be non-negative");
  auto g = ctx.activate();
  Real r;
  {
    auto g2 = PrecisionGuard::bits(working_bits() + 16);
    const Real eps = ldexp(Real(1), -working_bits());
    // c_k = binom(2k,k)/16^k
    Real c(1), sum(0);
    for (long k = 0;; ++k) {
      if (k > ctx.max_terms) throw PrecisionExhausted("ls_pi3_series: too many terms");
      Real t = c / pow(Real(2 * k + 1), static_cast<long>(n + 1));
      sum += t;
      if (k > 0 && t < eps * sum) break;
      c *= Real(2 * (2 * k + 1)) / Real(16 * (k + 1));
    }
    r = sum * Real(factorial(n));
    if (n % 2 == 0) r = -r;
  }
  return rounded(r);
}

const ConstExpr& ls_pi3_table(int n) {
  if (n < 2 || n > 8) throw DomainError("ls_pi3_table: n must be in 2..8");
  return closed_form("ls.pi3." + std::to_string(n));
}

Real ls1_pi3_binomial(int n, const PrecisionContext& ctx) {
  if (n < 0) throw DomainError("ls1_pi3_binomial: n must be non-negative");
  Real s = central_binomial_sum(BinomialSign::Plus, n + 2, ctx);
  auto g = ctx.activate();
  Real r = -s * Real(factorial(n)) * ldexp(Real(1), -n);
  return n % 2 == 1 ? -r : r;
}

const ConstExpr& gen_ls_pi_table(int n, int k) {
  const std::string key = "lsk.pi." + std::to_string(n) + "." + std::to_string(k);
  if (!has_closed_form(key)) {
    throw DomainError("gen_ls_pi_table: no tabulated form for (" + std::to_string(n) + "," + std::to_string(k) + ")");
  }
  return closed_form(key);
}

Real ls_weight4_tau(Weight4Form which, const Real& tau, const PrecisionContext& ctx) {
  auto g = ctx.activate();
  if (!(tau > 0) || !(tau < 2 * pi())) throw DomainError("ls_weight4_tau: tau must lie in (0, 2pi)");
  const PrecisionContext inner = ctx.raised(5);
  auto cl = [&](Composition a) { return clausen_glaisher(ClKind::Cl, a, tau, inner); };
  auto gl = [&](Composition a) { return clausen_glaisher(ClKind::Gl, a, tau, inner); };
  Real r;
  {
    auto g2 = PrecisionGuard::bits(working_bits() + 16);
    const Real p = pi();
    const Real t = tau;
    switch (which) {
      case Weight4Form::Ls3:
        r = -(2 * gl({2, 1}) + t * (3 * p * p - 3 * p * t + t * t) / 12);
        break;
      case Weight4Form::Ls3k1:
        r = cl({3}) + t * cl({2}) - zeta(3, inner);
        break;
      case Weight4Form::Ls4: {
        const Real d = p - t;
        r = 6 * cl({2, 1, 1}) - Real(3) / 2 * cl({4}) - Real(3) / 2 * d * cl({3}) + Real(3) / 4 * d * d * cl({2}) +
            Real(3) / 2 * p * zeta(3, inner);
        break;
      }
      case Weight4Form::Ls4k1:
        r = pow(p, 4L) / 180 - pow(t, 4L) / 16 + p * pow(t, 3L) / 6 - p * p * t * t / 8 - 2 * gl({3, 1}) -
            2 * t * gl({2, 1});
        break;
      case Weight4Form::Ls4k2:
        r = -2 * cl({4}) + 2 * t * cl({3}) + t * t * cl({2});
        break;
    }
  }
  return rounded(r);
}

}  // namespace lsm
