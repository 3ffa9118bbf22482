#include "lsm/specfun/hypergeometric.hpp"

#include <limits>
#include <optional>

#include "lsm/mpcore/accel.hpp"

namespace lsm {

namespace {

std::optional<long> nonpositive_integer(const Real& a) {
  if (a > 0) return std::nullopt;
  if (floor(a) != a) return std::nullopt;
  return -a.to_long();
}

Real term_ratio(const std::vector<Real>& upper, const std::vector<Real>& lower, const Real& z, long k) {
  Real r = z / Real(k + 1);
  for (const auto& a : upper) r *= a + Real(k);
  for (const auto& b : lower) r /= b + Real(k);
  return r;
}

}  // namespace

Real hypergeometric_pfq(const std::vector<Real>& upper, const std::vector<Real>& lower, const Real& z,
                        const PrecisionContext& ctx) {
  auto g = ctx.activate();
  std::optional<long> stop;
  for (const auto& a : upper) {
    if (auto m = nonpositive_integer(a)) stop = stop ? std::min(*stop, *m) : *m;
  }
  for (const auto& b : lower) {
    if (auto n = nonpositive_integer(b)) {
      if (!stop || *n < *stop) throw DomainError("hypergeometric_pfq: lower parameter is a pole");
    }
  }
  Real result;
  {
    auto g2 = PrecisionGuard::bits(working_bits() + 16);
    if (stop) {
      Real sum(0), t(1);
      for (long k = 0; k <= *stop; ++k) {
        sum += t;
        t *= term_ratio(upper, lower, z, k);
      }
      result = sum;
    } else if (z.is_zero()) {
      result = Real(1);
    } else {
      const size_t p = upper.size(), q = lower.size();
      if (p > q + 1) throw DomainError("hypergeometric_pfq: divergent series (p > q + 1)");
      Real az = abs(z);
      if (p == q + 1 && az > 1) throw DomainError("hypergeometric_pfq: divergent series (|z| > 1)");
      const Real eps = ldexp(Real(1), -working_bits());
      if (p <= q || az < 1) {
        Real rho = p <= q ? Real(1) / 2 : (az + 1) / 2;
        Real sum(0), t(1);
        for (long k = 0;; ++k) {
          if (k > ctx.max_terms) throw PrecisionExhausted("hypergeometric_pfq: too many terms");
          sum += t;
          Real r = term_ratio(upper, lower, z, k);
          t *= r;
          if (abs(r) <= rho && abs(t) * rho / (Real(1) - rho) < eps * max(Real(1), abs(sum))) break;
        }
        result = sum;
      } else {
        Real excess(0);
        for (const auto& b : lower) excess += b;
        for (const auto& a : upper) excess -= a;
        const bool alternating = z < 0;
        if (!(excess > 0) && !(alternating && excess > -1)) {
          throw DomainError("hypergeometric_pfq: divergent on |z| = 1 (parameter excess too small)");
        }
        Real t;
        result = levin_sum(
            [&](long k) {
              // levin_sum asks for k = 0, 1, ... in order
              if (k == 0) {
                t = Real(1);
              } else {
                t *= term_ratio(upper, lower, z, k - 1);
              }
              return t;
            },
            ctx, "hypergeometric_pfq");
      }
    }
  }
  return rounded(result);
}

Real hypergeometric_pfq(const std::vector<Rational>& upper, const std::vector<Rational>& lower, const Real& z,
                        const PrecisionContext& ctx) {
  auto g = ctx.activate();
  auto g2 = PrecisionGuard::bits(working_bits() + 16);
  std::vector<Real> u, l;
  for (const auto& a : upper) u.emplace_back(a);
  for (const auto& b : lower) l.emplace_back(b);
  return hypergeometric_pfq(u, l, z, ctx);
}

}  // namespace lsm
