#include "lsm/specfun/eta.hpp"

namespace lsm {

namespace {

void check_t(const Real& t) {
  if (!(t > 0)) throw DomainError("eta_q: t must be positive");
}

// sum_{n in Z} (-1)^n q^{n(3n+1)/2}, stopping once the exponent passes the tolerance
Real pentagonal(const Real& t) {
  const Real cutoff = Real(working_bits() + 8) * ln2();
  Real sum(1);
  for (long n = 1;; ++n) {
    Real e1 = t * Real(n * (3 * n - 1) / 2);
    if (e1 > cutoff) break;
    Real term = exp(-e1) + exp(-t * Real(n * (3 * n + 1) / 2));
    if (n % 2) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum * exp(-t / 24);
}

}  // namespace

Real eta_crossover() { return pi() * sqrt(Real(2)); }

Real eta_q_direct(const Real& t, const PrecisionContext& ctx) {
  check_t(t);
  auto g = ctx.activate();
  return pentagonal(t);
}

Real eta_q_transformed(const Real& t, const PrecisionContext& ctx) {
  check_t(t);
  auto g = ctx.activate();
  Real two_pi = pi() * 2;
  Real dual = two_pi * two_pi / t;
  return pentagonal(dual) / sqrt(t / two_pi);
}

Real eta_q(const Real& t, const PrecisionContext& ctx) {
  check_t(t);
  auto g = ctx.activate();
  return t < eta_crossover() ? eta_q_transformed(t, ctx) : eta_q_direct(t, ctx);
}

Real eta_q_product(const Real& t, const PrecisionContext& ctx) {
  check_t(t);
  auto g = ctx.activate();
  const Real cutoff = Real(working_bits() + 8) * ln2();
  Real prod(1);
  for (long n = 1;; ++n) {
    Real e = t * Real(n);
    if (e > cutoff) break;
    if (n > ctx.max_terms) throw PrecisionExhausted("eta_q_product: too many factors");
    prod *= Real(1) - exp(-e);
  }
  return prod * exp(-t / 24);
}

}  // namespace lsm
