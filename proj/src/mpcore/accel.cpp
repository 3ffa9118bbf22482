#include "lsm/mpcore/accel.hpp"

#include <optional>

#include "lsm/mpcore/context.hpp"

namespace lsm {

Real levin_u(const std::vector<Real>& terms) {
  if (terms.empty()) return Real(0);
  const long k = static_cast<long>(terms.size()) - 1;
  if (k == 0) return terms[0];
  Real r;
  {
    // the binomial weights cancel catastrophically; about 2 bits per order are lost
    auto guard = PrecisionGuard::bits(working_bits() + 3 * k + 16);
    Real num(0), den(0), s(0);
    Real binom(1);
    Real kb(k + 1);
    for (long j = 0; j <= k; ++j) {
      s += terms[static_cast<size_t>(j)];
      if (terms[static_cast<size_t>(j)].is_zero()) {
        throw PrecisionExhausted("levin_u: zero term in sequence");
      }
      Real omega = terms[static_cast<size_t>(j)] * (j + 1);
      Real w = pow(Real(j + 1) / kb, k - 1) * binom;
      if (j & 1) w = -w;
      num += w * s / omega;
      den += w / omega;
      binom = binom * (k - j) / (j + 1);
    }
    r = num / den;
  }
  return rounded(r);
}

AcceleratedSum levin_u_checked(const std::vector<Real>& terms, int step) {
  if (terms.size() <= static_cast<size_t>(step) + 2) {
    throw PrecisionExhausted("levin_u_checked: too few terms");
  }
  Real a = levin_u(terms);
  std::vector<Real> shorter(terms.begin(), terms.end() - step);
  Real b = levin_u(shorter);
  return {a, abs(a - b)};
}

Real levin_sum(const std::function<Real(long)>& term, const PrecisionContext& ctx, const std::string& who) {
  auto g = ctx.activate();
  const Real tol = ctx.tail_tolerance() / 1000;
  std::optional<Real> prev;
  for (long n = 24; n <= 768; n *= 2) {
    Real v;
    {
      auto g2 = PrecisionGuard::bits(working_bits() + 3 * n + 32);
      std::vector<Real> terms;
      terms.reserve(static_cast<size_t>(n));
      for (long j = 0; j < n; ++j) terms.push_back(term(j));
      v = levin_u(terms);
    }
    v = rounded(v);
    if (prev && abs(v - *prev) < tol) return v;
    prev = v;
  }
  throw PrecisionExhausted(who + ": Levin acceleration did not settle");
}

}  // namespace lsm
