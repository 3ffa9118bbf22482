#include "lsm/logsine/binomial_sums.hpp"

namespace lsm {

Real central_binomial_sum(BinomialSign sign, int n, const PrecisionContext& ctx) {
  if (n < 2) throw DomainError("central_binomial_sum: n must be at least 2");
  auto g = ctx.activate();
  Real sum(0);
  {
    auto g2 = PrecisionGuard::bits(working_bits() + 16);
    const Real eps = ldexp(Real(1), -working_bits());
    // 1/binom(2k,k) updated by the ratio (k+1)/(2(2k+1)); terms shrink at least 4x
    Real inv_binom = Real(1) / 2;
    for (long k = 1;; ++k) {
      if (k > ctx.max_terms) throw PrecisionExhausted("central_binomial_sum: too many terms");
      Real t = inv_binom / pow(Real(k), static_cast<long>(n));
      if (sign == BinomialSign::Minus && k % 2 == 0) {
        sum -= t;
      } else {
        sum += t;
      }
      if (t < eps * abs(sum)) break;
      inv_binom *= Real(k + 1) / Real(2 * (2 * k + 1));
    }
  }
  return rounded(sum);
}

}  // namespace lsm
