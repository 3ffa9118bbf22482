#ifndef LSM_SPECFUN_ZETA_HPP
#define LSM_SPECFUN_ZETA_HPP

#include "lsm/mpcore/context.hpp"
#include "lsm/mpcore/real.hpp"

namespace lsm {

/// Bernoulli number B_n with B_1 = -1/2. Exact; memoised.
Rational bernoulli(int n);

/// zeta(s) for integer s != 1 at the current working precision. s >= 2 uses
/// an accelerated alternating (eta) series with integer weights; s <= 0 uses Bernoulli numbers.
/// Memoised per (s, precision).
Real zeta(int s);

/// zeta(s) for integer s >= 2 to ctx's working precision.
Real zeta(int s, const PrecisionContext& ctx);

/// Exact zeta(2k) / pi^{2k} (a rational).
Rational zeta_even_over_pi_power(int k);

}  // namespace lsm

#endif  // LSM_SPECFUN_ZETA_HPP
