#ifndef LSM_SPECFUN_HYPERGEOMETRIC_HPP
#define LSM_SPECFUN_HYPERGEOMETRIC_HPP

#include <vector>

#include "lsm/mpcore/context.hpp"

namespace lsm {

/// pFq(upper; lower; z) = sum prod (a)_k / prod (b)_k z^k / k!.
/// |z| < 1 is summed directly; |z| = 1 with p = q + 1 uses Levin u
/// acceleration and needs sum(lower) - sum(upper) > 0 (> -1 at z = -1).
/// Terminating series (an upper parameter in {0, -1, -2, ...}) are exact sums.
Real hypergeometric_pfq(const std::vector<Real>& upper, const std::vector<Real>& lower, const Real& z,
                        const PrecisionContext& ctx);

Real hypergeometric_pfq(const std::vector<Rational>& upper, const std::vector<Rational>& lower, const Real& z,
                        const PrecisionContext& ctx);

}  // namespace lsm

#endif  // LSM_SPECFUN_HYPERGEOMETRIC_HPP
