#ifndef LSM_MPCORE_ACCEL_HPP
#define LSM_MPCORE_ACCEL_HPP

#include <functional>
#include <string>
#include <vector>

#include "lsm/mpcore/context.hpp"
#include "lsm/mpcore/real.hpp"

namespace lsm {

/// Levin u-transform of the partial sums of `terms` (terms[0] is a_1).
/// Suited to logarithmically convergent series with algebraic term decay.
/// Rounding errors in the terms are amplified roughly like 2^n, so the
/// caller should supply terms computed with about n extra bits.
Real levin_u(const std::vector<Real>& terms);

struct AcceleratedSum {
  Real value;
  Real error;  // |difference| between the two highest transform orders used
};

/// Runs levin_u on the first n and first n - step terms and reports both.
AcceleratedSum levin_u_checked(const std::vector<Real>& terms, int step = 4);

/// Sum of term(0), term(1), ... by levin_u on 24, 48, ... terms until two
/// consecutive orders agree to 10^-3 of ctx's tail tolerance. term is called
/// at the raised precision the transform needs. Throws PrecisionExhausted
/// (mentioning `who`) if 768 terms do not settle.
Real levin_sum(const std::function<Real(long)>& term, const PrecisionContext& ctx, const std::string& who);

}  // namespace lsm

#endif  // LSM_MPCORE_ACCEL_HPP
