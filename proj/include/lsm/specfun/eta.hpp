#ifndef LSM_SPECFUN_ETA_HPP
#define LSM_SPECFUN_ETA_HPP

#include "lsm/mpcore/context.hpp"

namespace lsm {

/// Crossover below which eta_q applies the modular transformation first.
Real eta_crossover();

/// eta at nome q = e^{-t}: q^{1/24} prod (1 - q^n), t > 0.
Real eta_q(const Real& t, const PrecisionContext& ctx);

/// Pentagonal theta series evaluated directly, no transformation.
Real eta_q_direct(const Real& t, const PrecisionContext& ctx);

/// Always through eta(t) = eta(4 pi^2 / t) / sqrt(t / (2 pi)).
Real eta_q_transformed(const Real& t, const PrecisionContext& ctx);

/// The infinite product, truncated once q^n is below tolerance.
Real eta_q_product(const Real& t, const PrecisionContext& ctx);

}  // namespace lsm

#endif  // LSM_SPECFUN_ETA_HPP
