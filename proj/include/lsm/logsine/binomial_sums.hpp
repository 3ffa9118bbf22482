#ifndef LSM_LOGSINE_BINOMIAL_SUMS_HPP
#define LSM_LOGSINE_BINOMIAL_SUMS_HPP

#include "lsm/mpcore/context.hpp"

namespace lsm {

enum class BinomialSign { Plus, Minus };

/// S_+(n) = sum_{k>=1} 1 / (binom(2k,k) k^n), S_-(n) the alternating version
/// with sign (-1)^{k+1}. n >= 2.
Real central_binomial_sum(BinomialSign sign, int n, const PrecisionContext& ctx);

}  // namespace lsm

#endif  // LSM_LOGSINE_BINOMIAL_SUMS_HPP
