#ifndef LSM_QUADRATURE_CUBATURE_HPP
#define LSM_QUADRATURE_CUBATURE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "lsm/mpcore/context.hpp"

namespace lsm {

enum class NdMethod { NestedTanhSinh, Qmc };

/// Integrand on the unit cube [0,1]^dim, evaluated in double precision.
using NdIntegrand = std::function<double(const std::vector<double>& x)>;

/// Interior break points along `axis` given the outer coordinates x_0..x_{axis-1}
/// (the vector passed has exactly `axis` entries). Points outside (0,1) are ignored.
using NdBreakpoints = std::function<std::vector<double>(size_t axis, const std::vector<double>& outer)>;

struct NdOptions {
  /// Absolute tolerance; 0 means take it from the context (floored at 1e-13).
  double tolerance = 0;
  int max_level = 9;
  NdBreakpoints breakpoints;
  long qmc_points = 1L << 16;
  int qmc_replicas = 8;
  std::uint64_t seed = 0x5eed5eedULL;
};

struct NdResult {
  double value = 0;
  /// Nested: outer estimate plus the propagated inner estimates.
  /// Qmc: standard error of the replica means.
  double error = 0;
  long evaluations = 0;
  /// Inner integrals that stopped on the level budget (nested only).
  long unconverged_inner = 0;
};

/// Integral over [0,1]^dim, dim in 1..4. Nested tanh-sinh throws
/// PrecisionExhausted when the outermost integral does not converge.
NdResult integrate_nd(const NdIntegrand& f, int dim, NdMethod method, const PrecisionContext& ctx,
                      const NdOptions& options = {});

/// The default method for a dimension: nested up to 3, qmc for 4.
NdMethod default_method(int dim);

}  // namespace lsm

#endif  // LSM_QUADRATURE_CUBATURE_HPP
