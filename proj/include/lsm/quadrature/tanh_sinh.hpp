#ifndef LSM_QUADRATURE_TANH_SINH_HPP
#define LSM_QUADRATURE_TANH_SINH_HPP

#include <functional>
#include <vector>

#include "lsm/mpcore/context.hpp"

namespace lsm {

struct QuadResult {
  Real value;
  /// Error estimate from the last three level sums.
  Real error;
  int level = 0;
  long evaluations = 0;
  bool converged = false;
};

using Integrand = std::function<Real(const Real&)>;
/// Receives x together with x - a and b - x, both computed without cancellation,
/// so integrands singular at an endpoint can be evaluated near it accurately.
using EndpointIntegrand = std::function<Real(const Real& x, const Real& from_a, const Real& to_b)>;

/// Tanh-sinh on [a, b] at the current working precision. Halves the step until
/// the error estimate drops below `tol` or `max_level` is reached.
QuadResult tanh_sinh(const EndpointIntegrand& f, const Real& a, const Real& b, const Real& tol, int max_level);

/// Integral to ctx's tail tolerance; throws PrecisionExhausted if the level
/// budget runs out.
QuadResult integrate_1d(const Integrand& f, const Real& a, const Real& b, const PrecisionContext& ctx);
QuadResult integrate_1d_ends(const EndpointIntegrand& f, const Real& a, const Real& b, const PrecisionContext& ctx);

/// Sum over consecutive pieces [p_0, p_1], [p_1, p_2], ...; points must be increasing.
QuadResult integrate_1d_split(const EndpointIntegrand& f, const std::vector<Real>& points,
                              const PrecisionContext& ctx);

struct QuadResultD {
  double value = 0;
  double error = 0;
  int level = 0;
  long evaluations = 0;
  bool converged = false;
};

using EndpointIntegrandD = std::function<double(double x, double from_a, double to_b)>;

/// Double-precision tanh-sinh with the same stopping rule.
QuadResultD tanh_sinh_d(const EndpointIntegrandD& f, double a, double b, double tol, int max_level = 9);

}  // namespace lsm

#endif  // LSM_QUADRATURE_TANH_SINH_HPP
