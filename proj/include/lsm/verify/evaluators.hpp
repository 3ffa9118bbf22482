#ifndef LSM_VERIFY_EVALUATORS_HPP
#define LSM_VERIFY_EVALUATORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "lsm/verify/registry.hpp"

namespace lsm {

struct Evaluation {
  Real value;
  /// Error estimate reported by double-precision oracles.
  std::optional<double> error;
};

/// Runs a named evaluator at `ctx`. Throws DomainError for unknown names or
/// bad parameters, PrecisionExhausted when the evaluator cannot certify.
Evaluation evaluate(const EvaluatorRef& ref, const PrecisionContext& ctx);

bool has_evaluator(const std::string& name);
std::vector<std::string> evaluator_names();

/// Parameter values: products and quotients of numbers, pi, sqrt(q) and log(q),
/// e.g. "2/3*pi", "1/sqrt(3)", "0.25". Evaluated at the current precision.
Real parse_real_param(const std::string& text);

}  // namespace lsm

#endif  // LSM_VERIFY_EVALUATORS_HPP
