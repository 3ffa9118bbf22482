#ifndef LSM_MPCORE_CONTEXT_HPP
#define LSM_MPCORE_CONTEXT_HPP

#include <stdexcept>
#include <string>

#include "lsm/mpcore/real.hpp"

namespace lsm {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a routine (precondition violation).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A routine could not certify its result to the requested tolerance.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

inline constexpr int kMaxTargetDigits = 1000;
inline constexpr int kMinGuardDigits = 10;

struct PrecisionContext {
  int target_digits = 20;
  int guard_digits = kMinGuardDigits;
  long max_terms = 200000;
  /// log10 of the absolute tail tolerance; the tolerance itself is 10^tail_log10.
  int tail_log10 = -20;
  int quadrature_levels = 12;

  [[nodiscard]] int working_digits() const { return target_digits + guard_digits; }
  [[nodiscard]] long working_bits() const { return digits_to_bits(working_digits()); }
  /// Absolute tolerance at the current thread precision.
  [[nodiscard]] Real tail_tolerance() const { return pow10(tail_log10); }
  /// Switch the calling thread to this context's working precision.
  [[nodiscard]] PrecisionGuard activate() const { return PrecisionGuard(working_digits()); }
  /// Same context asking for `extra` more digits everywhere.
  [[nodiscard]] PrecisionContext raised(int extra) const;
  /// Same precision, looser tail tolerance 10^log10.
  [[nodiscard]] PrecisionContext with_tolerance(int log10) const;
};

/// Default context for `target_digits` decimal digits of final answer.
PrecisionContext make_context(int target_digits, int hard_cap = kMaxTargetDigits);

}  // namespace lsm

#endif  // LSM_MPCORE_CONTEXT_HPP
