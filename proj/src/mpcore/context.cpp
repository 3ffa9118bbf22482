#include "lsm/mpcore/context.hpp"

#include <cmath>

namespace lsm {

namespace {
int levels_for(int digits) {
  // tanh-sinh roughly doubles the correct digits per level once it is in the
  // asymptotic regime; step h = 2^-level, and h ~ pi^2 / log(10^D) suffices.
  double h = 9.8696 / (digits * 2.302585 + 10.0);
  int lv = static_cast<int>(std::ceil(-std::log2(h))) + 3;
  return lv < 6 ? 6 : lv;
}
}  // namespace

PrecisionContext make_context(int target_digits, int hard_cap) {
  if (target_digits < 1) throw DomainError("make_context: target_digits must be >= 1");
  if (target_digits > hard_cap) {
    throw DomainError("make_context: target_digits " + std::to_string(target_digits) +
                      " exceeds hard cap " + std::to_string(hard_cap));
  }
  PrecisionContext c;
  c.target_digits = target_digits;
  c.guard_digits = kMinGuardDigits + target_digits / 10;
  c.max_terms = 200000 + 2000L * target_digits;
  c.tail_log10 = -target_digits;
  c.quadrature_levels = levels_for(c.working_digits());
  return c;
}

PrecisionContext PrecisionContext::raised(int extra) const {
  PrecisionContext c = *this;
  c.target_digits += extra;
  c.tail_log10 -= extra;
  c.quadrature_levels = levels_for(c.working_digits());
  return c;
}

PrecisionContext PrecisionContext::with_tolerance(int log10) const {
  PrecisionContext c = *this;
  c.tail_log10 = log10;
  return c;
}

}  // namespace lsm
