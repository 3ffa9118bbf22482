#include "lsm/mpcore/series.hpp"

namespace lsm {

TruncatedSeries<Rational> binom_lambda_series(int n, int order, const std::string& var) {
  if (n < 0) throw DomainError("binom_lambda_series: n must be >= 0");
  // coefficients of prod_{i<n} (lambda - i), lowest degree first
  std::vector<Rational> poly{Rational(1)};
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= poly[d] * i;
    }
    poly = std::move(next);
  }
  Rational inv_fact(Integer(1), factorial(n));
  TruncatedSeries<Rational> s({var}, order);
  for (size_t d = 0; d < poly.size(); ++d) {
    if (static_cast<int>(d) > order) break;
    s.set({static_cast<int>(d)}, poly[d] * inv_fact);
  }
  return s;
}

}  // namespace lsm
