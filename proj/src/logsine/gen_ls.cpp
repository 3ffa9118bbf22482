#include <map>
#include <string>

#include "lsm/logsine/logsine.hpp"
#include "lsm/mpcore/series.hpp"
#include "lsm/specfun/polylog.hpp"

namespace lsm {

namespace {

// i^p
Complex i_pow(int p) {
  switch (((p % 4) + 4) % 4) {
    case 0:
      return Complex(1);
    case 1:
      return Complex(Real(0), Real(1));
    case 2:
      return Complex(-1);
    default:
      return Complex(Real(0), Real(-1));
  }
}

// coefficient of u^a v^b in (e^u - e^v)/(u - v), by exact series division
Rational divided_difference_coefficient(int a, int b) {
  const int order = a + b + 1;
  using S = TruncatedSeries<Rational>;
  const std::vector<std::string> vars{"u", "v"};
  S u = S::variable(vars, order, 0), v = S::variable(vars, order, 1);
  S q = (u.exp() - v.exp()).divide_exact(u - v);
  return q.coefficient({a, b});
}

}  // namespace

// With A = n-k-1 and B = k, Ls^{(k)}_n(pi) = -A! B! c / i^B where c is the
// coefficient of lambda^A mu^B in
//   pi (e^{i pi lambda/2} - e^{i pi mu})/(i pi lambda/2 - i pi mu)
//   + i sum_{m>=1} (-1)^m binom(lambda,m) (e^{i pi lambda/2} - (-1)^m e^{i pi mu}) / (m + mu - lambda/2).
// Expanding binom(lambda,m) in elementary symmetric sums and the denominator
// geometrically, each m-sum is Li_{s,1,...,1}(+-1) in closed form.
GenLsValue gen_ls_pi_extract(int n, int k, const PrecisionContext& ctx, int order_cap) {
  if (k < 0 || k > n - 1) throw DomainError("gen_ls_pi_extract: need 0 <= k <= n-1");
  if (n - 1 > order_cap) {
    throw DomainError("gen_ls_pi_extract: series order " + std::to_string(n - 1) + " exceeds the cap " +
                      std::to_string(order_cap));
  }
  const int A = n - k - 1, B = k;
  auto g = ctx.activate();
  const PrecisionContext inner = ctx.raised(5);
  std::map<std::pair<int, int>, Real> zeta_kernel, alt_kernel;
  auto kernel = [&](bool alternating, int s, int ones) -> const Real& {
    auto& memo = alternating ? alt_kernel : zeta_kernel;
    auto key = std::make_pair(s, ones);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Composition c = with_ones(s, ones);
    Real v = alternating ? multiple_polylog(c, Complex(-1), inner).re : mzv(c, inner);
    return memo.emplace(key, v).first->second;
  };
  Complex c(0);
  {
    auto g2 = PrecisionGuard::bits(working_bits() + 24);
    const Real p = pi();
    const Complex I(Real(0), Real(1));
    auto half_pow = [&](int e) { return i_pow(e) * pow(p / 2, static_cast<long>(e)); };
    auto full_pow = [&](int e) { return i_pow(e) * pow(p, static_cast<long>(e)); };

    c = p * half_pow(A) * full_pow(B) * Real(divided_difference_coefficient(A, B));

    for (int a = 1; a <= A; ++a) {
      for (int j = 0; j <= A + B; ++j) {
        for (int r = 0; r <= j; ++r) {
          const int from_geo = j - r;
          Rational base = binomial(j, r) * Rational(from_geo % 2 == 0 ? 1 : -1, Integer(1) << from_geo);
          if ((a + j) % 2 == 1) base = -base;
          const int s = 2 + j;
          const int pe = A - a - from_geo;
          if (pe >= 0 && r == B) {
            c = c + I * half_pow(pe) * Real(base / Rational(factorial(pe))) * kernel(false, s, a - 1);
          }
          const int qe = B - r;
          if (qe >= 0 && a + from_geo == A) {
            c = c - I * full_pow(qe) * Real(base / Rational(factorial(qe))) * kernel(true, s, a - 1);
          }
        }
      }
    }
    c = c * Real(-Rational(factorial(A) * factorial(B))) / i_pow(B);
  }
  return {rounded(c.re), rounded(abs(c.im))};
}

}  // namespace lsm
