#ifndef LSM_LOGSINE_LOGSINE_HPP
#define LSM_LOGSINE_LOGSINE_HPP

#include <vector>

#include "lsm/mpcore/context.hpp"
#include "lsm/symconst/constexpr.hpp"

namespace lsm {

/// Ls_n^{(k)}(sigma) = -int_0^sigma theta^k log^{n-1-k}|2 sin(theta/2)| dtheta
/// with sigma = sigma_over_pi * pi.
struct LogSineSpec {
  int n = 1;
  int k = 0;
  Rational sigma_over_pi{1};

  /// Throws DomainError unless n >= 1, 0 <= k <= n-1 and 0 < sigma <= 2 pi.
  void validate() const;
  [[nodiscard]] Real sigma() const;
};

/// Ls_n^{(k)}(sigma) by tanh-sinh quadrature, split at pi/3 and 5pi/3.
Real ls_numeric(const LogSineSpec& spec, const PrecisionContext& ctx);
/// Same for a real angle 0 < sigma <= 2 pi.
Real ls_numeric(int n, int k, const Real& sigma, const PrecisionContext& ctx);

/// Ls_n(pi) from the recursion in alpha(m) = (1 - 2^{1-m}) zeta(m). n >= 1.
ConstExpr ls_pi_recursive(int n);

/// Ls_1(pi), ..., Ls_{max_n}(pi) from the exponential generating function
/// -sum Ls_{m+1}(pi) x^m/m! = pi Gamma(1+x)/Gamma(1+x/2)^2.
std::vector<ConstExpr> ls_pi_egf(int max_n);

/// Ls_{n+1}(pi/3) from its central binomial series. n >= 0.
Real ls_pi3_series(int n, const PrecisionContext& ctx);

/// Tabulated Ls_n(pi/3), 2 <= n <= 8.
const ConstExpr& ls_pi3_table(int n);

/// Ls^{(1)}_{n+2}(pi/3) = -n! (-1/2)^n S_+(n+2). n >= 0.
Real ls1_pi3_binomial(int n, const PrecisionContext& ctx);

struct GenLsValue {
  Real value;
  /// |imaginary part| left over after extraction; should be at rounding level.
  Real imag_residue;
};

inline constexpr int kDefaultGenLsOrderCap = 9;

/// Ls^{(k)}_n(pi) read off the two-variable generating function. The series
/// order used is n-1; larger orders than `order_cap` are refused.
GenLsValue gen_ls_pi_extract(int n, int k, const PrecisionContext& ctx, int order_cap = kDefaultGenLsOrderCap);

/// Tabulated Ls^{(k)}_n(pi) for (n,k) in {(4,1),(4,2),(5,1),(5,2),(5,3),(6,1),(6,2),(6,3),(6,4),(7,3)}.
const ConstExpr& gen_ls_pi_table(int n, int k);

enum class Weight4Form { Ls3, Ls3k1, Ls4, Ls4k1, Ls4k2 };

/// Reduction of Ls_3, Ls_3^{(1)}, Ls_4, Ls_4^{(1)}, Ls_4^{(2)} at 0 < tau < 2 pi
/// to Clausen and Glaisher values.
Real ls_weight4_tau(Weight4Form which, const Real& tau, const PrecisionContext& ctx);

/// int_0^pi (2 sin(theta/2))^x e^{theta y} dtheta by quadrature.
Real realgf_integral(const Real& x, const Real& y, const PrecisionContext& ctx);
/// The same quantity as a binomial series in x (accelerated). |x| < 1.
Real realgf_series(const Real& x, const Real& y, const PrecisionContext& ctx);

/// sum_n Ls^{(1)}_{n+2}(pi) lambda^n/n! as -int_0^pi theta (2 sin(theta/2))^lambda dtheta.
Real ls1_gf_integral(const Real& lambda, const PrecisionContext& ctx);
/// The same sum as a binomial series in lambda (accelerated). |lambda| < 1.
Real ls1_gf_series(const Real& lambda, const PrecisionContext& ctx);

}  // namespace lsm

#endif  // LSM_LOGSINE_LOGSINE_HPP
