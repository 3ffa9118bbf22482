#ifndef LSM_MAHLER_MAHLER_HPP
#define LSM_MAHLER_MAHLER_HPP

#include <string>

#include "lsm/mpcore/complex.hpp"
#include "lsm/mpcore/context.hpp"
#include "lsm/quadrature/cubature.hpp"
#include "lsm/symconst/constexpr.hpp"

namespace lsm {

enum class MeasureFamily {
  MuK1px,         // mu_k(1+x)
  MuK1pxyStar,    // mu(1+x+y_1, ..., 1+x+y_k)
  MuK1pxyzStar,   // mu(1+x+y_1+z_1, ..., 1+x+y_k+z_k)
  MuMixed1x1xyz,  // mu(1+x, ..., 1+x, 1+x+y+z), k copies of 1+x (k >= 0)
  Mu2_1pxy,
  Mu2_1pxyz,
  Mu1pxy,
  Mu1pxyz,
  MuLinear,  // mu(a + b x)
  Mu5Term,   // mu(1+x+y+z+w)
  Mu6Term,   // mu(1+x+y+z+w+v)
};

struct MeasureSpec {
  MeasureFamily family = MeasureFamily::Mu1pxy;
  int k = 1;
  Complex a{1}, b{1};  // MuLinear only

  /// Throws DomainError when k is out of range for the family.
  void validate() const;
};

/// Parses the names used on the command line ("mu-k-1pxy-star", "mu2-1pxy", ...).
MeasureFamily parse_measure_family(const std::string& name);
std::string to_string(MeasureFamily f);

struct OracleValue {
  Real value;
  /// Absolute error estimate of the integration (standard error for qmc).
  Real error;
};

/// Definitional value by integration over the torus after the usual Jensen
/// reductions. Multi-dimensional integrals run in double precision, so their
/// accuracy is limited to about 1e-10.
OracleValue mu_oracle(const MeasureSpec& spec, const PrecisionContext& ctx);

/// mu_k(1+x) = -Ls_{k+1}(pi)/pi.
ConstExpr mu_k_1px(int k);
/// mu_k(1+x) from the sum over compositions of k into parts >= 2 of 4^{-depth} zeta(b). 2 <= k <= 8.
Real mu_k_1px_mzv(int k, const PrecisionContext& ctx);

/// (Ls_{k+1}(pi/3) - Ls_{k+1}(pi))/pi, 1 <= k <= 7.
ConstExpr mu_k_1pxy_star(int k);

/// pi^{-k-1} int_0^pi (theta log(2 sin(theta/2)) + Cl_2(theta))^k dtheta.
Real mu_k_1pxyz_star(int k, const PrecisionContext& ctx);

struct Mu3Decomposition {
  Real direct;     // mu_3(1+x+y_*+z_*) by quadrature
  Real cl2_cubed;  // int_0^pi Cl_2^3
  Real mixed;      // int_0^pi theta^2 log^2(2 sin(theta/2)) Cl_2
  Real ls73;       // Ls^{(3)}_7(pi) from the closed form
  Real residual;   // direct - (2 cl2_cubed + 3 mixed - ls73)/pi^4
};
Mu3Decomposition mu3_1pxyz_star_decomposition(const PrecisionContext& ctx);

/// int_0^pi Cl_2(theta)^2 dtheta by quadrature (equals pi^5/180).
Real cl2_square_integral(const PrecisionContext& ctx);

/// -Ls^{(1)}_{k+3}(pi)/pi^2 - pi^{-2} int_0^pi Ls_{k+1}(theta) log(2 sin(theta/2)) dtheta.
Real mu_mixed_1x_1xyz(int k, const PrecisionContext& ctx);

/// tau(z) = 4 Li_2((1 - sqrt(1-4z))/2) - 2 log^2((1 + sqrt(1-4z))/2), z <= 1.
/// For z > 1/4 the root is taken as -i sqrt(4z-1) (limit from below the cut),
/// so that tau(1) = 2 zeta(2) + 4i Cl_2(pi/3).
Complex dilog_tau(const Real& z, const PrecisionContext& ctx);

/// mu_2(1+x+y) = pi^2/4 + (3/pi) Ls_3(2pi/3), Ls_3 by quadrature.
Real mu2_1pxy(const PrecisionContext& ctx);
/// 24/(5pi) Ti_3(1/sqrt3) + (2 log 3/pi) Cl_2(pi/3) - log^2(3)/10 - 19 pi^2/180.
Real mu2_1pxy_ti3_form(const PrecisionContext& ctx);
/// pi^2/36 + (2/pi) int_0^{pi/6} Li_2(4 sin^2 theta) dtheta.
Real mu2_1pxy_dilog_form(const PrecisionContext& ctx);
/// pi^2/4 + (3/pi) Ls_3(2pi/3) with Ls_3 reduced to Gl_{2,1}(2pi/3).
Real mu2_1pxy_glaisher_form(const PrecisionContext& ctx);
/// (1/4pi^2) int int log^2|1 - 2 sin(theta) e^{i omega}|, double precision.
OracleValue mu2_1pxy_torus(const PrecisionContext& ctx);
/// pi^2/12 + s (4 log 2/pi) Cl_2(pi/3) - (4/pi) sum binom(2n,n)/16^n (sum_{k<=n} 1/(2k+1))/(2n+1)^2
/// with s = +1, or s = -1 when `printed_sign` is set.
Real w3d2_series(bool printed_sign, const PrecisionContext& ctx);
/// (2/pi) int_0^pi Re Li_2(4 sin^2 theta) dtheta (equals 2 zeta(2)).
Real dilog_re_integral(const PrecisionContext& ctx);
/// int_{pi/6}^{pi/2} (Re Li_2(4 sin^2 theta) + Li_2(1/(4 sin^2 theta))) dtheta (equals 5 pi^3/54).
Real dilog_inversion_integral(const PrecisionContext& ctx);

/// (12/pi^2) lambda_4(1/2) - pi^2/5.
ConstExpr mu2_1pxyz();
/// (24 Li_4(1/2) - 18 zeta(4) + 21 zeta(3) log 2 - 6 zeta(2) log^2 2 + log^4 2)/pi^2.
Real mu2_1pxyz_li4_form(const PrecisionContext& ctx);
/// mu(1+x, 1+x+y) on the 2-torus, double precision.
OracleValue mu_1px_1pxy_torus(const PrecisionContext& ctx);
/// int over the 3-torus of log^2|1+x+y+z|, double precision.
OracleValue mu2_1pxyz_torus(const PrecisionContext& ctx);

/// W_n(s) for n = 2 (binom(s, s/2)) and n = 3 (3F2 form, |s| < 2).
Real walk_moment(int n, const Real& s, const PrecisionContext& ctx);
/// W_n^{(k)}(0). n = 2, 3 by central differences of walk_moment; n = 4 returns
/// the closed forms for k = 1, 2. Other (n, k) throw DomainError.
Real walk_derivative(int n, int k, const PrecisionContext& ctx);

enum class RvConjecture { FiveTerm, SixTerm };

struct ConjectureCheck {
  Real lhs;
  Real lhs_error;  // integration error estimate of lhs
  Real rhs;
  Real abs_diff;
};

/// The reduced inner integral of the 5-/6-term measures: the mean over the
/// 2-torus of log^+|c + z + w| for |c| = e^a.
double rv_inner(double a);

/// Measure side by torus integration of rv_inner (2-D nested for five terms,
/// 3-D qmc for six); eta-integral side by 1-D quadrature.
ConjectureCheck rv_conjecture_check(RvConjecture which, const PrecisionContext& ctx);
/// Only the eta-integral side.
Real rv_eta_integral(RvConjecture which, const PrecisionContext& ctx);

}  // namespace lsm

#endif  // LSM_MAHLER_MAHLER_HPP
