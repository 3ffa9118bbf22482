#ifndef LSM_SPECFUN_POLYLOG_HPP
#define LSM_SPECFUN_POLYLOG_HPP

#include <string>
#include <vector>

#include "lsm/mpcore/complex.hpp"
#include "lsm/mpcore/context.hpp"

namespace lsm {

/// Index vector (a_1, ..., a_k) of a multiple polylogarithm.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  Composition(std::initializer_list<int> p);
  explicit Composition(std::vector<int> p);
  /// Parses "5,1,1".
  static Composition parse(const std::string& text);

  [[nodiscard]] int weight() const;
  [[nodiscard]] int depth() const { return static_cast<int>(parts.size()); }
  /// a_1 >= 2: the nested sum converges on the unit circle.
  [[nodiscard]] bool admissible() const { return !parts.empty() && parts.front() >= 2; }
  [[nodiscard]] std::string to_string() const;  // "5,1,1"

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;
};

/// (a, 1, ..., 1) with `ones` trailing ones.
Composition with_ones(int a, int ones);

/// Li_s(z) for integer s >= 1 and any z (principal branch; on the cut z > 1
/// the limit from below the real axis). Works at the current precision.
Complex polylog(int s, const Complex& z);

/// Li_s(z) for integer s >= 1, |z| arbitrary, to ctx's working precision.
Complex polylog(int s, const Complex& z, const PrecisionContext& ctx);

/// Sum over n_1 > ... > n_k >= 1 of prod x_j^{n_j} / n_j^{m_j}, truncated at n_1 <= N.
Complex nested_sum(const std::vector<int>& m, const std::vector<Complex>& x, long N);

/// Li_{a_1,...,a_k}(z) = sum_{n_1>...>n_k>0} z^{n_1} / prod n_j^{a_j} for |z| <= 1.
Complex multiple_polylog(const Composition& a, const Complex& z, const PrecisionContext& ctx);

/// zeta(a_1, ..., a_k) for admissible a.
Real mzv(const Composition& a, const PrecisionContext& ctx);

enum class ClKind { Cl, Gl };

/// Cl_a(theta) / Gl_a(theta): the imaginary or real part of Li_a(e^{i theta})
/// chosen by the parity of the weight (Cl is the sine series for even weight).
Real clausen_glaisher(ClKind kind, const Composition& a, const Real& theta, const PrecisionContext& ctx);

/// Cl_2(theta) by its rapidly convergent power series; current precision.
Real clausen2(const Real& theta);

/// Ti_k(x) = sum (-1)^n x^{2n+1} / (2n+1)^k, |x| <= 1.
Real inverse_tangent_integral(int k, const Real& x, const PrecisionContext& ctx);

/// Kummer-type lambda_n(x), 0 < |x| <= 1.
Real kummer_lambda(int n, const Real& x, const PrecisionContext& ctx);

}  // namespace lsm

#endif  // LSM_SPECFUN_POLYLOG_HPP
