#ifndef LSM_SYMCONST_CONSTEXPR_HPP
#define LSM_SYMCONST_CONSTEXPR_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lsm/mpcore/context.hpp"
#include "lsm/mpcore/series.hpp"
#include "lsm/specfun/polylog.hpp"

namespace lsm {

enum class BasisTag { Pi, Log2, Zeta, LiHalf, LiNegOne, ClPi3, GlPi3, Lambda, SPlus };

/// A named real constant. `args` is empty for Pi and Log2 and holds the
/// single index for LiHalf, Lambda and SPlus.
struct BasisConstant {
  BasisTag tag = BasisTag::Pi;
  Composition args;

  static BasisConstant pi();
  static BasisConstant log2();
  /// zeta(k) or a multiple zeta value zeta(a_1, ..., a_k).
  static BasisConstant zeta(int k);
  static BasisConstant zeta(Composition a);
  /// Li_k(1/2).
  static BasisConstant li_half(int k);
  /// Li_a(-1).
  static BasisConstant li_neg_one(Composition a);
  static BasisConstant cl_pi3(Composition a);
  static BasisConstant gl_pi3(Composition a);
  /// lambda_n(1/2).
  static BasisConstant lambda(int n);
  /// sum_{k>=1} 1 / (binom(2k,k) k^n).
  static BasisConstant s_plus(int n);

  [[nodiscard]] int weight() const;
  [[nodiscard]] std::string to_string() const;  // "Zeta(5,3)", "Pi"
  /// Memoised per (constant, working bits).
  [[nodiscard]] Real eval(const PrecisionContext& ctx) const;

  friend auto operator<=>(const BasisConstant&, const BasisConstant&) = default;
  friend bool operator==(const BasisConstant&, const BasisConstant&) = default;
};

/// Sorted (constant, exponent) pairs; exponents are non-zero and may be negative.
using Monomial = std::vector<std::pair<BasisConstant, int>>;

int monomial_weight(const Monomial& m);
Monomial monomial_product(const Monomial& a, const Monomial& b);

/// Rational linear combination of monomials in basis constants. Equality is
/// syntactic: no identities between basis constants are applied.
class ConstExpr {
 public:
  ConstExpr() = default;
  ConstExpr(int c);  // NOLINT(google-explicit-constructor)
  ConstExpr(const Rational& c);  // NOLINT(google-explicit-constructor)
  ConstExpr(const BasisConstant& b, int power = 1);
  ConstExpr(const Monomial& m, const Rational& c);

  /// Parses the canonical text form; also accepts any order of terms and factors.
  static ConstExpr parse(std::string_view text);

  [[nodiscard]] const std::map<Monomial, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  /// The rational constant term.
  [[nodiscard]] Rational constant_term() const;
  [[nodiscard]] Rational coefficient(const Monomial& m) const;

  /// w if every monomial has weight w; nullopt for mixed weights and for 0.
  [[nodiscard]] std::optional<int> weight() const;
  [[nodiscard]] bool is_homogeneous(int w) const;

  /// Canonical text, e.g. "45/2*Pi*Zeta(5) + 5/4*Pi^3*Zeta(3)"; "0" for zero.
  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] Real eval(const PrecisionContext& ctx) const;

  [[nodiscard]] ConstExpr scale(const Rational& q) const;
  [[nodiscard]] ConstExpr pow(int n) const;

  ConstExpr& operator+=(const ConstExpr& o);
  ConstExpr& operator-=(const ConstExpr& o);
  ConstExpr& operator*=(const ConstExpr& o);
  friend ConstExpr operator+(ConstExpr a, const ConstExpr& b) { return a += b; }
  friend ConstExpr operator-(ConstExpr a, const ConstExpr& b) { return a -= b; }
  friend ConstExpr operator*(ConstExpr a, const ConstExpr& b) { return a *= b; }
  friend ConstExpr operator-(const ConstExpr& a) { return a.scale(Rational(-1)); }
  friend bool operator==(const ConstExpr&, const ConstExpr&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);

  std::map<Monomial, Rational> terms_;
};

/// zeta(k) with even k rewritten as a rational multiple of Pi^k.
ConstExpr zeta_reduced(int k);

template <>
struct CoeffOps<ConstExpr> {
  static ConstExpr zero() { return ConstExpr(); }
  static bool is_zero(const ConstExpr& c) { return c.is_zero(); }
  static ConstExpr from_rational(const Rational& q) { return ConstExpr(q); }
  static ConstExpr scale(const ConstExpr& c, const Rational& q) { return c.scale(q); }
  /// Only single-term expressions are invertible.
  static std::optional<ConstExpr> inverse(const ConstExpr& c);
};

}  // namespace lsm

#endif  // LSM_SYMCONST_CONSTEXPR_HPP
