#ifndef LSM_MPCORE_REAL_HPP
#define LSM_MPCORE_REAL_HPP

#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace lsm {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Working precision is thread-local: every arithmetic result is rounded to
// the calling thread's current precision, the way mpmath's mp.prec works.
long working_bits() noexcept;
void set_working_bits(long bits) noexcept;
long digits_to_bits(int digits) noexcept;
int bits_to_digits(long bits) noexcept;

/// RAII switch of the thread's working precision, in decimal digits.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(int digits);
  static PrecisionGuard bits(long bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;
  PrecisionGuard(PrecisionGuard&& other) noexcept;
  PrecisionGuard& operator=(PrecisionGuard&&) = delete;

 private:
  struct BitsTag {};
  PrecisionGuard(BitsTag, long bits);
  long saved_;
  bool active_ = true;
};

/// Arbitrary-precision real backed by an mpfr_t.
class Real {
 public:
  Real();
  Real(int v);  // NOLINT(google-explicit-constructor)
  Real(long v);  // NOLINT(google-explicit-constructor)
  Real(long long v);  // NOLINT(google-explicit-constructor)
  Real(unsigned long v);  // NOLINT(google-explicit-constructor)
  Real(double v);  // NOLINT(google-explicit-constructor)
  explicit Real(const Rational& q);
  explicit Real(const Integer& z);
  explicit Real(const std::string& decimal);
  explicit Real(const char* decimal);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  [[nodiscard]] long precision_bits() const noexcept;
  [[nodiscard]] double to_double() const noexcept;
  [[nodiscard]] long to_long() const noexcept;  // truncates toward zero
  /// Scientific notation with `digits` significant digits.
  [[nodiscard]] std::string to_string(int digits) const;
  /// Fixed notation with `decimals` digits after the point.
  [[nodiscard]] std::string to_fixed(int decimals) const;

  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] bool is_finite() const noexcept;
  [[nodiscard]] bool is_nan() const noexcept;
  [[nodiscard]] int sign() const noexcept;
  /// Binary exponent e with value = m * 2^e, 0.5 <= |m| < 1 (0 for zero).
  [[nodiscard]] long exponent2() const noexcept;

  mpfr_srcptr raw() const noexcept { return value_; }
  mpfr_ptr raw() noexcept { return value_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  friend Real operator-(const Real& x);
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator*(long a, const Real& b);
  friend Real operator/(const Real& a, long b);
  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);

  friend bool operator==(const Real& a, const Real& b) noexcept;
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) noexcept;
  friend bool operator==(const Real& a, long b) noexcept;
  friend std::partial_ordering operator<=>(const Real& a, long b) noexcept;

  friend std::ostream& operator<<(std::ostream& os, const Real& x);

 private:
  struct Uninit {};
  explicit Real(Uninit) noexcept;
  void init_current();
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cbrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real asin(const Real& x);
Real acos(const Real& x);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real gamma(const Real& x);
Real lgamma(const Real& x);
Real floor(const Real& x);
Real ldexp(const Real& x, long e);
/// x rounded to the current working precision.
Real rounded(const Real& x);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);
void sin_cos(const Real& x, Real& s, Real& c);

Real pi();
Real ln2();
Real euler_gamma();
/// 10^e at working precision.
Real pow10(long e);
/// Smallest representable relative spacing at the working precision.
Real epsilon();

Rational parse_rational(const std::string& text);
Rational binomial(long n, long k);
Integer factorial(long n);

}  // namespace lsm

#endif  // LSM_MPCORE_REAL_HPP
