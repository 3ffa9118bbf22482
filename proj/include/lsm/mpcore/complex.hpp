#ifndef LSM_MPCORE_COMPLEX_HPP
#define LSM_MPCORE_COMPLEX_HPP

#include <string>

#include "lsm/mpcore/real.hpp"

namespace lsm {

/// Complex number over Real. Kept minimal: only what the evaluators need.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(int r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(long r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(double r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  explicit Complex(const Rational& q) : re(q), im(0) {}

  static Complex i() { return {Real(0), Real(1)}; }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& o);
  Complex& operator/=(const Real& o);

  [[nodiscard]] bool is_zero() const { return re.is_zero() && im.is_zero(); }
  [[nodiscard]] std::string to_string(int digits) const;
};

Complex operator-(const Complex& a);
Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);
Complex operator*(const Complex& a, long b);
Complex operator/(const Complex& a, long b);
bool operator==(const Complex& a, const Complex& b);

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex sqrt(const Complex& z);  // principal branch
Complex pow(const Complex& z, long n);
/// e^{i theta}
Complex expi(const Real& theta);

}  // namespace lsm

#endif  // LSM_MPCORE_COMPLEX_HPP
