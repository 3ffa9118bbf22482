#include "lsm/mpcore/real.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace lsm {

namespace {
thread_local long tl_bits = 128;
}

long working_bits() noexcept { return tl_bits; }
void set_working_bits(long bits) noexcept {
  tl_bits = bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits;
}

long digits_to_bits(int digits) noexcept {
  return static_cast<long>(std::ceil(digits * 3.3219280948873623)) + 8;
}

int bits_to_digits(long bits) noexcept {
  return static_cast<int>(std::floor((bits - 8) * 0.30102999566398120));
}

PrecisionGuard::PrecisionGuard(int digits) : saved_(tl_bits) {
  set_working_bits(digits_to_bits(digits));
}
PrecisionGuard::PrecisionGuard(BitsTag, long bits) : saved_(tl_bits) { set_working_bits(bits); }
PrecisionGuard PrecisionGuard::bits(long bits) { return PrecisionGuard(BitsTag{}, bits); }
PrecisionGuard::PrecisionGuard(PrecisionGuard&& other) noexcept : saved_(other.saved_) {
  other.active_ = false;
}
PrecisionGuard::~PrecisionGuard() {
  if (active_) tl_bits = saved_;
}

// ---- construction ----

Real::Real(Uninit) noexcept {}
void Real::init_current() { mpfr_init2(value_, tl_bits); }

Real::Real() {
  init_current();
  mpfr_set_zero(value_, 1);
}
Real::Real(int v) {
  init_current();
  mpfr_set_si(value_, v, MPFR_RNDN);
}
Real::Real(long v) {
  init_current();
  mpfr_set_si(value_, v, MPFR_RNDN);
}
Real::Real(long long v) {
  init_current();
  mpfr_set_si(value_, static_cast<long>(v), MPFR_RNDN);
}
Real::Real(unsigned long v) {
  init_current();
  mpfr_set_ui(value_, v, MPFR_RNDN);
}
Real::Real(double v) {
  init_current();
  mpfr_set_d(value_, v, MPFR_RNDN);
}
Real::Real(const Rational& q) {
  init_current();
  mpfr_set_q(value_, q.backend().data(), MPFR_RNDN);
}
Real::Real(const Integer& z) {
  init_current();
  mpfr_set_z(value_, z.backend().data(), MPFR_RNDN);
}
Real::Real(const std::string& decimal) : Real(decimal.c_str()) {}
Real::Real(const char* decimal) {
  init_current();
  if (mpfr_set_str(value_, decimal, 10, MPFR_RNDN) != 0) {
    mpfr_clear(value_);
    throw std::invalid_argument(std::string("not a decimal number: ") + decimal);
  }
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}
Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}
Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}
Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}
Real::~Real() { mpfr_clear(value_); }

// ---- queries ----

long Real::precision_bits() const noexcept { return mpfr_get_prec(value_); }
double Real::to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
long Real::to_long() const noexcept { return mpfr_get_si(value_, MPFR_RNDZ); }
bool Real::is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
bool Real::is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
bool Real::is_nan() const noexcept { return mpfr_nan_p(value_) != 0; }
int Real::sign() const noexcept { return mpfr_sgn(value_); }
long Real::exponent2() const noexcept {
  return mpfr_regular_p(value_) ? mpfr_get_exp(value_) : 0;
}

std::string Real::to_string(int digits) const {
  if (digits < 1) digits = 1;
  std::vector<char> buf(static_cast<size_t>(digits) + 32);
  int n = mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, value_);
  if (n >= static_cast<int>(buf.size())) {
    buf.resize(static_cast<size_t>(n) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, value_);
  }
  return std::string(buf.data());
}

std::string Real::to_fixed(int decimals) const {
  if (decimals < 0) decimals = 0;
  long e10 = mpfr_regular_p(value_) ? std::labs(mpfr_get_exp(value_)) / 3 + 2 : 2;
  std::vector<char> buf(static_cast<size_t>(decimals + e10) + 32);
  int n = mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", decimals, value_);
  if (n >= static_cast<int>(buf.size())) {
    buf.resize(static_cast<size_t>(n) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", decimals, value_);
  }
  return std::string(buf.data());
}

std::ostream& operator<<(std::ostream& os, const Real& x) {
  auto p = os.precision();
  return os << x.to_string(p > 0 ? static_cast<int>(p) : 17);
}

// ---- arithmetic ----

namespace {
// Write into `self` at working precision, keeping the op safe when an operand aliases self.
template <class F>
Real& inplace(Real& self, F&& f) {
  if (mpfr_get_prec(self.raw()) == tl_bits) {
    f(self.raw());
  } else {
    mpfr_t tmp;
    mpfr_init2(tmp, tl_bits);
    f(tmp);
    mpfr_swap(tmp, self.raw());
    mpfr_clear(tmp);
  }
  return self;
}
}  // namespace

Real& Real::operator+=(const Real& r) {
  return inplace(*this, [&](mpfr_ptr d) { mpfr_add(d, value_, r.value_, MPFR_RNDN); });
}
Real& Real::operator-=(const Real& r) {
  return inplace(*this, [&](mpfr_ptr d) { mpfr_sub(d, value_, r.value_, MPFR_RNDN); });
}
Real& Real::operator*=(const Real& r) {
  return inplace(*this, [&](mpfr_ptr d) { mpfr_mul(d, value_, r.value_, MPFR_RNDN); });
}
Real& Real::operator/=(const Real& r) {
  return inplace(*this, [&](mpfr_ptr d) { mpfr_div(d, value_, r.value_, MPFR_RNDN); });
}
Real& Real::operator*=(long r) {
  return inplace(*this, [&](mpfr_ptr d) { mpfr_mul_si(d, value_, r, MPFR_RNDN); });
}
Real& Real::operator/=(long r) {
  return inplace(*this, [&](mpfr_ptr d) { mpfr_div_si(d, value_, r, MPFR_RNDN); });
}

Real operator-(const Real& x) {
  Real r;
  mpfr_neg(r.value_, x.value_, MPFR_RNDN);
  return r;
}
Real operator+(const Real& a, const Real& b) {
  Real r;
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r;
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r;
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r;
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, long b) {
  Real r;
  mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}
Real operator*(long a, const Real& b) { return b * a; }
Real operator/(const Real& a, long b) {
  Real r;
  mpfr_div_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}
Real operator+(const Real& a, long b) {
  Real r;
  mpfr_add_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, long b) {
  Real r;
  mpfr_sub_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

bool operator==(const Real& a, const Real& b) noexcept { return mpfr_equal_p(a.value_, b.value_) != 0; }
std::partial_ordering operator<=>(const Real& a, const Real& b) noexcept {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}
bool operator==(const Real& a, long b) noexcept {
  return !mpfr_nan_p(a.value_) && mpfr_cmp_si(a.value_, b) == 0;
}
std::partial_ordering operator<=>(const Real& a, long b) noexcept {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

// ---- functions ----

#define LSM_UNARY(name, call)          \
  Real name(const Real& x) {           \
    Real r;                            \
    call(r.raw(), x.raw(), MPFR_RNDN); \
    return r;                          \
  }
LSM_UNARY(abs, mpfr_abs)
LSM_UNARY(sqrt, mpfr_sqrt)
LSM_UNARY(cbrt, mpfr_cbrt)
LSM_UNARY(exp, mpfr_exp)
LSM_UNARY(expm1, mpfr_expm1)
LSM_UNARY(log, mpfr_log)
LSM_UNARY(log1p, mpfr_log1p)
LSM_UNARY(sin, mpfr_sin)
LSM_UNARY(cos, mpfr_cos)
LSM_UNARY(tan, mpfr_tan)
LSM_UNARY(sinh, mpfr_sinh)
LSM_UNARY(cosh, mpfr_cosh)
LSM_UNARY(tanh, mpfr_tanh)
LSM_UNARY(asin, mpfr_asin)
LSM_UNARY(acos, mpfr_acos)
LSM_UNARY(atan, mpfr_atan)
LSM_UNARY(gamma, mpfr_gamma)
#undef LSM_UNARY

Real lgamma(const Real& x) {
  Real r;
  int s = 0;
  mpfr_lgamma(r.raw(), &s, x.raw(), MPFR_RNDN);
  return r;
}
Real floor(const Real& x) {
  Real r;
  mpfr_floor(r.raw(), x.raw());
  return r;
}
Real atan2(const Real& y, const Real& x) {
  Real r;
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
Real pow(const Real& x, const Real& y) {
  Real r;
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
Real pow(const Real& x, long n) {
  Real r;
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}
Real ldexp(const Real& x, long e) {
  Real r;
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}
Real rounded(const Real& x) {
  Real r;
  mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
Real min(const Real& a, const Real& b) { return a < b ? a : b; }
Real max(const Real& a, const Real& b) { return a < b ? b : a; }
void sin_cos(const Real& x, Real& s, Real& c) {
  Real ss, cc;
  mpfr_sin_cos(ss.raw(), cc.raw(), x.raw(), MPFR_RNDN);
  s = std::move(ss);
  c = std::move(cc);
}

Real pi() {
  Real r;
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}
Real ln2() {
  Real r;
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}
Real euler_gamma() {
  Real r;
  mpfr_const_euler(r.raw(), MPFR_RNDN);
  return r;
}
Real pow10(long e) {
  Real r(10);
  return pow(r, e);
}
Real epsilon() { return ldexp(Real(1), 1 - tl_bits); }

Rational parse_rational(const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational number: " + text);
  }
}

Rational binomial(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  Integer r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return Rational(r);
}

Integer factorial(long n) {
  Integer r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace lsm
