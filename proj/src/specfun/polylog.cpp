#include "lsm/specfun/polylog.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "lsm/specfun/zeta.hpp"

namespace lsm {

// ---- Composition ----

Composition::Composition(std::initializer_list<int> p) : parts(p) {}
Composition::Composition(std::vector<int> p) : parts(std::move(p)) {}

Composition Composition::parse(const std::string& text) {
  Composition c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw DomainError("composition: bad part '" + item + "'");
    }
    if (used != item.size() || v < 1) throw DomainError("composition: bad part '" + item + "'");
    c.parts.push_back(v);
  }
  if (c.parts.empty()) throw DomainError("composition: empty");
  return c;
}

int Composition::weight() const {
  int w = 0;
  for (int p : parts) w += p;
  return w;
}

std::string Composition::to_string() const {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s;
}

Composition with_ones(int a, int ones) {
  Composition c{a};
  for (int i = 0; i < ones; ++i) c.parts.push_back(1);
  return c;
}

namespace {

constexpr long kGuardBits = 32;

// log2 of the target absolute error at the current precision
double target_log2() { return -static_cast<double>(working_bits()) - 4.0; }

// Smallest N with k*log(N) + N*log(r) - log(1-r) below log(eps).
long terms_for_ratio(double r, int k, long max_terms) {
  if (r <= 0) return 1;
  if (r >= 1) throw DomainError("nested sum does not converge (ratio >= 1)");
  const double log_eps = target_log2() * std::log(2.0);
  const double lr = std::log(r);
  long n = static_cast<long>(std::ceil(log_eps / lr));
  if (n < 4) n = 4;
  while (k * std::log(static_cast<double>(n)) + n * lr - std::log1p(-r) > log_eps) {
    n += 1 + n / 64;
    if (n > max_terms) throw PrecisionExhausted("nested sum needs more than max_terms terms");
  }
  return n;
}

// ---- depth one ----

Complex polylog_direct(int s, const Complex& z) {
  Real az = abs(z);
  const double r = az.to_double();
  long N = terms_for_ratio(r, 0, 10000000);
  Complex sum(0), pw(1);
  for (long n = 1; n <= N; ++n) {
    pw *= z;
    sum += pw / pow(Real(n), static_cast<long>(s));
  }
  return sum;
}

struct LogCoeffs {
  std::vector<Real> c;  // zeta(s-k)/k!, with c[s-1] = 0
  Real harmonic;        // H_{s-1}
};

std::shared_mutex log_coeff_mutex;
std::map<std::pair<int, long>, std::shared_ptr<const LogCoeffs>> log_coeff_cache;

std::shared_ptr<const LogCoeffs> log_coeffs(int s, long K) {
  const long bits = working_bits();
  {
    std::shared_lock lock(log_coeff_mutex);
    auto it = log_coeff_cache.find({s, bits});
    if (it != log_coeff_cache.end() && static_cast<long>(it->second->c.size()) > K) return it->second;
  }
  auto lc = std::make_shared<LogCoeffs>();
  Real inv_fact(1);
  for (long k = 0; k <= K; ++k) {
    if (k > 0) inv_fact /= Real(k);
    if (k == s - 1) {
      lc->c.emplace_back(0);
      continue;
    }
    long arg = s - k;
    if (arg < 0 && (arg % 2 == 0)) {
      lc->c.emplace_back(0);
      continue;
    }
    lc->c.push_back(zeta(static_cast<int>(arg)) * inv_fact);
  }
  Rational h = 0;
  for (int j = 1; j < s; ++j) h += Rational(1, j);
  lc->harmonic = Real(h);
  std::unique_lock lock(log_coeff_mutex);
  auto& slot = log_coeff_cache[{s, bits}];
  if (!slot || slot->c.size() < lc->c.size()) slot = lc;
  return slot;
}

// Expansion about z = 1 in mu = log z, valid for |mu| < 2 pi.
Complex polylog_log_series(int s, const Complex& mu) {
  const double am = abs(mu).to_double();
  const double ratio = am / (2 * M_PI);
  long K = s + 2 + terms_for_ratio(ratio, 0, 1000000);
  auto lc = log_coeffs(s, K);
  Complex sum(0), pw(1);
  for (long k = 0; k <= K; ++k) {
    if (k > 0) pw *= mu;
    const Real& ck = lc->c[static_cast<size_t>(k)];
    if (!ck.is_zero()) sum += pw * ck;
  }
  Complex mus1 = pow(mu, s - 1);
  Complex lg = log(-mu);
  sum += mus1 * (Complex(lc->harmonic) - lg) / Real(factorial(s - 1));
  return sum;
}

// Li_s(z) + (-1)^s Li_s(1/z) = -(2 pi i)^s / s! B_s(1/2 + log(-z)/(2 pi i))
Complex polylog_inverted(int s, const Complex& z) {
  Complex inv = Complex(1) / z;
  Complex other = polylog(s, inv);
  Complex two_pi_i(Real(0), pi() * 2);
  Complex x = Complex(Real(1) / 2) + log(-z) / two_pi_i;
  Complex bp(0);
  for (int j = 0; j <= s; ++j) {
    Rational c = binomial(s, j) * bernoulli(j);
    if (c == 0) continue;
    bp += pow(x, s - j) * Real(c);
  }
  Complex rhs = -(pow(two_pi_i, s) * bp) / Real(factorial(s));
  return s % 2 ? rhs + other : rhs - other;
}

// ---- nested sums and the Hoelder convolution ----

bool is_exact_one(const Complex& c) { return c.im.is_zero() && c.re == 1; }

// G(0^{m1-1} z1 ... 0^{mk-1} zk ; y) = (-1)^k Li_{m}(y/z1, z1/z2, ..., z_{k-1}/zk)
Complex g_function(const std::vector<Complex>& word, const Complex& y, long max_terms) {
  if (word.empty()) return Complex(1);
  std::vector<int> m;
  std::vector<Complex> zs;
  int count = 0;
  for (const auto& a : word) {
    ++count;
    if (!a.is_zero()) {
      m.push_back(count);
      zs.push_back(a);
      count = 0;
    }
  }
  if (count != 0) throw DomainError("G-function word must end in a non-zero letter");
  if (y.is_zero()) return Complex(0);
  std::vector<Complex> x;
  x.push_back(y / zs[0]);
  for (size_t i = 1; i < zs.size(); ++i) x.push_back(zs[i - 1] / zs[i]);
  double r = 0;
  for (const auto& zj : zs) r = std::max(r, (abs(y) / abs(zj)).to_double());
  long N = terms_for_ratio(r, static_cast<int>(m.size()), max_terms);
  Complex v = nested_sum(m, x, N);
  return m.size() % 2 ? -v : v;
}

Complex hoelder(const Composition& a, const Complex& z, long max_terms) {
  std::vector<Complex> word;
  Complex inv = Complex(1) / z;
  for (int ai : a.parts) {
    for (int j = 1; j < ai; ++j) word.emplace_back(0);
    word.push_back(inv);
  }
  // p balancing the two convergence ratios |z|/p and (1 - 1/p)/min(1, |1 - 1/z|)
  Real c = abs(z);
  Complex one_minus = Complex(1) - inv;
  Real d = one_minus.is_zero() ? Real(1) : min(Real(1), abs(one_minus));
  Real p = c * d + 1;
  Complex y_right(Real(1) / p);
  Complex y_left(Real(1) - Real(1) / p);
  const size_t w = word.size();
  Complex total(0);
  for (size_t j = 0; j <= w; ++j) {
    std::vector<Complex> left;
    for (size_t i = j; i-- > 0;) {
      left.push_back(Complex(1) - word[i]);
    }
    std::vector<Complex> right(word.begin() + static_cast<long>(j), word.end());
    Complex term = g_function(left, y_left, max_terms) * g_function(right, y_right, max_terms);
    if (j % 2) {
      total -= term;
    } else {
      total += term;
    }
  }
  return a.depth() % 2 ? -total : total;
}

// ---- Cl_2 coefficient cache: zeta(2k) / (k (2k+1) (2 pi)^{2k}) is rational ----

std::shared_mutex cl2_mutex;
std::map<long, std::shared_ptr<const std::vector<Real>>> cl2_cache;

std::shared_ptr<const std::vector<Real>> cl2_coeffs() {
  const long bits = working_bits();
  {
    std::shared_lock lock(cl2_mutex);
    auto it = cl2_cache.find(bits);
    if (it != cl2_cache.end()) return it->second;
  }
  auto v = std::make_shared<std::vector<Real>>();
  const long K = bits / 2 + 8;
  v->emplace_back(0);
  for (long k = 1; k <= K; ++k) {
    Rational q = zeta_even_over_pi_power(static_cast<int>(k)) /
                 Rational(Integer(k) * (2 * k + 1) * (Integer(1) << (2 * k)));
    v->emplace_back(q);
  }
  std::unique_lock lock(cl2_mutex);
  auto& slot = cl2_cache[bits];
  if (!slot) slot = v;
  return slot;
}

}  // namespace

Complex nested_sum(const std::vector<int>& m, const std::vector<Complex>& x, long N) {
  const size_t k = m.size();
  if (k == 0 || x.size() != k) throw DomainError("nested_sum: arity mismatch");
  int max_m = 0;
  for (int mi : m) max_m = std::max(max_m, mi);
  std::vector<bool> unit(k);
  for (size_t j = 0; j < k; ++j) unit[j] = is_exact_one(x[j]);
  std::vector<Complex> pw(k, Complex(1));
  std::vector<Complex> S(k, Complex(0));
  std::vector<Real> inv_pow(static_cast<size_t>(max_m) + 1);
  for (long n = 1; n <= N; ++n) {
    Real inv = Real(1) / Real(n);
    inv_pow[1] = inv;
    for (int e = 2; e <= max_m; ++e) inv_pow[static_cast<size_t>(e)] = inv_pow[static_cast<size_t>(e - 1)] * inv;
    // outermost first so S[j+1] still holds the sum over indices < n
    for (size_t j = 0; j < k; ++j) {
      if (!unit[j]) pw[j] *= x[j];
      const Real& ip = inv_pow[static_cast<size_t>(m[j])];
      if (j + 1 < k) {
        S[j] += pw[j] * S[j + 1] * ip;
      } else {
        S[j] += pw[j] * ip;
      }
    }
  }
  return S[0];
}

Complex polylog(int s, const Complex& z) {
  if (s < 1) throw DomainError("polylog: order must be >= 1");
  if (z.is_zero()) return Complex(0);
  Complex r;
  {
    auto g = PrecisionGuard::bits(working_bits() + 16);
    if (is_exact_one(z)) {
      if (s == 1) throw DomainError("polylog: Li_1 diverges at z = 1");
      r = Complex(zeta(s));
    } else if (s == 1) {
      r = -log(Complex(1) - z);
    } else {
      Real az = abs(z);
      if (az <= Real(1) / 2) {
        r = polylog_direct(s, z);
      } else {
        Complex mu = log(z);
        if (abs(mu) <= 4) {
          r = polylog_log_series(s, mu);
        } else {
          r = polylog_inverted(s, z);
        }
      }
    }
  }
  return {rounded(r.re), rounded(r.im)};
}

Complex polylog(int s, const Complex& z, const PrecisionContext& ctx) {
  auto g = ctx.activate();
  return polylog(s, z);
}

Complex multiple_polylog(const Composition& a, const Complex& z, const PrecisionContext& ctx) {
  if (a.parts.empty()) throw DomainError("multiple_polylog: empty composition");
  for (int p : a.parts) {
    if (p < 1) throw DomainError("multiple_polylog: parts must be positive");
  }
  auto g = ctx.activate();
  Real az = abs(z);
  Real slack = pow10(-ctx.working_digits() + 2);
  if (az > Real(1) + slack) throw DomainError("multiple_polylog: |z| > 1 is outside the supported domain");
  const bool on_circle = abs(az - 1) <= slack;
  if (on_circle && a.parts.front() < 2) {
    throw DomainError("multiple_polylog: a_1 >= 2 required on the unit circle");
  }
  if (a.depth() == 1) return polylog(a.parts.front(), z);
  Complex r;
  {
    auto g2 = PrecisionGuard::bits(working_bits() + kGuardBits);
    if (az <= Real(1) / 2) {
      std::vector<Complex> x(a.parts.size(), Complex(1));
      x[0] = z;
      long N = terms_for_ratio(az.to_double(), a.depth(), ctx.max_terms);
      r = nested_sum(a.parts, x, N);
    } else {
      r = hoelder(a, z, ctx.max_terms);
    }
  }
  return {rounded(r.re), rounded(r.im)};
}

Real mzv(const Composition& a, const PrecisionContext& ctx) {
  if (!a.admissible()) throw DomainError("mzv: composition must have a_1 >= 2");
  auto g = ctx.activate();
  if (a.depth() == 1) return zeta(a.parts.front());
  return multiple_polylog(a, Complex(1), ctx).re;
}

Real clausen2(const Real& theta) {
  Real r;
  {
    auto g = PrecisionGuard::bits(working_bits() + 16);
    Real two_pi = pi() * 2;
    Real t = theta - two_pi * floor(theta / two_pi);
    bool negate = false;
    if (t > pi()) {
      t = two_pi - t;
      negate = true;
    }
    if (t.is_zero()) return Real(0);
    auto coeffs = cl2_coeffs();
    Real t2 = t * t;
    Real pw = t;
    Real sum = t - t * log(t);
    Real eps = ldexp(Real(1), -working_bits());
    for (size_t k = 1; k < coeffs->size(); ++k) {
      pw *= t2;
      Real term = (*coeffs)[k] * pw;
      sum += term;
      if (abs(term) < eps) break;
    }
    r = negate ? -sum : sum;
  }
  return rounded(r);
}

Real clausen_glaisher(ClKind kind, const Composition& a, const Real& theta, const PrecisionContext& ctx) {
  if (a.parts.empty()) throw DomainError("clausen_glaisher: empty composition");
  auto g = ctx.activate();
  Real two_pi = pi() * 2;
  Real slack = pow10(-ctx.working_digits() + 2);
  if (theta < -slack || theta > two_pi + slack) throw DomainError("clausen_glaisher: theta must lie in [0, 2 pi]");
  if (kind == ClKind::Cl && a.depth() == 1 && a.parts.front() == 2) return clausen2(theta);
  Complex z = (abs(theta) <= slack || abs(theta - two_pi) <= slack) ? Complex(1) : expi(theta);
  if (!a.admissible() && is_exact_one(z)) throw DomainError("clausen_glaisher: divergent at theta = 0");
  Complex v = a.depth() == 1 && a.parts.front() == 1 ? polylog(1, z) : multiple_polylog(a, z, ctx);
  const bool even = a.weight() % 2 == 0;
  if (kind == ClKind::Cl) return even ? v.im : v.re;
  return even ? v.re : v.im;
}

Real inverse_tangent_integral(int k, const Real& x, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("inverse_tangent_integral: k must be >= 1");
  auto g = ctx.activate();
  if (abs(x) > 1) throw DomainError("inverse_tangent_integral: |x| must be <= 1");
  if (x.is_zero()) return Real(0);
  if (k == 1) return atan(x);
  return polylog(k, Complex(Real(0), x)).im;
}

Real kummer_lambda(int n, const Real& x, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("kummer_lambda: n must be >= 1");
  auto g = ctx.activate();
  if (x.is_zero() || abs(x) > 1) throw DomainError("kummer_lambda: need 0 < |x| <= 1");
  Real L = log(abs(x));
  Real sum(0);
  if (n >= 2) {
    Real Lk(1);
    Real inv_fact(1);
    for (int k = 0; k <= n - 2; ++k) {
      if (k > 0) {
        Lk *= L;
        inv_fact /= Real(k);
      }
      Real li = polylog(n - k, Complex(x)).re;
      Real term = li * Lk * inv_fact;
      if (k % 2) {
        sum -= term;
      } else {
        sum += term;
      }
    }
    sum *= Real(factorial(n - 2));
  }
  Real tail = pow(L, static_cast<long>(n)) / Real(n);
  return n % 2 ? sum - tail : sum + tail;
}

}  // namespace lsm
