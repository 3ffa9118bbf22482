#include "lsm/quadrature/tanh_sinh.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace lsm {

namespace {

// Abscissa x = tanh(pi/2 sinh t) stored as d = 1 - x, with weight
// w = (pi/2) cosh t sech^2(pi/2 sinh t). Level L holds t = odd multiples of
// 2^-L (all integers for L = 0).
template <class T>
struct Node {
  T d;
  T w;
};

template <class T>
using Level = std::vector<Node<T>>;

Level<Real> make_level(int level, long bits) {
  Level<Real> out;
  auto g = PrecisionGuard::bits(bits + 20);
  const Real half_pi = pi() / 2;
  const Real cutoff = ldexp(Real(1), -(2 * bits + 40));
  const Real h = ldexp(Real(1), -level);
  for (long j = 0;; ++j) {
    Real t = level == 0 ? Real(j) : h * Real(2 * j + 1);
    Real u = half_pi * sinh(t);
    Real e = exp(-2 * u);
    Real d = 2 * e / (1 + e);
    Real w = half_pi * cosh(t) * 4 * e / ((1 + e) * (1 + e));
    if (w < cutoff) break;
    out.push_back({d, w});
  }
  return out;
}

Level<double> make_level_d(int level) {
  Level<double> out;
  const double half_pi = M_PI / 2;
  const double cutoff = std::ldexp(1.0, -(2 * 53 + 40));
  const double h = std::ldexp(1.0, -level);
  for (long j = 0;; ++j) {
    double t = level == 0 ? static_cast<double>(j) : h * static_cast<double>(2 * j + 1);
    double u = half_pi * std::sinh(t);
    double e = std::exp(-2 * u);
    double d = 2 * e / (1 + e);
    double w = half_pi * std::cosh(t) * 4 * e / ((1 + e) * (1 + e));
    if (w < cutoff || d == 0) break;
    out.push_back({d, w});
  }
  return out;
}

std::shared_mutex cache_mutex;
std::map<std::pair<int, long>, std::shared_ptr<const Level<Real>>> real_cache;
std::map<int, std::shared_ptr<const Level<double>>> double_cache;

std::shared_ptr<const Level<Real>> nodes(int level, long bits) {
  const auto key = std::make_pair(level, bits);
  {
    std::shared_lock lock(cache_mutex);
    auto it = real_cache.find(key);
    if (it != real_cache.end()) return it->second;
  }
  auto made = std::make_shared<const Level<Real>>(make_level(level, bits));
  std::unique_lock lock(cache_mutex);
  return real_cache.emplace(key, made).first->second;
}

std::shared_ptr<const Level<double>> nodes_d(int level) {
  {
    std::shared_lock lock(cache_mutex);
    auto it = double_cache.find(level);
    if (it != double_cache.end()) return it->second;
  }
  auto made = std::make_shared<const Level<double>>(make_level_d(level));
  std::unique_lock lock(cache_mutex);
  return double_cache.emplace(level, made).first->second;
}

// Error estimate in the style of Bailey: with d1, d2 the log10 differences to
// the previous two levels, the next error is about 10^(d1^2/d2). Inflated by a
// factor 10 and floored at the summation noise.
double estimate_log10(double d1, double d2, double noise) {
  if (d1 == -INFINITY) return noise;
  double e = std::max(2 * d1, d2 < 0 ? d1 * d1 / d2 : d1);
  e = std::max(e, noise);
  return std::min(e + 1, d1);
}

double safe_log10(double x) { return x > 0 ? std::log10(x) : -INFINITY; }

}  // namespace

QuadResult tanh_sinh(const EndpointIntegrand& f, const Real& a, const Real& b, const Real& tol, int max_level) {
  const long bits = working_bits();
  QuadResult r;
  if (a == b) {
    r.value = Real(0);
    r.error = Real(0);
    r.converged = true;
    return r;
  }
  if (b < a) {
    r = tanh_sinh(
        [&](const Real& x, const Real& fa, const Real& tb) { return f(x, tb, fa); }, b, a, tol, max_level);
    r.value = -r.value;
    return r;
  }
  Real sum(0);
  Real prev1, prev2;
  Real maxterm(0);
  // size of the outermost terms kept; the truncated remainder is below it
  Real tail(0);
  {
    auto g = PrecisionGuard::bits(bits + 16);
    const Real half = (b - a) / 2;
    const Real width = b - a;
    const double noise = -static_cast<double>(bits) * 0.30103;
    for (int level = 0; level <= max_level; ++level) {
      auto lv = nodes(level, bits);
      for (const auto& nd : *lv) {
        // right node: distance d*half from b; left node: distance d*half from a
        Real near = nd.d * half;
        Real far = width - near;
        Real fr = f(b - near, far, near);
        Real term = fr;
        if (!(level == 0 && &nd == &lv->front())) {
          Real fl = f(a + near, near, far);
          term += fl;
          r.evaluations += 2;
        } else {
          r.evaluations += 1;
        }
        term *= nd.w;
        maxterm = max(maxterm, abs(term));
        if (&nd == &lv->back()) tail = max(tail, abs(term));
        sum += term;
      }
      Real est = sum * half * ldexp(Real(1), -level);
      r.value = est;
      r.level = level;
      if (level >= 2) {
        double d1 = safe_log10(abs(est - prev1).to_double());
        double d2 = safe_log10(abs(est - prev2).to_double());
        double floor10 = std::max(noise + safe_log10((maxterm * half).to_double()),
                                  safe_log10((tail * half).to_double()));
        double e = estimate_log10(d1, d2, floor10);
        r.error = pow(Real(10), Real(e));
        if (level >= 3 && r.error <= tol) {
          r.converged = true;
          break;
        }
      } else {
        r.error = level == 1 ? abs(est - prev1) : abs(est);
      }
      prev2 = prev1;
      prev1 = est;
    }
  }
  r.value = rounded(r.value);
  r.error = rounded(r.error);
  return r;
}

QuadResult integrate_1d_ends(const EndpointIntegrand& f, const Real& a, const Real& b, const PrecisionContext& ctx) {
  auto g = ctx.activate();
  QuadResult r = tanh_sinh(f, a, b, ctx.tail_tolerance(), ctx.quadrature_levels);
  if (!r.converged) {
    throw PrecisionExhausted("integrate_1d: no convergence after " + std::to_string(ctx.quadrature_levels) +
                             " levels (error estimate " + r.error.to_string(3) + ")");
  }
  return r;
}

QuadResult integrate_1d(const Integrand& f, const Real& a, const Real& b, const PrecisionContext& ctx) {
  // nodes that round onto an endpoint carry weight below the tolerance
  return integrate_1d_ends(
      [&](const Real& x, const Real&, const Real&) { return x == a || x == b ? Real(0) : f(x); }, a, b, ctx);
}

QuadResult integrate_1d_split(const EndpointIntegrand& f, const std::vector<Real>& points,
                              const PrecisionContext& ctx) {
  if (points.size() < 2) throw DomainError("integrate_1d_split: need at least two points");
  auto g = ctx.activate();
  QuadResult total;
  total.value = Real(0);
  total.error = Real(0);
  total.converged = true;
  const Real tol = ctx.tail_tolerance() / Real(static_cast<long>(points.size() - 1));
  for (size_t i = 0; i + 1 < points.size(); ++i) {
    if (!(points[i] < points[i + 1])) throw DomainError("integrate_1d_split: points must increase");
    QuadResult r = tanh_sinh(f, points[i], points[i + 1], tol, ctx.quadrature_levels);
    if (!r.converged) {
      throw PrecisionExhausted("integrate_1d_split: no convergence on piece " + std::to_string(i) +
                               " (error estimate " + r.error.to_string(3) + ")");
    }
    total.value += r.value;
    total.error += r.error;
    total.evaluations += r.evaluations;
    total.level = std::max(total.level, r.level);
  }
  return total;
}

QuadResultD tanh_sinh_d(const EndpointIntegrandD& f, double a, double b, double tol, int max_level) {
  QuadResultD r;
  if (a == b) {
    r.converged = true;
    return r;
  }
  if (b < a) {
    r = tanh_sinh_d([&](double x, double fa, double tb) { return f(x, tb, fa); }, b, a, tol, max_level);
    r.value = -r.value;
    return r;
  }
  const double half = (b - a) / 2, width = b - a;
  double sum = 0, prev1 = 0, prev2 = 0, maxterm = 0, tail = 0;
  for (int level = 0; level <= max_level; ++level) {
    auto lv = nodes_d(level);
    for (size_t i = 0; i < lv->size(); ++i) {
      const auto& nd = (*lv)[i];
      double near = nd.d * half;
      double far = width - near;
      double term = f(b - near, far, near);
      if (level == 0 && i == 0) {
        r.evaluations += 1;
      } else {
        term += f(a + near, near, far);
        r.evaluations += 2;
      }
      term *= nd.w;
      maxterm = std::max(maxterm, std::abs(term));
      if (i + 1 == lv->size()) tail = std::max(tail, std::abs(term));
      sum += term;
    }
    double est = sum * half * std::ldexp(1.0, -level);
    r.value = est;
    r.level = level;
    if (level >= 2) {
      double floor10 = std::max(-15.5 + safe_log10(maxterm * half), safe_log10(tail * half));
      double e = estimate_log10(safe_log10(std::abs(est - prev1)), safe_log10(std::abs(est - prev2)), floor10);
      r.error = std::pow(10.0, e);
      if (level >= 3 && r.error <= tol) {
        r.converged = true;
        break;
      }
    } else {
      r.error = level == 1 ? std::abs(est - prev1) : std::abs(est);
    }
    prev2 = prev1;
    prev1 = est;
  }
  return r;
}

}  // namespace lsm
