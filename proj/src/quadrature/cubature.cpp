#include "lsm/quadrature/cubature.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <boost/random/sobol.hpp>

#include "lsm/quadrature/tanh_sinh.hpp"

namespace lsm {

namespace {

struct Nested {
  const NdIntegrand& f;
  int dim;
  const NdOptions& opt;
  double tol;
  long evaluations = 0;
  long unconverged = 0;

  // returns value, adds the propagated error of this level to `err`
  double integrate(std::vector<double>& prefix, double& err) {
    const size_t axis = prefix.size();
    std::vector<double> pts{0.0};
    if (opt.breakpoints) {
      for (double p : opt.breakpoints(axis, prefix)) {
        if (p > 0 && p < 1) pts.push_back(p);
      }
    }
    pts.push_back(1.0);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const bool innermost = static_cast<int>(axis) + 1 == dim;
    double total = 0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
      const double a = pts[i], b = pts[i + 1];
      double inner_err = 0;
      auto g = [&](double x, double, double) -> double {
        if (x <= a || x >= b) return 0.0;
        prefix.push_back(x);
        double v;
        if (innermost) {
          v = f(prefix);
          ++evaluations;
        } else {
          double e = 0;
          v = integrate(prefix, e);
          inner_err = std::max(inner_err, e);
        }
        prefix.pop_back();
        return v;
      };
      QuadResultD r = tanh_sinh_d(g, a, b, tol, opt.max_level);
      if (!r.converged) {
        if (axis == 0) {
          throw PrecisionExhausted("integrate_nd: outer integral did not converge (error estimate " +
                                   std::to_string(r.error) + ")");
        }
        ++unconverged;
      }
      total += r.value;
      err += r.error + (b - a) * inner_err;
    }
    return total;
  }
};

NdResult qmc(const NdIntegrand& f, int dim, const NdOptions& opt) {
  if (opt.qmc_replicas < 2) throw DomainError("integrate_nd: qmc needs at least two replicas");
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> means;
  NdResult res;
  std::vector<double> x(static_cast<size_t>(dim));
  for (int r = 0; r < opt.qmc_replicas; ++r) {
    std::vector<double> shift(static_cast<size_t>(dim));
    for (auto& s : shift) s = unif(rng);
    boost::random::sobol gen(static_cast<std::size_t>(dim));
    double sum = 0;
    for (long i = 0; i < opt.qmc_points; ++i) {
      for (int d = 0; d < dim; ++d) {
        double u = std::ldexp(static_cast<double>(gen()), -64) + shift[static_cast<size_t>(d)];
        x[static_cast<size_t>(d)] = u - std::floor(u);
      }
      sum += f(x);
    }
    res.evaluations += opt.qmc_points;
    means.push_back(sum / static_cast<double>(opt.qmc_points));
  }
  double mean = 0;
  for (double m : means) mean += m;
  mean /= static_cast<double>(means.size());
  double var = 0;
  for (double m : means) var += (m - mean) * (m - mean);
  var /= static_cast<double>(means.size() - 1);
  res.value = mean;
  res.error = std::sqrt(var / static_cast<double>(means.size()));
  return res;
}

}  // namespace

NdMethod default_method(int dim) { return dim <= 3 ? NdMethod::NestedTanhSinh : NdMethod::Qmc; }

NdResult integrate_nd(const NdIntegrand& f, int dim, NdMethod method, const PrecisionContext& ctx,
                      const NdOptions& options) {
  if (dim < 1 || dim > 4) throw DomainError("integrate_nd: dimension must be in 1..4");
  if (method == NdMethod::Qmc) return qmc(f, dim, options);
  double tol = options.tolerance;
  if (tol <= 0) tol = std::max(std::pow(10.0, ctx.tail_log10), 1e-13);
  Nested n{f, dim, options, tol};
  std::vector<double> prefix;
  NdResult res;
  double err = 0;
  res.value = n.integrate(prefix, err);
  res.error = err;
  res.evaluations = n.evaluations;
  res.unconverged_inner = n.unconverged;
  return res;
}

}  // namespace lsm
