#include <functional>
#include <string>

#include "lsm/logsine/logsine.hpp"
#include "lsm/mahler/mahler.hpp"
#include "lsm/quadrature/tanh_sinh.hpp"
#include "lsm/specfun/polylog.hpp"

namespace lsm {

namespace {

const std::pair<const char*, MeasureFamily> kNames[] = {
    {"mu-k-1px", MeasureFamily::MuK1px},
    {"mu-k-1pxy-star", MeasureFamily::MuK1pxyStar},
    {"mu-k-1pxyz-star", MeasureFamily::MuK1pxyzStar},
    {"mu-mixed-1x-1xyz", MeasureFamily::MuMixed1x1xyz},
    {"mu2-1pxy", MeasureFamily::Mu2_1pxy},
    {"mu2-1pxyz", MeasureFamily::Mu2_1pxyz},
    {"mu-1pxy", MeasureFamily::Mu1pxy},
    {"mu-1pxyz", MeasureFamily::Mu1pxyz},
    {"mu-linear", MeasureFamily::MuLinear},
    {"mu-5term", MeasureFamily::Mu5Term},
    {"mu-6term", MeasureFamily::Mu6Term},
};

void compositions(int rest, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& emit) {
  if (rest == 0) {
    emit(cur);
    return;
  }
  for (int p = 2; p <= rest; ++p) {
    cur.push_back(p);
    compositions(rest - p, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

void MeasureSpec::validate() const {
  switch (family) {
    case MeasureFamily::MuK1px:
    case MeasureFamily::MuK1pxyStar:
    case MeasureFamily::MuK1pxyzStar:
      if (k < 1) throw DomainError("MeasureSpec: k must be at least 1");
      break;
    case MeasureFamily::MuMixed1x1xyz:
      if (k < 0) throw DomainError("MeasureSpec: k must be non-negative");
      break;
    default:
      break;
  }
}

MeasureFamily parse_measure_family(const std::string& name) {
  for (const auto& [n, f] : kNames) {
    if (name == n) return f;
  }
  throw DomainError("unknown measure family '" + name + "'");
}

std::string to_string(MeasureFamily f) {
  for (const auto& [n, g] : kNames) {
    if (g == f) return n;
  }
  return "?";
}

ConstExpr mu_k_1px(int k) {
  if (k < 1) throw DomainError("mu_k_1px: k must be at least 1");
  return -(ls_pi_recursive(k + 1) * ConstExpr(BasisConstant::pi(), -1));
}

Real mu_k_1px_mzv(int k, const PrecisionContext& ctx) {
  if (k < 2 || k > 8) throw DomainError("mu_k_1px_mzv: k must be in 2..8");
  auto g = ctx.activate();
  const PrecisionContext inner = ctx.raised(3);
  Real sum(0);
  std::vector<int> cur;
  compositions(k, cur, [&](const std::vector<int>& parts) {
    sum += ldexp(mzv(Composition(parts), inner), -2 * static_cast<long>(parts.size()));
  });
  sum *= Real(factorial(k));
  return rounded(k % 2 == 0 ? sum : -sum);
}

ConstExpr mu_k_1pxy_star(int k) {
  if (k < 1 || k > 7) throw DomainError("mu_k_1pxy_star: k must be in 1..7");
  return (ls_pi3_table(k + 1) - ls_pi_recursive(k + 1)) * ConstExpr(BasisConstant::pi(), -1);
}

Real mu_k_1pxyz_star(int k, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("mu_k_1pxyz_star: k must be at least 1");
  auto g = ctx.activate();
  auto f = [&](const Real&, const Real& fa, const Real&) {
    if (fa.is_zero()) return Real(0);
    return pow(fa * log(2 * sin(fa / 2)) + clausen2(fa), static_cast<long>(k));
  };
  Real v = integrate_1d_ends(f, Real(0), pi(), ctx).value;
  return rounded(v / pow(pi(), static_cast<long>(k + 1)));
}

Real cl2_square_integral(const PrecisionContext& ctx) {
  auto g = ctx.activate();
  auto f = [](const Real& x) {
    Real c = clausen2(x);
    return c * c;
  };
  return integrate_1d(f, Real(0), pi(), ctx).value;
}

Mu3Decomposition mu3_1pxyz_star_decomposition(const PrecisionContext& ctx) {
  auto g = ctx.activate();
  Mu3Decomposition d;
  d.direct = mu_k_1pxyz_star(3, ctx);
  d.cl2_cubed = integrate_1d([](const Real& x) { return pow(clausen2(x), 3L); }, Real(0), pi(), ctx).value;
  auto mixed = [](const Real&, const Real& fa, const Real&) {
    if (fa.is_zero()) return Real(0);
    Real l = log(2 * sin(fa / 2));
    return fa * fa * l * l * clausen2(fa);
  };
  d.mixed = integrate_1d_ends(mixed, Real(0), pi(), ctx).value;
  d.ls73 = gen_ls_pi_table(7, 3).eval(ctx);
  d.residual = d.direct - (2 * d.cl2_cubed + 3 * d.mixed - d.ls73) / pow(pi(), 4L);
  return d;
}

Real mu_mixed_1x_1xyz(int k, const PrecisionContext& ctx) {
  if (k < 0) throw DomainError("mu_mixed_1x_1xyz: k must be non-negative");
  auto g = ctx.activate();
  Real ls1 = gen_ls_pi_extract(k + 3, 1, ctx).value;
  // Ls_{k+1}(theta) pointwise: closed for k <= 1, nested quadrature otherwise
  const PrecisionContext inner = ctx.raised(2);
  auto ls_at = [&](const Real& t) -> Real {
    if (k == 0) return -t;
    if (k == 1) return clausen2(t);
    return ls_numeric(k + 1, 0, t, inner);
  };
  auto f = [&](const Real&, const Real& fa, const Real&) {
    if (fa.is_zero()) return Real(0);
    return ls_at(fa) * log(2 * sin(fa / 2));
  };
  Real integral = integrate_1d_ends(f, Real(0), pi(), ctx).value;
  Real p2 = pi() * pi();
  return rounded(-(ls1 + integral) / p2);
}

}  // namespace lsm
