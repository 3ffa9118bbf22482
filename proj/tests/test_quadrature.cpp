#include <doctest.h>

#include <cmath>
#include <complex>
#include <thread>

#include "lsm/quadrature/cubature.hpp"
#include "lsm/quadrature/tanh_sinh.hpp"
#include "lsm/specfun/polylog.hpp"
#include "lsm/specfun/zeta.hpp"

using namespace lsm;

namespace {

struct Known {
  const char* name;
  EndpointIntegrand f;
  double a, b;  // multiples of `scale`
  bool scale_pi;
  std::function<Real()> exact;
};

std::vector<Known> known_integrals() {
  std::vector<Known> v;
  v.push_back({"log x", [](const Real& x, const Real&, const Real&) { return log(x); }, 0, 1, false,
               [] { return Real(-1); }});
  v.push_back({"log^2 x", [](const Real& x, const Real&, const Real&) { return pow(log(x), 2L); }, 0, 1, false,
               [] { return Real(2); }});
  v.push_back({"log^3 x", [](const Real& x, const Real&, const Real&) { return pow(log(x), 3L); }, 0, 1, false,
               [] { return Real(-6); }});
  v.push_back({"x^2 log^2 x", [](const Real& x, const Real&, const Real&) { return x * x * pow(log(x), 2L); }, 0,
               1, false, [] { return Real(2) / 27; }});
  v.push_back({"1/sqrt x", [](const Real& x, const Real&, const Real&) { return Real(1) / sqrt(x); }, 0, 1, false,
               [] { return Real(2); }});
  v.push_back({"log x / sqrt x", [](const Real& x, const Real&, const Real&) { return log(x) / sqrt(x); }, 0, 1,
               false, [] { return Real(-4); }});
  v.push_back({"sqrt x log x", [](const Real& x, const Real&, const Real&) { return sqrt(x) * log(x); }, 0, 1,
               false, [] { return Real(-4) / 9; }});
  v.push_back({"sqrt(1-x^2)", [](const Real&, const Real&, const Real& tb) { return sqrt(tb * (2 - tb)); }, 0, 1,
               false, [] { return pi() / 4; }});
  v.push_back({"1/sqrt(1-x^2)", [](const Real&, const Real&, const Real& tb) { return Real(1) / sqrt(tb * (2 - tb)); }, 0,
               1, false, [] { return pi() / 2; }});
  v.push_back({"log(1+x)/x", [](const Real& x, const Real&, const Real&) { return log1p(x) / x; }, 0, 1, false,
               [] { return pi() * pi() / 12; }});
  v.push_back({"log(1-x)/x", [](const Real& x, const Real&, const Real& tb) { return log(tb) / x; }, 0, 1, false,
               [] { return -pi() * pi() / 6; }});
  v.push_back({"log x/(1+x)", [](const Real& x, const Real&, const Real&) { return log(x) / (1 + x); }, 0, 1, false,
               [] { return -pi() * pi() / 12; }});
  v.push_back({"log x/(1-x)", [](const Real& x, const Real&, const Real& tb) { return (tb < 0.5 ? log1p(-tb) : log(x)) / tb; }, 0, 1,
               false, [] { return -pi() * pi() / 6; }});
  v.push_back({"log x log(1-x)", [](const Real& x, const Real&, const Real& tb) { return log(x) * log(tb); }, 0, 1,
               false, [] { return 2 - pi() * pi() / 6; }});
  v.push_back({"x log(1+x)", [](const Real& x, const Real&, const Real&) { return x * log1p(x); }, 0, 1, false,
               [] { return Real(1) / 4; }});
  v.push_back({"1/(1+x^2)", [](const Real& x, const Real&, const Real&) { return Real(1) / (1 + x * x); }, 0, 1, false,
               [] { return pi() / 4; }});
  v.push_back({"exp x", [](const Real& x, const Real&, const Real&) { return exp(x); }, 0, 1, false,
               [] { return exp(Real(1)) - 1; }});
  v.push_back({"log sin", [](const Real& x, const Real&, const Real&) { return log(sin(x)); }, 0, 0.5, true,
               [] { return -pi() / 2 * ln2(); }});
  v.push_back({"log 2sin(t/2)", [](const Real&, const Real& fa, const Real&) { return log(2 * sin(fa / 2)); }, 0, 1,
               true, [] { return Real(0); }});
  v.push_back({"log^2 2sin(t/2)",
               [](const Real&, const Real& fa, const Real&) { return pow(log(2 * sin(fa / 2)), 2L); }, 0, 1, true,
               [] { return pow(pi(), 3L) / 12; }});
  return v;
}

double clausen_pi3_over_pi() { return 1.01494160640965362502120255427452028594168931 / M_PI; }

}  // namespace

TEST_CASE("error estimates bound the true error on known integrals") {
  auto ctx = make_context(30);
  auto g = ctx.activate();
  const auto set = known_integrals();
  REQUIRE(set.size() == 20);
  for (const auto& k : set) {
    std::string name = k.name;
    CAPTURE(name);
    Real a = k.scale_pi ? pi() * Real(k.a) : Real(k.a);
    Real b = k.scale_pi ? pi() * Real(k.b) : Real(k.b);
    QuadResult r = integrate_1d_ends(k.f, a, b, ctx);
    Real err = abs(r.value - k.exact());
    CHECK(r.converged);
    CHECK(err <= r.error);
    CHECK(err <= pow10(-28));
  }
}

TEST_CASE("log-sine and moment examples") {
  auto ctx = make_context(40);
  auto g = ctx.activate();
  auto r = integrate_1d_ends([](const Real&, const Real& fa, const Real&) { return log(2 * sin(fa / 2)); }, Real(0),
                             pi(), ctx);
  CHECK(abs(r.value) <= pow10(-38));

  // int_0^1 x^{s-1} log^n x dx = (-1)^n n! / s^{n+1} at s = 3, n = 2
  auto m = integrate_1d([](const Real& x) { return x * x * pow(log(x), 2L); }, Real(0), Real(1), ctx);
  CHECK(abs(m.value - Real(2) / 27) <= pow10(-38));
}

TEST_CASE("polynomials are integrated exactly") {
  auto ctx = make_context(30);
  auto g = ctx.activate();
  for (long deg = 0; deg <= 12; ++deg) {
    auto r = integrate_1d([deg](const Real& x) { return pow(x, deg) * Real(deg + 1); }, Real(-1), Real(2), ctx);
    // int_{-1}^{2} (deg+1) x^deg = 2^{deg+1} - (-1)^{deg+1}
    Real exact = pow(Real(2), deg + 1) - pow(Real(-1), deg + 1);
    CHECK(abs(r.value - exact) <= pow10(-28) * abs(exact));
  }
}

TEST_CASE("Parseval: int_0^pi Cl_2^2 = pi^5/180") {
  auto ctx = make_context(25);
  auto g = ctx.activate();
  auto r = integrate_1d_ends([](const Real&, const Real& fa, const Real&) { return pow(clausen2(fa), 2L); }, Real(0),
                             pi(), ctx);
  CHECK(abs(r.value - pow(pi(), 5L) / 180) <= pow10(-25));
}

TEST_CASE("split integration and reversed limits") {
  auto ctx = make_context(30);
  auto g = ctx.activate();
  // |x - 1/3| has a kink; splitting there restores fast convergence
  std::vector<Real> pts{Real(0), Real(1) / 3, Real(1)};
  auto r = integrate_1d_split([](const Real& x, const Real&, const Real&) { return abs(x - Real(1) / 3); }, pts, ctx);
  CHECK(abs(r.value - Real(5) / 18) <= pow10(-28));
  auto fwd = integrate_1d([](const Real& x) { return exp(x); }, Real(0), Real(1), ctx);
  auto rev = integrate_1d([](const Real& x) { return exp(x); }, Real(1), Real(0), ctx);
  CHECK(fwd.value == -rev.value);
}

TEST_CASE("non-convergence is reported") {
  auto ctx = make_context(30);
  ctx.quadrature_levels = 5;
  auto g = ctx.activate();
  CHECK_THROWS_AS((void)integrate_1d([](const Real& x) { return x < Real(1) / 3 ? Real(-1) : Real(1); }, Real(0),
                                     Real(1), ctx),
                  PrecisionExhausted);
  auto r = tanh_sinh([](const Real& x, const Real&, const Real&) { return x < Real(1) / 3 ? Real(-1) : Real(1); },
                     Real(0), Real(1), pow10(-25), 5);
  CHECK_FALSE(r.converged);
  CHECK(r.error > pow10(-25));
}

TEST_CASE("abscissa cache under concurrent readers") {
  auto ctx = make_context(35);
  std::vector<Real> out(4);
  std::vector<std::thread> pool;
  for (size_t i = 0; i < out.size(); ++i) {
    pool.emplace_back([&, i] {
      auto g = ctx.activate();
      out[i] = integrate_1d([](const Real& x) { return log(x) * x; }, Real(0), Real(1), ctx).value;
    });
  }
  for (auto& t : pool) t.join();
  auto g = ctx.activate();
  for (const auto& v : out) {
    CHECK(v == out[0]);
    CHECK(abs(v + Real(1) / 4) <= pow10(-33));
  }
}

TEST_CASE("double-precision rule") {
  auto r = tanh_sinh_d([](double x, double, double) { return std::log(x); }, 0, 1, 1e-13);
  CHECK(r.converged);
  CHECK(std::abs(r.value + 1) < 1e-13);
}

TEST_CASE("2-D: Smyth's measure of 1 + x + y on the torus") {
  auto ctx = make_context(12);
  NdOptions opt;
  opt.tolerance = 1e-11;
  opt.breakpoints = [](size_t axis, const std::vector<double>& outer) -> std::vector<double> {
    if (axis == 0) return {1.0 / 3, 2.0 / 3};
    std::complex<double> b = 1.0 + std::polar(1.0, 2 * M_PI * outer[0]);
    double t = std::arg(-b) / (2 * M_PI);
    return {t < 0 ? t + 1 : t};
  };
  auto f = [](const std::vector<double>& x) {
    return std::log(std::abs(1.0 + std::polar(1.0, 2 * M_PI * x[0]) + std::polar(1.0, 2 * M_PI * x[1])));
  };
  NdResult r = integrate_nd(f, 2, NdMethod::NestedTanhSinh, ctx, opt);
  CHECK(std::abs(r.value - clausen_pi3_over_pi()) < 1e-10);
}

TEST_CASE("2-D separability") {
  auto ctx = make_context(12);
  auto f = [](const std::vector<double>& x) { return x[0] * x[0] * std::cos(x[1]); };
  NdResult r = integrate_nd(f, 2, NdMethod::NestedTanhSinh, ctx);
  auto fs = tanh_sinh_d([](double x, double, double) { return x * x; }, 0, 1, 1e-14);
  auto ft = tanh_sinh_d([](double x, double, double) { return std::cos(x); }, 0, 1, 1e-14);
  CHECK(std::abs(r.value - fs.value * ft.value) < 1e-13);
  CHECK(std::abs(r.value - std::sin(1.0) / 3) < 1e-13);
}

TEST_CASE("3-D: measure of 1 + x + y + z") {
  auto ctx = make_context(10);
  NdOptions opt;
  opt.tolerance = 1e-9;
  opt.breakpoints = [](size_t axis, const std::vector<double>& outer) -> std::vector<double> {
    auto frac = [](double t) { return t - std::floor(t); };
    if (axis == 0) return {0.5};
    std::complex<double> b = 1.0 + std::polar(1.0, 2 * M_PI * outer[0]);
    if (axis == 1) {
      // |b + e^{i phi}| = 1
      double c = std::abs(b) / 2;
      if (c >= 1) return {};
      double base = std::arg(b) + M_PI, off = std::acos(c);
      return {frac((base - off) / (2 * M_PI)), frac((base + off) / (2 * M_PI))};
    }
    std::complex<double> a = b + std::polar(1.0, 2 * M_PI * outer[1]);
    return {frac(std::arg(-a) / (2 * M_PI))};
  };
  auto f = [](const std::vector<double>& x) {
    // exact cancellation next to a break point would give log 0
    return std::log(std::max(1e-300, std::abs(1.0 + std::polar(1.0, 2 * M_PI * x[0]) +
                                              std::polar(1.0, 2 * M_PI * x[1]) + std::polar(1.0, 2 * M_PI * x[2]))));
  };
  NdResult r = integrate_nd(f, 3, NdMethod::NestedTanhSinh, ctx, opt);
  const double exact = 7 * 1.2020569031595942854 / (2 * M_PI * M_PI);
  CHECK(std::abs(r.value - exact) < 1e-8);
}

TEST_CASE("qmc with randomized replicas") {
  auto ctx = make_context(10);
  auto f = [](const std::vector<double>& x) {
    double s = x[0] + x[1] + x[2] + x[3];
    return s * s;
  };
  NdOptions opt;
  opt.qmc_points = 1 << 12;
  NdResult r = integrate_nd(f, 4, NdMethod::Qmc, ctx, opt);
  const double exact = 4.0 / 12 + 4.0;
  CHECK(r.error < 1e-3);
  CHECK(std::abs(r.value - exact) < 6 * r.error + 1e-12);
  NdResult again = integrate_nd(f, 4, NdMethod::Qmc, ctx, opt);
  CHECK(again.value == r.value);
  CHECK(default_method(4) == NdMethod::Qmc);
  CHECK_THROWS_AS((void)integrate_nd(f, 5, NdMethod::Qmc, ctx), DomainError);
}
