#include <doctest.h>

#include <string>

#include "lsm/logsine/binomial_sums.hpp"
#include "lsm/logsine/logsine.hpp"
#include "lsm/specfun/polylog.hpp"
#include "lsm/specfun/zeta.hpp"
#include "lsm/symconst/table.hpp"

using namespace lsm;

namespace {

bool close(const Real& a, const Real& b, int digits) { return abs(a - b) <= pow10(-digits); }

// -int_0^pi theta^k log^{n-1-k}(2 sin(theta/2)), independent 50-digit quadrature
struct Frozen {
  int n, k;
  const char* value;
};
const Frozen kLsPi[] = {
    {4, 1, "-1.66376578949012561740769167273962973474532802"},
    {4, 2, "-5.66455970424461839080521368987881423225184556"},
    {5, 1, "-0.494072081777017388713956329118640385272929569"},
    {5, 2, "-3.65331132343948095382718815451948412870327204"},
    {5, 3, "-14.6393235754718222020585296799861730194454791"},
    {6, 1, "-1.30785247770498314624625708727572549528201803"},
    {6, 2, "-2.19437320015375912631955365140480437995339129"},
    {6, 3, "-9.37390039110411407236132034043767470445442089"},
    {6, 4, "-38.5178228726024872917815110022092044689716093"},
    {7, 3, "-6.01388960027866639491546582157417557569620512"},
};

const char* kLsPi3[] = {
    "1.01494160640965362502120255427452028594168931",  "-2.00966608113054390026235375434916450384793537",
    "6.0094975498188889162047887062032707405969633",   "-24.0125331255169146150157139636316267950288484",
    "120.020761371055300175504888639192761483448925",  "-720.041372702636186832405438415680832321973977",
    "5040.09632874785209831333776915655517613675637",  "-40320.2565473619048293510671301087474855923089",
};

}  // namespace

TEST_CASE("spec validation") {
  CHECK_THROWS_AS((LogSineSpec{0, 0, Rational(1)}.validate()), DomainError);
  CHECK_THROWS_AS((LogSineSpec{3, 3, Rational(1)}.validate()), DomainError);
  CHECK_THROWS_AS((LogSineSpec{3, 0, Rational(0)}.validate()), DomainError);
  CHECK_THROWS_AS((LogSineSpec{3, 0, Rational(5, 2)}.validate()), DomainError);
  CHECK_NOTHROW((LogSineSpec{3, 2, Rational(2)}.validate()));
}

TEST_CASE("numeric log-sine integrals") {
  auto ctx = make_context(30);
  auto g = ctx.activate();
  const Real p = pi();
  // trivial cases
  CHECK(close(ls_numeric({1, 0, Rational(2, 3)}, ctx), -2 * p / 3, 30));
  CHECK(close(ls_numeric({4, 3, Rational(1, 2)}, ctx), -pow(p / 2, 4L) / 4, 30));
  CHECK(close(ls_numeric({2, 0, Rational(1, 3)}, ctx), clausen2(p / 3), 30));
  CHECK(close(ls_numeric({2, 0, Rational(1)}, ctx), Real(0), 30));
  CHECK(close(ls_numeric({4, 0, Rational(1)}, ctx), Real(3) / 2 * p * zeta(3), 30));
  // full period: Ls_3(2pi) = -pi^3/6
  CHECK(close(ls_numeric({3, 0, Rational(2)}, ctx), -pow(p, 3L) / 6, 29));
  for (const auto& f : kLsPi) {
    CAPTURE(f.n);
    CAPTURE(f.k);
    CHECK(close(ls_numeric({f.n, f.k, Rational(1)}, ctx), Real(f.value), 30));
  }
  for (int n = 2; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(close(ls_numeric({n, 0, Rational(1, 3)}, ctx), Real(kLsPi3[n - 2]), 28));
  }
}

TEST_CASE("Ls_n(pi): recursion, generating function and table agree") {
  CHECK(ls_pi_recursive(2).is_zero());
  CHECK(ls_pi_recursive(3).to_string() == "-1/12*Pi^3");
  CHECK(ls_pi_recursive(4).to_string() == "3/2*Pi*Zeta(3)");
  auto egf = ls_pi_egf(10);
  REQUIRE(egf.size() == 10);
  CHECK(egf[0].to_string() == "-Pi");
  for (int n = 1; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(ls_pi_recursive(n) == egf[static_cast<size_t>(n - 1)]);
    if (n <= 8) CHECK(ls_pi_recursive(n) == closed_form("ls.pi." + std::to_string(n)));
    if (n >= 2) CHECK(ls_pi_recursive(n).is_homogeneous(n));
  }
  auto ctx = make_context(30);
  CHECK(close(ls_pi_recursive(8).eval(ctx), Real("5040.03987911504516434562143833539315930537593"), 28));
}

TEST_CASE("Ls_n(pi/3): series, table and quadrature") {
  auto ctx = make_context(35);
  auto g = ctx.activate();
  CHECK(close(ls_pi3_series(0, ctx), -pi() / 3, 35));
  CHECK(close(ls_pi3_series(1, ctx), clausen2(pi() / 3), 35));
  CHECK(close(ls_pi3_series(2, ctx), Real(-7) / 108 * pow(pi(), 3L), 35));
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    Real s = ls_pi3_series(n - 1, ctx);
    CHECK(close(s, Real(kLsPi3[n - 2]), 30));
    CHECK(close(ls_pi3_table(n).eval(ctx), s, 30));
    CHECK(ls_pi3_table(n).is_homogeneous(n));
  }
  CHECK_THROWS_AS(ls_pi3_table(9), DomainError);
}

TEST_CASE("central binomial sums") {
  auto ctx = make_context(30);
  auto g = ctx.activate();
  CHECK(close(central_binomial_sum(BinomialSign::Minus, 3, ctx) * 5 / 2, zeta(3), 30));
  CHECK(close(central_binomial_sum(BinomialSign::Plus, 4, ctx), Real(17) / 36 * pow(pi(), 4L) / 90, 30));
  CHECK(close(central_binomial_sum(BinomialSign::Plus, 2, ctx), pow(pi(), 2L) / 18, 30));
  // binomial-sum form against direct quadrature of Ls^{(1)}
  for (int n = 0; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(close(ls1_pi3_binomial(n, ctx), ls_numeric({n + 2, 1, Rational(1, 3)}, ctx), 28));
  }
  CHECK(close(closed_form("lsk.pi3.2.1").eval(ctx), ls1_pi3_binomial(0, ctx), 30));
  CHECK(close(closed_form("lsk.pi3.4.1").eval(ctx), ls1_pi3_binomial(2, ctx), 30));
  CHECK(close(closed_form("gl.pi3.4.1").eval(ctx),
              clausen_glaisher(ClKind::Gl, Composition{4, 1}, pi() / 3, ctx), 28));
  CHECK(close(closed_form("splus.8").eval(ctx), central_binomial_sum(BinomialSign::Plus, 8, ctx), 28));
}

TEST_CASE("generalized Ls at pi from the generating function") {
  auto ctx = make_context(30);
  for (const auto& f : kLsPi) {
    CAPTURE(f.n);
    CAPTURE(f.k);
    GenLsValue v = gen_ls_pi_extract(f.n, f.k, ctx);
    CHECK(close(v.value, Real(f.value), 30));
    CHECK(v.imag_residue < pow10(-30));
    const ConstExpr& t = gen_ls_pi_table(f.n, f.k);
    CHECK(t.is_homogeneous(f.n));
    CHECK(close(t.eval(ctx), v.value, 30));
  }
  // k = 0 reproduces Ls_n(pi)
  CHECK(close(gen_ls_pi_extract(8, 0, ctx).value, ls_pi_recursive(8).eval(ctx), 27));
  CHECK(close(gen_ls_pi_extract(9, 3, ctx).value, Real("-2.57179331024111105196325945628015299093161406"), 30));
  CHECK_THROWS_AS(gen_ls_pi_extract(11, 2, ctx), DomainError);
  CHECK_THROWS_AS(gen_ls_pi_extract(6, 6, ctx), DomainError);
  CHECK_THROWS_AS(gen_ls_pi_table(7, 1), DomainError);
}

TEST_CASE("weight four reductions at general tau") {
  auto ctx = make_context(30);
  auto g = ctx.activate();
  const Real p = pi();
  CHECK(close(ls_weight4_tau(Weight4Form::Ls3k1, p / 2, ctx), Real("0.124045652973274326232826469107625472658223443"), 30));
  CHECK(close(ls_weight4_tau(Weight4Form::Ls4, 2 * p / 3, ctx), Real("5.95066824413978493075781012901398402159162901"), 30));
  CHECK(close(ls_weight4_tau(Weight4Form::Ls4k1, Real("1.3"), ctx), Real("-0.259603998810843340923153709113519271440474782"), 30));
  CHECK(close(ls_weight4_tau(Weight4Form::Ls3, Real(5), ctx), Real("-3.15533873831574117381645459919125101720768669"), 30));
  CHECK(close(ls_weight4_tau(Weight4Form::Ls4k2, 3 * p / 2, ctx), Real("-19.4247064750239531930277604508534858717190432"), 30));
  CHECK(close(ls_weight4_tau(Weight4Form::Ls4k2, p, ctx), gen_ls_pi_table(4, 2).eval(ctx), 30));
  // Ls_3(2pi/3) = -13/162 pi^3 - 2 Gl_{2,1}(2pi/3)
  Real gl21 = clausen_glaisher(ClKind::Gl, Composition{2, 1}, 2 * p / 3, ctx);
  CHECK(close(ls_weight4_tau(Weight4Form::Ls3, 2 * p / 3, ctx), Real(-13) / 162 * pow(p, 3L) - 2 * gl21, 30));
  const Real taus[] = {Real("0.4"), p / 3, Real("2.5"), Real("4.1")};
  const std::pair<Weight4Form, std::pair<int, int>> forms[] = {
      {Weight4Form::Ls3, {3, 0}}, {Weight4Form::Ls3k1, {3, 1}}, {Weight4Form::Ls4, {4, 0}},
      {Weight4Form::Ls4k1, {4, 1}}, {Weight4Form::Ls4k2, {4, 2}}};
  for (const auto& t : taus) {
    for (const auto& [form, nk] : forms) {
      CAPTURE(t.to_string(5));
      CAPTURE(nk.first);
      CAPTURE(nk.second);
      CHECK(close(ls_weight4_tau(form, t, ctx), ls_numeric(nk.first, nk.second, t, ctx), 28));
    }
  }
  CHECK_THROWS_AS(ls_weight4_tau(Weight4Form::Ls3, Real(0), ctx), DomainError);
}

TEST_CASE("real form of the generating function") {
  auto ctx = make_context(25);
  auto g = ctx.activate();
  const Real x = Real(1) / 4, y = Real(1) / 8;
  Real oracle("4.00276911431202885186863177805791178063125138");
  CHECK(close(realgf_integral(x, y, ctx), oracle, 25));
  CHECK(close(realgf_series(x, y, ctx), oracle, 25));
  CHECK(close(ls1_gf_integral(x, ctx), Real("-5.51418366971418507880927531470875406099748694"), 25));
  CHECK(close(ls1_gf_series(x, ctx), Real("-5.51418366971418507880927531470875406099748694"), 25));
  CHECK(close(ls1_gf_series(Real(-1) / 3, ctx), Real("-4.32372225740066460756115377561629417118130457"), 25));
  CHECK_THROWS_AS(realgf_series(Real(1), y, ctx), DomainError);
}

TEST_CASE("difference of Ls at pi/3 and pi decays like log^k 2") {
  auto ctx = make_context(25);
  auto g = ctx.activate();
  for (int k = 1; k <= 8; ++k) {
    CAPTURE(k);
    Real d = abs(ls_numeric({k + 1, 0, Rational(1, 3)}, ctx) - ls_numeric({k + 1, 0, Rational(1)}, ctx));
    CHECK(d <= 2 * pi() / 3 * pow(ln2(), static_cast<long>(k)));
  }
}
