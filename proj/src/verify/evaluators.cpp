#include "lsm/verify/evaluators.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "lsm/logsine/binomial_sums.hpp"
#include "lsm/logsine/logsine.hpp"
#include "lsm/mahler/mahler.hpp"
#include "lsm/quadrature/tanh_sinh.hpp"
#include "lsm/specfun/eta.hpp"
#include "lsm/specfun/polylog.hpp"
#include "lsm/specfun/zeta.hpp"
#include "lsm/symconst/table.hpp"

namespace lsm {

namespace {

using Params = std::map<std::string, std::string>;
using Fn = std::function<Evaluation(const Params&, const PrecisionContext&)>;

const std::string& need(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw DomainError("evaluator: missing parameter '" + key + "'");
  return it->second;
}

int int_param(const Params& p, const std::string& key) {
  const std::string& s = need(p, key);
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw DomainError("evaluator: parameter '" + key + "' is not an integer: " + s);
}

Composition composition_param(const Params& p, const std::string& key) {
  std::vector<int> parts;
  std::istringstream in(need(p, key));
  std::string w;
  while (std::getline(in, w, ',')) parts.push_back(std::stoi(w));
  if (parts.empty()) throw DomainError("evaluator: empty composition");
  return Composition(parts);
}

// sigma, theta, tau: rational multiples of pi written as p/q
Rational pi_multiple(const Params& p, const std::string& key) { return parse_rational(need(p, key)); }

Real real_param(const Params& p, const std::string& key) { return parse_real_param(need(p, key)); }

std::string choice(const Params& p, const std::string& key, std::initializer_list<const char*> allowed) {
  const std::string& s = need(p, key);
  for (const char* a : allowed) {
    if (s == a) return s;
  }
  throw DomainError("evaluator: bad value '" + s + "' for '" + key + "'");
}

Evaluation exact(Real v) { return {std::move(v), std::nullopt}; }
Evaluation oracle(const OracleValue& o) { return {o.value, o.error.to_double()}; }

Real im_li3(const Complex& z, const PrecisionContext& ctx) { return polylog(3, z, ctx.raised(3)).im; }

// Named points for the trilogarithm reductions.
Complex trilog_point(const std::string& name) {
  const Real r3 = sqrt(Real(3));
  if (name == "3+i*sqrt(3)/2") return {Real(3) / 2, r3 / 2};
  if (name == "3-i*sqrt(3)/6") return {Real(1) / 2, -r3 / 6};
  if (name == "i*sqrt(3)") return {Real(0), r3};
  throw DomainError("evaluator: unknown trilogarithm point '" + name + "'");
}

Real ti(int k, const Real& x, const PrecisionContext& ctx) { return inverse_tangent_integral(k, x, ctx.raised(3)); }

// rho(2 sin theta) = int_{-pi}^{pi} (log|1 - 2 sin(theta) e^{i w}|)^2 dw for 2 sin theta < 1
Real rho_direct(const Real& theta, const PrecisionContext& ctx) {
  const Real a = 2 * sin(theta);
  if (!(a < 1)) throw DomainError("rho: needs 2 sin(theta) < 1");
  auto f = [&](const Real& w) {
    Real l = log(1 - 2 * a * cos(w) + a * a) / 2;
    return l * l;
  };
  return 2 * integrate_1d(f, Real(0), pi(), ctx).value;
}

const std::map<std::string, Fn>& table() {
  static const std::map<std::string, Fn> t = {
      // constants
      {"closed_form", [](const Params& p, const PrecisionContext& c) { return exact(closed_form(need(p, "key")).eval(c)); }},
      {"expr", [](const Params& p, const PrecisionContext& c) { return exact(ConstExpr::parse(need(p, "value")).eval(c)); }},
      {"decimal", [](const Params& p, const PrecisionContext&) { return exact(Real(need(p, "value"))); }},
      {"value", [](const Params& p, const PrecisionContext&) { return exact(real_param(p, "x")); }},
      {"zeta", [](const Params& p, const PrecisionContext& c) { return exact(zeta(int_param(p, "s"), c)); }},
      {"mzv", [](const Params& p, const PrecisionContext& c) { return exact(mzv(composition_param(p, "args"), c)); }},
      // log-sine integrals
      {"ls_numeric",
       [](const Params& p, const PrecisionContext& c) {
         LogSineSpec s{int_param(p, "n"), int_param(p, "k"), pi_multiple(p, "sigma")};
         return exact(ls_numeric(s, c));
       }},
      {"ls_pi_recursive",
       [](const Params& p, const PrecisionContext& c) { return exact(ls_pi_recursive(int_param(p, "n")).eval(c)); }},
      {"ls_pi_egf",
       [](const Params& p, const PrecisionContext& c) {
         const int n = int_param(p, "n");
         if (n < 1) throw DomainError("ls_pi_egf: n must be at least 1");
         return exact(ls_pi_egf(n)[static_cast<size_t>(n - 1)].eval(c));
       }},
      {"ls_pi3_series",
       [](const Params& p, const PrecisionContext& c) { return exact(ls_pi3_series(int_param(p, "n") - 1, c)); }},
      {"ls_pi3_table",
       [](const Params& p, const PrecisionContext& c) { return exact(ls_pi3_table(int_param(p, "n")).eval(c)); }},
      {"ls1_pi3_binomial",
       [](const Params& p, const PrecisionContext& c) { return exact(ls1_pi3_binomial(int_param(p, "n") - 2, c)); }},
      {"gen_ls_pi_extract",
       [](const Params& p, const PrecisionContext& c) {
         return exact(gen_ls_pi_extract(int_param(p, "n"), int_param(p, "k"), c).value);
       }},
      {"ls_weight4",
       [](const Params& p, const PrecisionContext& c) {
         static const std::map<std::string, Weight4Form> forms = {{"ls3", Weight4Form::Ls3},
                                                                  {"ls3k1", Weight4Form::Ls3k1},
                                                                  {"ls4", Weight4Form::Ls4},
                                                                  {"ls4k1", Weight4Form::Ls4k1},
                                                                  {"ls4k2", Weight4Form::Ls4k2}};
         auto it = forms.find(need(p, "form"));
         if (it == forms.end()) throw DomainError("ls_weight4: unknown form");
         auto g = c.activate();
         return exact(ls_weight4_tau(it->second, Real(pi_multiple(p, "tau")) * pi(), c));
       }},
      {"realgf_series",
       [](const Params& p, const PrecisionContext& c) {
         auto g = c.activate();
         return exact(realgf_series(real_param(p, "x"), real_param(p, "y"), c));
       }},
      {"realgf_integral",
       [](const Params& p, const PrecisionContext& c) {
         auto g = c.activate();
         return exact(realgf_integral(real_param(p, "x"), real_param(p, "y"), c));
       }},
      {"ls1_gf_series",
       [](const Params& p, const PrecisionContext& c) {
         auto g = c.activate();
         return exact(ls1_gf_series(real_param(p, "lambda"), c));
       }},
      {"ls1_gf_integral",
       [](const Params& p, const PrecisionContext& c) {
         auto g = c.activate();
         return exact(ls1_gf_integral(real_param(p, "lambda"), c));
       }},
      {"ls_decay_gap",
       [](const Params& p, const PrecisionContext& c) {
         const int k = int_param(p, "k");
         Real a = ls_pi3_series(k, c), b = ls_pi_recursive(k + 1).eval(c);
         auto g = c.activate();
         return exact(abs(a - b));
       }},
      {"central_binomial",
       [](const Params& p, const PrecisionContext& c) {
         BinomialSign s = choice(p, "sign", {"plus", "minus"}) == "plus" ? BinomialSign::Plus : BinomialSign::Minus;
         return exact(central_binomial_sum(s, int_param(p, "n"), c));
       }},
      // Clausen, Glaisher and friends
      {"clausen2",
       [](const Params& p, const PrecisionContext& c) {
         auto g = c.activate();
         return exact(clausen2(Real(pi_multiple(p, "theta")) * pi()));
       }},
      {"clausen_glaisher",
       [](const Params& p, const PrecisionContext& c) {
         ClKind k = choice(p, "kind", {"cl", "gl"}) == "cl" ? ClKind::Cl : ClKind::Gl;
         auto g = c.activate();
         return exact(clausen_glaisher(k, composition_param(p, "args"), Real(pi_multiple(p, "theta")) * pi(), c));
       }},
      {"polylog_circle",
       [](const Params& p, const PrecisionContext& c) {
         const bool re = choice(p, "part", {"re", "im"}) == "re";
         auto g = c.activate();
         const Real th = Real(pi_multiple(p, "theta")) * pi();
         Complex v = polylog(int_param(p, "s"), Complex(cos(th), sin(th)), c);
         return exact(re ? v.re : v.im);
       }},
      {"kummer_lambda",
       [](const Params& p, const PrecisionContext& c) {
         auto g = c.activate();
         return exact(kummer_lambda(int_param(p, "n"), real_param(p, "x"), c));
       }},
      {"inverse_tangent_integral",
       [](const Params& p, const PrecisionContext& c) {
         auto g = c.activate();
         return exact(inverse_tangent_integral(int_param(p, "k"), real_param(p, "x"), c));
       }},
      {"log",
       [](const Params& p, const PrecisionContext& c) {
         auto g = c.activate();
         return exact(log(real_param(p, "x")));
       }},
      // measures
      {"mu_oracle",
       [](const Params& p, const PrecisionContext& c) {
         MeasureSpec s{parse_measure_family(need(p, "family"))};
         if (p.count("k")) s.k = int_param(p, "k");
         auto g = c.activate();
         if (p.count("a")) s.a = Complex(real_param(p, "a"));
         if (p.count("b")) s.b = Complex(real_param(p, "b"));
         if (p.count("a_im")) s.a.im = real_param(p, "a_im");
         return oracle(mu_oracle(s, c));
       }},
      {"mu_k_1px", [](const Params& p, const PrecisionContext& c) { return exact(mu_k_1px(int_param(p, "k")).eval(c)); }},
      {"mu_k_1px_mzv",
       [](const Params& p, const PrecisionContext& c) { return exact(mu_k_1px_mzv(int_param(p, "k"), c)); }},
      {"mu_k_1pxy_star",
       [](const Params& p, const PrecisionContext& c) { return exact(mu_k_1pxy_star(int_param(p, "k")).eval(c)); }},
      {"mu_k_1pxyz_star",
       [](const Params& p, const PrecisionContext& c) { return exact(mu_k_1pxyz_star(int_param(p, "k"), c)); }},
      {"mu3_residual",
       [](const Params&, const PrecisionContext& c) { return exact(mu3_1pxyz_star_decomposition(c).residual); }},
      {"cl2_square_integral", [](const Params&, const PrecisionContext& c) { return exact(cl2_square_integral(c)); }},
      {"mu_mixed",
       [](const Params& p, const PrecisionContext& c) { return exact(mu_mixed_1x_1xyz(int_param(p, "k"), c)); }},
      {"mu_1px_1pxy_torus", [](const Params&, const PrecisionContext& c) { return oracle(mu_1px_1pxy_torus(c)); }},
      {"mu2_1pxy", [](const Params&, const PrecisionContext& c) { return exact(mu2_1pxy(c)); }},
      {"mu2_1pxy_ti3", [](const Params&, const PrecisionContext& c) { return exact(mu2_1pxy_ti3_form(c)); }},
      {"mu2_1pxy_dilog", [](const Params&, const PrecisionContext& c) { return exact(mu2_1pxy_dilog_form(c)); }},
      {"mu2_1pxy_glaisher", [](const Params&, const PrecisionContext& c) { return exact(mu2_1pxy_glaisher_form(c)); }},
      {"mu2_1pxy_torus", [](const Params&, const PrecisionContext& c) { return oracle(mu2_1pxy_torus(c)); }},
      {"w3d2_series",
       [](const Params& p, const PrecisionContext& c) {
         return exact(w3d2_series(choice(p, "sign", {"printed", "corrected"}) == "printed", c));
       }},
      {"dilog_tau",
       [](const Params& p, const PrecisionContext& c) {
         const bool re = choice(p, "part", {"re", "im"}) == "re";
         auto g = c.activate();
         Complex v = dilog_tau(real_param(p, "z"), c);
         return exact(re ? v.re : v.im);
       }},
      {"dilog_re_integral", [](const Params&, const PrecisionContext& c) { return exact(dilog_re_integral(c)); }},
      {"dilog_inversion_integral",
       [](const Params&, const PrecisionContext& c) { return exact(dilog_inversion_integral(c)); }},
      {"mu2_1pxyz_li4", [](const Params&, const PrecisionContext& c) { return exact(mu2_1pxyz_li4_form(c)); }},
      {"mu2_1pxyz_torus", [](const Params&, const PrecisionContext& c) { return oracle(mu2_1pxyz_torus(c)); }},
      {"walk_moment",
       [](const Params& p, const PrecisionContext& c) {
         auto g = c.activate();
         return exact(walk_moment(int_param(p, "n"), real_param(p, "s"), c));
       }},
      {"walk_derivative",
       [](const Params& p, const PrecisionContext& c) {
         return exact(walk_derivative(int_param(p, "n"), int_param(p, "k"), c));
       }},
      {"eta",
       [](const Params& p, const PrecisionContext& c) {
         const std::string m = choice(p, "method", {"auto", "direct", "transformed", "product"});
         auto g = c.activate();
         const Real t = real_param(p, "t");
         if (m == "direct") return exact(eta_q_direct(t, c));
         if (m == "transformed") return exact(eta_q_transformed(t, c));
         if (m == "product") return exact(eta_q_product(t, c));
         return exact(eta_q(t, c));
       }},
      {"rv_eta_integral",
       [](const Params& p, const PrecisionContext& c) {
         RvConjecture w = choice(p, "terms", {"5", "6"}) == "5" ? RvConjecture::FiveTerm : RvConjecture::SixTerm;
         return exact(rv_eta_integral(w, c));
       }},
      // steps in the evaluation of mu_2(1+x+y)
      {"im_li3",
       [](const Params& p, const PrecisionContext& c) {
         auto g = c.activate();
         return exact(im_li3(trilog_point(need(p, "z")), c));
       }},
      {"mu2_1pxy_trilog_form",
       [](const Params&, const PrecisionContext& c) {
         auto g = c.activate();
         const Real p = pi(), l3 = log(Real(3));
         Real v = Real(67) / 324 * pow(p, 3L) + 2 * clausen2(p / 3) * l3 - 8 * im_li3(trilog_point("i*sqrt(3)"), c) +
                  4 * im_li3(trilog_point("3+i*sqrt(3)/2"), c);
         return exact(v / p);
       }},
      {"trilog_reduction_3_root3",
       [](const Params&, const PrecisionContext& c) {
         auto g = c.activate();
         const Real p = pi(), l3 = log(Real(3));
         return exact(Real(55) / 1296 * pow(p, 3L) + Real(5) / 48 * p * l3 * l3 +
                      im_li3(trilog_point("3-i*sqrt(3)/6"), c));
       }},
      {"trilog_reduction_i_root3",
       [](const Params& p, const PrecisionContext& c) {
         const Rational coeff = choice(p, "sign", {"printed", "corrected"}) == "printed" ? Rational(-1, 6) : Rational(-1);
         auto g = c.activate();
         const Real pp = pi(), l3 = log(Real(3));
         return exact(pow(pp, 3L) / 16 + pp * l3 * l3 / 16 + Real(coeff) * ti(3, Real(1) / sqrt(Real(3)), c));
       }},
      {"ti3_log_sine",
       [](const Params&, const PrecisionContext& c) {
         auto g = c.activate();
         const Real p = pi(), l3 = log(Real(3));
         Real ls3 = ls_numeric(3, 0, 2 * p / 3, c.raised(2));
         return exact(Real(5) / 8 * ls3 - ti(2, Real(1) / sqrt(Real(3)), c) * l3 / 2 - p * l3 * l3 / 48 +
                      Real(2) / 27 * pow(p, 3L));
       }},
      {"ti2_clausen",
       [](const Params&, const PrecisionContext& c) {
         auto g = c.activate();
         const Real p = pi();
         return exact(Real(5) / 6 * clausen2(p / 3) - p / 12 * log(Real(3)));
       }},
      {"ls3_2pi3_glaisher",
       [](const Params&, const PrecisionContext& c) {
         auto g = c.activate();
         const Real p = pi();
         Real gl = clausen_glaisher(ClKind::Gl, Composition({2, 1}), 2 * p / 3, c.raised(2));
         return exact(Real(-13) / 162 * pow(p, 3L) - 2 * gl);
       }},
      {"rho_direct",
       [](const Params& p, const PrecisionContext& c) {
         auto g = c.activate();
         return exact(rho_direct(Real(pi_multiple(p, "theta")) * pi(), c));
       }},
      {"rho_parseval",
       [](const Params& p, const PrecisionContext& c) {
         auto g = c.activate();
         Real s = sin(Real(pi_multiple(p, "theta")) * pi());
         return exact(pi() * polylog(2, Complex(4 * s * s), c).re);
       }},
  };
  return t;
}

// One factor of a parameter value: number, pi, sqrt(q) or log(q).
Real parse_factor(const std::string& f, const std::string& whole) {
  auto inner = [&](size_t skip) {
    if (f.size() <= skip + 1 || f.back() != ')') throw DomainError("bad parameter value '" + whole + "'");
    return Real(parse_rational(f.substr(skip, f.size() - skip - 1)));
  };
  if (f == "pi") return pi();
  if (f.rfind("sqrt(", 0) == 0) return sqrt(inner(5));
  if (f.rfind("log(", 0) == 0) return log(inner(4));
  if (f.empty()) throw DomainError("bad parameter value '" + whole + "'");
  if (f.find_first_of(".eE") != std::string::npos) return Real(f);
  return Real(parse_rational(f));
}

}  // namespace

Real parse_real_param(const std::string& text) {
  Real v(1);
  char op = '*';
  size_t i = 0;
  int depth = 0;
  std::string cur;
  auto apply = [&] {
    Real f = parse_factor(cur, text);
    v = op == '*' ? v * f : v / f;
    cur.clear();
  };
  bool negate = false;
  if (!text.empty() && text[0] == '-') {
    negate = true;
    i = 1;
  }
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == '*' || ch == '/')) {
      apply();
      op = ch;
    } else {
      cur += ch;
    }
  }
  apply();
  return negate ? -v : v;
}

Evaluation evaluate(const EvaluatorRef& ref, const PrecisionContext& ctx) {
  auto it = table().find(ref.name);
  if (it == table().end()) throw DomainError("unknown evaluator '" + ref.name + "'");
  auto g = ctx.activate();
  Evaluation e = it->second(ref.params, ctx);
  e.value = rounded(e.value);
  return e;
}

bool has_evaluator(const std::string& name) { return table().count(name) != 0; }

std::vector<std::string> evaluator_names() {
  std::vector<std::string> out;
  for (const auto& [n, f] : table()) out.push_back(n);
  return out;
}

}  // namespace lsm
