// lsm: evaluate log-sine integrals, polylogarithms and Mahler measures, and
// run the identity registry.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "lsm/logsine/logsine.hpp"
#include "lsm/mahler/mahler.hpp"
#include "lsm/specfun/polylog.hpp"
#include "lsm/symconst/table.hpp"
#include "lsm/verify/evaluators.hpp"
#include "lsm/verify/runner.hpp"

using namespace lsm;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kExhausted = 3 };

struct Globals {
  int digits = 20;
  bool json = false;
  int parallel = 1;
  bool include_conjectures = false;
};

struct Result {
  std::string what;
  std::optional<ConstExpr> closed_form;
  std::string closed_text;  // closed forms outside the constant ring
  Real value;
  std::optional<Real> imag;
  std::optional<double> error;
};

void print(const Result& r, const Globals& g) {
  auto p = PrecisionGuard(g.digits + 10);
  const std::string form = r.closed_form ? r.closed_form->to_string() : r.closed_text;
  if (g.json) {
    json j = {{"quantity", r.what}, {"digits", g.digits}, {"value", r.value.to_string(g.digits)}};
    if (!form.empty()) j["closed_form"] = form;
    if (r.imag) j["imag"] = r.imag->to_string(g.digits);
    if (r.error) j["error"] = *r.error;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << r.what << "\n";
  if (!form.empty()) std::cout << "  = " << form << "\n";
  std::cout << "  = " << r.value.to_string(g.digits);
  if (r.imag) std::cout << (r.imag->sign() < 0 ? " - " : " + ") << abs(*r.imag).to_string(g.digits) << " i";
  if (r.error) std::cout << "  (+/- " << *r.error << ")";
  std::cout << "\n";
}

// "pi", "pi/3", "2*pi/3", "1.3"
Rational angle_over_pi(const std::string& text, bool& exact) {
  std::string s = text;
  exact = s.find("pi") != std::string::npos;
  if (!exact) return Rational(0);
  std::string num = "1", den = "1";
  size_t at = s.find("pi");
  std::string before = s.substr(0, at), after = s.substr(at + 2);
  if (!before.empty()) {
    if (before.back() != '*') before += "*";
    num = before.substr(0, before.size() - 1);
  }
  if (!after.empty()) {
    if (after[0] != '/') throw DomainError("bad angle '" + text + "'");
    den = after.substr(1);
  }
  return parse_rational(num) / parse_rational(den);
}

Real angle_value(const std::string& text) {
  bool exact = false;
  Rational q = angle_over_pi(text, exact);
  return exact ? Real(q) * pi() : parse_real_param(text);
}

std::string ls_name(int n, int k, const std::string& sigma) {
  std::string s = "Ls_" + std::to_string(n);
  if (k > 0) s += "^(" + std::to_string(k) + ")";
  return s + "(" + sigma + ")";
}

Result eval_ls(int n, int k, const std::string& sigma, const PrecisionContext& ctx) {
  Result r;
  r.what = ls_name(n, k, sigma);
  bool exact = false;
  Rational q = angle_over_pi(sigma, exact);
  if (exact) {
    if (q == 1 && k == 0 && n >= 1) {
      r.closed_form = ls_pi_recursive(n);
    } else if (q == 1) {
      std::string key = "lsk.pi." + std::to_string(n) + "." + std::to_string(k);
      if (has_closed_form(key)) r.closed_form = closed_form(key);
    } else if (q == Rational(1, 3) && k == 0 && n >= 2 && n <= 8) {
      r.closed_form = ls_pi3_table(n);
    } else if (q == Rational(1, 3) && k == 1) {
      std::string key = "lsk.pi3." + std::to_string(n) + ".1";
      if (has_closed_form(key)) r.closed_form = closed_form(key);
    }
  }
  if (r.closed_form) {
    r.value = r.closed_form->eval(ctx);
  } else if (exact) {
    LogSineSpec spec{n, k, q};
    spec.validate();
    r.value = ls_numeric(spec, ctx);
  } else {
    auto g = ctx.activate();
    r.value = ls_numeric(n, k, parse_real_param(sigma), ctx);
  }
  return r;
}

Result eval_mahler(const std::string& family, int k, const std::string& a, const std::string& b,
                   const PrecisionContext& ctx) {
  MeasureSpec spec{parse_measure_family(family), k};
  spec.validate();
  Result r;
  r.what = family + (spec.family == MeasureFamily::MuK1px || spec.family == MeasureFamily::MuK1pxyStar ||
                             spec.family == MeasureFamily::MuK1pxyzStar || spec.family == MeasureFamily::MuMixed1x1xyz
                         ? " k=" + std::to_string(k)
                         : "");
  auto key = [&](const std::string& s) -> std::optional<ConstExpr> {
    if (has_closed_form(s)) return closed_form(s);
    return std::nullopt;
  };
  switch (spec.family) {
    case MeasureFamily::MuK1px:
      r.closed_form = mu_k_1px(k);
      break;
    case MeasureFamily::MuK1pxyStar:
      r.closed_form = mu_k_1pxy_star(k);
      break;
    case MeasureFamily::MuK1pxyzStar:
      r.closed_form = key("mu.1pxyzstar." + std::to_string(k));
      r.value = mu_k_1pxyz_star(k, ctx);
      return r;
    case MeasureFamily::MuMixed1x1xyz:
      r.closed_form = key("mu.mixed." + std::to_string(k));
      r.value = mu_mixed_1x_1xyz(k, ctx);
      return r;
    case MeasureFamily::Mu2_1pxy:
      r.closed_text = "1/4*Pi^2 + 3*Pi^-1*Ls_3(2*pi/3)";
      r.value = mu2_1pxy(ctx);
      return r;
    case MeasureFamily::Mu2_1pxyz:
      r.closed_form = mu2_1pxyz();
      break;
    case MeasureFamily::Mu1pxy:
      r.closed_form = closed_form("mu.1pxy");
      break;
    case MeasureFamily::Mu1pxyz:
      r.closed_form = closed_form("mu.1pxyz");
      break;
    case MeasureFamily::MuLinear: {
      auto g = ctx.activate();
      spec.a = Complex(parse_real_param(a));
      spec.b = Complex(parse_real_param(b));
      r.what = "mu(" + a + "*x + " + b + ")";
      r.closed_text = "max(log|a|, log|b|)";
      OracleValue o = mu_oracle(spec, ctx);
      r.value = o.value;
      return r;
    }
    case MeasureFamily::Mu5Term:
    case MeasureFamily::Mu6Term: {
      OracleValue o = mu_oracle(spec, ctx);
      r.value = o.value;
      r.error = o.error.to_double();
      return r;
    }
  }
  r.value = r.closed_form->eval(ctx);
  return r;
}

Composition parse_composition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream in(text);
  std::string w;
  while (std::getline(in, w, ',')) parts.push_back(std::stoi(w));
  return Composition(parts);
}

int run_verify(const Globals& g, const std::string& suite, const std::vector<std::string>& ids) {
  const PrecisionContext ctx = make_context(g.digits);
  SuiteResult res;
  if (!ids.empty()) {
    std::vector<Identity> sel;
    for (const auto& id : ids) sel.push_back(find_identity(id));
    res = run_identities(sel, ctx, g.parallel);
  } else {
    res = run_suite(suite, ctx, g.parallel, g.include_conjectures);
  }
  if (g.json) {
    std::cout << suite_to_json(res) << "\n";
  } else {
    for (const Report& r : res.reports) {
      const bool ok = report_ok(r, find_identity(r.id));
      std::cout << (ok ? "ok   " : "FAIL ") << r.id << "  " << to_string(r.status) << "  |diff| = "
                << (r.abs_diff.empty() ? "-" : r.abs_diff) << "  (" << r.elapsed_seconds << " s)";
      if (!r.message.empty()) std::cout << "  " << r.message;
      std::cout << "\n";
    }
    const SuiteSummary& s = res.summary;
    std::cout << s.total << " identities: " << s.verified << " verified, " << s.refuted << " refuted, "
              << s.precision_exhausted << " precision exhausted, " << s.unexpected << " unexpected\n";
  }
  if (res.summary.unexpected == 0) return kOk;
  return res.summary.precision_exhausted > 0 ? kExhausted : kFailed;
}

int run_list(const Globals& g, const std::string& filter, bool anchors) {
  std::vector<Identity> sel = select_identities(filter, true);
  if (anchors) {
    int missing = 0;
    for (const std::string& a : required_anchors()) {
      std::string ids;
      for (const Identity& id : registry()) {
        if (id.anchor == a) ids += (ids.empty() ? "" : " ") + id.id;
      }
      if (ids.empty()) ++missing;
      std::cout << a << ": " << (ids.empty() ? "MISSING" : ids) << "\n";
    }
    return missing == 0 ? kOk : kFailed;
  }
  if (g.json) {
    json arr = json::array();
    for (const Identity& id : sel) {
      arr.push_back({{"id", id.id},
                     {"kind", to_string(id.kind)},
                     {"anchor", id.anchor},
                     {"tags", id.tags},
                     {"lhs", id.lhs.to_string()},
                     {"rhs", id.rhs.to_string()},
                     {"tolerance", id.tolerance.to_string()}});
    }
    std::cout << arr.dump(2) << "\n";
    return kOk;
  }
  for (const Identity& id : sel) {
    std::cout << id.id << "  [" << to_string(id.kind) << "]";
    for (const auto& t : id.tags) std::cout << " #" << t;
    std::cout << "\n    " << id.lhs.to_string() << "\n    " << id.rhs.to_string() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"log-sine integrals, polylogarithms and Mahler measures"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--digits", g.digits, "target decimal digits")->check(CLI::Range(1, kMaxTargetDigits));
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--parallel", g.parallel, "worker threads for verify")->check(CLI::PositiveNumber);
  app.add_flag("--include-conjectures", g.include_conjectures, "also run conjecture entries");
  app.fallthrough();

  auto* eval = app.add_subcommand("eval", "evaluate one quantity");
  eval->require_subcommand(1);

  int n = 2, k = 0;
  std::string sigma = "pi";
  auto* ls = eval->add_subcommand("ls", "generalized log-sine integral Ls_n^(k)(sigma)");
  ls->add_option("--n", n, "order")->required();
  ls->add_option("--k", k, "power of theta");
  ls->add_option("--sigma", sigma, "upper limit: pi, pi/3, 2*pi/3 or a number");

  std::string kind = "cl", args = "2", theta = "pi/3";
  auto* cl = eval->add_subcommand("clausen", "Clausen or Glaisher function Cl_a / Gl_a at theta");
  cl->add_option("--kind", kind, "cl or gl")->check(CLI::IsMember({"cl", "gl"}));
  cl->add_option("--args", args, "index list, e.g. 4,1");
  cl->add_option("--theta", theta, "angle");

  int s = 2;
  std::string z = "1/2", zi = "0", pargs;
  auto* pl = eval->add_subcommand("polylog", "Li_s(z) or the multiple polylogarithm Li_{a}(z)");
  pl->add_option("--s", s, "order");
  pl->add_option("--args", pargs, "index list for the multiple polylogarithm");
  pl->add_option("--z", z, "real part of the argument");
  pl->add_option("--zi", zi, "imaginary part of the argument");

  std::string family, ma = "1", mb = "1";
  int mk = 1;
  auto* mh = eval->add_subcommand("mahler", "Mahler measure of a family");
  mh->add_option("--family", family, "family name (see README)")->required();
  mh->add_option("--k", mk, "power or number of 1+x factors");
  mh->add_option("--a", ma, "mu-linear: coefficient of x");
  mh->add_option("--b", mb, "mu-linear: constant term");

  int wn = 3, wk = 0;
  std::string ws = "1";
  auto* wk_cmd = eval->add_subcommand("walk", "random walk moment W_n(s), or its k-th derivative at 0");
  wk_cmd->add_option("--n", wn, "number of steps");
  wk_cmd->add_option("--s", ws, "moment");
  wk_cmd->add_option("--derivative", wk, "k-th derivative at s = 0 instead");

  std::string suite = "all";
  std::vector<std::string> ids;
  auto* verify = app.add_subcommand("verify", "run identities from the registry");
  verify->add_option("--suite", suite, "tag, identity id or 'all'");
  verify->add_option("--id", ids, "identity ids to run");

  std::string filter = "all";
  bool anchors = false;
  auto* list = app.add_subcommand("list", "list registry entries");
  list->add_option("--tag", filter, "only entries with this tag");
  list->add_flag("--anchors", anchors, "cross-reference table of statements to identity ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return run_verify(g, suite, ids);
    if (*list) return run_list(g, filter, anchors);

    const PrecisionContext ctx = make_context(g.digits);
    Result r;
    if (*ls) {
      r = eval_ls(n, k, sigma, ctx);
    } else if (*cl) {
      auto gd = ctx.activate();
      Composition a = parse_composition(args);
      r.what = std::string(kind == "cl" ? "Cl_" : "Gl_") + "{" + args + "}(" + theta + ")";
      r.value = clausen_glaisher(kind == "cl" ? ClKind::Cl : ClKind::Gl, a, angle_value(theta), ctx);
    } else if (*pl) {
      auto gd = ctx.activate();
      Complex arg(parse_real_param(z), parse_real_param(zi));
      Complex v = pargs.empty() ? polylog(s, arg, ctx) : multiple_polylog(parse_composition(pargs), arg, ctx);
      r.what = (pargs.empty() ? "Li_" + std::to_string(s) : "Li_{" + pargs + "}") + "(" + z +
               (zi == "0" ? "" : " + " + zi + " i") + ")";
      r.value = v.re;
      r.imag = v.im;
    } else if (*mh) {
      r = eval_mahler(family, mk, ma, mb, ctx);
    } else if (*wk_cmd) {
      if (wk > 0) {
        r.what = "W_" + std::to_string(wn) + " derivative " + std::to_string(wk) + " at 0";
        r.value = walk_derivative(wn, wk, ctx);
      } else {
        auto gd = ctx.activate();
        r.what = "W_" + std::to_string(wn) + "(" + ws + ")";
        r.value = walk_moment(wn, parse_real_param(ws), ctx);
      }
    }
    print(r, g);
    return kOk;
  } catch (const PrecisionExhausted& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return kExhausted;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
