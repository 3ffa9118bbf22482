#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "lsm/specfun/zeta.hpp"
#include "lsm/verify/evaluators.hpp"
#include "lsm/verify/runner.hpp"

using namespace lsm;

namespace {

const char* kTiny = R"(# format: 1

id: b
kind: inequality
anchor: x
tags: t1 t2
lhs: expr value=2
rhs: expr value=1

id: a
kind: refuted_expected
anchor: y
tags: t1
lhs: expr value=1
rhs: decimal value=1.1
tolerance: floor 1e-3
margin: 0.4
)";

Identity make(IdentityKind kind, const std::string& lhs, const std::string& rhs) {
  Identity id;
  id.id = "scratch";
  id.kind = kind;
  id.anchor = "scratch";
  id.tags = {"scratch"};
  id.lhs = EvaluatorRef::parse(lhs);
  id.rhs = EvaluatorRef::parse(rhs);
  return id;
}

}  // namespace

TEST_CASE("registry file parses and is internally consistent") {
  const auto& reg = registry();
  REQUIRE(reg.size() > 100);
  std::set<std::string> ids;
  for (const Identity& id : reg) {
    CAPTURE(id.id);
    CHECK(ids.insert(id.id).second);
    CHECK(has_evaluator(id.lhs.name));
    CHECK(has_evaluator(id.rhs.name));
    CHECK(!id.tags.empty());
  }
  CHECK(std::is_sorted(reg.begin(), reg.end(), [](const Identity& a, const Identity& b) { return a.id < b.id; }));
  CHECK(parse_registry(render_registry(reg)) == reg);
}

TEST_CASE("registry is exhaustive against the required statements") {
  std::set<std::string> required(required_anchors().begin(), required_anchors().end());
  std::set<std::string> covered;
  for (const Identity& id : registry()) {
    CAPTURE(id.id);
    CHECK(required.count(id.anchor) == 1);
    covered.insert(id.anchor);
  }
  for (const std::string& a : required) {
    CAPTURE(a);
    CHECK(covered.count(a) == 1);
  }
  for (const char* id : {"ls-pi-n4", "klo2-disproof", "parseval-cl2", "mu2z-printed", "mu2z-corrected", "w3d2-printed",
                         "mu2eb", "mu2y", "tan-ls1", "tan-ls2", "mrhoA", "ls3at2pi3", "fed1", "z2", "rv-five-term",
                         "rv-six-term"}) {
    CHECK_NOTHROW(find_identity(id));
  }
}

TEST_CASE("registry parser") {
  auto v = parse_registry(kTiny);
  REQUIRE(v.size() == 2);
  CHECK(v[0].id == "b");
  CHECK(v[0].tags == std::vector<std::string>{"t1", "t2"});
  CHECK(v[1].kind == IdentityKind::RefutedExpected);
  CHECK(v[1].margin == 0.4);
  CHECK(v[1].tolerance.floor == 1e-3);
  CHECK(v[1].rhs.params.at("value") == "1.1");
  CHECK(parse_registry(render_registry(v)) == v);

  std::string s = kTiny;
  CHECK_THROWS_AS(parse_registry(s.substr(s.find('\n') + 1)), DomainError);
  CHECK_THROWS_AS(parse_registry("# format: 2\n"), DomainError);
  CHECK_THROWS_AS(parse_registry(s + "\nid: a\nkind: conjecture\nanchor: z\ntags: t\nlhs: expr value=1\nrhs: expr value=1\n"),
                  DomainError);
  CHECK_THROWS_AS(parse_registry("# format: 1\nid: q\nkind: conjecture\nanchor: z\ntags: t\nlhs: expr value=1\n"),
                  DomainError);
  CHECK_THROWS_AS(parse_registry("# format: 1\nid: q\ncolour: red\n"), DomainError);
  CHECK_THROWS_AS(parse_registry("# format: 1\nid: q\nkind: refuted_expected\nanchor: z\ntags: t\n"
                                 "lhs: expr value=1\nrhs: expr value=1\n"),
                  DomainError);
  CHECK_THROWS_AS(parse_registry("# format: 1\nid: q\nkind: sometimes\n"), DomainError);
  CHECK_THROWS_AS(EvaluatorRef::parse("expr value"), DomainError);
  CHECK_THROWS_AS(TolerancePolicy::parse("floor -1"), DomainError);
}

TEST_CASE("tolerance policy") {
  auto g = PrecisionGuard(30);
  CHECK(TolerancePolicy{}.tolerance(25) == pow10(-20));
  CHECK(TolerancePolicy{1e-8}.tolerance(25) == Real(1e-8));
  CHECK(TolerancePolicy{1e-8}.tolerance(10) == pow10(-5));
}

TEST_CASE("parameter values") {
  auto g = PrecisionGuard(30);
  CHECK(parse_real_param("1/4") == Real(1) / 4);
  CHECK(abs(parse_real_param("2/3*pi") - 2 * pi() / 3) < pow10(-29));
  CHECK(abs(parse_real_param("1/sqrt(3)") - 1 / sqrt(Real(3))) < pow10(-29));
  CHECK(parse_real_param("-0.25") == Real(-1) / 4);
  CHECK(abs(parse_real_param("log(3)") - log(Real(3))) < pow10(-29));
  CHECK_THROWS_AS(parse_real_param("sqrt(3"), DomainError);
}

TEST_CASE("run_identity on the documented examples") {
  auto ctx = make_context(25);
  Report r = run_identity("ls-pi-n4", ctx);
  CHECK(r.status == Status::Verified);
  CHECK(r.anchor == "ls-pi-table");
  CHECK(r.digits == 25);
  {
    auto g = ctx.activate();
    CHECK(abs(Real(r.lhs) - Real(3) / 2 * pi() * zeta(3, ctx)) < pow10(-24));
  }
  Report k = run_identity("klo2-disproof", ctx);
  CHECK(k.status == Status::Refuted);
  CHECK(report_ok(k, find_identity("klo2-disproof")));
  CHECK(std::stod(k.abs_diff) == doctest::Approx(0.494553).epsilon(1e-5));
  CHECK(run_identity("parseval-cl2", ctx).status == Status::Verified);
  CHECK_THROWS_AS(run_identity("no-such-identity", ctx), DomainError);
}

TEST_CASE("statuses by kind") {
  auto ctx = make_context(20);
  CHECK(run_identity(make(IdentityKind::Inequality, "expr value=1", "expr value=2"), ctx).status == Status::Verified);
  CHECK(run_identity(make(IdentityKind::Inequality, "expr value=2", "expr value=1"), ctx).status == Status::Refuted);

  Identity near = make(IdentityKind::RefutedExpected, "expr value=1", "decimal value=1.1");
  near.margin = 0.4;
  Report r = run_identity(near, ctx);
  CHECK(r.status == Status::Refuted);
  CHECK_FALSE(report_ok(r, near));

  Report bad = run_identity(make(IdentityKind::ExactVsOracle, "expr value=1", "no_such_evaluator"), ctx);
  CHECK(bad.status == Status::PrecisionExhausted);
  CHECK(!bad.message.empty());
  CHECK(bad.rhs.empty());
}

TEST_CASE("suite: filters, conjectures and determinism") {
  auto ctx = make_context(25);
  SuiteResult all = run_suite("all", ctx, 1);
  CHECK(all.summary.unexpected == 0);
  CHECK(all.summary.precision_exhausted == 0);
  CHECK(all.summary.total == static_cast<int>(all.reports.size()));
  for (const Report& r : all.reports) {
    CAPTURE(r.id);
    CHECK(find_identity(r.id).kind != IdentityKind::Conjecture);
    CHECK(report_ok(r, find_identity(r.id)));
  }

  SuiteResult walks = run_suite("walks", ctx, 1);
  for (const Report& r : walks.reports) CHECK(find_identity(r.id).has_tag("walks"));
  CHECK_THROWS_AS(run_suite("conjectures", ctx, 1), DomainError);
  CHECK_THROWS_AS(run_suite("all", ctx, 0), DomainError);

  SuiteResult a = run_suite("mahler", ctx, 1), b = run_suite("mahler", ctx, 3);
  REQUIRE(a.reports.size() == b.reports.size());
  for (size_t i = 0; i < a.reports.size(); ++i) {
    Report x = a.reports[i], y = b.reports[i];
    x.elapsed_seconds = y.elapsed_seconds = 0;
    CHECK(x == y);
  }
  CHECK(a.summary == b.summary);
}

TEST_CASE("JSON reports round-trip") {
  auto ctx = make_context(20);
  Report r = run_identity("mu2-1pxy-value", ctx);
  CHECK(report_from_json(report_to_json(r)) == r);
  Report bad = run_identity(make(IdentityKind::ExactVsOracle, "expr value=1", "no_such_evaluator"), ctx);
  CHECK(report_from_json(report_to_json(bad)) == bad);

  SuiteResult s = run_suite("proof-steps", ctx, 2);
  SuiteResult back = suite_from_json(suite_to_json(s));
  CHECK(back.reports == s.reports);
  CHECK(back.summary == s.summary);
  CHECK_THROWS(report_from_json("{\"id\": \"x\"}"));
}
