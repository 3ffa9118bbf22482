#include "lsm/verify/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include <json.hpp>

#include "lsm/verify/evaluators.hpp"

namespace lsm {

namespace {

using nlohmann::json;

const std::pair<const char*, Status> kStatuses[] = {
    {"verified", Status::Verified},
    {"refuted", Status::Refuted},
    {"precision_exhausted", Status::PrecisionExhausted},
};

json to_json(const Report& r) {
  json j = {{"id", r.id},           {"status", to_string(r.status)}, {"lhs", r.lhs},
            {"rhs", r.rhs},         {"abs_diff", r.abs_diff},        {"digits", r.digits},
            {"elapsed_seconds", r.elapsed_seconds}, {"anchor", r.anchor}};
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

Report from_json(const json& j) {
  Report r;
  r.id = j.at("id").get<std::string>();
  r.status = parse_status(j.at("status").get<std::string>());
  r.lhs = j.at("lhs").get<std::string>();
  r.rhs = j.at("rhs").get<std::string>();
  r.abs_diff = j.at("abs_diff").get<std::string>();
  r.digits = j.at("digits").get<int>();
  r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  r.anchor = j.at("anchor").get<std::string>();
  if (j.contains("message")) r.message = j.at("message").get<std::string>();
  return r;
}

SuiteSummary summarize(const std::vector<Report>& reports, const std::vector<Identity>& ids) {
  SuiteSummary s;
  for (size_t i = 0; i < reports.size(); ++i) {
    ++s.total;
    switch (reports[i].status) {
      case Status::Verified: ++s.verified; break;
      case Status::Refuted: ++s.refuted; break;
      case Status::PrecisionExhausted: ++s.precision_exhausted; break;
    }
    if (!report_ok(reports[i], ids[i])) ++s.unexpected;
  }
  return s;
}

}  // namespace

Status parse_status(const std::string& name) {
  for (const auto& [n, s] : kStatuses) {
    if (name == n) return s;
  }
  throw DomainError("unknown status '" + name + "'");
}

std::string to_string(Status s) {
  for (const auto& [n, t] : kStatuses) {
    if (t == s) return n;
  }
  return "?";
}

bool report_ok(const Report& r, const Identity& id) {
  if (id.kind != IdentityKind::RefutedExpected) return r.status == Status::Verified;
  if (r.status != Status::Refuted) return false;
  auto g = PrecisionGuard(20);
  return Real(r.abs_diff) >= Real(id.margin);
}

Report run_identity(const Identity& id, const PrecisionContext& ctx) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.id = id.id;
  r.anchor = id.anchor;
  r.digits = ctx.target_digits;
  auto g = ctx.activate();
  try {
    Evaluation lhs = evaluate(id.lhs, ctx);
    r.lhs = lhs.value.to_string(ctx.target_digits);
    Evaluation rhs = evaluate(id.rhs, ctx);
    r.rhs = rhs.value.to_string(ctx.target_digits);
    Real diff = lhs.value - rhs.value;
    r.abs_diff = abs(diff).to_string(6);
    const Real tol = id.tolerance.tolerance(ctx.target_digits);
    bool ok = id.kind == IdentityKind::Inequality ? diff <= tol : abs(diff) <= tol;
    r.status = ok ? Status::Verified : Status::Refuted;
  } catch (const Error& e) {
    r.status = Status::PrecisionExhausted;
    r.message = e.what();
  }
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Report run_identity(const std::string& id, const PrecisionContext& ctx) { return run_identity(find_identity(id), ctx); }

SuiteResult run_identities(const std::vector<Identity>& ids, const PrecisionContext& ctx, int parallelism) {
  if (parallelism < 1) throw DomainError("run_suite: parallelism must be positive");
  SuiteResult out;
  out.reports.resize(ids.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < ids.size(); i = next++) out.reports[i] = run_identity(ids[i], ctx);
  };
  const size_t n = std::min(static_cast<size_t>(parallelism), ids.size());
  std::vector<std::thread> pool;
  for (size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  out.summary = summarize(out.reports, ids);
  return out;
}

SuiteResult run_suite(const std::string& filter, const PrecisionContext& ctx, int parallelism,
                      bool include_conjectures) {
  std::vector<Identity> ids = select_identities(filter, include_conjectures);
  if (ids.empty()) {
    std::string hint = !include_conjectures && !select_identities(filter, true).empty()
                           ? " (conjecture entries run with --include-conjectures)"
                           : "";
    throw DomainError("run_suite: no identity matches '" + filter + "'" + hint);
  }
  return run_identities(ids, ctx, parallelism);
}

std::string report_to_json(const Report& r) { return to_json(r).dump(); }

Report report_from_json(const std::string& text) { return from_json(json::parse(text)); }

std::string suite_to_json(const SuiteResult& s) {
  json reports = json::array();
  for (const Report& r : s.reports) reports.push_back(to_json(r));
  json j = {{"reports", reports},
            {"summary",
             {{"total", s.summary.total},
              {"verified", s.summary.verified},
              {"refuted", s.summary.refuted},
              {"precision_exhausted", s.summary.precision_exhausted},
              {"unexpected", s.summary.unexpected}}}};
  return j.dump(2);
}

SuiteResult suite_from_json(const std::string& text) {
  json j = json::parse(text);
  SuiteResult s;
  for (const json& r : j.at("reports")) s.reports.push_back(from_json(r));
  const json& m = j.at("summary");
  s.summary.total = m.at("total").get<int>();
  s.summary.verified = m.at("verified").get<int>();
  s.summary.refuted = m.at("refuted").get<int>();
  s.summary.precision_exhausted = m.at("precision_exhausted").get<int>();
  s.summary.unexpected = m.at("unexpected").get<int>();
  return s;
}

}  // namespace lsm
