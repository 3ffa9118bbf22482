#ifndef LSM_VERIFY_RUNNER_HPP
#define LSM_VERIFY_RUNNER_HPP

#include <string>
#include <vector>

#include "lsm/verify/registry.hpp"

namespace lsm {

enum class Status { Verified, Refuted, PrecisionExhausted };

Status parse_status(const std::string& name);
std::string to_string(Status s);

struct Report {
  std::string id;
  Status status = Status::Verified;
  /// Decimal strings at the target digits; empty when a side failed.
  std::string lhs;
  std::string rhs;
  std::string abs_diff;
  int digits = 0;
  double elapsed_seconds = 0;
  std::string anchor;
  /// Why a side failed; empty otherwise.
  std::string message;

  friend bool operator==(const Report&, const Report&) = default;
};

/// True when the report has the status its identity expects.
bool report_ok(const Report& r, const Identity& id);

Report run_identity(const Identity& id, const PrecisionContext& ctx);
/// Throws DomainError for an unknown id.
Report run_identity(const std::string& id, const PrecisionContext& ctx);

struct SuiteSummary {
  int total = 0;
  int verified = 0;
  int refuted = 0;
  int precision_exhausted = 0;
  /// Reports without their expected status.
  int unexpected = 0;

  friend bool operator==(const SuiteSummary&, const SuiteSummary&) = default;
};

struct SuiteResult {
  std::vector<Report> reports;  // in id order
  SuiteSummary summary;
};

/// Evaluates the selected identities on up to `parallelism` threads.
SuiteResult run_suite(const std::string& filter, const PrecisionContext& ctx, int parallelism,
                      bool include_conjectures = false);
SuiteResult run_identities(const std::vector<Identity>& ids, const PrecisionContext& ctx, int parallelism);

std::string report_to_json(const Report& r);
Report report_from_json(const std::string& text);
std::string suite_to_json(const SuiteResult& s);
SuiteResult suite_from_json(const std::string& text);

}  // namespace lsm

#endif  // LSM_VERIFY_RUNNER_HPP
