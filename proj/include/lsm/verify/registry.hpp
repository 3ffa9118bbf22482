#ifndef LSM_VERIFY_REGISTRY_HPP
#define LSM_VERIFY_REGISTRY_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lsm/mpcore/context.hpp"

namespace lsm {

inline constexpr int kRegistryFormat = 1;

enum class IdentityKind { ExactVsOracle, OracleVsOracle, Inequality, Conjecture, RefutedExpected };

IdentityKind parse_identity_kind(const std::string& name);
std::string to_string(IdentityKind kind);

/// An evaluator name with its key=value parameters.
struct EvaluatorRef {
  std::string name;
  std::map<std::string, std::string> params;

  [[nodiscard]] std::string to_string() const;
  static EvaluatorRef parse(std::string_view text);
  friend bool operator==(const EvaluatorRef&, const EvaluatorRef&) = default;
};

/// Absolute tolerance max(10^-(D-5), floor) at D target digits.
struct TolerancePolicy {
  double floor = 0;

  [[nodiscard]] Real tolerance(int target_digits) const;
  [[nodiscard]] std::string to_string() const;
  static TolerancePolicy parse(std::string_view text);
  friend bool operator==(const TolerancePolicy&, const TolerancePolicy&) = default;
};

struct Identity {
  std::string id;
  IdentityKind kind = IdentityKind::ExactVsOracle;
  /// Content key of the statement this entry checks.
  std::string anchor;
  std::vector<std::string> tags;
  EvaluatorRef lhs;
  EvaluatorRef rhs;
  TolerancePolicy tolerance;
  /// RefutedExpected only: the smallest |lhs - rhs| that counts as the expected failure.
  double margin = 0;

  [[nodiscard]] bool has_tag(const std::string& tag) const;
  friend bool operator==(const Identity&, const Identity&) = default;
};

/// Parses the registry text format (see data/registry.txt). Throws DomainError
/// on a missing or unsupported format line, unknown fields, duplicate ids or
/// incomplete records.
std::vector<Identity> parse_registry(std::string_view text);
std::string render_registry(const std::vector<Identity>& ids);

/// The built-in registry, sorted by id.
const std::vector<Identity>& registry();
/// Throws DomainError for an unknown id.
const Identity& find_identity(const std::string& id);

/// Identities matching a tag; "all" selects everything except conjectures
/// unless `include_conjectures` is set.
std::vector<Identity> select_identities(const std::string& filter, bool include_conjectures);

/// Statements the registry must cover, one content key each.
const std::vector<std::string>& required_anchors();

}  // namespace lsm

#endif  // LSM_VERIFY_REGISTRY_HPP
