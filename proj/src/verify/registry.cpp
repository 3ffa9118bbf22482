#include "lsm/verify/registry.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>

namespace lsm {

namespace data {
extern const std::string_view registry;
}

namespace {

const std::pair<const char*, IdentityKind> kKinds[] = {
    {"exact_vs_oracle", IdentityKind::ExactVsOracle},
    {"oracle_vs_oracle", IdentityKind::OracleVsOracle},
    {"inequality", IdentityKind::Inequality},
    {"conjecture", IdentityKind::Conjecture},
    {"refuted_expected", IdentityKind::RefutedExpected},
};

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DomainError("registry: bad number '" + s + "' for " + what);
  }
}

struct Draft {
  Identity id;
  std::set<std::string> fields;
  int line = 0;
};

Identity finish(Draft& d) {
  for (const char* f : {"id", "kind", "anchor", "tags", "lhs", "rhs"}) {
    if (!d.fields.count(f)) {
      throw DomainError("registry: record at line " + std::to_string(d.line) + " lacks '" + f + "'");
    }
  }
  const bool refuting = d.id.kind == IdentityKind::RefutedExpected;
  if (refuting != (d.fields.count("margin") != 0)) {
    throw DomainError("registry: '" + d.id.id + "': margin is required for refuted_expected and only there");
  }
  return std::move(d.id);
}

}  // namespace

IdentityKind parse_identity_kind(const std::string& name) {
  for (const auto& [n, k] : kKinds) {
    if (name == n) return k;
  }
  throw DomainError("unknown identity kind '" + name + "'");
}

std::string to_string(IdentityKind kind) {
  for (const auto& [n, k] : kKinds) {
    if (k == kind) return n;
  }
  return "?";
}

std::string EvaluatorRef::to_string() const {
  std::string s = name;
  for (const auto& [k, v] : params) s += " " + k + "=" + v;
  return s;
}

EvaluatorRef EvaluatorRef::parse(std::string_view text) {
  std::vector<std::string> words = split_ws(text);
  if (words.empty()) throw DomainError("registry: empty evaluator reference");
  EvaluatorRef r;
  r.name = words[0];
  for (size_t i = 1; i < words.size(); ++i) {
    size_t eq = words[i].find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == words[i].size()) {
      throw DomainError("registry: parameter '" + words[i] + "' is not key=value");
    }
    if (!r.params.emplace(words[i].substr(0, eq), words[i].substr(eq + 1)).second) {
      throw DomainError("registry: repeated parameter in '" + std::string(text) + "'");
    }
  }
  return r;
}

Real TolerancePolicy::tolerance(int target_digits) const {
  Real t = pow10(-(target_digits - 5));
  return floor > 0 && Real(floor) > t ? Real(floor) : t;
}

std::string TolerancePolicy::to_string() const { return floor > 0 ? "floor " + format_double(floor) : "default"; }

TolerancePolicy TolerancePolicy::parse(std::string_view text) {
  std::vector<std::string> w = split_ws(text);
  if (w.size() == 1 && w[0] == "default") return {};
  if (w.size() == 2 && w[0] == "floor") {
    double f = parse_double(w[1], "tolerance");
    if (!(f > 0)) throw DomainError("registry: tolerance floor must be positive");
    return {f};
  }
  throw DomainError("registry: bad tolerance '" + std::string(text) + "'");
}

bool Identity::has_tag(const std::string& tag) const { return std::find(tags.begin(), tags.end(), tag) != tags.end(); }

std::vector<Identity> parse_registry(std::string_view text) {
  std::vector<Identity> out;
  std::set<std::string> ids;
  bool versioned = false;
  std::optional<Draft> cur;
  auto flush = [&] {
    if (!cur) return;
    Identity id = finish(*cur);
    if (!ids.insert(id.id).second) throw DomainError("registry: duplicate id " + id.id);
    out.push_back(std::move(id));
    cur.reset();
  };
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty()) {
      flush();
      continue;
    }
    if (t[0] == '#') {
      std::string body = trim(std::string_view(t).substr(1));
      if (body.rfind("format:", 0) == 0) {
        int v = std::stoi(body.substr(7));
        if (v != kRegistryFormat) throw DomainError("registry: unsupported format " + std::to_string(v));
        versioned = true;
      }
      continue;
    }
    if (!versioned) throw DomainError("registry: record before the format line");
    size_t colon = t.find(':');
    if (colon == std::string::npos) throw DomainError("registry: missing ':' on line " + std::to_string(lineno));
    std::string key = trim(std::string_view(t).substr(0, colon));
    std::string value = trim(std::string_view(t).substr(colon + 1));
    if (!cur) {
      cur.emplace();
      cur->line = lineno;
    }
    if (!cur->fields.insert(key).second) {
      throw DomainError("registry: repeated field '" + key + "' on line " + std::to_string(lineno));
    }
    Identity& id = cur->id;
    if (key == "id") {
      if (value.empty() || value.find_first_of(" \t") != std::string::npos) {
        throw DomainError("registry: bad id on line " + std::to_string(lineno));
      }
      id.id = value;
    } else if (key == "kind") {
      id.kind = parse_identity_kind(value);
    } else if (key == "anchor") {
      id.anchor = value;
    } else if (key == "tags") {
      id.tags = split_ws(value);
      if (id.tags.empty()) throw DomainError("registry: empty tags on line " + std::to_string(lineno));
    } else if (key == "lhs") {
      id.lhs = EvaluatorRef::parse(value);
    } else if (key == "rhs") {
      id.rhs = EvaluatorRef::parse(value);
    } else if (key == "tolerance") {
      id.tolerance = TolerancePolicy::parse(value);
    } else if (key == "margin") {
      id.margin = parse_double(value, "margin");
    } else {
      throw DomainError("registry: unknown field '" + key + "' on line " + std::to_string(lineno));
    }
  }
  flush();
  if (!versioned) throw DomainError("registry: missing format line");
  return out;
}

std::string render_registry(const std::vector<Identity>& ids) {
  std::string s = "# format: " + std::to_string(kRegistryFormat) + "\n";
  for (const Identity& id : ids) {
    s += "\nid: " + id.id + "\nkind: " + to_string(id.kind) + "\nanchor: " + id.anchor + "\ntags:";
    for (const auto& t : id.tags) s += " " + t;
    s += "\nlhs: " + id.lhs.to_string() + "\nrhs: " + id.rhs.to_string();
    s += "\ntolerance: " + id.tolerance.to_string() + "\n";
    if (id.kind == IdentityKind::RefutedExpected) s += "margin: " + format_double(id.margin) + "\n";
  }
  return s;
}

const std::vector<Identity>& registry() {
  static const std::vector<Identity> r = [] {
    std::vector<Identity> v = parse_registry(data::registry);
    std::sort(v.begin(), v.end(), [](const Identity& a, const Identity& b) { return a.id < b.id; });
    return v;
  }();
  return r;
}

const Identity& find_identity(const std::string& id) {
  const auto& r = registry();
  auto it = std::lower_bound(r.begin(), r.end(), id, [](const Identity& a, const std::string& b) { return a.id < b; });
  if (it == r.end() || it->id != id) throw DomainError("unknown identity '" + id + "'");
  return *it;
}

std::vector<Identity> select_identities(const std::string& filter, bool include_conjectures) {
  std::vector<Identity> out;
  for (const Identity& id : registry()) {
    bool conj = id.kind == IdentityKind::Conjecture;
    if (conj && !include_conjectures) continue;
    if (filter == "all" || id.has_tag(filter) || id.id == filter) out.push_back(id);
  }
  return out;
}

const std::vector<std::string>& required_anchors() {
  static const std::vector<std::string> a = {
      // definitions and classical measures
      "log-sine-integral", "generalized-log-sine-integral", "clausen-function", "clausen-glaisher-parity",
      "kummer-lambda", "inverse-tangent-integral", "multiple-zeta-values", "jensen-formula", "linear-measure",
      "smyth-1pxy", "smyth-1pxyz",
      // log-sine integrals
      "mu-k-1pxy-star-log-sine", "ls-pi-recursion", "ls-pi-egf", "ls-pi-table", "weight-4-reductions",
      "ls-pi3-table", "ls-pi3-binomial-series", "glaisher-4-1-at-pi-over-3", "central-binomial-sums",
      "ls-pi-generating-function", "ls-pi-generalized-values", "ls-pi-real-generating-function",
      "ls1-pi3-hypergeometric",
      // multiple and higher measures
      "mu-k-1pxy-star-values", "mu-k-1pxy-star-multiple", "mu-k-1pxyz-star", "parseval-cl2-square",
      "mu3-1pxyz-star-decomposition", "mu-mixed-1px-1pxyz",
      // walks and mu_2
      "walk-moments", "walk-derivatives", "mu-k-1px-mzv-sum", "mu-k-1px-log-sine", "w3-hypergeometric",
      "w3-second-derivative-series", "klo2-disproof", "mu2-1pxy-polylog", "mu2-1pxy-log-sine",
      "mu2-1pxy-value", "mu2-1pxy-dilog-representation", "dilog-tau-closed-form", "dilog-re-integral",
      "parseval-inner-integral", "dilog-inversion-integral", "mu2-1pxy-trilog-form", "trilog-reduction-3-root3",
      "trilog-reduction-i-root3", "ti3-log-sine", "ti2-clausen", "glaisher-2-1-at-2pi-over-3", "mu2-1pxyz",
      "dedekind-eta", "eta-conjecture-five-term", "eta-conjecture-six-term",
      // decay
      "log-sine-decay-bound",
  };
  return a;
}

}  // namespace lsm
