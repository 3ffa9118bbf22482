#include "lsm/symconst/table.hpp"

#include <map>
#include <sstream>

namespace lsm {

namespace data {
extern const std::string_view closed_forms;
}

namespace {

constexpr int kFormatVersion = 1;

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

struct Table {
  std::vector<std::pair<std::string, ConstExpr>> entries;
  std::map<std::string, size_t, std::less<>> index;
};

const Table& table() {
  static const Table t = [] {
    Table out;
    out.entries = parse_closed_form_table(data::closed_forms);
    for (size_t i = 0; i < out.entries.size(); ++i) out.index.emplace(out.entries[i].first, i);
    return out;
  }();
  return t;
}

}  // namespace

std::vector<std::pair<std::string, ConstExpr>> parse_closed_form_table(std::string_view text) {
  std::vector<std::pair<std::string, ConstExpr>> out;
  std::map<std::string, int> seen;
  bool versioned = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      std::string body = trim(std::string_view(t).substr(1));
      if (body.rfind("format:", 0) == 0) {
        int v = std::stoi(body.substr(7));
        if (v != kFormatVersion) throw DomainError("closed-form table: unsupported format " + std::to_string(v));
        versioned = true;
      }
      continue;
    }
    size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw DomainError("closed-form table: missing '=' on line " + std::to_string(lineno));
    }
    std::string key = trim(std::string_view(t).substr(0, eq));
    if (key.empty()) throw DomainError("closed-form table: empty key on line " + std::to_string(lineno));
    if (!seen.emplace(key, lineno).second) throw DomainError("closed-form table: duplicate key " + key);
    out.emplace_back(key, ConstExpr::parse(std::string_view(t).substr(eq + 1)));
  }
  if (!versioned) throw DomainError("closed-form table: missing format line");
  return out;
}

const ConstExpr& closed_form(std::string_view key) {
  const Table& t = table();
  auto it = t.index.find(key);
  if (it == t.index.end()) throw DomainError("closed_form: unknown key " + std::string(key));
  return t.entries[it->second].second;
}

bool has_closed_form(std::string_view key) { return table().index.count(key) != 0; }

std::vector<std::string> closed_form_keys() {
  std::vector<std::string> keys;
  for (const auto& [k, v] : table().entries) keys.push_back(k);
  return keys;
}

}  // namespace lsm
