#ifndef LSM_SYMCONST_TABLE_HPP
#define LSM_SYMCONST_TABLE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "lsm/symconst/constexpr.hpp"

namespace lsm {

/// Closed form stored under `key` in the bundled table (data/closed_forms.txt).
/// Throws DomainError for unknown keys.
const ConstExpr& closed_form(std::string_view key);
bool has_closed_form(std::string_view key);
/// All keys in file order.
std::vector<std::string> closed_form_keys();

/// Parses a table in the closed-forms text format; exposed for tests.
std::vector<std::pair<std::string, ConstExpr>> parse_closed_form_table(std::string_view text);

}  // namespace lsm

#endif  // LSM_SYMCONST_TABLE_HPP
