#pragma once

// JSON form of a character table:
//   {"name": str, "order": "decimal", "conductor": N,
//    "classes": [{"label": str, "size": "decimal", "element_order": k}],
//    "irreducibles": [{"label": str, "values": [v, ...]}]}
// A value is an integer (number or decimal string) or a list of
// [exponent, coefficient] terms meaning sum coeff * zeta_N^exponent, with
// coefficients as integers or "a/b" strings.

#include "pconst/char_table.hpp"

#include <json.hpp>

#include <string>

namespace pconst {

nlohmann::json cycnum_to_json(const CycNum& v, unsigned conductor);
CycNum cycnum_from_json(const nlohmann::json& j, unsigned conductor);

nlohmann::json table_to_json(const CharTable& t);

/// Throws std::invalid_argument on malformed input and std::runtime_error
/// listing the violations when the table does not validate.
CharTable table_from_json(const nlohmann::json& j);

/// Reads and validates; errors as table_from_json, plus std::runtime_error
/// when the file cannot be read or parsed.
CharTable load_table(const std::string& path);

void save_table(const CharTable& t, const std::string& path);

}  // namespace pconst
