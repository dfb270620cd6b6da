#pragma once

#include <string>

#include "json.hpp"

#include "aqrm/coeff_tables.hpp"

namespace aqrm {

// {"N": int, "A"|"B"|"C"|"D": [{"i", "j", "poly"}]} with entries in
// (i, j) lexicographic order and polynomials in coupling-term JSON form.
nlohmann::json tables_to_json(const CoeffTables& t);

// Inverse of tables_to_json.  Throws std::invalid_argument on malformed
// input (bad shape, negative indices, out-of-range levels, zero entries).
CoeffTables tables_from_json(const nlohmann::json& j);

// Four aligned display lines "X &= ... \\", one per table, monomials grouped
// by descending level.  Example fragments: "a_-^{5}",
// "\frac{\Delta^{2}}{16g^{2}}(a_+^{\dagger})^{2}".
std::string tables_to_latex(const CoeffTables& t);

// Dispatch on format "json" or "latex"; anything else throws
// std::invalid_argument.
std::string render_tables(const CoeffTables& t, const std::string& format);

}  // namespace aqrm
