#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "oddsing/glmn.hpp"
#include "oddsing/poly.hpp"
#include "oddsing/superalgebra.hpp"
#include "oddsing/uea.hpp"

namespace oddsing {

enum class Format { Plain, Latex, Json };

/// "plain", "latex" or "json". Throws Error(Usage) otherwise.
Format parse_format(std::string_view text);
std::string format_name(Format f);

/// Names polynomial symbol k in plain text or LaTeX.
using SymbolNamer = std::function<std::string(int symbol, bool latex)>;

/// a1..ap, b1..bq: coordinates of a symbolic weight.
SymbolNamer weight_symbols(const SuperAlgebra& alg);
/// The Cartan generator evaluating coordinate k.
SymbolNamer cartan_symbols(const SuperAlgebra& alg);

std::string render_rat(const Rat& r, bool latex);
/// Positive terms first, then negative ones, then the constant. Within a sign
/// group higher degree and then larger symbol indices come first.
std::string render_poly(const CartanPoly& p, const SymbolNamer& names, bool latex);
/// Generator labels left to right, repeated factors written as powers.
std::string render_monomial(const SuperAlgebra& alg, const Monomial& m, bool latex);

/// Sum of terms; `suffix` (e.g. " v+") follows the whole sum, which is
/// parenthesized in plain text when it has more than one term.
std::string render_element(const SuperAlgebra& alg, const Element<Rat>& e, bool latex,
                           const std::string& suffix = "");
std::string render_element(const SuperAlgebra& alg, const Element<CartanPoly>& e, const SymbolNamer& names,
                           bool latex, const std::string& suffix = "");

/// Σ_J d_J E_J with d_J printed as a product of its c-value factors, sorted
/// by their text. Constant factors fold into a numeric prefactor and terms
/// with a zero factor are dropped. With `cartan_right` the factors follow E_J.
std::string render_chain_formula(const SuperAlgebra& alg, const ChainFormula<CartanPoly>& f,
                                 const SymbolNamer& names, bool latex, bool cartan_right = false,
                                 const std::string& suffix = "");

/// {"terms": [{"coefficient": "p/q", "powers": [[symbol, exponent], ...]}, ...]}.
nlohmann::json poly_json(const CartanPoly& p);
CartanPoly poly_from_json(const nlohmann::json& j);

/// [{"monomial": [labels...], "coefficient": ...}, ...] in monomial order.
nlohmann::json element_json(const SuperAlgebra& alg, const Element<Rat>& e);
nlohmann::json element_json(const SuperAlgebra& alg, const Element<CartanPoly>& e);
/// Inverse of element_json. Throws Error(Usage) on unknown labels or a
/// coefficient of the wrong kind.
Element<Rat> element_from_json(const SuperAlgebra& alg, const nlohmann::json& terms);
Element<CartanPoly> poly_element_from_json(const SuperAlgebra& alg, const nlohmann::json& terms);

}  // namespace oddsing
