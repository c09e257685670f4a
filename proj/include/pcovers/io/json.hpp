#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "pcovers/arith/field.hpp"
#include "pcovers/curves/elliptic.hpp"
#include "pcovers/series/laurent.hpp"
#include "pcovers/unipotent/matrix.hpp"
#include "pcovers/unipotent/orbits.hpp"

// JSON encodings of the library's values. Every decoder reports malformed
// documents as ParseError; mathematically invalid content (a reducible
// modulus, a singular curve) surfaces as the library's own error types.
namespace pcov::io {

using nlohmann::json;

/// Parses text, mapping syntax errors to ParseError.
json parse_document(const std::string& text);

/// {"p": int, "modulus": [int...]}
json field_to_json(Field f);
Field field_from_json(const json& j);

/// Prime-field elements are bare integers; others are
/// {"p": int, "modulus": [...], "coeffs": [...]}. Decoding also accepts a
/// bare coefficient array. Bare forms need a context field.
json fq_to_json(const Fq& a);
Fq fq_from_json(const json& j, std::optional<Field> context = std::nullopt);

/// {"field": {...}, "val": int, "prec": int or null (exact), "coeffs": [...]}
/// Coefficients of extension fields are written as coefficient arrays since
/// the field is stated once.
json series_to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const json& j, std::optional<Field> context = std::nullopt);

using AnyMatrix = std::variant<UnipotentMatrix<Fq>, UnipotentMatrix<LaurentSeries>>;

/// {"n": int, "ring": "fq"|"p1"|"laurent"|"elliptic", "field": {...},
///  "entries": {"i,j": value}} with 1-based indices over the strict upper
/// triangle. Absent entries are zero; "field" may be omitted when entries
/// carry their own field or a context is given.
json matrix_to_json(const UnipotentMatrix<Fq>& m);
json matrix_to_json(const UnipotentMatrix<LaurentSeries>& m);
AnyMatrix matrix_from_json(const json& j, std::optional<Field> context = std::nullopt);
RingKind ring_from_name(const std::string& name);

/// {"p": int, "A": int, "B": int}
json curve_to_json(const EllipticCurve& e);
EllipticCurve curve_from_json(const json& j);

/// [{"i": int, "j": int, "c": int}, ...] for sum c x^i y^j.
json combination_to_json(const GlobalCombination& g);
GlobalCombination combination_from_json(const json& j, int p);

/// {"count", "alpha", "deuring", "anomalous", "injective", "surjective",
///  "equivalence"} plus the curve ("p", "A", "B") and "discrepancy".
json report_to_json(const EllipticReport& r);
EllipticReport report_from_json(const json& j);

/// {"n", "q", "class_count", "class_sizes": [...], "representatives": [...]}
json orbit_report_to_json(const OrbitReport& r);

}  // namespace pcov::io
