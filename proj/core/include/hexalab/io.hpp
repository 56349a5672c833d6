#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hexalab/constructions.hpp"
#include "hexalab/group.hpp"
#include "hexalab/rational.hpp"
#include "hexalab/space.hpp"
#include "hexalab/symbolic.hpp"

namespace hexalab {

/// {"points": [...], "weights": ["p/q", ...], "dist": [["p/q", ...], ...],
///  "value_kind": "plain" | "squared"}. Weights default to uniform and
/// points to "0".."n-1".
std::string space_to_json(const FiniteMetricMeasureSpace& space, int indent = 2);

/// Materializes a recipe document. "kind" is one of cayley, named, product,
/// union, substitution, hamming, cantor, zmod, explicit; a document without
/// "kind" is read as an explicit space.
Construction build_from_recipe(std::string_view json_text);

/// The group behind a cayley recipe, if the recipe is one.
std::optional<FiniteGroup> recipe_group(std::string_view json_text);

/// "cyclic:3,4" or "symmetric:3".
FiniteGroup parse_group_spec(std::string_view text);

/// CSV (header row and header column of point labels) or JSON
/// {"points", "values", "weights", optional "symbols"}; JSON is detected by
/// a leading '{'. CSV lines starting with '#' are comments.
IntervalTable parse_table(std::string_view text);
std::string table_to_csv(const IntervalTable& t);
std::string table_to_json(const IntervalTable& t, int indent = 2);

/// "p/q" rewritten over `denominator` when it divides it ("1/6" -> "6/36"),
/// unchanged otherwise.
std::string render_over(const Rational& r, std::int64_t denominator);

/// Quotes a CSV field when it contains a comma, quote or newline, or starts
/// with '#' (which would otherwise read as a comment line).
std::string csv_field(std::string_view s);

}  // namespace hexalab
