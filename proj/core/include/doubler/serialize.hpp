#pragma once

#include <memory>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "doubler/element.hpp"
#include "doubler/rational.hpp"
#include "doubler/tower.hpp"

namespace doubler {

using Json = nlohmann::ordered_json;

/// Canonical rational as a JSON string ("p" or "p/q").
Json rational_to_json(const Rational& r);

/// Accepts a string in the rational grammar or a JSON integer.
Rational rational_from_json(const Json& j);

/// JSON array of canonical rational strings; array position 0 is
/// coordinate 1.
Json element_to_json(const Element& x);

/// Throws ParseError for malformed JSON or entries, DimensionMismatch when
/// the array length differs from the tower's dimension.
Element element_from_json(std::shared_ptr<const TowerSpec> tower, const Json& j);
Element parse_element(std::shared_ptr<const TowerSpec> tower, std::string_view text);

}  // namespace doubler
