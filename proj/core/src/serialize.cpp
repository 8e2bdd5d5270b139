#include "doubler/serialize.hpp"

#include <vector>

#include "doubler/error.hpp"

namespace doubler {

Json rational_to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational{j.get<std::int64_t>()};
  throw ParseError(0, "rational must be a string or an integer, got " + j.dump());
}

Json element_to_json(const Element& x) {
  Json out = Json::array();
  for (const auto& r : x.coords()) out.push_back(rational_to_json(r));
  return out;
}

Element element_from_json(std::shared_ptr<const TowerSpec> tower, const Json& j) {
  if (!j.is_array()) throw ParseError(0, "element must be a JSON array");
  std::vector<Rational> coords;
  coords.reserve(j.size());
  for (const auto& entry : j) coords.push_back(rational_from_json(entry));
  return Element(std::move(tower), std::move(coords));
}

Element parse_element(std::shared_ptr<const TowerSpec> tower, std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte == 0 ? 0 : e.byte - 1, "invalid element JSON");
  }
  return element_from_json(std::move(tower), j);
}

}  // namespace doubler
