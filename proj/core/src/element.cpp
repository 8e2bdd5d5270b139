#include "doubler/element.hpp"

#include <algorithm>
#include <string>

#include "doubler/error.hpp"

namespace doubler {

Element::Element(std::shared_ptr<const TowerSpec> tower, std::vector<Rational> coords)
    : tower_(std::move(tower)), coords_(std::move(coords)) {
  if (!tower_) throw Error(ErrorCode::InternalError, "element without tower");
  if (coords_.size() != tower_->dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(tower_->dim()) + " coordinates, got " +
                    std::to_string(coords_.size()));
  }
}

Element::Element(const TowerSpec& tower, std::vector<Rational> coords)
    : Element(std::make_shared<const TowerSpec>(tower), std::move(coords)) {}

Element Element::zero(std::shared_ptr<const TowerSpec> tower) {
  const std::size_t n = tower->dim();
  return Element(std::move(tower), std::vector<Rational>(n));
}

Element Element::scalar(std::shared_ptr<const TowerSpec> tower, const Rational& value) {
  std::vector<Rational> coords(tower->dim());
  coords[0] = value;
  return Element(std::move(tower), std::move(coords));
}

Element Element::basis(std::shared_ptr<const TowerSpec> tower, std::size_t i) {
  if (i < 1 || i > tower->dim()) {
    throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(i) + " out of range");
  }
  std::vector<Rational> coords(tower->dim());
  coords[i - 1] = Rational{1};
  return Element(std::move(tower), std::move(coords));
}

const Rational& Element::coord(std::size_t i) const {
  if (i < 1 || i > coords_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "coordinate " + std::to_string(i) + " out of range");
  }
  return coords_[i - 1];
}

bool Element::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool Element::is_scalar() const noexcept {
  return std::all_of(coords_.begin() + 1, coords_.end(),
                     [](const Rational& r) { return r.is_zero(); });
}

bool Element::same_tower(const Element& other) const noexcept {
  return tower_ == other.tower_ || *tower_ == *other.tower_;
}

namespace {

void require_same_tower(const Element& x, const Element& y) {
  if (!x.same_tower(y)) {
    throw Error(ErrorCode::TowerMismatch, "operands belong to towers '" + x.tower().to_string() +
                                              "' and '" + y.tower().to_string() + "'");
  }
}

}  // namespace

Element operator+(const Element& x, const Element& y) {
  require_same_tower(x, y);
  std::vector<Rational> out(x.coords().begin(), x.coords().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += y.coords()[i];
  return Element(x.tower_ptr(), std::move(out));
}

Element operator-(const Element& x, const Element& y) {
  require_same_tower(x, y);
  std::vector<Rational> out(x.coords().begin(), x.coords().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= y.coords()[i];
  return Element(x.tower_ptr(), std::move(out));
}

Element operator-(const Element& x) {
  std::vector<Rational> out;
  out.reserve(x.dim());
  for (const auto& r : x.coords()) out.push_back(-r);
  return Element(x.tower_ptr(), std::move(out));
}

Element operator*(const Rational& s, const Element& x) {
  std::vector<Rational> out;
  out.reserve(x.dim());
  for (const auto& r : x.coords()) out.push_back(s * r);
  return Element(x.tower_ptr(), std::move(out));
}

}  // namespace doubler
