#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "doubler/rational.hpp"
#include "doubler/tower.hpp"

namespace doubler {

/// An immutable element of the algebra described by a TowerSpec.
///
/// Coordinates follow the recursive pair layout: for x = (y, z) at the top
/// level, the first half of the coordinates are those of y and the second
/// half those of z. Coordinate 1 is the scalar part.
class Element {
 public:
  /// Throws DimensionMismatch unless coords.size() == tower.dim().
  Element(std::shared_ptr<const TowerSpec> tower, std::vector<Rational> coords);
  Element(const TowerSpec& tower, std::vector<Rational> coords);

  static Element zero(std::shared_ptr<const TowerSpec> tower);
  static Element scalar(std::shared_ptr<const TowerSpec> tower, const Rational& value);
  /// e_i, 1-based. e_1 is the identity.
  static Element basis(std::shared_ptr<const TowerSpec> tower, std::size_t i);

  const TowerSpec& tower() const noexcept { return *tower_; }
  const std::shared_ptr<const TowerSpec>& tower_ptr() const noexcept { return tower_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  std::span<const Rational> coords() const noexcept { return coords_; }

  /// Coordinate i, 1-based.
  const Rational& coord(std::size_t i) const;

  bool is_zero() const noexcept;
  /// All coordinates except the first are zero.
  bool is_scalar() const noexcept;

  bool same_tower(const Element& other) const noexcept;

  friend bool operator==(const Element& a, const Element& b) {
    return a.same_tower(b) && a.coords_ == b.coords_;
  }

 private:
  std::shared_ptr<const TowerSpec> tower_;
  std::vector<Rational> coords_;
};

Element operator+(const Element& x, const Element& y);
Element operator-(const Element& x, const Element& y);
Element operator-(const Element& x);
Element operator*(const Rational& s, const Element& x);

}  // namespace doubler
