#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "doubler/rational.hpp"

namespace doubler {

enum class DoublingKind { CayleyDickson, ConwaySmith };

/// "cd" or "cs".
std::string_view kind_tag(DoublingKind kind) noexcept;

/// One doubling step: the product rule and the parameter D.
struct LevelSpec {
  DoublingKind kind = DoublingKind::CayleyDickson;
  Rational d;

  friend bool operator==(const LevelSpec&, const LevelSpec&) = default;
};

/// An ordered list of doubling levels over the rationals. Level 1 is applied
/// first (to k itself); the algebra has dimension 2^depth.
///
/// Conway-Smith levels must have D < 0 so that every lower-level element the
/// product needs to invert has positive norm.
class TowerSpec {
 public:
  TowerSpec() = default;
  explicit TowerSpec(std::vector<LevelSpec> levels);

  /// Grammar: level ("," level)*, level := ("cd"|"cs") ":" rational.
  /// Whitespace is rejected. The empty string is rejected as well; the
  /// scalar tower is built with the default constructor.
  static TowerSpec parse(std::string_view text);

  /// A homogeneous tower of `depth` levels with the same parameter.
  static TowerSpec uniform(DoublingKind kind, const Rational& d, std::size_t depth);

  std::size_t depth() const noexcept { return levels_.size(); }
  std::size_t dim() const noexcept { return std::size_t{1} << levels_.size(); }
  const std::vector<LevelSpec>& levels() const noexcept { return levels_; }

  /// Level j in 1..depth.
  const LevelSpec& level(std::size_t j) const;

  /// C_j = -D_j, the coefficient contributed by level j to the norm form.
  Rational c(std::size_t j) const;

  /// The tower made of levels 1..depth (a subalgebra of this one).
  TowerSpec prefix(std::size_t depth) const;

  /// True when every level uses `kind`.
  bool homogeneous(DoublingKind kind) const noexcept;

  /// True when every D_j < 0, which makes the norm form positive definite.
  bool all_negative() const noexcept;

  /// Towers covered by the left-alternativity results: all Conway-Smith of
  /// any depth, or all Cayley-Dickson of depth at most 3.
  bool left_alternative_guaranteed() const noexcept;

  /// The grammar string; parse(to_string()) reproduces the tower. The scalar
  /// tower prints as "".
  std::string to_string() const;

  friend bool operator==(const TowerSpec&, const TowerSpec&) = default;

 private:
  std::vector<LevelSpec> levels_;
};

/// A point of {0,1}^n; bit j (1-based) says whether the coordinate lies in
/// the second component at doubling level j.
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<std::uint8_t> bits);

  /// e(i): the i-th smallest multi-index (1-based) among the 2^n.
  static MultiIndex at_position(std::size_t i, std::size_t n);

  std::size_t size() const noexcept { return bits_.size(); }
  /// Bit j in 1..n.
  std::uint8_t bit(std::size_t j) const;
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  /// e < f iff for some j, e_j = 0, f_j = 1 and e_i = f_i for all i > j.
  /// Indices of different lengths are unordered and compare as unequal.
  friend std::partial_ordering operator<=>(const MultiIndex& e, const MultiIndex& f);
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// C^{e(i)} = prod_j C_j^{e(i)_j}, the coefficient of x_i^2 in the norm form.
/// Index i is 1-based.
Rational form_weight(const TowerSpec& tower, std::size_t i);

}  // namespace doubler
