#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "doubler/element.hpp"
#include "doubler/rational.hpp"
#include "doubler/tower.hpp"

namespace doubler {

enum class WitnessBranch { General, MinusOne };

/// "general" or "minus_one".
std::string_view branch_name(WitnessBranch branch) noexcept;

struct WitnessResult {
  Element witness;  // nonzero b with conj(b) a == b
  WitnessBranch branch;
};

/// For a norm-one element a, returns a nonzero b with conj(b) a = b:
/// b = a + 1 in general, and b = e_2 (an imaginary unit) when a = -1.
/// The relation is checked by multiplication before returning.
///
/// Throws NormNotOne when n(a) != 1, NoImaginaryElement for a = -1 in the
/// scalar tower, InternalError if the check fails.
WitnessResult hilbert90_witness(const Element& a);

struct SeedImage {
  Element value;        // s^2 / n(s)
  Element closed_form;  // (2 s_1^2 - n(s))/n(s) + 2 s_1 (s - s_1) / n(s)
  bool norm_one;        // n(value) == 1
};

/// Maps a nonzero seed s to s^2 / n(s). Both the product form and the
/// closed form are computed and must agree.
///
/// On towers where left alternativity is guaranteed the result is checked to
/// have norm one; elsewhere `norm_one` just reports what happened.
/// Throws ZeroSeed, IsotropicSeed when n(s) = 0, InternalError on a failed
/// self-check.
SeedImage norm_one_from_seed(const Element& s);

/// Coordinates of the norm-one point parametrized by `seeds`:
///   x_1 = (s_1^2 - sum_{j>=2} C^{e(j)} s_j^2) / N,  x_i = 2 s_1 s_i / N,
/// with N = sum_j C^{e(j)} s_j^2. Throws DimensionMismatch, AllZeroSeeds,
/// IsotropicSeed.
std::vector<Rational> param_coordinates(const TowerSpec& tower, std::span<const Rational> seeds);

/// Integer tuple (s_1^2 - sum_{j>=2} s_j^2, 2 s_1 s_2, ..., 2 s_1 s_m, sum_j s_j^2)
/// for m = seeds.size() a power of two; the sum of squares of the first m
/// entries equals the square of the last. Not reduced by common factors.
/// Throws DimensionMismatch, AllZeroSeeds.
std::vector<Integer> pythagorean_tuple(std::span<const Integer> seeds);

}  // namespace doubler
