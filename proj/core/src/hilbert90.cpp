#include "doubler/hilbert90.hpp"

#include <algorithm>
#include <bit>

#include "doubler/algebra.hpp"
#include "doubler/error.hpp"

namespace doubler {

std::string_view branch_name(WitnessBranch branch) noexcept {
  return branch == WitnessBranch::General ? "general" : "minus_one";
}

WitnessResult hilbert90_witness(const Element& a) {
  const Rational n = norm_form(a);
  if (n != Rational{1}) {
    throw Error(ErrorCode::NormNotOne, "element has norm " + n.to_string() + ", expected 1");
  }
  const auto& tower = a.tower_ptr();
  const Element one = Element::scalar(tower, Rational{1});

  WitnessResult result{one, WitnessBranch::General};
  if (a == -one) {
    if (tower->depth() == 0) {
      throw Error(ErrorCode::NoImaginaryElement,
                  "the scalar tower has no nonzero imaginary element");
    }
    result = {Element::basis(tower, 2), WitnessBranch::MinusOne};
  } else {
    result = {a + one, WitnessBranch::General};
  }

  if (mul(conjugate(result.witness), a) != result.witness) {
    throw Error(ErrorCode::InternalError, "witness check conj(b) a == b failed");
  }
  return result;
}

SeedImage norm_one_from_seed(const Element& s) {
  if (s.is_zero()) throw Error(ErrorCode::ZeroSeed, "seed is zero");
  const Rational n = norm_form(s);
  if (n.is_zero()) throw Error(ErrorCode::IsotropicSeed, "seed has norm zero");

  const Rational inv_n = n.inverse();
  const auto& tower = s.tower_ptr();
  const Rational& s1 = s.coord(1);

  Element value = inv_n * mul(s, s);
  Element closed = Element::scalar(tower, (Rational{2} * s1 * s1 - n) * inv_n) +
                   (Rational{2} * s1 * inv_n) * (s - Element::scalar(tower, s1));
  if (value != closed) {
    throw Error(ErrorCode::InternalError, "s^2/n(s) disagrees with its closed form");
  }

  const bool norm_one = norm_form(value) == Rational{1};
  if (!norm_one && tower->left_alternative_guaranteed()) {
    throw Error(ErrorCode::InternalError, "s^2/n(s) does not have norm one");
  }
  return SeedImage{std::move(value), std::move(closed), norm_one};
}

std::vector<Rational> param_coordinates(const TowerSpec& tower, std::span<const Rational> seeds) {
  if (seeds.size() != tower.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(tower.dim()) +
                                                  " seeds, got " + std::to_string(seeds.size()));
  }
  if (std::all_of(seeds.begin(), seeds.end(), [](const Rational& r) { return r.is_zero(); })) {
    throw Error(ErrorCode::AllZeroSeeds, "all seeds are zero");
  }
  Rational tail;
  for (std::size_t j = 2; j <= seeds.size(); ++j) {
    tail += form_weight(tower, j) * seeds[j - 1] * seeds[j - 1];
  }
  const Rational head = seeds[0] * seeds[0];
  const Rational total = head + tail;
  if (total.is_zero()) throw Error(ErrorCode::IsotropicSeed, "seed norm is zero");

  std::vector<Rational> x(seeds.size());
  x[0] = (head - tail) / total;
  for (std::size_t i = 1; i < seeds.size(); ++i) x[i] = Rational{2} * seeds[0] * seeds[i] / total;
  return x;
}

std::vector<Integer> pythagorean_tuple(std::span<const Integer> seeds) {
  if (seeds.empty() || !std::has_single_bit(seeds.size())) {
    throw Error(ErrorCode::DimensionMismatch,
                "seed count must be a power of two, got " + std::to_string(seeds.size()));
  }
  if (std::all_of(seeds.begin(), seeds.end(), [](const Integer& s) { return s == 0; })) {
    throw Error(ErrorCode::AllZeroSeeds, "all seeds are zero");
  }
  Integer tail = 0;
  for (std::size_t j = 1; j < seeds.size(); ++j) tail += seeds[j] * seeds[j];
  const Integer head = seeds[0] * seeds[0];

  std::vector<Integer> tuple;
  tuple.reserve(seeds.size() + 1);
  tuple.emplace_back(head - tail);
  for (std::size_t i = 1; i < seeds.size(); ++i) tuple.emplace_back(2 * seeds[0] * seeds[i]);
  tuple.emplace_back(head + tail);

  Integer lhs = 0;
  for (std::size_t i = 0; i < seeds.size(); ++i) lhs += tuple[i] * tuple[i];
  if (lhs != tuple.back() * tuple.back()) {
    throw Error(ErrorCode::InternalError, "tuple fails its sum-of-squares check");
  }
  return tuple;
}

}  // namespace doubler
