#include "doubler/random.hpp"

#include <vector>

namespace doubler {

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) noexcept {
  const std::uint64_t m = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (m == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
  const std::uint64_t reject_below = (0 - m) % m;        // 2^64 mod m
  std::uint64_t r = next();
  while (r < reject_below) r = next();
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r % m);
}

Element random_element(std::shared_ptr<const TowerSpec> tower, SplitMix64& rng, std::int64_t bound) {
  std::vector<Rational> coords;
  coords.reserve(tower->dim());
  for (std::size_t i = 0; i < tower->dim(); ++i) coords.emplace_back(rng.uniform(-bound, bound));
  return Element(std::move(tower), std::move(coords));
}

Rational random_scalar(SplitMix64& rng, std::int64_t bound) {
  const std::int64_t p = rng.uniform(-bound, bound);
  const std::int64_t q = rng.uniform(1, bound);
  return Rational(p, q);
}

}  // namespace doubler
