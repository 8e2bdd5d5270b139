#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "doubler/element.hpp"
#include "doubler/identities.hpp"
#include "doubler/serialize.hpp"
#include "doubler/tower.hpp"

namespace doubler {

enum class Outcome { AllPassed, CounterexampleFound };

std::string_view outcome_name(Outcome outcome) noexcept;

/// Result of a randomized check, a bounded search or a tower comparison.
struct CheckReport {
  std::optional<IdentityId> identity;  // empty for tower comparisons
  std::string tower;
  std::optional<std::string> other_tower;  // set for tower comparisons
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;       // requested random trials
  std::int64_t bound = 0;
  std::uint64_t evaluations = 0;  // inputs actually evaluated
  Outcome outcome = Outcome::AllPassed;
  std::optional<int> phase;       // search phase that produced the counterexample
  std::vector<Element> counterexample;
  std::optional<Element> lhs;
  std::optional<Element> rhs;
  std::optional<std::string> error;  // domain error raised while evaluating

  bool passed() const noexcept { return outcome == Outcome::AllPassed; }
};

/// Fixed key order; rationals in canonical form. Identical reports serialize
/// to identical bytes.
Json report_to_json(const CheckReport& report);

struct CheckOptions {
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  std::int64_t bound = 4;
  /// Trials are split across this many threads; the report does not depend
  /// on it.
  unsigned workers = 1;
};

/// Evaluates the identity on `trials` random tuples. Trial t draws its
/// arguments, in order, from trial_stream(seed, t); a scalar-first identity
/// draws its first argument with random_scalar. The earliest failing trial is
/// reported.
CheckReport check_identity(IdentityId id, std::shared_ptr<const TowerSpec> tower,
                           const CheckOptions& options = {});

struct SearchBudget {
  /// Phase-1 stages larger than this many tuples are skipped.
  std::size_t phase1_cap = 65536;
  std::uint64_t phase2_trials = 1000;
  std::int64_t coord_bound = 4;
  std::uint64_t seed = 0;
};

/// Phase 1 walks three deterministic grids, stopping at the first failure:
///   A. every tuple of signed basis elements +-e_i;
///   B. first argument a signed pair sum e_i +- e_j (i < j), the rest signed
///      basis elements;
///   C. every argument a signed pair sum.
/// Scalar-first identities use +-1 in the scalar slot. Tuples are visited in
/// lexicographic order with the first argument outermost. Phase 2 runs
/// phase2_trials random trials as check_identity does.
CheckReport find_counterexample(IdentityId id, std::shared_ptr<const TowerSpec> tower,
                                const SearchBudget& budget = {});

/// Multiplies identical random coordinate vectors in both towers and compares
/// the products. Throws DimensionMismatch when the dimensions differ.
CheckReport compare_towers(std::shared_ptr<const TowerSpec> a, std::shared_ptr<const TowerSpec> b,
                           const CheckOptions& options = {});

/// First pair (x, y) of nonzero signed pair sums with x y = 0, scanning the
/// phase-1 C grid.
std::optional<std::pair<Element, Element>> find_zero_divisor(std::shared_ptr<const TowerSpec> tower);

/// Re-evaluates the stored counterexample and returns true when the identity
/// still fails on it.
bool replays(const CheckReport& report);

}  // namespace doubler
