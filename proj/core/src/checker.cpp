#include "doubler/checker.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

#include "doubler/algebra.hpp"
#include "doubler/error.hpp"
#include "doubler/random.hpp"

namespace doubler {

namespace {

using TowerPtr = std::shared_ptr<const TowerSpec>;

struct Failure {
  std::vector<Element> args;
  std::optional<Element> lhs;
  std::optional<Element> rhs;
  std::optional<std::string> error;
};

std::optional<Failure> try_identity(IdentityId id, std::vector<Element> args) {
  try {
    Evaluation ev = evaluate_identity(id, args);
    if (ev.holds) return std::nullopt;
    return Failure{std::move(args), std::move(ev.lhs), std::move(ev.rhs), std::nullopt};
  } catch (const Error& e) {
    return Failure{std::move(args), std::nullopt, std::nullopt, std::string(e.code_name())};
  }
}

void record(CheckReport& report, Failure failure) {
  report.outcome = Outcome::CounterexampleFound;
  report.counterexample = std::move(failure.args);
  report.lhs = std::move(failure.lhs);
  report.rhs = std::move(failure.rhs);
  report.error = std::move(failure.error);
}

struct TrialResult {
  std::uint64_t index = 0;
  std::optional<Failure> failure;
};

// Runs trials 0..count-1, possibly on several threads, and returns the
// smallest failing index. Workers skip trials beyond the best failure found
// so far, so the answer matches a sequential scan.
TrialResult run_trials(std::uint64_t count, unsigned workers,
                       const std::function<std::optional<Failure>(std::uint64_t)>& trial) {
  workers = std::max(1U, workers);
  std::atomic<std::uint64_t> best{count};
  std::mutex mutex;
  TrialResult result;

  auto work = [&](unsigned w) {
    for (std::uint64_t t = w; t < count; t += workers) {
      if (t >= best.load(std::memory_order_relaxed)) return;
      std::optional<Failure> f = trial(t);
      if (f) {
        std::lock_guard lock(mutex);
        if (t < best.load()) {
          best.store(t);
          result.index = t;
          result.failure = std::move(f);
        }
        return;
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }
  return result;
}

std::vector<Element> draw_args(IdentityId id, const TowerPtr& tower, SplitMix64& rng,
                               std::int64_t bound) {
  const IdentityInfo& info = identity_info(id);
  std::vector<Element> args;
  args.reserve(info.arity);
  for (std::size_t k = 0; k < info.arity; ++k) {
    if (k == 0 && info.scalar_first) {
      args.push_back(Element::scalar(tower, random_scalar(rng, bound)));
    } else {
      args.push_back(random_element(tower, rng, bound));
    }
  }
  return args;
}

std::vector<Element> signed_basis(const TowerPtr& tower) {
  std::vector<Element> out;
  for (std::size_t i = 1; i <= tower->dim(); ++i) {
    const Element e = Element::basis(tower, i);
    out.push_back(e);
    out.push_back(-e);
  }
  return out;
}

std::vector<Element> pair_sums(const TowerPtr& tower) {
  std::vector<Element> out;
  for (std::size_t i = 1; i <= tower->dim(); ++i) {
    for (std::size_t j = i + 1; j <= tower->dim(); ++j) {
      const Element ei = Element::basis(tower, i);
      const Element ej = Element::basis(tower, j);
      out.push_back(ei + ej);
      out.push_back(ei - ej);
    }
  }
  return out;
}

std::vector<Element> unit_scalars(const TowerPtr& tower) {
  return {Element::scalar(tower, Rational{1}), Element::scalar(tower, Rational{-1})};
}

// Visits every tuple of the product of `domains` in lexicographic order
// (domain 0 outermost) until `visit` returns true.
bool for_each_tuple(const std::vector<const std::vector<Element>*>& domains,
                    const std::function<bool(const std::vector<Element>&)>& visit) {
  for (const auto* d : domains) {
    if (d->empty()) return false;
  }
  std::vector<std::size_t> odometer(domains.size(), 0);
  std::vector<Element> tuple;
  while (true) {
    tuple.clear();
    for (std::size_t k = 0; k < domains.size(); ++k) tuple.push_back((*domains[k])[odometer[k]]);
    if (visit(tuple)) return true;
    std::size_t k = domains.size();
    while (k > 0) {
      --k;
      if (++odometer[k] < domains[k]->size()) break;
      odometer[k] = 0;
      if (k == 0) return false;
    }
    if (domains.empty()) return false;
  }
}

std::size_t tuple_count(const std::vector<const std::vector<Element>*>& domains,
                        std::size_t cap) {
  std::size_t n = 1;
  for (const auto* d : domains) {
    if (d->empty()) return 0;
    if (n > cap / d->size()) return cap + 1;
    n *= d->size();
  }
  return n;
}

Json optional_element(const std::optional<Element>& x) {
  return x ? element_to_json(*x) : Json(nullptr);
}

}  // namespace

std::string_view outcome_name(Outcome outcome) noexcept {
  return outcome == Outcome::AllPassed ? "AllPassed" : "CounterexampleFound";
}

Json report_to_json(const CheckReport& report) {
  Json j;
  j["identity"] = report.identity ? Json(std::string(identity_name(*report.identity)))
                                  : Json(nullptr);
  j["tower"] = report.tower;
  if (report.other_tower) j["other_tower"] = *report.other_tower;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["bound"] = report.bound;
  j["evaluations"] = report.evaluations;
  j["outcome"] = std::string(outcome_name(report.outcome));
  if (report.phase) j["phase"] = *report.phase;
  if (report.counterexample.empty()) {
    j["counterexample"] = nullptr;
  } else {
    Json args = Json::array();
    for (const auto& x : report.counterexample) args.push_back(element_to_json(x));
    j["counterexample"] = std::move(args);
  }
  j["lhs"] = optional_element(report.lhs);
  j["rhs"] = optional_element(report.rhs);
  if (report.error) j["error"] = *report.error;
  return j;
}

CheckReport check_identity(IdentityId id, std::shared_ptr<const TowerSpec> tower,
                           const CheckOptions& options) {
  CheckReport report;
  report.identity = id;
  report.tower = tower->to_string();
  report.seed = options.seed;
  report.trials = options.trials;
  report.bound = options.bound;

  TrialResult r = run_trials(options.trials, options.workers, [&](std::uint64_t t) {
    SplitMix64 rng = trial_stream(options.seed, t);
    return try_identity(id, draw_args(id, tower, rng, options.bound));
  });
  if (r.failure) {
    report.evaluations = r.index + 1;
    record(report, std::move(*r.failure));
  } else {
    report.evaluations = options.trials;
  }
  return report;
}

CheckReport find_counterexample(IdentityId id, std::shared_ptr<const TowerSpec> tower,
                                const SearchBudget& budget) {
  CheckReport report;
  report.identity = id;
  report.tower = tower->to_string();
  report.seed = budget.seed;
  report.trials = budget.phase2_trials;
  report.bound = budget.coord_bound;

  const IdentityInfo& info = identity_info(id);
  const std::vector<Element> basis = signed_basis(tower);
  const std::vector<Element> sums = pair_sums(tower);
  const std::vector<Element> scalars = unit_scalars(tower);

  auto stage = [&](const std::vector<Element>& first, const std::vector<Element>& rest) {
    std::vector<const std::vector<Element>*> domains(info.arity, &rest);
    if (!domains.empty()) domains[0] = info.scalar_first ? &scalars : &first;
    return domains;
  };
  const std::vector<std::vector<const std::vector<Element>*>> stages{
      stage(basis, basis), stage(sums, basis), stage(sums, sums)};

  std::uint64_t evaluations = 0;
  for (std::size_t s = 0; s < stages.size(); ++s) {
    // The scalar slot makes stage B identical to stage A.
    if (s == 1 && info.scalar_first && info.arity == 1) continue;
    if (tuple_count(stages[s], budget.phase1_cap) > budget.phase1_cap) continue;
    std::optional<Failure> found;
    for_each_tuple(stages[s], [&](const std::vector<Element>& args) {
      ++evaluations;
      found = try_identity(id, args);
      return found.has_value();
    });
    if (found) {
      report.evaluations = evaluations;
      report.phase = 1;
      record(report, std::move(*found));
      return report;
    }
  }

  TrialResult r = run_trials(budget.phase2_trials, 1, [&](std::uint64_t t) {
    SplitMix64 rng = trial_stream(budget.seed, t);
    return try_identity(id, draw_args(id, tower, rng, budget.coord_bound));
  });
  if (r.failure) {
    report.evaluations = evaluations + r.index + 1;
    report.phase = 2;
    record(report, std::move(*r.failure));
  } else {
    report.evaluations = evaluations + budget.phase2_trials;
  }
  return report;
}

namespace {

std::optional<Failure> try_compare(const TowerPtr& b, const Element& x, const Element& y) {
  std::vector<Element> args{x, y};
  try {
    Element pa = mul(x, y);
    Element pb = mul(Element(b, {x.coords().begin(), x.coords().end()}),
                     Element(b, {y.coords().begin(), y.coords().end()}));
    if (std::equal(pa.coords().begin(), pa.coords().end(), pb.coords().begin())) {
      return std::nullopt;
    }
    return Failure{std::move(args), std::move(pa), std::move(pb), std::nullopt};
  } catch (const Error& e) {
    return Failure{std::move(args), std::nullopt, std::nullopt, std::string(e.code_name())};
  }
}

}  // namespace

CheckReport compare_towers(std::shared_ptr<const TowerSpec> a, std::shared_ptr<const TowerSpec> b,
                           const CheckOptions& options) {
  if (a->dim() != b->dim()) {
    throw Error(ErrorCode::DimensionMismatch, "towers have dimensions " +
                                                  std::to_string(a->dim()) + " and " +
                                                  std::to_string(b->dim()));
  }
  CheckReport report;
  report.tower = a->to_string();
  report.other_tower = b->to_string();
  report.seed = options.seed;
  report.trials = options.trials;
  report.bound = options.bound;

  TrialResult r = run_trials(options.trials, options.workers, [&](std::uint64_t t) {
    SplitMix64 rng = trial_stream(options.seed, t);
    const Element x = random_element(a, rng, options.bound);
    const Element y = random_element(a, rng, options.bound);
    return try_compare(b, x, y);
  });
  if (r.failure) {
    report.evaluations = r.index + 1;
    record(report, std::move(*r.failure));
  } else {
    report.evaluations = options.trials;
  }
  return report;
}

std::optional<std::pair<Element, Element>> find_zero_divisor(std::shared_ptr<const TowerSpec> tower) {
  const std::vector<Element> sums = pair_sums(tower);
  for (const auto& x : sums) {
    for (const auto& y : sums) {
      if (mul(x, y).is_zero()) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

bool replays(const CheckReport& report) {
  if (report.outcome != Outcome::CounterexampleFound || report.counterexample.empty()) {
    return false;
  }
  if (report.identity) {
    return try_identity(*report.identity, report.counterexample).has_value();
  }
  if (!report.other_tower || report.counterexample.size() != 2) return false;
  const auto& x = report.counterexample[0];
  const auto other = std::make_shared<const TowerSpec>(TowerSpec::parse(*report.other_tower));
  return try_compare(other, x, report.counterexample[1]).has_value();
}

}  // namespace doubler
