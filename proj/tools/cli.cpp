#include "cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <limits>
#include <memory>
#include <ostream>
#include <sstream>

#include "doubler/algebra.hpp"
#include "doubler/checker.hpp"
#include "doubler/error.hpp"
#include "doubler/hilbert90.hpp"
#include "doubler/identities.hpp"
#include "doubler/serialize.hpp"
#include "doubler/tower.hpp"

namespace doubler::cli {

namespace {

using TowerPtr = std::shared_ptr<const TowerSpec>;

struct Options {
  std::string tower;
  std::string other;
  std::string x, y, a, s;
  std::string seeds;
  std::size_t n = 0;
  std::string identity;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  std::int64_t bound = 4;
  std::uint64_t budget_phase2 = 1000;
  unsigned workers = 1;
};

TowerPtr load_tower(const std::string& text) {
  return std::make_shared<const TowerSpec>(TowerSpec::parse(text));
}

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

std::vector<Integer> parse_seeds(const std::string& text) {
  std::vector<Integer> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, end - pos);
    std::size_t k = item.starts_with('-') ? 1 : 0;
    if (k == item.size()) throw ParseError(pos, "expected an integer seed");
    for (; k < item.size(); ++k) {
      if (item[k] < '0' || item[k] > '9') throw ParseError(pos + k, "expected an integer seed");
    }
    out.emplace_back(item);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

Json report_json(const CheckReport& r) { return report_to_json(r); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic in Cayley-Dickson and Conway-Smith towers over Q", "doubler"};
  app.require_subcommand(1);
  Options o;
  std::function<Json()> action;

  auto tower_opt = [&](CLI::App* cmd) {
    cmd->add_option("--tower", o.tower, "Tower, e.g. cd:-1,cd:-1")->required();
  };
  auto element_opt = [&](CLI::App* cmd, const std::string& flag, std::string& target) {
    cmd->add_option(flag, target, "Element as a JSON array of rationals")->required();
  };

  auto* mul_cmd = app.add_subcommand("mul", "Product x y");
  tower_opt(mul_cmd);
  element_opt(mul_cmd, "--x", o.x);
  element_opt(mul_cmd, "--y", o.y);
  mul_cmd->callback([&] {
    action = [&] {
      const TowerPtr t = load_tower(o.tower);
      return Json{{"result", element_to_json(mul(parse_element(t, o.x),
                                                     parse_element(t, o.y)))}};
    };
  });

  auto* conj_cmd = app.add_subcommand("conj", "Conjugate of x");
  tower_opt(conj_cmd);
  element_opt(conj_cmd, "--x", o.x);
  conj_cmd->callback([&] {
    action = [&] {
      const TowerPtr t = load_tower(o.tower);
      return Json{{"result", element_to_json(conjugate(parse_element(t, o.x)))}};
    };
  });

  auto* trace_cmd = app.add_subcommand("trace", "Trace x + conj(x)");
  tower_opt(trace_cmd);
  element_opt(trace_cmd, "--x", o.x);
  trace_cmd->callback([&] {
    action = [&] {
      const TowerPtr t = load_tower(o.tower);
      return Json{{"result", rational_to_json(trace(parse_element(t, o.x)))}};
    };
  });

  auto* norm_cmd = app.add_subcommand("norm", "Norm, from the diagonal form and from conj(x) x");
  tower_opt(norm_cmd);
  element_opt(norm_cmd, "--x", o.x);
  norm_cmd->callback([&] {
    action = [&] {
      const TowerPtr t = load_tower(o.tower);
      const Element x = parse_element(t, o.x);
      return Json{{"result", rational_to_json(norm_form(x))},
                  {"via_mul", rational_to_json(norm_via_mul(x))}};
    };
  });

  auto* inv_cmd = app.add_subcommand("inv", "Inverse conj(x)/n(x)");
  tower_opt(inv_cmd);
  element_opt(inv_cmd, "--x", o.x);
  inv_cmd->callback([&] {
    action = [&] {
      const TowerPtr t = load_tower(o.tower);
      return Json{{"result", element_to_json(inverse(parse_element(t, o.x)))}};
    };
  });

  auto* witness_cmd = app.add_subcommand("witness", "Nonzero b with conj(b) a = b for n(a) = 1");
  tower_opt(witness_cmd);
  element_opt(witness_cmd, "--a", o.a);
  witness_cmd->callback([&] {
    action = [&] {
      const TowerPtr t = load_tower(o.tower);
      const WitnessResult w = hilbert90_witness(parse_element(t, o.a));
      return Json{{"witness", element_to_json(w.witness)},
                  {"branch", std::string(branch_name(w.branch))}};
    };
  });

  auto* norm_one_cmd = app.add_subcommand("norm-one", "Norm-one element s^2/n(s) from a seed");
  tower_opt(norm_one_cmd);
  element_opt(norm_one_cmd, "--s", o.s);
  norm_one_cmd->callback([&] {
    action = [&] {
      const TowerPtr t = load_tower(o.tower);
      const SeedImage img = norm_one_from_seed(parse_element(t, o.s));
      return Json{{"result", element_to_json(img.value)}, {"norm_one", img.norm_one}};
    };
  });

  auto* param_cmd = app.add_subcommand("param", "Norm-one coordinates from seeds");
  tower_opt(param_cmd);
  element_opt(param_cmd, "--s", o.s);
  param_cmd->callback([&] {
    action = [&] {
      const TowerPtr t = load_tower(o.tower);
      const Element s = parse_element(t, o.s);
      Json result = Json::array();
      for (const auto& r : param_coordinates(*t, s.coords())) result.push_back(rational_to_json(r));
      return Json{{"result", std::move(result)}};
    };
  });

  auto* pyth_cmd = app.add_subcommand("pythagoras", "Integer tuple with x_1^2+...+x_m^2 = h^2");
  pyth_cmd->add_option("--n", o.n, "Level count; 2^n seeds")->required()->check(CLI::Range(0, 20));
  pyth_cmd->add_option("--seeds", o.seeds, "Comma-separated integers")->required();
  pyth_cmd->callback([&] {
    action = [&] {
      const std::vector<Integer> seeds = parse_seeds(o.seeds);
      if (seeds.size() != (std::size_t{1} << o.n)) {
        throw Error(ErrorCode::DimensionMismatch,
                    "--n " + std::to_string(o.n) + " needs " + std::to_string(std::size_t{1} << o.n) +
                        " seeds, got " + std::to_string(seeds.size()));
      }
      Json tuple = Json::array();
      for (const auto& v : pythagorean_tuple(seeds)) tuple.push_back(integer_json(v));
      return Json{{"tuple", std::move(tuple)}};
    };
  });

  auto random_opts = [&](CLI::App* cmd) {
    cmd->add_option("--seed", o.seed, "64-bit seed");
    cmd->add_option("--bound", o.bound, "Coordinate bound")
        ->check(CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max() / 2));
  };

  auto* check_cmd = app.add_subcommand("check", "Randomized check of an identity");
  tower_opt(check_cmd);
  check_cmd->add_option("--identity", o.identity, "Identity name")->required();
  check_cmd->add_option("--trials", o.trials, "Trial count")->check(CLI::PositiveNumber);
  check_cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  random_opts(check_cmd);
  check_cmd->callback([&] {
    action = [&] {
      const TowerPtr t = load_tower(o.tower);
      return report_json(check_identity(parse_identity(o.identity), t,
                                        {o.trials, o.seed, o.bound, o.workers}));
    };
  });

  auto* search_cmd = app.add_subcommand("search", "Bounded counterexample search");
  tower_opt(search_cmd);
  search_cmd->add_option("--identity", o.identity, "Identity name")->required();
  search_cmd->add_option("--budget-phase2", o.budget_phase2, "Random trials after the grids");
  random_opts(search_cmd);
  search_cmd->callback([&] {
    action = [&] {
      const TowerPtr t = load_tower(o.tower);
      SearchBudget budget;
      budget.phase2_trials = o.budget_phase2;
      budget.coord_bound = o.bound;
      budget.seed = o.seed;
      return report_json(find_counterexample(parse_identity(o.identity), t, budget));
    };
  });

  auto* diff_cmd = app.add_subcommand("diff", "Compare products in two towers of equal dimension");
  tower_opt(diff_cmd);
  diff_cmd->add_option("--other", o.other, "Second tower")->required();
  diff_cmd->add_option("--trials", o.trials, "Trial count")->check(CLI::PositiveNumber);
  diff_cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  random_opts(diff_cmd);
  diff_cmd->callback([&] {
    action = [&] {
      return report_json(compare_towers(load_tower(o.tower), load_tower(o.other),
                                        {o.trials, o.seed, o.bound, o.workers}));
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "doubler: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    out << action().dump() << "\n";
    return kExitOk;
  } catch (const Error& e) {
    out << Json{{"code", std::string(e.code_name())}, {"message", e.what()}}.dump() << "\n";
    return kExitDomainError;
  }
}

}  // namespace doubler::cli
