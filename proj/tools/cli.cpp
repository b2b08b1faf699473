#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <random>
#include <set>

#include <CLI11.hpp>

#include "galois/error.hpp"
#include "galois/instances.hpp"
#include "galois/io.hpp"
#include "galois/oracle.hpp"
#include "galois/solver.hpp"

namespace galois::cli {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInvalid = 2;
constexpr int kCapReached = 3;

constexpr std::size_t kCheckMaxPositions = 12;
constexpr std::size_t kCheckMaxDimension = 4;

struct SolveArgs {
  std::string file;
  std::string format = "text";
  bool stats = false;
  bool worklist = false;
  std::optional<std::size_t> max_iterations;
};

struct QueryArgs {
  std::string file;
  std::string position;
  std::string energy;
};

struct TransformArgs {
  std::string kind;
  std::string input;
  std::string output;
  std::vector<std::string> bounds;
  std::vector<std::string> targets;
};

struct CheckArgs {
  std::string file;
  std::size_t samples = 20;
  std::uint64_t seed = 1;
  std::uint64_t bound = 5;
  std::string corrupt_position;
};

GameDocument load(const std::string& file, std::ostream& err) {
  auto doc = load_game(file);
  for (const auto& aux : doc.auxiliary) {
    err << "note: parallel edge routed through auxiliary position " << aux << "\n";
  }
  return doc;
}

SolverOptions solver_options(const SolveArgs& args) {
  SolverOptions options;
  options.iteration_cap = args.max_iterations;
  options.worklist = args.worklist;
  return options;
}

int solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  const auto doc = load(args.file, err);
  const auto result = compute_winning_budgets(doc.game, solver_options(args));
  if (args.format == "csv") {
    out << "position";
    for (std::size_t i = 0; i < doc.game.dimension(); ++i) out << ",component_" << i;
    out << "\n";
    for (const auto& [id, front] : result.fronts) {
      for (const auto& e : front) out << id << "," << to_string(e) << "\n";
    }
  } else {
    for (const auto& [id, front] : result.fronts) {
      out << id << ":";
      for (std::size_t k = 0; k < front.size(); ++k) {
        out << (k == 0 ? " " : "; ") << to_string(front.elements()[k]);
      }
      out << "\n";
    }
  }
  if (args.stats) {
    out << "iterations: " << result.iterations << "\n";
    out << "max_front_size: " << result.max_front_size << "\n";
    out << "w: " << max_weight(doc.game) << "\n";
  }
  return kOk;
}

int query(const QueryArgs& args, std::ostream& out, std::ostream& err) {
  const auto doc = load(args.file, err);
  const auto e = parse_energy(args.energy);
  if (e.dimension() != doc.game.dimension()) throw DimensionError(doc.game.dimension(), e.dimension());
  if (!doc.game.has_position(args.position)) {
    throw Error("unknown position '" + args.position + "'");
  }
  const auto result = compute_winning_budgets(doc.game);
  const bool win = known_initial_credit(result, args.position, e);
  out << (win ? "WIN" : "LOSE") << "\n";
  return win ? kOk : kNegative;
}

WeakBound parse_bound(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("--bound expects i:j, got '" + text + "'");
  auto number = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw ParseError("--bound expects i:j, got '" + text + "'");
    }
    return static_cast<std::size_t>(std::stoull(s));
  };
  return WeakBound{number(text.substr(0, colon)), number(text.substr(colon + 1))};
}

std::set<std::string> parse_target_set(const std::string& text) {
  std::set<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    auto id = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (id.empty()) throw ParseError("--targets expects a comma-separated list, got '" + text + "'");
    out.insert(std::move(id));
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

int transform(const TransformArgs& args, std::ostream& err) {
  GameGraph game;
  nlohmann::json annotation = {{"kind", args.kind}};
  if (args.kind == "shortest-path") {
    auto instance = from_shortest_path(parse_weighted_graph(read_file(args.input)));
    annotation["query"] = {{"position", instance.query_position}};
    game = std::move(instance.game);
  } else if (args.kind == "vass-coverability") {
    auto instance = from_vass_coverability(parse_vass(read_file(args.input)));
    annotation["query"] = {{"position", instance.query_position},
                           {"energy", to_string(instance.query_energy)}};
    game = std::move(instance.game);
  } else if (args.kind == "multi-reachability") {
    const auto input = parse_multi_reachability(read_file(args.input));
    annotation["targets"] = input.targets;
    game = from_multi_reachability(input);
  } else if (args.kind == "weak-bound") {
    std::vector<WeakBound> pairs;
    nlohmann::json listed = nlohmann::json::array();
    for (const auto& b : args.bounds) {
      pairs.push_back(parse_bound(b));
      listed.push_back({pairs.back().bounded, pairs.back().bound});
    }
    annotation["bounds"] = listed;
    game = add_weak_upper_bound(load(args.input, err).game, pairs);
  } else {
    std::vector<std::set<std::string>> targets;
    for (const auto& t : args.targets) targets.push_back(parse_target_set(t));
    auto extended = add_generalized_reachability(load(args.input, err).game, targets);
    annotation["targets"] = targets;
    annotation["tracking"] = extended.tracking;
    annotation["one"] = extended.one;
    annotation["sink"] = extended.sink;
    game = std::move(extended.game);
  }
  std::ofstream file(args.output, std::ios::binary);
  if (!file) throw Error("cannot write '" + args.output + "'");
  file << write_game(game, annotation);
  if (!file) throw Error("cannot write '" + args.output + "'");
  return kOk;
}

int check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  const auto doc = load(args.file, err);
  const auto& game = doc.game;
  if (game.positions().size() > kCheckMaxPositions || game.dimension() > kCheckMaxDimension) {
    err << "error: check supports at most " << kCheckMaxPositions << " positions and dimension "
        << kCheckMaxDimension << "\n";
    return kInvalid;
  }
  if (args.bound == 0) throw Error("--bound must be at least 1");
  auto result = compute_winning_budgets(game);
  if (!args.corrupt_position.empty()) {
    const auto it = result.fronts.find(args.corrupt_position);
    if (it == result.fronts.end()) throw Error("unknown position '" + args.corrupt_position + "'");
    it->second = ParetoFront{};
  }

  std::mt19937_64 rng(args.seed);
  std::uniform_int_distribution<std::uint64_t> component(0, args.bound - 1);
  std::vector<Query> queries;
  for (const auto& [id, front] : result.fronts) {
    for (std::size_t s = 0; s < args.samples; ++s) {
      std::vector<ExtNat> e(game.dimension());
      for (auto& c : e) c = component(rng);
      queries.push_back(Query{id, Energy(std::move(e))});
    }
  }
  const auto verdicts = stable_decide_all(game, queries);

  std::size_t mismatches = 0;
  for (std::size_t k = 0; k < queries.size(); ++k) {
    const bool solver = known_initial_credit(result, queries[k].position, queries[k].energy);
    const bool oracle = verdicts[k].verdict == Verdict::attacker_wins;
    if (solver == oracle) continue;
    ++mismatches;
    out << "mismatch: " << queries[k].position << " (" << to_string(queries[k].energy)
        << "): solver " << (solver ? "WIN" : "LOSE") << ", oracle " << (oracle ? "WIN" : "LOSE")
        << " at bound " << verdicts[k].bound << "\n";
  }
  out << "checked " << queries.size() << " samples, " << mismatches << " mismatches\n";
  return mismatches == 0 ? kOk : kNegative;
}

void report(const Error& e, std::ostream& err) {
  if (const auto* game_error = dynamic_cast<const GameError*>(&e)) {
    err << "error: invalid game\n";
    for (const auto& v : game_error->violations()) err << "  " << v << "\n";
    return;
  }
  err << "error: " << e.what() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solver for energy games with Galois-invertible updates", "galois-energy"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Print the minimal winning budgets of every position");
  solve_cmd->add_option("file", solve_args.file, "Game file")->required();
  solve_cmd->add_option("--format", solve_args.format, "Output format")
      ->check(CLI::IsMember({"text", "csv"}));
  solve_cmd->add_flag("--stats", solve_args.stats, "Append iteration statistics");
  solve_cmd->add_flag("--worklist", solve_args.worklist, "Only recompute positions whose successors changed");
  solve_cmd->add_option("--max-iterations", solve_args.max_iterations, "Iteration cap");

  QueryArgs query_args;
  auto* query_cmd = app.add_subcommand("query", "Decide whether an energy suffices at a position");
  query_cmd->add_option("file", query_args.file, "Game file")->required();
  query_cmd->add_option("--position", query_args.position, "Position id")->required();
  query_cmd->add_option("--energy", query_args.energy, "Energy such as 3,0,inf")->required();

  TransformArgs transform_args;
  auto* transform_cmd = app.add_subcommand("transform", "Build a game from another problem");
  transform_cmd->add_option("kind", transform_args.kind, "Reduction")
      ->required()
      ->check(CLI::IsMember({"shortest-path", "vass-coverability", "multi-reachability", "weak-bound",
                             "generalized-reachability"}));
  transform_cmd->add_option("input", transform_args.input, "Input file")->required();
  transform_cmd->add_option("-o,--output", transform_args.output, "Output game file")->required();
  transform_cmd->add_option("--bound", transform_args.bounds, "i:j caps component i by component j")
      ->allow_extra_args(false);
  transform_cmd->add_option("--targets", transform_args.targets, "Comma-separated target set")
      ->allow_extra_args(false);

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "Compare the solver with the brute-force oracle");
  check_cmd->add_option("file", check_args.file, "Game file")->required();
  check_cmd->add_option("--samples", check_args.samples, "Energies sampled per position");
  check_cmd->add_option("--seed", check_args.seed, "Random seed");
  check_cmd->add_option("--bound", check_args.bound, "Sampled components lie below this bound");
  check_cmd->add_option("--corrupt-position", check_args.corrupt_position)->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*solve_cmd) return solve(solve_args, out, err);
    if (*query_cmd) return query(query_args, out, err);
    if (*transform_cmd) return transform(transform_args, err);
    return check(check_args, out, err);
  } catch (const IterationCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapReached;
  } catch (const Error& e) {
    report(e, err);
    return kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
}

}  // namespace galois::cli
