#pragma once

// Fixed-point computation of minimal attacker winning budgets.
//
// Starting from the empty front everywhere, each pass recomputes every
// position from the previous pass's fronts:
//
//   attacker g:  Min { u^-1(e') | g -u-> g', e' in old[g'] }
//   defender g:  Min { sup_{g -u-> g'} u^-1(e_g') | e_g' in old[g'] }
//
// until two consecutive passes agree. The result is the least fixed point,
// i.e. the Pareto front of each position's attacker winning budget.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "galois/energy.hpp"
#include "galois/error.hpp"
#include "galois/game.hpp"

namespace galois {

using FrontMap = std::map<std::string, ParetoFront, std::less<>>;

struct SolverOptions {
  // Defaults to default_iteration_cap(game).
  std::optional<std::size_t> iteration_cap;
  // Recompute only positions with a successor that changed in the last
  // pass. Produces the same passes as the plain sweep.
  bool worklist = false;
  // Keep every intermediate map in SolverResult::trace.
  bool record_trace = false;
};

struct SolverResult {
  FrontMap fronts;
  std::size_t iterations = 0;
  std::size_t max_front_size = 0;
  // trace[k] is the map after k passes (trace[0] is all-empty); only
  // filled when requested.
  std::vector<FrontMap> trace;
};

class IterationCapExceeded : public Error {
 public:
  IterationCapExceeded(std::size_t cap, FrontMap previous, FrontMap last);
  const FrontMap& previous() const { return previous_; }
  const FrontMap& last() const { return last_; }

 private:
  FrontMap previous_;
  FrontMap last_;
};

// One pass over all positions, reading only old_win. Positions missing from
// old_win are treated as having an empty front.
FrontMap iterate_once(const GameGraph& game, const FrontMap& old_win);

// The new front of defender position g: fold the successors one at a time,
// keeping the minimal pairwise suprema.
ParetoFront compute_new_win(const GameGraph& game, const FrontMap& old_win, std::string_view g);

SolverResult compute_winning_budgets(const GameGraph& game, const SolverOptions& options = {});

// Throws Error for positions not in the result.
bool known_initial_credit(const SolverResult& result, std::string_view g, const Energy& e);
bool unknown_initial_credit(const SolverResult& result, std::string_view g);

// Over-approximates the largest energy obtainable by applying up to |G|-1
// inverse updates to the zero vector: W * (|G| - 1) in every component,
// where W bounds the growth a single inverse edge update can cause.
Energy estimate_worst_energy(const GameGraph& game);

// Largest |z| over all Add components of the game.
std::uint64_t max_weight(const GameGraph& game);

std::size_t default_iteration_cap(const GameGraph& game);

// Energy-positional attacker strategy derived from a solved game. From an
// energy in the winning budget it always moves to a successor that was won
// in an earlier pass, so every consistent play reaches a defender deadlock.
class AttackerStrategy {
 public:
  struct Choice {
    std::string position;
    Energy energy;
    std::string successor;
  };

  // trace as in SolverResult; choices are materialized for every element of
  // fronts.
  AttackerStrategy(const GameGraph& game, const std::vector<FrontMap>& trace,
                   const FrontMap& fronts);

  // nullopt if g is not an attacker position, has no successors, or e is
  // outside the winning budget of g.
  std::optional<std::string> choose(std::string_view g, const Energy& e) const;

  // The first pass in which e entered the winning budget of g.
  std::optional<std::size_t> rank(std::string_view g, const Energy& e) const;

  // The choice at every minimal budget of every attacker position.
  const std::vector<Choice>& choices() const { return choices_; }

 private:
  std::optional<std::size_t> rank_at(std::size_t g, const Energy& e) const;

  std::shared_ptr<const Arena> arena_;
  std::vector<std::vector<ParetoFront>> trace_;  // [pass][position index]
  std::vector<Choice> choices_;
};

// Throws Error if some minimal budget has no valid successor, which would
// mean the result is not a fixed point of the game.
AttackerStrategy extract_strategy(const GameGraph& game, const SolverResult& result);

}  // namespace galois
