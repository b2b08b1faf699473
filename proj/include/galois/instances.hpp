#pragma once

// Reductions of classical quantitative problems to energy games with
// updates, plus transformations adding weak upper bounds and generalized
// reachability objectives to existing games.

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "galois/energy.hpp"
#include "galois/game.hpp"

namespace galois {

struct WeightedEdge {
  std::string from;
  std::string to;
  std::int64_t weight = 0;
};

// Directed graph with integer edge weights. The classical shortest-distance
// correspondence holds for nonnegative weights; negative weights act as
// refills.
struct WeightedGraph {
  std::vector<std::string> nodes;
  std::vector<WeightedEdge> edges;
  std::string source;
  std::string target;
};

struct ShortestPathInstance {
  GameGraph game;
  std::string query_position;
};

// One-dimensional single-player game: every node is an attacker position,
// edge (v, w, v') becomes v -(-w)-> v', and t -0-> sink with a fresh
// defender deadlock sink. The front at the source is {d} for the shortest
// distance d, or empty if the target is unreachable.
ShortestPathInstance from_shortest_path(const WeightedGraph& graph);

struct VassTransition {
  std::string from;
  std::string to;
  std::vector<std::int64_t> delta;
};

struct VassConfiguration {
  std::string state;
  std::vector<std::uint64_t> energy;
};

struct Vass {
  std::size_t dimension = 0;
  std::vector<std::string> states;
  std::vector<VassTransition> transitions;
  VassConfiguration initial;
  VassConfiguration target;
};

struct CoverabilityInstance {
  GameGraph game;
  std::string query_position;
  Energy query_energy;
};

// The target is coverable from the initial configuration iff the attacker
// wins the returned game from (query_position, query_energy).
CoverabilityInstance from_vass_coverability(const Vass& vass);

struct WeightedVectorEdge {
  std::string from;
  std::string to;
  std::vector<std::uint64_t> weight;
};

struct MultiReachabilityGame {
  std::size_t dimension = 0;
  std::vector<Position> positions;
  std::vector<WeightedVectorEdge> edges;
  std::set<std::string> targets;
};

// Defender targets become deadlocks, non-target defender deadlocks get an
// identity self-loop, attacker targets get a zero-cost exit to a fresh
// defender deadlock, and weights w become Add(-w). The front at a position
// is its minimal ensured cost.
GameGraph from_multi_reachability(const MultiReachabilityGame& game);

struct WeakBound {
  std::size_t bounded;  // component that gets capped
  std::size_t bound;    // component holding the cap
};

// Appends a clamp step (bounded <- min{bounded, bound}) to every edge
// update, one per pair. Throws Error if a pair is out of range or
// degenerate, or if a bound component can grow under some existing update
// (only Add with z <= 0 may touch it).
GameGraph add_weak_upper_bound(const GameGraph& game, const std::vector<WeakBound>& pairs);

struct GeneralizedReachability {
  GameGraph game;
  // tracking[j] is the component that flags a visit to targets[j].
  std::vector<std::size_t> tracking;
  // Component that must hold 1 in every query energy.
  std::size_t one = 0;
  std::string sink;
  std::vector<std::set<std::string>> targets;

  // e extended with the tracking flags (set for target sets containing g)
  // and the constant component.
  Energy extend_energy(const std::string& g, const Energy& e) const;
};

// Adds one tracking component per target set and one constant component.
// Entering a position of F_j saturates flag j at 1; every target position
// offers the attacker an exit to a fresh defender deadlock costing 1 in
// each flag. Defender-owned target positions are split into an attacker
// position (keeping the id, offering the exit) and a defender core.
// Existing defender deadlocks stay winning.
GeneralizedReachability add_generalized_reachability(
    const GameGraph& game, const std::vector<std::set<std::string>>& targets);

}  // namespace galois
