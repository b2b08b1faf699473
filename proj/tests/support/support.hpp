#pragma once

// Random instance generators and independent reference oracles used by the
// unit tests and the acceptance suite.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "galois/energy.hpp"
#include "galois/game.hpp"
#include "galois/instances.hpp"
#include "galois/solver.hpp"
#include "galois/update.hpp"

namespace galois::testing {

using Rng = std::mt19937_64;

// The bundled espresso game (data/espresso.json).
GameGraph espresso();
std::string data_path(const std::string& name);

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);
bool chance(Rng& rng, double p);

struct AtomParams {
  std::size_t dimension = 3;
  std::int64_t max_z = 2;
  std::uint64_t max_m = 3;
  double min_probability = 0.15;
  double mul_probability = 0.15;
  bool declining = false;  // Add z <= 0, no Mul > 1, MinOf into i contains i
};

UpdateAtom random_atom(Rng& rng, const AtomParams& params);
Update random_update(Rng& rng, const AtomParams& params, std::size_t max_steps);

struct GameParams {
  std::size_t min_positions = 1;
  std::size_t max_positions = 8;
  std::size_t max_dimension = 3;
  std::int64_t max_z = 2;
  std::size_t max_steps = 2;
  double edge_probability = 0.3;
  double min_probability = 0.15;
  double mul_probability = 0.15;
  bool declining = false;
};

// Positions are named p0, p1, ...
GameGraph random_game(Rng& rng, const GameParams& params);

// Every energy in {0..max}^n, plus infinity per component when requested.
std::vector<Energy> grid(std::size_t dimension, std::uint64_t max, bool with_infinity);

// Least element of {e in grid | target <= u(e)} if the set has one.
std::optional<Energy> grid_minimum(const Update& u, const Energy& target,
                                   const std::vector<Energy>& grid);

WeightedGraph random_weighted_graph(Rng& rng, std::size_t max_nodes, std::int64_t max_weight);

// Single-destination Bellman-Ford distance from source to target; nullopt if
// the target is unreachable.
std::optional<std::int64_t> bellman_ford(const WeightedGraph& graph);

Vass random_vass(Rng& rng, std::size_t dimension, std::size_t max_states, std::int64_t max_weight);

// Backward coverability saturation over minimal bases.
bool vass_coverable(const Vass& vass);

// Decides generalized reachability directly on the product of the game with
// the set of visited target sets, energies clipped to bound: the attacker
// wins once every set has been visited or on reaching a defender deadlock.
bool direct_generalized_reachability(const GameGraph& game,
                                     const std::vector<std::set<std::string>>& targets,
                                     const std::string& g, const Energy& e, std::uint64_t bound);

// Violations of the antichain and monotone-growth invariants over a trace.
std::vector<std::string> trace_violations(const std::vector<FrontMap>& trace);

}  // namespace galois::testing
