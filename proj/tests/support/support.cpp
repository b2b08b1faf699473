#include "support.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "galois/io.hpp"

namespace galois::testing {

std::string data_path(const std::string& name) { return std::string(GALOIS_DATA_DIR) + "/" + name; }

GameGraph espresso() { return load_game(data_path("espresso.json")).game; }

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

UpdateAtom random_atom(Rng& rng, const AtomParams& params) {
  const auto n = params.dimension;
  std::vector<ComponentUpdate> components;
  for (std::size_t i = 0; i < n; ++i) {
    const double roll = std::uniform_real_distribution<double>(0, 1)(rng);
    if (roll < params.min_probability) {
      MinOf min;
      for (std::size_t j = 0; j < n; ++j) {
        if ((params.declining && j == i) || chance(rng, 0.5)) min.of.push_back(j);
      }
      if (min.of.empty()) min.of.push_back(static_cast<std::size_t>(uniform(rng, 0, n - 1)));
      components.emplace_back(std::move(min));
    } else if (!params.declining && roll < params.min_probability + params.mul_probability) {
      components.emplace_back(Mul{static_cast<std::uint64_t>(uniform(rng, 1, params.max_m))});
    } else {
      components.emplace_back(Add{uniform(rng, -params.max_z, params.declining ? 0 : params.max_z)});
    }
  }
  return UpdateAtom(std::move(components));
}

Update random_update(Rng& rng, const AtomParams& params, std::size_t max_steps) {
  std::vector<UpdateAtom> steps;
  const auto count = uniform(rng, 1, static_cast<std::int64_t>(max_steps));
  for (std::int64_t s = 0; s < count; ++s) steps.push_back(random_atom(rng, params));
  return Update(std::move(steps));
}

GameGraph random_game(Rng& rng, const GameParams& params) {
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(params.max_dimension)));
  const auto size = static_cast<std::size_t>(uniform(rng, static_cast<std::int64_t>(params.min_positions),
                                                     static_cast<std::int64_t>(params.max_positions)));
  AtomParams atoms{n, params.max_z, 3, params.min_probability, params.mul_probability, params.declining};
  GameGraph game(n);
  for (std::size_t k = 0; k < size; ++k) {
    game.add_position("p" + std::to_string(k), chance(rng, 0.5) ? Owner::attacker : Owner::defender);
  }
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      if (!chance(rng, params.edge_probability)) continue;
      game.add_edge("p" + std::to_string(a), "p" + std::to_string(b),
                    random_update(rng, atoms, params.max_steps));
    }
  }
  return game;
}

std::vector<Energy> grid(std::size_t dimension, std::uint64_t max, bool with_infinity) {
  std::vector<ExtNat> values;
  for (std::uint64_t v = 0; v <= max; ++v) values.emplace_back(v);
  if (with_infinity) values.push_back(ExtNat::infinity());
  std::vector<Energy> out;
  std::vector<std::size_t> digits(dimension, 0);
  while (true) {
    std::vector<ExtNat> components(dimension);
    for (std::size_t i = 0; i < dimension; ++i) components[i] = values[digits[i]];
    out.emplace_back(std::move(components));
    std::size_t i = 0;
    while (i < dimension && ++digits[i] == values.size()) digits[i++] = 0;
    if (i == dimension) break;
  }
  return out;
}

std::optional<Energy> grid_minimum(const Update& u, const Energy& target,
                                   const std::vector<Energy>& grid) {
  std::vector<const Energy*> sufficient;
  for (const auto& e : grid) {
    const auto next = apply(u, e);
    if (next && leq(target, *next)) sufficient.push_back(&e);
  }
  for (const auto* candidate : sufficient) {
    if (std::all_of(sufficient.begin(), sufficient.end(),
                    [&](const Energy* other) { return leq(*candidate, *other); })) {
      return *candidate;
    }
  }
  return std::nullopt;
}

WeightedGraph random_weighted_graph(Rng& rng, std::size_t max_nodes, std::int64_t max_weight) {
  WeightedGraph graph;
  const auto size = uniform(rng, 2, static_cast<std::int64_t>(max_nodes));
  for (std::int64_t k = 0; k < size; ++k) graph.nodes.push_back("v" + std::to_string(k));
  const double density = std::uniform_real_distribution<double>(0.05, 0.4)(rng);
  for (const auto& a : graph.nodes) {
    for (const auto& b : graph.nodes) {
      if (a != b && chance(rng, density)) graph.edges.push_back({a, b, uniform(rng, 0, max_weight)});
    }
  }
  graph.source = graph.nodes[static_cast<std::size_t>(uniform(rng, 0, size - 1))];
  graph.target = graph.nodes[static_cast<std::size_t>(uniform(rng, 0, size - 1))];
  return graph;
}

std::optional<std::int64_t> bellman_ford(const WeightedGraph& graph) {
  // dist[v]: shortest distance from v to the target.
  std::map<std::string, std::optional<std::int64_t>> dist;
  for (const auto& v : graph.nodes) dist[v] = std::nullopt;
  dist[graph.target] = 0;
  for (std::size_t round = 0; round < graph.nodes.size(); ++round) {
    bool changed = false;
    for (const auto& e : graph.edges) {
      const auto& d = dist[e.to];
      if (!d) continue;
      auto& cur = dist[e.from];
      if (!cur || *d + e.weight < *cur) {
        cur = *d + e.weight;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return dist[graph.source];
}

Vass random_vass(Rng& rng, std::size_t dimension, std::size_t max_states, std::int64_t max_weight) {
  Vass vass;
  vass.dimension = dimension;
  const auto size = uniform(rng, 1, static_cast<std::int64_t>(max_states));
  for (std::int64_t k = 0; k < size; ++k) vass.states.push_back("q" + std::to_string(k));
  auto state = [&] { return vass.states[static_cast<std::size_t>(uniform(rng, 0, size - 1))]; };
  const auto transitions = uniform(rng, 0, 2 * size);
  for (std::int64_t k = 0; k < transitions; ++k) {
    std::vector<std::int64_t> delta(dimension);
    for (auto& d : delta) d = uniform(rng, -max_weight, max_weight);
    vass.transitions.push_back({state(), state(), std::move(delta)});
  }
  auto energy = [&] {
    std::vector<std::uint64_t> e(dimension);
    for (auto& c : e) c = static_cast<std::uint64_t>(uniform(rng, 0, 3));
    return e;
  };
  vass.initial = {state(), energy()};
  vass.target = {state(), energy()};
  return vass;
}

bool vass_coverable(const Vass& vass) {
  using Vec = std::vector<std::uint64_t>;
  auto covers = [](const Vec& big, const Vec& small) {
    for (std::size_t i = 0; i < big.size(); ++i) {
      if (big[i] < small[i]) return false;
    }
    return true;
  };
  std::map<std::string, std::vector<Vec>> basis;
  std::deque<std::pair<std::string, Vec>> work;
  auto insert = [&](const std::string& q, const Vec& m) {
    auto& b = basis[q];
    for (const auto& old : b) {
      if (covers(m, old)) return;
    }
    std::erase_if(b, [&](const Vec& old) { return covers(old, m); });
    b.push_back(m);
    work.emplace_back(q, m);
  };
  insert(vass.target.state, vass.target.energy);
  while (!work.empty()) {
    auto [q, m] = work.front();
    work.pop_front();
    const auto& current = basis[q];
    if (std::find(current.begin(), current.end(), m) == current.end()) continue;
    for (const auto& t : vass.transitions) {
      if (t.to != q) continue;
      Vec pre(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) {
        const auto need = static_cast<std::int64_t>(m[i]) - t.delta[i];
        pre[i] = static_cast<std::uint64_t>(std::max<std::int64_t>({need, -t.delta[i], 0}));
      }
      insert(t.from, pre);
    }
  }
  for (const auto& m : basis[vass.initial.state]) {
    if (covers(vass.initial.energy, m)) return true;
  }
  return false;
}

bool direct_generalized_reachability(const GameGraph& game,
                                     const std::vector<std::set<std::string>>& targets,
                                     const std::string& g, const Energy& e, std::uint64_t bound) {
  const auto n = game.dimension();
  const auto k = targets.size();
  const std::size_t full = (std::size_t{1} << k) - 1;
  auto mask_of = [&](const std::string& p) {
    std::size_t mask = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (targets[j].contains(p)) mask |= std::size_t{1} << j;
    }
    return mask;
  };
  struct Config {
    std::string position;
    std::size_t mask;
    std::vector<std::uint64_t> energy;
    auto operator<=>(const Config&) const = default;
  };
  std::map<Config, std::size_t> index;
  std::vector<Config> configs;
  std::vector<std::vector<std::optional<std::size_t>>> moves;
  auto intern = [&](Config c) {
    auto [it, inserted] = index.try_emplace(c, configs.size());
    if (inserted) configs.push_back(std::move(c));
    return it->second;
  };
  std::vector<std::uint64_t> start(n);
  for (std::size_t i = 0; i < n; ++i) start[i] = std::min(e[i], ExtNat(bound)).value();
  const auto root = intern({g, mask_of(g), start});
  for (std::size_t c = 0; c < configs.size(); ++c) {
    moves.emplace_back();
    const auto current = configs[c];
    if (current.mask == full && k > 0) continue;
    std::vector<ExtNat> level(current.energy.begin(), current.energy.end());
    for (const auto& s : game.successors(current.position)) {
      const auto next = apply(s.update, Energy(level));
      if (!next) {
        moves[c].push_back(std::nullopt);
        continue;
      }
      std::vector<std::uint64_t> clipped(n);
      for (std::size_t i = 0; i < n; ++i) clipped[i] = std::min((*next)[i], ExtNat(bound)).value();
      moves[c].push_back(intern({s.target, current.mask | mask_of(s.target), clipped}));
    }
  }
  std::vector<bool> win(configs.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < configs.size(); ++c) {
      if (win[c]) continue;
      const auto& config = configs[c];
      const bool attacker = game.position(config.position).owner == Owner::attacker;
      bool w;
      if ((config.mask == full && k > 0) || (!attacker && moves[c].empty())) {
        w = true;
      } else if (attacker) {
        w = std::any_of(moves[c].begin(), moves[c].end(),
                        [&](const auto& m) { return m && win[*m]; });
      } else {
        w = std::all_of(moves[c].begin(), moves[c].end(),
                        [&](const auto& m) { return m && win[*m]; });
      }
      if (w) {
        win[c] = true;
        changed = true;
      }
    }
  }
  return win[root];
}

std::vector<std::string> trace_violations(const std::vector<FrontMap>& trace) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < trace.size(); ++k) {
    for (const auto& [id, front] : trace[k]) {
      if (!is_antichain(front.elements())) {
        out.push_back("pass " + std::to_string(k) + ": front of " + id + " is not an antichain");
      }
      if (k == 0) continue;
      const auto it = trace[k - 1].find(id);
      if (it != trace[k - 1].end() && !upward_included(it->second, front)) {
        out.push_back("pass " + std::to_string(k) + ": winning budget of " + id + " shrank");
      }
    }
  }
  return out;
}

}  // namespace galois::testing
