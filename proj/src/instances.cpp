#include "galois/instances.hpp"

#include <algorithm>
#include <limits>

#include "galois/error.hpp"

namespace galois {

namespace {

std::int64_t negate(std::int64_t w) {
  if (w == std::numeric_limits<std::int64_t>::min()) throw Error("edge weight out of range");
  return -w;
}

std::int64_t negate(std::uint64_t w) {
  if (w > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw Error("edge weight out of range");
  }
  return -static_cast<std::int64_t>(w);
}

void require_valid(const GameGraph& game) {
  if (auto violations = validate(game); !violations.empty()) throw GameError(std::move(violations));
}

// u with `extra` identity components appended to every step.
Update widen(const Update& u, std::size_t extra) {
  std::vector<UpdateAtom> steps;
  for (const auto& step : u.steps()) {
    auto components = step.components();
    components.resize(components.size() + extra, Add{0});
    steps.emplace_back(std::move(components));
  }
  return Update(std::move(steps));
}

// Keeps or lowers component j.
bool never_raises(const UpdateAtom& step, std::size_t j) {
  const auto& c = step[j];
  if (const auto* a = std::get_if<Add>(&c)) return a->z <= 0;
  if (const auto* m = std::get_if<MinOf>(&c)) return std::binary_search(m->of.begin(), m->of.end(), j);
  return std::get<Mul>(c).m == 1;
}

}  // namespace

ShortestPathInstance from_shortest_path(const WeightedGraph& graph) {
  GameGraph game(1);
  for (const auto& v : graph.nodes) game.add_position(v, Owner::attacker);
  for (const auto& e : graph.edges) {
    game.add_edge_splitting(e.from, e.to, Update::add({negate(e.weight)}));
  }
  const auto sink = game.fresh_id("sink");
  game.add_position(sink, Owner::defender);
  game.add_edge(graph.target, sink, Update::identity(1));
  require_valid(game);
  if (!game.has_position(graph.source)) throw Error("unknown source '" + graph.source + "'");
  return ShortestPathInstance{std::move(game), graph.source};
}

CoverabilityInstance from_vass_coverability(const Vass& vass) {
  const auto n = vass.dimension;
  for (const auto* config : {&vass.initial, &vass.target}) {
    if (config->energy.size() != n) throw DimensionError(n, config->energy.size());
  }
  GameGraph game(n);
  for (const auto& q : vass.states) game.add_position(q, Owner::attacker);
  for (const auto& t : vass.transitions) {
    if (t.delta.size() != n) throw DimensionError(n, t.delta.size());
    game.add_edge_splitting(t.from, t.to, Update::add(t.delta));
  }
  const auto sink = game.fresh_id("sink");
  game.add_position(sink, Owner::defender);
  std::vector<std::int64_t> cost(n);
  for (std::size_t i = 0; i < n; ++i) cost[i] = negate(vass.target.energy[i]);
  game.add_edge(vass.target.state, sink, Update::add(cost));
  require_valid(game);
  if (!game.has_position(vass.initial.state)) {
    throw Error("unknown initial state '" + vass.initial.state + "'");
  }
  std::vector<ExtNat> start(vass.initial.energy.begin(), vass.initial.energy.end());
  return CoverabilityInstance{std::move(game), vass.initial.state, Energy(std::move(start))};
}

GameGraph from_multi_reachability(const MultiReachabilityGame& input) {
  const auto n = input.dimension;
  GameGraph game(n);
  for (const auto& p : input.positions) game.add_position(p.id, p.owner);
  for (const auto& t : input.targets) {
    if (!game.has_position(t)) throw Error("unknown target position '" + t + "'");
  }
  std::set<std::string> has_outgoing;
  for (const auto& e : input.edges) {
    if (e.weight.size() != n) throw DimensionError(n, e.weight.size());
    has_outgoing.insert(e.from);
    if (!game.has_position(e.from)) throw Error("unknown position '" + e.from + "'");
    if (game.position(e.from).owner == Owner::defender && input.targets.contains(e.from)) continue;
    std::vector<std::int64_t> delta(n);
    for (std::size_t i = 0; i < n; ++i) delta[i] = negate(e.weight[i]);
    game.add_edge_splitting(e.from, e.to, Update::add(delta));
  }
  const auto sink = game.fresh_id("sink");
  for (const auto& p : input.positions) {
    if (p.owner == Owner::defender && !input.targets.contains(p.id) && !has_outgoing.contains(p.id)) {
      game.add_edge(p.id, p.id, Update::identity(n));
    }
  }
  bool sink_needed = false;
  for (const auto& p : input.positions) {
    if (p.owner == Owner::attacker && input.targets.contains(p.id)) {
      game.add_edge(p.id, sink, Update::identity(n));
      sink_needed = true;
    }
  }
  if (sink_needed) game.add_position(sink, Owner::defender);
  require_valid(game);
  return game;
}

GameGraph add_weak_upper_bound(const GameGraph& game, const std::vector<WeakBound>& pairs) {
  const auto n = game.dimension();
  for (const auto& [bounded, bound] : pairs) {
    if (bounded >= n || bound >= n) throw Error("weak bound component out of range");
    if (bounded == bound) throw Error("a component cannot bound itself");
    for (const auto& [key, update] : game.edges()) {
      for (const auto& step : update.steps()) {
        if (!never_raises(step, bound)) {
          throw Error("bound component " + std::to_string(bound) + " can grow on edge " +
                      key.first + " -> " + key.second);
        }
      }
    }
  }
  GameGraph out(n);
  for (const auto& p : game.positions()) out.add_position(p.id, p.owner);
  for (const auto& [key, update] : game.edges()) {
    auto steps = update.steps();
    for (const auto& [bounded, bound] : pairs) {
      std::vector<ComponentUpdate> clamp(n, Add{0});
      clamp[bounded] = MinOf{{bounded, bound}};
      steps.emplace_back(std::move(clamp));
    }
    out.add_edge(key.first, key.second, Update(std::move(steps)));
  }
  return out;
}

Energy GeneralizedReachability::extend_energy(const std::string& g, const Energy& e) const {
  const auto n = game.dimension() - tracking.size() - 1;
  if (e.dimension() != n) throw DimensionError(n, e.dimension());
  std::vector<ExtNat> components(e.begin(), e.end());
  for (const auto& set : targets) components.emplace_back(set.contains(g) ? 1 : 0);
  components.emplace_back(1);
  return Energy(std::move(components));
}

GeneralizedReachability add_generalized_reachability(
    const GameGraph& game, const std::vector<std::set<std::string>>& targets) {
  require_valid(game);
  const auto n = game.dimension();
  const auto k = targets.size();
  const auto m = n + k + 1;
  const auto one = n + k;

  std::set<std::string> any_target;
  for (const auto& set : targets) {
    for (const auto& g : set) {
      if (!game.has_position(g)) throw Error("unknown target position '" + g + "'");
      any_target.insert(g);
    }
  }

  // Update of an edge entering g: the widened update followed by raising
  // and then saturating the flags of every set containing g.
  auto entering = [&](const Update& u, const std::string& g) {
    auto steps = widen(u, k + 1).steps();
    std::vector<ComponentUpdate> raise(m, Add{0});
    std::vector<ComponentUpdate> saturate(m, Add{0});
    bool any = false;
    for (std::size_t j = 0; j < k; ++j) {
      if (!targets[j].contains(g)) continue;
      raise[n + j] = Add{1};
      saturate[n + j] = MinOf{{n + j, one}};
      any = true;
    }
    if (any) {
      steps.emplace_back(std::move(raise));
      steps.emplace_back(std::move(saturate));
    }
    return Update(std::move(steps));
  };

  GeneralizedReachability out;
  out.game = GameGraph(m);
  out.targets = targets;
  out.one = one;
  for (std::size_t j = 0; j < k; ++j) out.tracking.push_back(n + j);

  auto& result = out.game;
  for (const auto& p : game.positions()) {
    const bool split = p.owner == Owner::defender && any_target.contains(p.id);
    result.add_position(p.id, split ? Owner::attacker : p.owner);
  }
  out.sink = result.fresh_id("goal");
  result.add_position(out.sink, Owner::defender);

  // Defender-owned targets keep their id as an attacker position offering
  // the exit; their original moves live on a defender core.
  std::map<std::string, std::string> core;
  for (const auto& p : game.positions()) {
    if (p.owner != Owner::defender || !any_target.contains(p.id)) continue;
    const auto id = result.fresh_id(p.id + "/core");
    result.add_position(id, Owner::defender);
    result.add_edge(p.id, id, Update::identity(m));
    core.emplace(p.id, id);
  }

  for (const auto& [key, update] : game.edges()) {
    const auto it = core.find(key.first);
    const auto& from = it == core.end() ? key.first : it->second;
    result.add_edge(from, key.second, entering(update, key.second));
  }

  std::vector<std::int64_t> exit_cost(m, 0);
  for (std::size_t j = 0; j < k; ++j) exit_cost[n + j] = -1;
  for (const auto& g : any_target) result.add_edge(g, out.sink, Update::add(exit_cost));

  require_valid(result);
  return out;
}

}  // namespace galois
