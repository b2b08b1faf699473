#include "galois/game.hpp"

#include <algorithm>
#include <set>

#include "galois/error.hpp"

namespace galois {

std::string_view to_string(Owner owner) {
  return owner == Owner::attacker ? "attacker" : "defender";
}

std::string_view to_string(PlayOutcome outcome) {
  switch (outcome) {
    case PlayOutcome::attacker:
      return "attacker";
    case PlayOutcome::defender:
      return "defender";
    case PlayOutcome::not_over:
      return "not-over";
  }
  return "not-over";
}

void GameGraph::add_position(std::string id, Owner owner) {
  positions_.push_back(Position{std::move(id), owner});
}

bool GameGraph::add_edge(std::string from, std::string to, Update update) {
  return edges_.try_emplace({std::move(from), std::move(to)}, std::move(update)).second;
}

std::optional<std::string> GameGraph::add_edge_splitting(std::string from, std::string to,
                                                         Update update) {
  if (!edges_.contains({from, to})) {
    add_edge(std::move(from), std::move(to), std::move(update));
    return std::nullopt;
  }
  auto aux = fresh_id(from + ">" + to);
  add_position(aux, Owner::attacker);
  add_edge(aux, std::move(to), Update::identity(update.dimension()));
  add_edge(std::move(from), aux, std::move(update));
  return aux;
}

void GameGraph::set_edge(const std::string& from, const std::string& to, Update update) {
  edges_.insert_or_assign({from, to}, std::move(update));
}

void GameGraph::remove_edge(const std::string& from, const std::string& to) {
  edges_.erase({from, to});
}

bool GameGraph::has_position(std::string_view id) const {
  return std::any_of(positions_.begin(), positions_.end(),
                     [&](const Position& p) { return p.id == id; });
}

const Position& GameGraph::position(std::string_view id) const {
  for (const auto& p : positions_) {
    if (p.id == id) return p;
  }
  throw Error("unknown position '" + std::string(id) + "'");
}

std::vector<Successor> GameGraph::successors(std::string_view id) const {
  position(id);
  std::vector<Successor> out;
  for (const auto& [key, update] : edges_) {
    if (key.first == id) out.push_back(Successor{key.second, update});
  }
  return out;
}

std::string GameGraph::fresh_id(std::string_view base) const {
  std::string candidate(base);
  for (int k = 1; has_position(candidate); ++k) candidate = std::string(base) + "#" + std::to_string(k);
  return candidate;
}

std::vector<std::string> validate(const GameGraph& game) {
  std::vector<std::string> violations;
  std::set<std::string_view> ids;
  for (const auto& p : game.positions()) {
    if (p.id.empty()) violations.push_back("position with empty id");
    if (!ids.insert(p.id).second) violations.push_back("duplicate position id '" + p.id + "'");
  }
  for (const auto& [key, update] : game.edges()) {
    const auto& [from, to] = key;
    const auto label = "edge " + from + " -> " + to;
    if (!ids.contains(from)) violations.push_back(label + ": unknown source position");
    if (!ids.contains(to)) violations.push_back(label + ": unknown target position");
    if (update.dimension() != game.dimension()) {
      violations.push_back(label + ": update has dimension " + std::to_string(update.dimension()) +
                           ", game has " + std::to_string(game.dimension()));
    }
  }
  return violations;
}

Arena::Arena(const GameGraph& game) : dimension_(game.dimension()) {
  if (auto violations = validate(game); !violations.empty()) {
    throw GameError(std::move(violations));
  }
  positions_ = game.positions();
  std::sort(positions_.begin(), positions_.end(),
            [](const Position& a, const Position& b) { return a.id < b.id; });
  successors_.resize(positions_.size());
  // The edge map is ordered by (from, to), so targets arrive sorted.
  for (const auto& [key, update] : game.edges()) {
    successors_[require_index(key.first)].push_back(Edge{require_index(key.second), update});
  }
}

std::optional<std::size_t> Arena::index_of(std::string_view id) const {
  auto it = std::lower_bound(positions_.begin(), positions_.end(), id,
                             [](const Position& p, std::string_view key) { return p.id < key; });
  if (it == positions_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - positions_.begin());
}

std::size_t Arena::require_index(std::string_view id) const {
  if (auto index = index_of(id)) return *index;
  throw Error("unknown position '" + std::string(id) + "'");
}

namespace {

const Update& edge_update(const GameGraph& game, const std::string& from, const std::string& to) {
  auto it = game.edges().find({from, to});
  if (it == game.edges().end()) throw Error("play uses missing edge " + from + " -> " + to);
  return it->second;
}

}  // namespace

std::optional<Energy> energy_level(const GameGraph& game, const Play& play, const Energy& e0,
                                   std::size_t i) {
  if (i >= play.size()) {
    throw Error("energy level index " + std::to_string(i) + " out of range for play of length " +
                std::to_string(play.size()));
  }
  if (e0.dimension() != game.dimension()) throw DimensionError(game.dimension(), e0.dimension());
  std::optional<Energy> level = e0;
  for (std::size_t k = 0; k < i; ++k) {
    const auto& update = edge_update(game, play[k], play[k + 1]);
    if (level) level = apply(update, *level);
  }
  return level;
}

PlayOutcome winner_of_finite_play(const GameGraph& game, const Play& play, const Energy& e0) {
  if (play.empty()) throw Error("empty play");
  const auto level = energy_level(game, play, e0, play.size() - 1);
  if (!level) return PlayOutcome::defender;
  const auto& last = play.back();
  if (!game.successors(last).empty()) return PlayOutcome::not_over;
  return game.position(last).owner == Owner::defender ? PlayOutcome::attacker
                                                      : PlayOutcome::defender;
}

}  // namespace galois
