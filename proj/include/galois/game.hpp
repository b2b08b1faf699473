#pragma once

// Game graphs whose edges carry energy updates, plays over them, and
// finite-play winner determination.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "galois/energy.hpp"
#include "galois/update.hpp"

namespace galois {

enum class Owner { attacker, defender };

std::string_view to_string(Owner owner);

struct Position {
  std::string id;
  Owner owner = Owner::attacker;
  friend bool operator==(const Position&, const Position&) = default;
};

struct Successor {
  std::string target;
  Update update;
};

// Mutable description of a game. At most one edge per ordered pair of
// positions (enforced by the edge map); everything else is checked by
// validate().
class GameGraph {
 public:
  using EdgeMap = std::map<std::pair<std::string, std::string>, Update>;

  GameGraph() = default;
  explicit GameGraph(std::size_t dimension) : dimension_(dimension) {}

  std::size_t dimension() const { return dimension_; }
  const std::vector<Position>& positions() const { return positions_; }
  const EdgeMap& edges() const { return edges_; }

  void add_position(std::string id, Owner owner);

  // Returns false, leaving the game unchanged, if an edge from -> to exists.
  bool add_edge(std::string from, std::string to, Update update);

  // Like add_edge, but a parallel edge is routed through a fresh
  // attacker-owned auxiliary position: from --update--> aux --id--> to.
  // Returns the auxiliary id when one was created.
  std::optional<std::string> add_edge_splitting(std::string from, std::string to, Update update);

  void set_edge(const std::string& from, const std::string& to, Update update);
  void remove_edge(const std::string& from, const std::string& to);

  bool has_position(std::string_view id) const;
  // Throws Error for unknown ids.
  const Position& position(std::string_view id) const;
  std::vector<Successor> successors(std::string_view id) const;

  // An id not yet used by any position, derived from base.
  std::string fresh_id(std::string_view base) const;

  friend bool operator==(const GameGraph&, const GameGraph&) = default;

 private:
  std::size_t dimension_ = 0;
  std::vector<Position> positions_;
  EdgeMap edges_;
};

// All violations of: unique ids, existing edge endpoints, edge updates of
// the game's dimension. Empty means valid.
std::vector<std::string> validate(const GameGraph& game);

// Immutable indexed view of a validated game, positions in sorted id order
// and successors in sorted target-id order.
class Arena {
 public:
  struct Edge {
    std::size_t target;
    Update update;
  };

  // Throws GameError if validate() reports violations.
  explicit Arena(const GameGraph& game);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return positions_.size(); }
  const Position& position(std::size_t index) const { return positions_[index]; }
  bool is_attacker(std::size_t index) const { return positions_[index].owner == Owner::attacker; }
  std::span<const Edge> successors(std::size_t index) const { return successors_[index]; }
  std::optional<std::size_t> index_of(std::string_view id) const;
  // Throws Error for unknown ids.
  std::size_t require_index(std::string_view id) const;

 private:
  std::size_t dimension_;
  std::vector<Position> positions_;
  std::vector<std::vector<Edge>> successors_;
};

using Play = std::vector<std::string>;

// The energy after the first i moves of play, nullopt once undefined.
// Throws Error if i is out of range or the play does not follow edges.
std::optional<Energy> energy_level(const GameGraph& game, const Play& play, const Energy& e0,
                                   std::size_t i);

enum class PlayOutcome { attacker, defender, not_over };

std::string_view to_string(PlayOutcome outcome);

PlayOutcome winner_of_finite_play(const GameGraph& game, const Play& play, const Energy& e0);

}  // namespace galois
