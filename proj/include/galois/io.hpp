#pragma once

// JSON game files (schema "galois-energy/1") and the input formats of the
// reductions.
//
//   {"schema": "galois-energy/1", "dimension": n,
//    "positions": [{"id": "...", "owner": "attacker" | "defender"}, ...],
//    "edges": [{"from": "...", "to": "...", "update": [step, ...]}, ...],
//    "annotation": {...}}
//
// A step lists n component specs: {"op": "add", "z": int},
// {"op": "min", "of": [index, ...]} or {"op": "mul", "m": nat >= 1}.
// Parallel edges are routed through auxiliary attacker positions on load.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "galois/game.hpp"
#include "galois/instances.hpp"

namespace galois {

inline constexpr std::string_view kSchema = "galois-energy/1";

struct GameDocument {
  GameGraph game;
  nlohmann::json annotation;  // null when absent
  // Positions created while splitting parallel edges.
  std::vector<std::string> auxiliary;
};

// Throws ParseError on malformed documents and GameError if the game fails
// validation.
GameDocument parse_game(std::string_view text);
GameDocument load_game(const std::filesystem::path& path);

nlohmann::json game_to_json(const GameGraph& game, const nlohmann::json& annotation = nullptr);
// Pretty-printed, newline-terminated. Deterministic for equal games.
std::string write_game(const GameGraph& game, const nlohmann::json& annotation = nullptr);

// {"nodes": [...], "edges": [{"from", "to", "weight"}], "source", "target"}
WeightedGraph parse_weighted_graph(std::string_view text);

// {"dimension": n, "states": [...],
//  "transitions": [{"from", "to", "delta": [...]}],
//  "initial": {"state", "energy": [...]}, "target": {"state", "energy": [...]}}
Vass parse_vass(std::string_view text);

// {"dimension": n, "positions": [{"id", "owner"}],
//  "edges": [{"from", "to", "weight": [...]}], "targets": [...]}
MultiReachabilityGame parse_multi_reachability(std::string_view text);

std::string read_file(const std::filesystem::path& path);

}  // namespace galois
