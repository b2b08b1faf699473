#include "galois/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "galois/error.hpp"

namespace galois {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& object, const char* key, const std::string& where) {
  if (!object.is_object()) throw ParseError(where + ": expected an object");
  const auto it = object.find(key);
  if (it == object.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

const json& array(const json& value, const std::string& where) {
  if (!value.is_array()) throw ParseError(where + ": expected an array");
  return value;
}

std::string string_of(const json& value, const std::string& where) {
  if (!value.is_string()) throw ParseError(where + ": expected a string");
  return value.get<std::string>();
}

std::int64_t integer_of(const json& value, const std::string& where) {
  if (value.is_number_unsigned()) {
    const auto v = value.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      throw ParseError(where + ": integer out of range");
    }
    return static_cast<std::int64_t>(v);
  }
  if (!value.is_number_integer()) throw ParseError(where + ": expected an integer");
  return value.get<std::int64_t>();
}

std::uint64_t natural_of(const json& value, const std::string& where) {
  if (!value.is_number_unsigned()) throw ParseError(where + ": expected a natural number");
  return value.get<std::uint64_t>();
}

std::size_t dimension_of(const json& doc) {
  return static_cast<std::size_t>(natural_of(field(doc, "dimension", "document"), "dimension"));
}

Owner owner_of(const json& value, const std::string& where) {
  const auto s = string_of(value, where);
  if (s == "attacker") return Owner::attacker;
  if (s == "defender") return Owner::defender;
  throw ParseError(where + ": unknown owner '" + s + "'");
}

std::vector<Position> positions_of(const json& doc) {
  std::vector<Position> out;
  const auto& list = array(field(doc, "positions", "document"), "positions");
  for (std::size_t k = 0; k < list.size(); ++k) {
    const auto where = "positions[" + std::to_string(k) + "]";
    out.push_back(Position{string_of(field(list[k], "id", where), where + ".id"),
                           owner_of(field(list[k], "owner", where), where + ".owner")});
  }
  return out;
}

ComponentUpdate component_of(const json& atom, std::size_t n, const std::string& where) {
  const auto op = string_of(field(atom, "op", where), where + ".op");
  if (op == "add") return Add{integer_of(field(atom, "z", where), where + ".z")};
  if (op == "mul") {
    const auto m = natural_of(field(atom, "m", where), where + ".m");
    if (m == 0) throw ParseError(where + ".m: must be at least 1");
    return Mul{m};
  }
  if (op == "min") {
    const auto& of = array(field(atom, "of", where), where + ".of");
    MinOf min;
    for (std::size_t k = 0; k < of.size(); ++k) {
      const auto i = natural_of(of[k], where + ".of[" + std::to_string(k) + "]");
      if (i >= n) throw ParseError(where + ".of: component " + std::to_string(i) + " out of range");
      min.of.push_back(static_cast<std::size_t>(i));
    }
    if (min.of.empty()) throw ParseError(where + ".of: empty");
    return min;
  }
  throw ParseError(where + ": unknown op '" + op + "'");
}

Update update_of(const json& value, std::size_t n, const std::string& where) {
  const auto& steps = array(value, where);
  if (steps.empty()) throw ParseError(where + ": an update needs at least one step");
  std::vector<UpdateAtom> atoms;
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const auto step_where = where + "[" + std::to_string(s) + "]";
    const auto& specs = array(steps[s], step_where);
    if (specs.size() != n) {
      throw ParseError(step_where + ": expected " + std::to_string(n) + " components, got " +
                       std::to_string(specs.size()));
    }
    std::vector<ComponentUpdate> components;
    for (std::size_t i = 0; i < n; ++i) {
      components.push_back(component_of(specs[i], n, step_where + "[" + std::to_string(i) + "]"));
    }
    try {
      atoms.emplace_back(std::move(components));
    } catch (const InvalidUpdate& e) {
      throw ParseError(step_where + ": " + e.what());
    }
  }
  return Update(std::move(atoms));
}

std::vector<std::int64_t> integers_of(const json& value, std::size_t n, const std::string& where) {
  const auto& list = array(value, where);
  if (list.size() != n) {
    throw ParseError(where + ": expected " + std::to_string(n) + " entries, got " +
                     std::to_string(list.size()));
  }
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(integer_of(list[k], where + "[" + std::to_string(k) + "]"));
  }
  return out;
}

std::vector<std::uint64_t> naturals_of(const json& value, std::size_t n, const std::string& where) {
  const auto& list = array(value, where);
  if (list.size() != n) {
    throw ParseError(where + ": expected " + std::to_string(n) + " entries, got " +
                     std::to_string(list.size()));
  }
  std::vector<std::uint64_t> out;
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(natural_of(list[k], where + "[" + std::to_string(k) + "]"));
  }
  return out;
}

std::vector<std::string> strings_of(const json& value, const std::string& where) {
  const auto& list = array(value, where);
  std::vector<std::string> out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    out.push_back(string_of(list[k], where + "[" + std::to_string(k) + "]"));
  }
  return out;
}

json component_to_json(const ComponentUpdate& c) {
  if (const auto* a = std::get_if<Add>(&c)) return {{"op", "add"}, {"z", a->z}};
  if (const auto* m = std::get_if<MinOf>(&c)) return {{"op", "min"}, {"of", m->of}};
  return {{"op", "mul"}, {"m", std::get<Mul>(c).m}};
}

}  // namespace

GameDocument parse_game(std::string_view text) {
  const auto doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("document: expected an object");
  if (const auto it = doc.find("schema"); it != doc.end()) {
    const auto schema = string_of(*it, "schema");
    if (schema != kSchema) throw ParseError("schema: unsupported version '" + schema + "'");
  }
  const auto n = dimension_of(doc);

  GameDocument out;
  out.game = GameGraph(n);
  for (auto& p : positions_of(doc)) out.game.add_position(std::move(p.id), p.owner);

  const auto& edges = array(field(doc, "edges", "document"), "edges");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto where = "edges[" + std::to_string(k) + "]";
    auto from = string_of(field(edges[k], "from", where), where + ".from");
    auto to = string_of(field(edges[k], "to", where), where + ".to");
    auto update = update_of(field(edges[k], "update", where), n, where + ".update");
    if (auto aux = out.game.add_edge_splitting(std::move(from), std::move(to), std::move(update))) {
      out.auxiliary.push_back(std::move(*aux));
    }
  }
  if (const auto it = doc.find("annotation"); it != doc.end()) out.annotation = *it;

  if (auto violations = validate(out.game); !violations.empty()) {
    throw GameError(std::move(violations));
  }
  return out;
}

GameDocument load_game(const std::filesystem::path& path) { return parse_game(read_file(path)); }

json game_to_json(const GameGraph& game, const json& annotation) {
  json positions = json::array();
  for (const auto& p : game.positions()) {
    positions.push_back({{"id", p.id}, {"owner", std::string(to_string(p.owner))}});
  }
  json edges = json::array();
  for (const auto& [key, update] : game.edges()) {
    json steps = json::array();
    for (const auto& step : update.steps()) {
      json specs = json::array();
      for (const auto& c : step.components()) specs.push_back(component_to_json(c));
      steps.push_back(std::move(specs));
    }
    edges.push_back({{"from", key.first}, {"to", key.second}, {"update", std::move(steps)}});
  }
  json doc = {{"schema", kSchema},
              {"dimension", game.dimension()},
              {"positions", std::move(positions)},
              {"edges", std::move(edges)}};
  if (!annotation.is_null()) doc["annotation"] = annotation;
  return doc;
}

std::string write_game(const GameGraph& game, const json& annotation) {
  return game_to_json(game, annotation).dump(2) + "\n";
}

WeightedGraph parse_weighted_graph(std::string_view text) {
  const auto doc = parse_json(text);
  WeightedGraph out;
  out.nodes = strings_of(field(doc, "nodes", "document"), "nodes");
  const auto& edges = array(field(doc, "edges", "document"), "edges");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto where = "edges[" + std::to_string(k) + "]";
    out.edges.push_back(WeightedEdge{string_of(field(edges[k], "from", where), where + ".from"),
                                     string_of(field(edges[k], "to", where), where + ".to"),
                                     integer_of(field(edges[k], "weight", where), where + ".weight")});
  }
  out.source = string_of(field(doc, "source", "document"), "source");
  out.target = string_of(field(doc, "target", "document"), "target");
  return out;
}

Vass parse_vass(std::string_view text) {
  const auto doc = parse_json(text);
  Vass out;
  out.dimension = dimension_of(doc);
  out.states = strings_of(field(doc, "states", "document"), "states");
  const auto& transitions = array(field(doc, "transitions", "document"), "transitions");
  for (std::size_t k = 0; k < transitions.size(); ++k) {
    const auto where = "transitions[" + std::to_string(k) + "]";
    const auto& t = transitions[k];
    out.transitions.push_back(
        VassTransition{string_of(field(t, "from", where), where + ".from"),
                       string_of(field(t, "to", where), where + ".to"),
                       integers_of(field(t, "delta", where), out.dimension, where + ".delta")});
  }
  auto configuration = [&](const char* key) {
    const auto& c = field(doc, key, "document");
    const std::string where(key);
    return VassConfiguration{string_of(field(c, "state", where), where + ".state"),
                             naturals_of(field(c, "energy", where), out.dimension, where + ".energy")};
  };
  out.initial = configuration("initial");
  out.target = configuration("target");
  return out;
}

MultiReachabilityGame parse_multi_reachability(std::string_view text) {
  const auto doc = parse_json(text);
  MultiReachabilityGame out;
  out.dimension = dimension_of(doc);
  out.positions = positions_of(doc);
  const auto& edges = array(field(doc, "edges", "document"), "edges");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto where = "edges[" + std::to_string(k) + "]";
    const auto& e = edges[k];
    out.edges.push_back(
        WeightedVectorEdge{string_of(field(e, "from", where), where + ".from"),
                           string_of(field(e, "to", where), where + ".to"),
                           naturals_of(field(e, "weight", where), out.dimension, where + ".weight")});
  }
  for (auto& t : strings_of(field(doc, "targets", "document"), "targets")) {
    out.targets.insert(std::move(t));
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace galois
