#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "galois/io.hpp"
#include "galois/oracle.hpp"
#include "galois/solver.hpp"
#include "support/print.hpp"
#include "support/support.hpp"

using namespace galois;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string espresso_file = galois::testing::data_path("espresso.json");

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("galois-cli-" + std::to_string(std::random_device{}()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string path(const std::string& name) const { return (path_ / name).string(); }
  std::string write(const std::string& name, const std::string& content) const {
    std::ofstream(path_ / name) << content;
    return path(name);
  }

 private:
  fs::path path_;
};

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string line_of(const std::string& text, const std::string& prefix) {
  for (const auto& line : lines(text)) {
    if (line.rfind(prefix, 0) == 0) return line;
  }
  return {};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("solve prints one sorted line per position") {
  const auto r = run({"solve", espresso_file});
  REQUIRE(r.code == 0);
  const auto out = lines(r.out);
  REQUIRE(out.size() == 5);
  CHECK(out[0].rfind("Chat: ", 0) == 0);
  CHECK(out[1].rfind("CoffeeMaker: ", 0) == 0);
  CHECK(out[2].rfind("DepartmentHead: ", 0) == 0);
  CHECK(out[3] == "Energized: 0,0,0,0");
  const auto office = out[4];
  CHECK(office.rfind("Office: 0,0,0,10; 0,0,1,9; ", 0) == 0);
  CHECK(contains(office, "; 1,20,0,0;"));
  CHECK(contains(office, "; 10,1,0,0"));
  CHECK(run({"solve", espresso_file}).out == r.out);
  CHECK(run({"solve", espresso_file, "--worklist"}).out == r.out);
}

TEST_CASE("solve csv and stats") {
  const auto r = run({"solve", espresso_file, "--format", "csv", "--stats"});
  REQUIRE(r.code == 0);
  const auto out = lines(r.out);
  CHECK(out.front() == "position,component_0,component_1,component_2,component_3");
  CHECK(std::find(out.begin(), out.end(), "Office,0,0,0,10") != out.end());
  CHECK(std::find(out.begin(), out.end(), "Office,0,0,1,9") != out.end());
  CHECK(std::find(out.begin(), out.end(), "Energized,0,0,0,0") != out.end());
  CHECK(line_of(r.out, "iterations: ") == "iterations: " + std::to_string(
      compute_winning_budgets(galois::testing::espresso()).iterations));
  CHECK(line_of(r.out, "max_front_size: ").size() > 16);
  CHECK(line_of(r.out, "w: ") == "w: 10");
  CHECK(run({"solve", espresso_file, "--format", "xml"}).code == 2);
}

TEST_CASE("solve edge cases") {
  TempDir dir;
  const auto empty = dir.write("empty.json", R"({"schema": "galois-energy/1", "dimension": 2, "positions": [], "edges": []})");
  const auto r = run({"solve", empty});
  CHECK(r.code == 0);
  CHECK(r.out.empty());

  const auto lone = dir.write("lone.json", R"({"dimension": 1, "positions": [{"id": "a", "owner": "attacker"}], "edges": []})");
  CHECK(run({"solve", lone}).out == "a:\n");
  CHECK(run({"solve", lone, "--format", "csv"}).out == "position,component_0\n");

  const auto malformed = dir.write("bad.json", R"({"dimension": 1,
      "positions": [{"id": "a", "owner": "attacker"}],
      "edges": [{"from": "a", "to": "a", "update": [[{"op": "pow", "z": 2}]]}]})");
  const auto bad = run({"solve", malformed});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "unknown op 'pow'"));

  const auto invalid = dir.write("invalid.json", R"({"dimension": 1,
      "positions": [{"id": "a", "owner": "attacker"}],
      "edges": [{"from": "a", "to": "b", "update": [[{"op": "add", "z": 2}]]}]})");
  const auto inv = run({"solve", invalid});
  CHECK(inv.code == 2);
  CHECK(contains(inv.err, "unknown target position"));

  CHECK(run({"solve", dir.path("missing.json")}).code == 2);
  CHECK(run({"solve", espresso_file, "--max-iterations", "3"}).code == 3);

  const auto parallel = dir.write("parallel.json", R"({"dimension": 1,
      "positions": [{"id": "a", "owner": "attacker"}, {"id": "b", "owner": "defender"}],
      "edges": [{"from": "a", "to": "b", "update": [[{"op": "add", "z": -3}]]},
                {"from": "a", "to": "b", "update": [[{"op": "add", "z": -1}]]}]})");
  const auto split = run({"solve", parallel});
  CHECK(split.code == 0);
  CHECK(line_of(split.out, "a:") == "a: 1");
  CHECK(contains(split.err, "auxiliary position"));
}

TEST_CASE("query") {
  const auto win = run({"query", espresso_file, "--position", "Office", "--energy", "10,1,0,0"});
  CHECK(win.code == 0);
  CHECK(win.out == "WIN\n");
  const auto lose = run({"query", espresso_file, "--position", "Office", "--energy", "0,0,0,0"});
  CHECK(lose.code == 1);
  CHECK(lose.out == "LOSE\n");
  CHECK(stable_decide(galois::testing::espresso(), "Office", Energy{0, 0, 0, 0}).verdict ==
        Verdict::defender_wins);
  CHECK(run({"query", espresso_file, "--position", "Office", "--energy", "inf,inf,inf,inf"}).code == 0);
  CHECK(run({"query", espresso_file, "--position", "Office", "--energy", "1,19,0,0"}).code == 1);
  CHECK(run({"query", espresso_file, "--position", "Nowhere", "--energy", "0,0,0,0"}).code == 2);
  CHECK(run({"query", espresso_file, "--position", "Office", "--energy", "0,0"}).code == 2);
  CHECK(run({"query", espresso_file, "--position", "Office", "--energy", "x"}).code == 2);
  CHECK(run({"query", espresso_file, "--position", "Office"}).code == 2);
}

TEST_CASE("transform shortest paths") {
  TempDir dir;
  const auto late = dir.write("late.json", R"({"nodes": ["s", "x", "t"],
      "edges": [{"from": "s", "to": "x", "weight": 2}, {"from": "x", "to": "t", "weight": -1}],
      "source": "s", "target": "t"})");
  const auto early = dir.write("early.json", R"({"nodes": ["s", "x", "t"],
      "edges": [{"from": "s", "to": "x", "weight": -1}, {"from": "x", "to": "t", "weight": 2}],
      "source": "s", "target": "t"})");
  REQUIRE(run({"transform", "shortest-path", late, "-o", dir.path("late.game.json")}).code == 0);
  REQUIRE(run({"transform", "shortest-path", early, "-o", dir.path("early.game.json")}).code == 0);
  CHECK(line_of(run({"solve", dir.path("late.game.json")}).out, "s:") == "s: 2");
  CHECK(line_of(run({"solve", dir.path("early.game.json")}).out, "s:") == "s: 1");

  const auto doc = load_game(dir.path("late.game.json"));
  CHECK(doc.annotation["kind"] == "shortest-path");
  CHECK(doc.annotation["query"]["position"] == "s");
  CHECK(doc.game == from_shortest_path(parse_weighted_graph(read_file(late))).game);
}

TEST_CASE("transform VASS coverability") {
  TempDir dir;
  const auto input = dir.write("vass.json", R"({"dimension": 2, "states": ["s", "t"],
      "transitions": [{"from": "s", "to": "s", "delta": [-1, 2]}, {"from": "s", "to": "t", "delta": [0, 0]},
                      {"from": "s", "to": "t", "delta": [0, -1]}],
      "initial": {"state": "s", "energy": [2, 0]}, "target": {"state": "t", "energy": [0, 4]}})");
  const auto output = dir.path("vass.game.json");
  REQUIRE(run({"transform", "vass-coverability", input, "-o", output}).code == 0);
  const auto doc = load_game(output);
  CHECK(doc.auxiliary.empty());
  const std::string position = doc.annotation["query"]["position"];
  const std::string energy = doc.annotation["query"]["energy"];
  CHECK(position == "s");
  CHECK(energy == "2,0");
  const auto q = run({"query", output, "--position", position, "--energy", energy});
  const bool oracle = stable_decide(doc.game, position, parse_energy(energy)).verdict == Verdict::attacker_wins;
  CHECK(oracle);
  CHECK((q.code == 0) == oracle);
  CHECK(doc.game == from_vass_coverability(parse_vass(read_file(input))).game);
}

TEST_CASE("transform multi-reachability, weak bound and generalized reachability") {
  TempDir dir;
  const auto multi = dir.write("multi.json", R"({"dimension": 2,
      "positions": [{"id": "a", "owner": "attacker"}, {"id": "t", "owner": "attacker"}],
      "edges": [{"from": "a", "to": "t", "weight": [1, 4]}, {"from": "a", "to": "t", "weight": [3, 1]}],
      "targets": ["t"]})");
  REQUIRE(run({"transform", "multi-reachability", multi, "-o", dir.path("multi.game.json")}).code == 0);
  CHECK(line_of(run({"solve", dir.path("multi.game.json")}).out, "a:") == "a: 1,4; 3,1");

  REQUIRE(run({"transform", "weak-bound", espresso_file, "--bound", "2:0", "-o", dir.path("weak.json")}).code == 0);
  const auto weak = load_game(dir.path("weak.json"));
  CHECK(weak.annotation["bounds"] == nlohmann::json::parse("[[2, 0]]"));
  CHECK(weak.game == add_weak_upper_bound(galois::testing::espresso(), {{2, 0}}));
  CHECK(run({"transform", "weak-bound", espresso_file, "--bound", "9:0", "-o", dir.path("w2.json")}).code == 2);
  CHECK(run({"transform", "weak-bound", espresso_file, "--bound", "0-2", "-o", dir.path("w3.json")}).code == 2);

  REQUIRE(run({"transform", "generalized-reachability", espresso_file, "--targets", "Office,Chat", "--targets",
               "CoffeeMaker", "-o", dir.path("gen.json")})
              .code == 0);
  const auto gen = load_game(dir.path("gen.json"));
  CHECK(gen.game.dimension() == 7);
  CHECK(gen.annotation["tracking"] == nlohmann::json::parse("[4, 5]"));
  CHECK(gen.annotation["one"] == 6);
  CHECK(gen.annotation["targets"] == nlohmann::json::parse(R"([["Chat", "Office"], ["CoffeeMaker"]])"));
  CHECK(gen.game == add_generalized_reachability(galois::testing::espresso(),
                                                 {{"Office", "Chat"}, {"CoffeeMaker"}}).game);
}

TEST_CASE("transform errors") {
  TempDir dir;
  CHECK(run({"transform", "max-flow", espresso_file, "-o", dir.path("x.json")}).code == 2);
  const auto broken = dir.write("broken.json", "{\"nodes\": [");
  CHECK(run({"transform", "shortest-path", broken, "-o", dir.path("x.json")}).code == 2);
  CHECK(run({"transform", "shortest-path", espresso_file, "-o", dir.path("x.json")}).code == 2);
  CHECK(run({"transform", "shortest-path", espresso_file}).code == 2);
}

TEST_CASE("check") {
  const auto clean = run({"check", espresso_file, "--samples", "50", "--seed", "1"});
  CHECK(clean.code == 0);
  CHECK(clean.out == "checked 250 samples, 0 mismatches\n");
  CHECK(run({"check", espresso_file, "--samples", "50", "--seed", "1"}).out == clean.out);

  const auto corrupt = run({"check", espresso_file, "--samples", "50", "--seed", "1", "--corrupt-position", "Office"});
  CHECK(corrupt.code == 1);
  CHECK(contains(corrupt.out, "mismatch: Office"));
  CHECK(run({"check", espresso_file, "--samples", "50", "--seed", "1", "--corrupt-position", "Office"}).out ==
        corrupt.out);
  CHECK(run({"check", espresso_file, "--samples", "50", "--seed", "2", "--corrupt-position", "Office"}).out !=
        corrupt.out);
  CHECK(run({"check", espresso_file, "--bound", "0"}).code == 2);

  TempDir dir;
  std::string positions;
  for (int k = 0; k < 13; ++k) {
    positions += std::string(k ? "," : "") + R"({"id": "p)" + std::to_string(k) + R"(", "owner": "defender"})";
  }
  const auto big = dir.write("big.json", R"({"dimension": 1, "positions": [)" + positions + R"(], "edges": []})");
  const auto guarded = run({"check", big});
  CHECK(guarded.code == 2);
  CHECK(contains(guarded.err, "at most 12 positions"));
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "solve"));
}
