#pragma once

// Brute-force decision of single configurations by an attacker-attractor
// computation on the configuration graph with energies clipped to a bound.
// Clipped levels never exceed real ones, so an attacker win under clipping
// is an attacker win in the real game; raising the bound recovers the
// missing wins. Independent of the solver: nothing here inverts updates.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "galois/energy.hpp"
#include "galois/error.hpp"
#include "galois/game.hpp"

namespace galois {

enum class Verdict { attacker_wins, defender_wins };

std::string_view to_string(Verdict v);

struct OracleOptions {
  // Upper limit on explored configurations per bound.
  std::size_t max_configurations = 20'000'000;
};

class OracleLimitExceeded : public Error {
 public:
  using Error::Error;
};

struct Query {
  std::string position;
  Energy energy;
};

// Explores configurations (position, energy <= bound) reachable from the
// queried ones and decides them by a backward attractor sweep. Explored
// configurations are kept, so later queries only pay for new ones.
class ClippedAttractor {
 public:
  ClippedAttractor(const GameGraph& game, std::uint64_t bound, OracleOptions options = {});

  std::uint64_t bound() const { return bound_; }
  std::size_t explored() const { return succ_offsets_.size() - 1; }

  // Throws Error for unknown positions or energies that are infinite or
  // exceed the bound; OracleLimitExceeded past max_configurations.
  std::vector<Verdict> decide(std::span<const Query> queries);
  Verdict decide(std::string_view position, const Energy& e);

 private:
  std::size_t intern(std::size_t position, std::span<const std::uint64_t> energy);
  void expand(std::size_t config);
  void solve();

  Arena arena_;
  std::uint64_t bound_;
  OracleOptions options_;
  std::size_t dimension_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<std::size_t> position_of_;
  std::vector<std::uint64_t> energies_;  // dimension_ values per configuration
  std::vector<std::size_t> succ_offsets_{0};
  std::vector<std::int64_t> succ_;  // -1: the move leaves the energy undefined
  std::vector<bool> winning_;
  std::size_t expanded_ = 0;
};

Verdict attractor_decide(const GameGraph& game, std::string_view g, const Energy& e,
                         std::uint64_t bound, const OracleOptions& options = {});

struct StableVerdict {
  Verdict verdict;
  std::uint64_t bound;  // the bound at which the answer stabilized
};

// First bound tried: max(estimate_worst_energy, e) + max|z| * |G|.
std::uint64_t initial_bound(const GameGraph& game, const Energy& e);

// Doubles the bound from initial_bound until two consecutive answers agree.
StableVerdict stable_decide(const GameGraph& game, std::string_view g, const Energy& e,
                            const OracleOptions& options = {});

// Batched stable_decide sharing the explored configuration graphs.
std::vector<StableVerdict> stable_decide_all(const GameGraph& game, std::span<const Query> queries,
                                             const OracleOptions& options = {});

}  // namespace galois
