#include "galois/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>

#include "galois/solver.hpp"

namespace galois {

std::string_view to_string(Verdict v) {
  return v == Verdict::attacker_wins ? "attacker-wins" : "defender-wins";
}

namespace {

// Whether positions * (bound + 1)^dimension fits into a 64-bit key.
bool encodable(std::size_t positions, std::uint64_t bound, std::size_t dimension) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (bound == kMax) return false;
  std::uint64_t space = std::max<std::size_t>(positions, 1);
  for (std::size_t i = 0; i < dimension; ++i) {
    if (space > kMax / (bound + 1)) return false;
    space *= bound + 1;
  }
  return true;
}

}  // namespace

ClippedAttractor::ClippedAttractor(const GameGraph& game, std::uint64_t bound,
                                   OracleOptions options)
    : arena_(game), bound_(bound), options_(options), dimension_(game.dimension()) {
  if (!encodable(arena_.size(), bound_, dimension_)) {
    throw OracleLimitExceeded("configuration space too large for bound " + std::to_string(bound));
  }
}

std::size_t ClippedAttractor::intern(std::size_t position, std::span<const std::uint64_t> energy) {
  std::uint64_t key = position;
  for (auto c : energy) key = key * (bound_ + 1) + c;
  auto [it, inserted] = index_.try_emplace(key, position_of_.size());
  if (inserted) {
    if (position_of_.size() >= options_.max_configurations) {
      throw OracleLimitExceeded("more than " + std::to_string(options_.max_configurations) +
                                " configurations at bound " + std::to_string(bound_));
    }
    position_of_.push_back(position);
    energies_.insert(energies_.end(), energy.begin(), energy.end());
  }
  return it->second;
}

void ClippedAttractor::expand(std::size_t config) {
  const auto position = position_of_[config];
  std::vector<ExtNat> components(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) components[i] = energies_[config * dimension_ + i];
  const Energy level(std::move(components));
  std::vector<std::uint64_t> clipped(dimension_);
  for (const auto& edge : arena_.successors(position)) {
    const auto next = apply(edge.update, level);
    if (!next) {
      succ_.push_back(-1);
      continue;
    }
    for (std::size_t i = 0; i < dimension_; ++i) {
      clipped[i] = std::min((*next)[i], ExtNat(bound_)).value();
    }
    succ_.push_back(static_cast<std::int64_t>(intern(edge.target, clipped)));
  }
  succ_offsets_.push_back(succ_.size());
}

void ClippedAttractor::solve() {
  const auto count = position_of_.size();
  // Reverse edges and per-configuration counters of moves still needed.
  std::vector<std::size_t> pred_offsets(count + 1, 0);
  for (auto s : succ_) {
    if (s >= 0) ++pred_offsets[static_cast<std::size_t>(s) + 1];
  }
  for (std::size_t c = 0; c < count; ++c) pred_offsets[c + 1] += pred_offsets[c];
  std::vector<std::size_t> preds(pred_offsets.back());
  auto fill = pred_offsets;
  for (std::size_t c = 0; c < count; ++c) {
    for (auto k = succ_offsets_[c]; k < succ_offsets_[c + 1]; ++k) {
      if (succ_[k] >= 0) preds[fill[static_cast<std::size_t>(succ_[k])]++] = c;
    }
  }

  std::vector<std::size_t> remaining(count, 0);
  winning_.assign(count, false);
  std::deque<std::size_t> queue;
  for (std::size_t c = 0; c < count; ++c) {
    const auto begin = succ_offsets_[c];
    const auto end = succ_offsets_[c + 1];
    if (arena_.is_attacker(position_of_[c])) {
      remaining[c] = 1;
    } else if (begin == end) {
      winning_[c] = true;
      queue.push_back(c);
    } else if (std::any_of(succ_.begin() + static_cast<std::ptrdiff_t>(begin),
                           succ_.begin() + static_cast<std::ptrdiff_t>(end),
                           [](std::int64_t s) { return s < 0; })) {
      // The defender can make the energy undefined.
      remaining[c] = std::numeric_limits<std::size_t>::max();
    } else {
      remaining[c] = end - begin;
    }
  }
  while (!queue.empty()) {
    const auto c = queue.front();
    queue.pop_front();
    for (auto k = pred_offsets[c]; k < pred_offsets[c + 1]; ++k) {
      const auto p = preds[k];
      if (winning_[p] || remaining[p] == std::numeric_limits<std::size_t>::max()) continue;
      if (--remaining[p] == 0) {
        winning_[p] = true;
        queue.push_back(p);
      }
    }
  }
}

std::vector<Verdict> ClippedAttractor::decide(std::span<const Query> queries) {
  std::vector<std::size_t> roots;
  roots.reserve(queries.size());
  std::vector<std::uint64_t> energy(dimension_);
  for (const auto& q : queries) {
    if (q.energy.dimension() != dimension_) throw DimensionError(dimension_, q.energy.dimension());
    for (std::size_t i = 0; i < dimension_; ++i) {
      if (q.energy[i].is_infinite()) throw Error("oracle queries need finite energies");
      if (q.energy[i].value() > bound_) {
        throw Error("query energy (" + to_string(q.energy) + ") exceeds bound " +
                    std::to_string(bound_));
      }
      energy[i] = q.energy[i].value();
    }
    roots.push_back(intern(arena_.require_index(q.position), energy));
  }
  const auto before = expanded_;
  // Configurations are expanded in discovery order, which keeps the
  // successor lists aligned with configuration indices.
  while (expanded_ < position_of_.size()) expand(expanded_++);
  if (expanded_ != before || winning_.size() != position_of_.size()) solve();

  std::vector<Verdict> out;
  out.reserve(roots.size());
  for (auto r : roots) out.push_back(winning_[r] ? Verdict::attacker_wins : Verdict::defender_wins);
  return out;
}

Verdict ClippedAttractor::decide(std::string_view position, const Energy& e) {
  const Query q{std::string(position), e};
  return decide(std::span<const Query>(&q, 1)).front();
}

Verdict attractor_decide(const GameGraph& game, std::string_view g, const Energy& e,
                         std::uint64_t bound, const OracleOptions& options) {
  ClippedAttractor attractor(game, bound, options);
  return attractor.decide(g, e);
}

std::uint64_t initial_bound(const GameGraph& game, const Energy& e) {
  std::uint64_t base = 0;
  for (auto c : estimate_worst_energy(game)) base = std::max(base, c.value());
  for (auto c : e) {
    if (c.is_infinite()) throw Error("oracle queries need finite energies");
    base = std::max(base, c.value());
  }
  return std::max<std::uint64_t>(1, base + max_weight(game) * game.positions().size());
}

StableVerdict stable_decide(const GameGraph& game, std::string_view g, const Energy& e,
                            const OracleOptions& options) {
  const Query q{std::string(g), e};
  return stable_decide_all(game, std::span<const Query>(&q, 1), options).front();
}

std::vector<StableVerdict> stable_decide_all(const GameGraph& game, std::span<const Query> queries,
                                             const OracleOptions& options) {
  struct State {
    std::uint64_t bound;
    std::optional<Verdict> previous;
    bool done = false;
  };
  std::vector<State> states;
  states.reserve(queries.size());
  for (const auto& q : queries) states.push_back(State{initial_bound(game, q.energy), {}});

  std::vector<StableVerdict> out(queries.size());
  while (true) {
    // All unsettled queries at the smallest bound share one attractor.
    std::optional<std::uint64_t> bound;
    for (const auto& s : states) {
      if (!s.done) bound = std::min(bound.value_or(s.bound), s.bound);
    }
    if (!bound) break;
    std::vector<std::size_t> ids;
    std::vector<Query> batch;
    for (std::size_t k = 0; k < states.size(); ++k) {
      if (!states[k].done && states[k].bound == *bound) {
        ids.push_back(k);
        batch.push_back(queries[k]);
      }
    }
    ClippedAttractor attractor(game, *bound, options);
    const auto verdicts = attractor.decide(batch);
    for (std::size_t j = 0; j < ids.size(); ++j) {
      auto& s = states[ids[j]];
      if (s.previous == verdicts[j]) {
        s.done = true;
        out[ids[j]] = StableVerdict{verdicts[j], *bound};
      } else {
        s.previous = verdicts[j];
        s.bound *= 2;
      }
    }
  }
  return out;
}

}  // namespace galois
