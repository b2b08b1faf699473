#include "galois/solver.hpp"

#include <algorithm>
#include <limits>

namespace galois {

namespace {

using Fronts = std::vector<ParetoFront>;

ParetoFront attacker_front(const Arena& arena, const Fronts& old, std::size_t g) {
  std::vector<Energy> candidates;
  for (const auto& edge : arena.successors(g)) {
    for (const auto& e : old[edge.target]) candidates.push_back(invert(edge.update, e));
  }
  return minimize(std::move(candidates));
}

ParetoFront defender_front(const Arena& arena, const Fronts& old, std::size_t g) {
  ParetoFront acc = minimize({Energy::zero(arena.dimension())});
  for (const auto& edge : arena.successors(g)) {
    std::vector<Energy> combined;
    for (const auto& e : old[edge.target]) {
      const auto pulled_back = invert(edge.update, e);
      for (const auto& a : acc) combined.push_back(sup(a, pulled_back));
    }
    acc = minimize(std::move(combined));
    if (acc.empty()) break;
  }
  return acc;
}

ParetoFront position_front(const Arena& arena, const Fronts& old, std::size_t g) {
  return arena.is_attacker(g) ? attacker_front(arena, old, g) : defender_front(arena, old, g);
}

Fronts to_indexed(const Arena& arena, const FrontMap& map) {
  Fronts out(arena.size());
  for (std::size_t g = 0; g < arena.size(); ++g) {
    if (auto it = map.find(arena.position(g).id); it != map.end()) out[g] = it->second;
  }
  return out;
}

FrontMap to_map(const Arena& arena, const Fronts& fronts) {
  FrontMap out;
  for (std::size_t g = 0; g < arena.size(); ++g) out.emplace(arena.position(g).id, fronts[g]);
  return out;
}

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    return std::numeric_limits<std::size_t>::max();
  }
  return a * b;
}

std::size_t saturating_add(std::size_t a, std::size_t b) {
  return b > std::numeric_limits<std::size_t>::max() - a ? std::numeric_limits<std::size_t>::max()
                                                         : a + b;
}

// Growth of one component under the inverse of u is at most the sum over
// steps of the largest |z| in that step; minimum and multiplication steps
// never raise the maximal component.
std::uint64_t inverse_growth(const Update& u) {
  std::uint64_t total = 0;
  for (const auto& step : u.steps()) total += max_abs_add(Update(step));
  return total;
}

}  // namespace

IterationCapExceeded::IterationCapExceeded(std::size_t cap, FrontMap previous, FrontMap last)
    : Error("no fixed point within " + std::to_string(cap) + " iterations"),
      previous_(std::move(previous)),
      last_(std::move(last)) {}

FrontMap iterate_once(const GameGraph& game, const FrontMap& old_win) {
  const Arena arena(game);
  const auto old = to_indexed(arena, old_win);
  Fronts next(arena.size());
  for (std::size_t g = 0; g < arena.size(); ++g) next[g] = position_front(arena, old, g);
  return to_map(arena, next);
}

ParetoFront compute_new_win(const GameGraph& game, const FrontMap& old_win, std::string_view g) {
  const Arena arena(game);
  const auto index = arena.require_index(g);
  if (arena.is_attacker(index)) {
    throw Error("compute_new_win: '" + std::string(g) + "' is not a defender position");
  }
  return defender_front(arena, to_indexed(arena, old_win), index);
}

SolverResult compute_winning_budgets(const GameGraph& game, const SolverOptions& options) {
  const Arena arena(game);
  const auto cap = options.iteration_cap.value_or(default_iteration_cap(game));
  const auto n = arena.size();

  std::vector<std::vector<std::size_t>> predecessors(n);
  for (std::size_t g = 0; g < n; ++g) {
    for (const auto& edge : arena.successors(g)) predecessors[edge.target].push_back(g);
  }

  SolverResult result;
  Fronts win(n);
  Fronts old;
  std::vector<bool> dirty(n, true);
  if (options.record_trace) result.trace.push_back(to_map(arena, win));
  do {
    if (result.iterations == cap) {
      throw IterationCapExceeded(cap, to_map(arena, old), to_map(arena, win));
    }
    ++result.iterations;
    old = win;
    std::vector<bool> changed(n, false);
    for (std::size_t g = 0; g < n; ++g) {
      if (options.worklist && !dirty[g]) continue;
      win[g] = position_front(arena, old, g);
      changed[g] = win[g] != old[g];
      result.max_front_size = std::max(result.max_front_size, win[g].size());
    }
    if (options.worklist) {
      std::fill(dirty.begin(), dirty.end(), false);
      for (std::size_t g = 0; g < n; ++g) {
        if (!changed[g]) continue;
        for (auto p : predecessors[g]) dirty[p] = true;
      }
    }
    if (options.record_trace) result.trace.push_back(to_map(arena, win));
  } while (win != old);

  result.fronts = to_map(arena, old);
  return result;
}

bool known_initial_credit(const SolverResult& result, std::string_view g, const Energy& e) {
  auto it = result.fronts.find(g);
  if (it == result.fronts.end()) throw Error("unknown position '" + std::string(g) + "'");
  return member_upward(it->second, e);
}

bool unknown_initial_credit(const SolverResult& result, std::string_view g) {
  auto it = result.fronts.find(g);
  if (it == result.fronts.end()) throw Error("unknown position '" + std::string(g) + "'");
  return !it->second.empty();
}

std::uint64_t max_weight(const GameGraph& game) {
  std::uint64_t w = 0;
  for (const auto& [key, update] : game.edges()) w = std::max(w, max_abs_add(update));
  return w;
}

Energy estimate_worst_energy(const GameGraph& game) {
  std::uint64_t growth = 0;
  for (const auto& [key, update] : game.edges()) growth = std::max(growth, inverse_growth(update));
  const std::uint64_t steps = game.positions().empty() ? 0 : game.positions().size() - 1;
  return Energy(std::vector<ExtNat>(game.dimension(), ExtNat(growth * steps)));
}

std::size_t default_iteration_cap(const GameGraph& game) {
  // 2 * (|G| * hgt(e_worst) + |G| + 1), where hgt counts the energies below
  // e_worst.
  const auto worst = estimate_worst_energy(game);
  std::size_t height = 1;
  for (auto c : worst) height = saturating_mul(height, static_cast<std::size_t>(c.value()) + 1);
  const auto positions = game.positions().size();
  return saturating_mul(2, saturating_add(saturating_mul(positions, height), positions + 1));
}

AttackerStrategy::AttackerStrategy(const GameGraph& game, const std::vector<FrontMap>& trace,
                                   const FrontMap& fronts)
    : arena_(std::make_shared<const Arena>(game)) {
  trace_.reserve(trace.size());
  for (const auto& map : trace) trace_.push_back(to_indexed(*arena_, map));
  const auto final_fronts = to_indexed(*arena_, fronts);
  for (std::size_t g = 0; g < arena_->size(); ++g) {
    if (!arena_->is_attacker(g)) continue;
    const auto& id = arena_->position(g).id;
    for (const auto& m : final_fronts[g]) {
      auto next = choose(id, m);
      if (!next) throw Error("no winning successor for " + id + " at (" + to_string(m) + ")");
      choices_.push_back(Choice{id, m, *next});
    }
  }
}

std::optional<std::size_t> AttackerStrategy::rank_at(std::size_t g, const Energy& e) const {
  for (std::size_t k = 0; k < trace_.size(); ++k) {
    if (member_upward(trace_[k][g], e)) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> AttackerStrategy::rank(std::string_view g, const Energy& e) const {
  return rank_at(arena_->require_index(g), e);
}

std::optional<std::string> AttackerStrategy::choose(std::string_view g, const Energy& e) const {
  const auto index = arena_->require_index(g);
  if (!arena_->is_attacker(index)) return std::nullopt;
  const auto current = rank_at(index, e);
  if (!current) return std::nullopt;
  for (const auto& edge : arena_->successors(index)) {
    const auto next = apply(edge.update, e);
    if (!next) continue;
    const auto next_rank = rank_at(edge.target, *next);
    if (next_rank && *next_rank < *current) return arena_->position(edge.target).id;
  }
  return std::nullopt;
}

AttackerStrategy extract_strategy(const GameGraph& game, const SolverResult& result) {
  if (!result.trace.empty()) return AttackerStrategy(game, result.trace, result.fronts);
  SolverOptions options;
  options.record_trace = true;
  const auto traced = compute_winning_budgets(game, options);
  return AttackerStrategy(game, traced.trace, result.fronts);
}

}  // namespace galois
