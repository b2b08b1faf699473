#include "galois/update.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "galois/error.hpp"

namespace galois {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::uint64_t magnitude(std::int64_t z) {
  return z < 0 ? static_cast<std::uint64_t>(-(z + 1)) + 1 : static_cast<std::uint64_t>(z);
}

// x + k, saturating at infinity only when x is already infinite.
ExtNat raise(ExtNat x, std::uint64_t k) {
  if (x.is_infinite()) return x;
  if (k >= ExtNat::infinity().value() - x.value()) {
    throw std::overflow_error("energy component overflow");
  }
  return ExtNat(x.value() + k);
}

// x - k, or nullopt when that would be negative.
std::optional<ExtNat> lower(ExtNat x, std::uint64_t k) {
  if (x.is_infinite()) return x;
  if (k > x.value()) return std::nullopt;
  return ExtNat(x.value() - k);
}

// x + z for an integer z.
std::optional<ExtNat> shift(ExtNat x, std::int64_t z) {
  return z < 0 ? lower(x, magnitude(z)) : std::optional<ExtNat>(raise(x, magnitude(z)));
}

ExtNat ceil_div(ExtNat a, std::uint64_t m) {
  if (a.is_infinite()) return a;
  return ExtNat(a.value() / m + (a.value() % m != 0 ? 1 : 0));
}

}  // namespace

UpdateAtom::UpdateAtom(std::vector<ComponentUpdate> components)
    : components_(std::move(components)) {
  const auto n = components_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (auto* min = std::get_if<MinOf>(&components_[i])) {
      if (min->of.empty()) {
        throw InvalidUpdate("component " + std::to_string(i) + ": empty minimum set");
      }
      std::sort(min->of.begin(), min->of.end());
      min->of.erase(std::unique(min->of.begin(), min->of.end()), min->of.end());
      if (min->of.back() >= n) {
        throw InvalidUpdate("component " + std::to_string(i) + ": minimum over index " +
                            std::to_string(min->of.back()) + " out of range");
      }
    } else if (auto* mul = std::get_if<Mul>(&components_[i]); mul != nullptr && mul->m == 0) {
      throw InvalidUpdate("component " + std::to_string(i) + ": multiplication by zero");
    }
  }
}

UpdateAtom UpdateAtom::identity(std::size_t dimension) {
  return UpdateAtom(std::vector<ComponentUpdate>(dimension, Add{0}));
}

UpdateAtom UpdateAtom::add(const std::vector<std::int64_t>& deltas) {
  std::vector<ComponentUpdate> components;
  components.reserve(deltas.size());
  for (auto z : deltas) components.emplace_back(Add{z});
  return UpdateAtom(std::move(components));
}

Update::Update(std::vector<UpdateAtom> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw InvalidUpdate("update has no steps");
  for (const auto& step : steps_) {
    if (step.dimension() != steps_.front().dimension()) {
      throw DimensionError(steps_.front().dimension(), step.dimension());
    }
  }
}

Update::Update(UpdateAtom step) : steps_{std::move(step)} {}

Update Update::identity(std::size_t dimension) { return Update(UpdateAtom::identity(dimension)); }

Update Update::add(const std::vector<std::int64_t>& deltas) {
  return Update(UpdateAtom::add(deltas));
}

std::optional<Energy> apply(const UpdateAtom& u, const Energy& e) {
  if (u.dimension() != e.dimension()) throw DimensionError(u.dimension(), e.dimension());
  std::vector<ExtNat> out(e.dimension());
  for (std::size_t i = 0; i < e.dimension(); ++i) {
    const bool defined = std::visit(
        overloaded{
            [&](const Add& a) {
              const auto shifted = shift(e[i], a.z);
              if (!shifted) return false;
              out[i] = *shifted;
              return true;
            },
            [&](const MinOf& m) {
              ExtNat lowest = ExtNat::infinity();
              for (auto k : m.of) lowest = std::min(lowest, e[k]);
              out[i] = lowest;
              return true;
            },
            [&](const Mul& m) {
              out[i] = e[i].times(m.m);
              return true;
            }},
        u[i]);
    if (!defined) return std::nullopt;
  }
  return Energy(std::move(out));
}

std::optional<Energy> apply(const Update& u, const Energy& e) {
  std::optional<Energy> current = e;
  for (const auto& step : u.steps()) {
    current = apply(step, *current);
    if (!current) return std::nullopt;
  }
  return current;
}

Energy invert(const UpdateAtom& u, const Energy& target) {
  if (u.dimension() != target.dimension()) {
    throw DimensionError(u.dimension(), target.dimension());
  }
  const auto n = target.dimension();
  std::vector<ExtNat> out(n, ExtNat(0));
  for (std::size_t i = 0; i < n; ++i) {
    std::visit(overloaded{
                   [&](const Add& a) {
                     // e'_i - z when z <= e'_i; otherwise only the 0 floor applies.
                     const auto before = a.z < 0 ? std::optional<ExtNat>(raise(target[i], magnitude(a.z)))
                                                 : lower(target[i], magnitude(a.z));
                     if (before) out[i] = std::max(out[i], *before);
                   },
                   [&](const MinOf& m) {
                     // Every source of the minimum must reach the target.
                     for (auto k : m.of) out[k] = std::max(out[k], target[i]);
                   },
                   [&](const Mul& m) { out[i] = std::max(out[i], ceil_div(target[i], m.m)); }},
               u[i]);
  }
  return Energy(std::move(out));
}

Energy invert(const Update& u, const Energy& target) {
  Energy current = target;
  for (auto it = u.steps().rbegin(); it != u.steps().rend(); ++it) current = invert(*it, current);
  return current;
}

Update compose(const Update& u1, const Update& u2) {
  if (u1.dimension() != u2.dimension()) throw DimensionError(u1.dimension(), u2.dimension());
  auto steps = u1.steps();
  steps.insert(steps.end(), u2.steps().begin(), u2.steps().end());
  return Update(std::move(steps));
}

std::uint64_t max_abs_add(const Update& u) {
  std::uint64_t w = 0;
  for (const auto& step : u.steps()) {
    for (const auto& c : step.components()) {
      if (const auto* a = std::get_if<Add>(&c)) w = std::max(w, magnitude(a->z));
    }
  }
  return w;
}

bool is_declining(const Update& u) {
  for (const auto& step : u.steps()) {
    for (std::size_t i = 0; i < step.dimension(); ++i) {
      const auto& c = step[i];
      if (const auto* a = std::get_if<Add>(&c); a != nullptr && a->z > 0) return false;
      if (const auto* m = std::get_if<Mul>(&c); m != nullptr && m->m > 1) return false;
      if (const auto* d = std::get_if<MinOf>(&c);
          d != nullptr && !std::binary_search(d->of.begin(), d->of.end(), i)) {
        return false;
      }
    }
  }
  return true;
}

std::string to_string(const Update& u) {
  std::string out;
  for (std::size_t s = 0; s < u.steps().size(); ++s) {
    if (s > 0) out += " ; ";
    out += "(";
    const auto& step = u.steps()[s];
    for (std::size_t i = 0; i < step.dimension(); ++i) {
      if (i > 0) out += ",";
      out += std::visit(overloaded{[](const Add& a) {
                                     return (a.z > 0 ? "+" : "") + std::to_string(a.z);
                                   },
                                   [](const MinOf& m) {
                                     std::string s = "min{";
                                     for (std::size_t k = 0; k < m.of.size(); ++k) {
                                       if (k > 0) s += ",";
                                       s += std::to_string(m.of[k]);
                                     }
                                     return s + "}";
                                   },
                                   [](const Mul& m) { return "*" + std::to_string(m.m); }},
                        step[i]);
    }
    out += ")";
  }
  return out;
}

}  // namespace galois
