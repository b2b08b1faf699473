#pragma once

// Energy updates: per-component atoms (add an integer, take the minimum of
// a set of components, multiply by a positive natural), sequences of such
// atoms, and their Galois inverses.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "galois/energy.hpp"

namespace galois {

// Component i becomes e_i + z; undefined when the result would be negative.
struct Add {
  std::int64_t z = 0;
  friend bool operator==(const Add&, const Add&) = default;
};

// Component i becomes the minimum of the listed input components.
struct MinOf {
  std::vector<std::size_t> of;  // sorted, unique, nonempty
  friend bool operator==(const MinOf&, const MinOf&) = default;
};

// Component i becomes e_i * m, m >= 1.
struct Mul {
  std::uint64_t m = 1;
  friend bool operator==(const Mul&, const Mul&) = default;
};

using ComponentUpdate = std::variant<Add, MinOf, Mul>;

// One simultaneous update of every component: all components read the
// same input vector.
class UpdateAtom {
 public:
  // Throws InvalidUpdate on an empty or out-of-range MinOf set or m == 0.
  explicit UpdateAtom(std::vector<ComponentUpdate> components);

  static UpdateAtom identity(std::size_t dimension);
  static UpdateAtom add(const std::vector<std::int64_t>& deltas);

  std::size_t dimension() const { return components_.size(); }
  const ComponentUpdate& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<ComponentUpdate>& components() const { return components_; }

  friend bool operator==(const UpdateAtom&, const UpdateAtom&) = default;

 private:
  std::vector<ComponentUpdate> components_;
};

// A nonempty sequence of atoms applied left to right.
class Update {
 public:
  // Throws InvalidUpdate if steps is empty, DimensionError if the steps
  // disagree on dimension.
  explicit Update(std::vector<UpdateAtom> steps);
  Update(UpdateAtom step);  // NOLINT(google-explicit-constructor)

  static Update identity(std::size_t dimension);
  static Update add(const std::vector<std::int64_t>& deltas);

  std::size_t dimension() const { return steps_.front().dimension(); }
  const std::vector<UpdateAtom>& steps() const { return steps_; }

  friend bool operator==(const Update&, const Update&) = default;

 private:
  std::vector<UpdateAtom> steps_;
};

// Forward application. nullopt means the update is undefined on e.
std::optional<Energy> apply(const UpdateAtom& u, const Energy& e);
std::optional<Energy> apply(const Update& u, const Energy& e);

// The least e with target <= u(e).
Energy invert(const UpdateAtom& u, const Energy& target);
Energy invert(const Update& u, const Energy& target);

// u1 followed by u2.
Update compose(const Update& u1, const Update& u2);

// Largest |z| over all Add components.
std::uint64_t max_abs_add(const Update& u);

// True if no component can grow: Add z <= 0, Mul m == 1, and every MinOf
// into component i includes i itself.
bool is_declining(const Update& u);

std::string to_string(const Update& u);

}  // namespace galois
