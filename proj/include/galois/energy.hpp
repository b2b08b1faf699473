#pragma once

// The energy domain: vectors over the naturals extended with infinity,
// ordered component-wise, and antichains (Pareto fronts) over it.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace galois {

// A natural number or infinity. Infinity is stored as the largest
// representable value so that the natural order on the raw value is the
// order on extended naturals.
class ExtNat {
 public:
  using value_type = std::uint64_t;

  constexpr ExtNat() = default;
  constexpr ExtNat(value_type v) : raw_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtNat infinity() { return ExtNat(kInfinity); }

  constexpr bool is_infinite() const { return raw_ == kInfinity; }
  constexpr bool is_finite() const { return raw_ != kInfinity; }
  // Only meaningful for finite values.
  constexpr value_type value() const { return raw_; }

  friend constexpr auto operator<=>(ExtNat, ExtNat) = default;

  // Infinity absorbs; throws std::overflow_error if a finite result would
  // not be representable.
  ExtNat times(value_type m) const;

  std::string to_string() const;

 private:
  static constexpr value_type kInfinity = std::numeric_limits<value_type>::max();
  value_type raw_ = 0;
};

class Energy {
 public:
  Energy() = default;
  explicit Energy(std::vector<ExtNat> components) : components_(std::move(components)) {}
  Energy(std::initializer_list<ExtNat> components) : components_(components) {}

  static Energy zero(std::size_t dimension) { return Energy(std::vector<ExtNat>(dimension)); }

  std::size_t dimension() const { return components_.size(); }
  const ExtNat& operator[](std::size_t i) const { return components_[i]; }
  ExtNat& operator[](std::size_t i) { return components_[i]; }
  auto begin() const { return components_.begin(); }
  auto end() const { return components_.end(); }
  std::span<const ExtNat> components() const { return components_; }

  bool is_finite() const;
  ExtNat max_component() const;

  friend bool operator==(const Energy&, const Energy&) = default;

 private:
  std::vector<ExtNat> components_;
};

// Strict lexicographic order; used only for canonical output ordering.
bool lex_less(const Energy& a, const Energy& b);

// Component-wise order. Throws DimensionError on mismatch.
bool leq(const Energy& a, const Energy& b);

// Component-wise maximum (least upper bound).
Energy sup(const Energy& a, const Energy& b);

// "0,2,inf,10"
std::string to_string(const Energy& e);
// Inverse of to_string; accepts surrounding whitespace per component.
Energy parse_energy(std::string_view text);

// A finite antichain of energies in ascending lexicographic order.
class ParetoFront {
 public:
  ParetoFront() = default;

  std::span<const Energy> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  friend bool operator==(const ParetoFront&, const ParetoFront&) = default;

 private:
  friend ParetoFront minimize(std::vector<Energy> s);
  std::vector<Energy> elements_;
};

// The minimal elements of s in canonical order.
ParetoFront minimize(std::vector<Energy> s);

// Whether e lies in the upward closure of f.
bool member_upward(const ParetoFront& f, const Energy& e);

// Whether every element of f lies in the upward closure of g.
bool upward_included(const ParetoFront& f, const ParetoFront& g);

bool is_antichain(std::span<const Energy> s);

std::string to_string(const ParetoFront& f);

}  // namespace galois
