#include "galois/energy.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "galois/error.hpp"

namespace galois {

namespace {

void require_same_dimension(const Energy& a, const Energy& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionError(a.dimension(), b.dimension());
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

ExtNat ExtNat::times(value_type m) const {
  if (is_infinite() || raw_ == 0) return *this;
  if (m != 0 && raw_ > (kInfinity - 1) / m) throw std::overflow_error("energy component overflow");
  return ExtNat(raw_ * m);
}

std::string ExtNat::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(raw_);
}

bool Energy::is_finite() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](ExtNat c) { return c.is_finite(); });
}

ExtNat Energy::max_component() const {
  ExtNat m = 0;
  for (auto c : components_) m = std::max(m, c);
  return m;
}

bool lex_less(const Energy& a, const Energy& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool leq(const Energy& a, const Energy& b) {
  require_same_dimension(a, b);
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Energy sup(const Energy& a, const Energy& b) {
  require_same_dimension(a, b);
  std::vector<ExtNat> out(a.dimension());
  for (std::size_t i = 0; i < a.dimension(); ++i) out[i] = std::max(a[i], b[i]);
  return Energy(std::move(out));
}

std::string to_string(const Energy& e) {
  std::string out;
  for (std::size_t i = 0; i < e.dimension(); ++i) {
    if (i > 0) out += ',';
    out += e[i].to_string();
  }
  return out;
}

Energy parse_energy(std::string_view text) {
  std::vector<ExtNat> components;
  if (trim(text).empty()) return Energy(std::move(components));
  while (true) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    if (token == "inf") {
      components.push_back(ExtNat::infinity());
    } else {
      ExtNat::value_type v = 0;
      const auto* first = token.data();
      const auto* last = token.data() + token.size();
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (token.empty() || ec != std::errc() || ptr != last || v == ExtNat::infinity().value()) {
        throw ParseError("invalid energy component '" + std::string(token) + "'");
      }
      components.emplace_back(v);
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Energy(std::move(components));
}

ParetoFront minimize(std::vector<Energy> s) {
  for (const auto& e : s) {
    if (e.dimension() != s.front().dimension()) {
      throw DimensionError(s.front().dimension(), e.dimension());
    }
  }
  std::sort(s.begin(), s.end(), lex_less);
  s.erase(std::unique(s.begin(), s.end()), s.end());
  // A component-wise smaller energy is also lexicographically smaller, so
  // dominators precede the elements they dominate.
  ParetoFront front;
  for (auto& candidate : s) {
    const bool dominated =
        std::any_of(front.elements_.begin(), front.elements_.end(),
                    [&](const Energy& kept) { return leq(kept, candidate); });
    if (!dominated) front.elements_.push_back(std::move(candidate));
  }
  return front;
}

bool member_upward(const ParetoFront& f, const Energy& e) {
  return std::any_of(f.begin(), f.end(), [&](const Energy& m) { return leq(m, e); });
}

bool upward_included(const ParetoFront& f, const ParetoFront& g) {
  return std::all_of(f.begin(), f.end(), [&](const Energy& e) { return member_upward(g, e); });
}

bool is_antichain(std::span<const Energy> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (i != j && leq(s[i], s[j])) return false;
    }
  }
  return true;
}

std::string to_string(const ParetoFront& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) out += "; ";
    out += "(" + to_string(f.elements()[i]) + ")";
  }
  return out + "}";
}

}  // namespace galois
