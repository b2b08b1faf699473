#include "galois/error.hpp"

namespace galois {

namespace {

std::string join_violations(const std::vector<std::string>& violations) {
  std::string out = "invalid game";
  for (const auto& v : violations) {
    out += "\n  ";
    out += v;
  }
  return out;
}

}  // namespace

DimensionError::DimensionError(std::size_t expected, std::size_t actual)
    : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
            std::to_string(actual)) {}

GameError::GameError(std::vector<std::string> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

}  // namespace galois
