#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace galois {

// Base for every error the library raises on structurally invalid input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two energies or updates of different dimension were combined.
class DimensionError : public Error {
 public:
  DimensionError(std::size_t expected, std::size_t actual);
};

class InvalidUpdate : public Error {
 public:
  using Error::Error;
};

// A game failed validation; carries every violation found.
class GameError : public Error {
 public:
  explicit GameError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace galois
