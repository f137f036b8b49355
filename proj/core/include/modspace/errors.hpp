#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modspace {

/// Query outside the index range where an embedding theorem applies
/// (e.g. r < 1 for the Sobolev characterizations).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The (source, target) pair has no characterization in the toolkit.
class UncharacterizedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A function's spectrum leaves the band covered by a grid or partition.
class BandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A grid is too coarse to resolve a window or bump profile.
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape or index mismatch between a function and an operator.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace modspace
