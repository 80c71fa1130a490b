#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace fanfree {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** @brief A parameter lies outside the domain an operation supports. */
class DomainError : public Error {
 public:
  using Error::Error;
};

/** @brief A straight-line drawing is not simple. */
class SimplicityError : public Error {
 public:
  SimplicityError(std::string kind, std::uint32_t first, std::uint32_t second)
      : Error(kind + " between edges " + std::to_string(first) + " and " + std::to_string(second)),
        kind_(std::move(kind)),
        first_(first),
        second_(second) {}

  const std::string& kind() const noexcept { return kind_; }
  std::uint32_t first() const noexcept { return first_; }
  std::uint32_t second() const noexcept { return second_; }

 private:
  std::string kind_;
  std::uint32_t first_;
  std::uint32_t second_;
};

/** @brief A search ran out of its node budget before finishing. */
class InconclusiveError : public Error {
 public:
  explicit InconclusiveError(std::uint64_t nodes)
      : Error("search budget exhausted after " + std::to_string(nodes) + " nodes"), nodes_(nodes) {}
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

// Raised when internal contracts break, e.g. a supposedly plane subgraph has a crossing.
class ContractError : public Error {
 public:
  using Error::Error;
};

/** @brief An operation needs data the input does not carry (e.g. an embedding). */
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/** @brief A verified input contradicts a proven bound, or a generator failed its own verification. */
class FalsificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace fanfree
