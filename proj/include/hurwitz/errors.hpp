#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hurwitz {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad permutation, bad index, inconsistent class data.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// A configured resource cap was hit. `cap()` names the cap so the CLI can
/// report it in a structured way.
class CapExceeded : public Error {
public:
  CapExceeded(std::string cap, std::uint64_t limit, const std::string &what)
      : Error(what + " (cap '" + cap + "' = " + std::to_string(limit) + ")"),
        cap_(std::move(cap)), limit_(limit) {}

  const std::string &cap() const noexcept { return cap_; }
  std::uint64_t limit() const noexcept { return limit_; }

private:
  std::string cap_;
  std::uint64_t limit_;
};

/// Not enough tabulated data to make the requested empirical statement.
class InsufficientData : public Error {
public:
  using Error::Error;
};

} // namespace hurwitz
