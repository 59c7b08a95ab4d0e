#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace forkdiv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 or edge-list input. `offset` is the byte position that
/// failed to decode.
struct DecodeError : Error {
  DecodeError(const std::string& what, std::size_t offset_)
      : Error(what + " (byte offset " + std::to_string(offset_) + ")"),
        offset(offset_) {}
  std::size_t offset;
};

/// Argument outside the operation's domain (empty set, bad vertex id, ...).
struct DomainError : Error {
  using Error::Error;
};

/// Input exceeds an exactness cap; the result would not be guaranteed exact.
struct CapabilityError : Error {
  using Error::Error;
};

/// Persistent state (cache file) is internally inconsistent.
struct CorruptionError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace forkdiv
