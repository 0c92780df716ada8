#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tracta {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad JSON, wrong payload shape, GP1 violation on load.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Elements or values from different tracts or group kinds were mixed.
class TractMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check between two routes to the same object failed.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// Enumeration limit; `TRACTA_GUARD` overrides the default of 10^7.
std::uint64_t enumeration_guard();

void check_guard(std::uint64_t size, const std::string& what);

}  // namespace tracta
