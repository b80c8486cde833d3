#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sct {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violations on user-supplied values.
class InvalidDivisorError : public Error {
 public:
  using Error::Error;
};

class InvalidSubgroupError : public Error {
 public:
  using Error::Error;
};

class MalformedPartitionError : public Error {
 public:
  using Error::Error;
};

class IncompatibleGroupsError : public Error {
 public:
  using Error::Error;
};

class NotNormalError : public Error {
 public:
  using Error::Error;
};

class NotCoprimeError : public Error {
 public:
  using Error::Error;
};

class EmptyIntervalError : public Error {
 public:
  using Error::Error;
};

// A lattice was asked to operate on a theory set that is not closed under
// join, or on a member that is missing from it.
class IncompleteSetError : public Error {
 public:
  using Error::Error;
};

// A budgeted computation ran out of nodes or time, or an input exceeds the
// supported desk scale.  Never returns a truncated result.
class ResourceLimitError : public Error {
 public:
  ResourceLimitError(const std::string& what, std::uint64_t nodes)
      : Error(what), nodes_explored(nodes) {}
  std::uint64_t nodes_explored = 0;
};

// Signed 64-bit arithmetic would wrap.  Aborting loudly is always preferred
// over silently wrong exact arithmetic.
class ArithmeticOverflowError : public Error {
 public:
  using Error::Error;
};

// An invariant that should hold for every accepted input failed; indicates an
// implementation bug, never expected on user data.
class InternalInconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace sct
