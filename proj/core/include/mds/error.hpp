#pragma once

#include <stdexcept>
#include <string>

namespace mds {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs with mismatched or out-of-range parameters (q, n, positions, sizes).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A structural object (code, partition, isometry) violates its invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed text in one of the on-disk formats.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A step needs data (a class, a partition set, a registry) that is absent.
class DependencyError : public Error {
 public:
  using Error::Error;
};

/// A double-counting identity or stored total does not hold.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// An instance exceeds a configured size cap. The computation can be resumed
/// with a larger cap; nothing has been committed when this is thrown.
class GuardrailError : public Error {
 public:
  using Error::Error;
};

}  // namespace mds
