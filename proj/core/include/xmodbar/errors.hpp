#pragma once

#include <stdexcept>
#include <string>

namespace xmodbar {

/// Base for every error thrown by the library. Axiom failures are never
/// thrown; they are reported through Check trees.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension or type mismatch between objects (wrong tensor shape, element
/// from the wrong module, action over the wrong algebra, ...).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An enumeration-backed operation was asked to walk a set larger than the
/// desk-scale bound.
class UnsupportedScale : public Error {
 public:
  using Error::Error;
};

/// An operation's documented precondition does not hold for its inputs.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A supplied simplicial algebra structure cannot be read back as an action.
class MalformedStructure : public Error {
 public:
  using Error::Error;
};

/// Bad user input: syntax errors, dangling references, bad option values.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace xmodbar
