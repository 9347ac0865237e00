#pragma once

#include <stdexcept>
#include <string>

namespace annsub {

/// Malformed ring/module text or a spec that violates its invariants.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An instance exceeded a configured size bound (elements, submodules, vertices).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its precondition (e.g. primality of M itself).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An input claimed to be a submodule/ideal is not closed.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace annsub
