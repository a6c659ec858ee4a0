#pragma once

#include <stdexcept>
#include <string>

namespace levelcert {

/// Input that cannot be interpreted: bad syntax, wrong shapes, inhomogeneous data.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold for its arguments.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graded linear system that was required to be solvable is not.
class ObstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Cancelled : public std::runtime_error {
 public:
  Cancelled() : std::runtime_error("computation cancelled") {}
};

}  // namespace levelcert
