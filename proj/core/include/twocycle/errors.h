#ifndef TWOCYCLE_ERRORS_H_
#define TWOCYCLE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace twocycle {

// Malformed or out-of-contract input: length mismatch, broken promise,
// invalid distribution, infeasible generator constraints.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A recovery entry point refused its inputs because a shared threshold
// (epsilon, delta, p) lies outside the range the protocol is valid for.
class PreconditionViolation : public std::runtime_error {
 public:
  explicit PreconditionViolation(const std::string& what)
      : std::runtime_error(what) {}
};

// A protocol step found no vertex above its threshold. Under the protocol's
// preconditions this cannot happen, so it certifies a violated precondition.
class ProtocolFailure : public std::runtime_error {
 public:
  explicit ProtocolFailure(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace twocycle

#endif  // TWOCYCLE_ERRORS_H_
