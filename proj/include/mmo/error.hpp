#pragma once

#include <stdexcept>

namespace mmo {

/// Bad argument values: dimension mismatch, out-of-range round index,
/// parameter preconditions.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation that needs more (or fewer) dimensions than it was given.
class UnsupportedDimension : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A function handed to an oracle violates the oracle's contract (e.g. a
/// non-convex input to a convexity-based check).
class PreconditionViolated : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A bounded 1-d search found its optimum on the search boundary.
class BoundaryHit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation would exceed its configured size/time budget.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical procedure failed to stabilize (e.g. quadrature under node
/// doubling).
class Divergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mmo
