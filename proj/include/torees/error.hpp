#pragma once

#include <stdexcept>
#include <string>

namespace torees {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input violates a stated precondition (length mismatch, bad prime, ...).
struct InvalidInput : Error {
  using Error::Error;
};

/// The cone contains a line, so the semigroup ring is not a normal domain
/// with a pointed cone.
struct NotPointedCone : Error {
  NotPointedCone() : Error("not a normal-domain cone: cone is not pointed") {}
};

struct NonNormalSemigroup : Error {
  using Error::Error;
};

/// A divisor class of infinite order was passed to a criterion that needs
/// finite order.
struct InfiniteOrderClass : Error {
  using Error::Error;
};

}  // namespace torees
