// Exception hierarchy shared by every module.
#pragma once

#include <stdexcept>
#include <string>

namespace mapr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A committee, target or representation vector does not fit the schema it is
// used with (bad index, wrong arity, mismatched domains).
struct SchemaError : Error {
  using Error::Error;
};

// Malformed value-level input: negative weights, bad set sizes, self-loops.
struct DomainError : Error {
  using Error::Error;
};

struct EmptyInputError : Error {
  using Error::Error;
};

// Floor seats already exceed the house size (non-Hare quotas only).
struct OverAllocationError : Error {
  using Error::Error;
};

// Not enough candidates with a required value vector.
struct SupplyError : Error {
  using Error::Error;
};

// A configured node / bucket / optima budget was exhausted.
struct ResourceError : Error {
  using Error::Error;
};

// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
  using Error::Error;
};

// Unsupported or inconsistent parameter combination.
struct ParameterError : Error {
  using Error::Error;
};

}  // namespace mapr
