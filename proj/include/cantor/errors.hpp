#pragma once

#include <stdexcept>
#include <string>

namespace cantor {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A requested level or prefix does not fit the available resolution.
struct ResolutionError : Error {
  using Error::Error;
};

/// Parameters violate a documented precondition (ordering, positivity, caps).
struct ParameterError : Error {
  using Error::Error;
};

/// A checked hypothesis of an operation does not hold for the given input.
struct HypothesisError : Error {
  using Error::Error;
};

/// Not enough room: fewer feasible atoms than requested, no free support, ...
struct InfeasibleError : Error {
  using Error::Error;
};

/// A measure family ran out of usable indices.
struct FamilyExhaustedError : Error {
  using Error::Error;
};

/// An internally derived budget (theta, eta, mass gate) was exceeded.
struct BudgetError : Error {
  using Error::Error;
};

/// Carriers cannot be separated within the resolution cap.
struct NotSingularError : Error {
  using Error::Error;
};

/// An algebra grew past the configured structural caps.
struct AlgebraTooLargeError : Error {
  using Error::Error;
};

/// A post-hoc certificate that should be a theorem failed.  Exit code 3 in
/// the CLI; never expected.
struct InternalContractError : Error {
  using Error::Error;
};

}  // namespace cantor
