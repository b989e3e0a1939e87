#pragma once

#include <stdexcept>
#include <string>

namespace fieldroute {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input-side problems: malformed files, broken graphs, bad requests.
struct ParseError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};
struct InvalidEndpoint : Error {
  using Error::Error;
};
struct NotAnEdge : Error {
  using Error::Error;
};
struct TargetNotCovered : Error {
  using Error::Error;
};
struct SharedPathMismatch : Error {
  using Error::Error;
};
struct MissingCoordinates : Error {
  using Error::Error;
};

// Planning-side infeasibility.
struct AugmentationInfeasible : Error {
  using Error::Error;
};
struct EdgeExhausted : Error {
  using Error::Error;
};
struct NoFeasiblePath : Error {
  using Error::Error;
};
struct NoFeasibleSubtour : Error {
  using Error::Error;
};
struct InfeasibleCoverage : Error {
  using Error::Error;
};

// Oracle search budget ran out before the exhaustive answer was known.
struct BudgetExceeded : Error {
  using Error::Error;
};

}  // namespace fieldroute
