#pragma once

#include <stdexcept>
#include <string>

namespace lfw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list or graph6 input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an input outside its contract
/// (not nice, not bipartite, degree floor not met, ...).
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// Degree lists or interval specs that are not well formed for the graph.
class SpecInvalid : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search exceeded its enumeration budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// The factor engine failed to converge on a spec whose hypotheses hold.
/// This always indicates a defect in the engine, never an input problem.
class InternalBound : public Error {
 public:
  using Error::Error;
};

/// No weighting exists along the implemented case analysis.
class Obstructed : public Error {
 public:
  using Error::Error;
};

/// The graph has no proper coloring with the requested number of colors.
class ColoringUnavailable : public Error {
 public:
  using Error::Error;
};

}  // namespace lfw
