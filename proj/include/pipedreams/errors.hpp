#pragma once

#include <stdexcept>
#include <string>

namespace pipedreams {

// Input text could not be parsed at all.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One-line notation that is not a bijection of {1..n}.
struct NotABijection : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An arithmetic identity that must hold was violated (e.g. exact division
// left a remainder). Always a bug, never a data error.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

struct NotQuasiYamanouchi : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotReduced : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ball/sphere classification requested for a slide target S with
// collapse(S) != S; such complexes need not be balls or spheres.
struct UnclassifiableSlideTarget : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The increasing-flip orientation failed to produce a unique source/sink.
struct NonUniqueGreedy : std::logic_error {
  using std::logic_error::logic_error;
};

// Values of different ranks were mixed in one operation.
struct RankMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace pipedreams
