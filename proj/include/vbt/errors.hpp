#pragma once

#include <stdexcept>
#include <string>

namespace vbt {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad surface spec, bad JSON, unknown labels, bad words.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Structurally valid surface the combinatorial modules cannot serve
// (rank 0, positive genus seeds, ...).
class UnsupportedSurfaceError : public Error {
 public:
  using Error::Error;
};

// The twist engine has no faithful planar model for the request (genus >= 1).
class UnsupportedModelError : public Error {
 public:
  using Error::Error;
};

// A presentation hypothesis fails (rank bound, infeasible partition,
// double arrows in a quiver handed to the cluster-braid builder).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// A groupoid cycle failed to close; carries the offending pair.
class CounterexampleError : public Error {
 public:
  using Error::Error;
};

} // namespace vbt
