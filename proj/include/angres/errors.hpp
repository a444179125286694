#pragma once

#include <stdexcept>
#include <string>

namespace angres {

/// Out-of-range construction or configuration parameter.
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Graph, rotation system, or build sequence that violates a structural invariant.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Coincident points, zero-length edges, zero sines and similar degenerate geometry.
struct DegenerateInput : std::domain_error {
  using std::domain_error::domain_error;
};

/// Malformed text input (graph, embedding, drawing, sweep spec, CSV).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace angres
