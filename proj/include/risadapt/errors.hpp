#pragma once

#include <stdexcept>
#include <string>

namespace risadapt {

// Two dipoles closer than the minimum separation (or exactly coincident).
struct SelfInteractionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A scene instance whose interaction matrix cannot be solved.
struct DegenerateSceneError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or truncated binary/JSON artifact. Message names the byte offset
// where parsing failed whenever one is known.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Training could not proceed (empty split, non-finite loss, ...).
struct TrainingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A sensing model was asked to consume measurements taken under a different
// probe series than it was trained with.
struct ProbeMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace risadapt
