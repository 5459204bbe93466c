#pragma once

#include <stdexcept>
#include <string>

namespace ftag {

// Rejected input: a document, instance, tree, matching or parameter that
// breaks a stated invariant.  The message names the offending element.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Instance is larger than a solver's configured exhaustive cap.
struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ftag
