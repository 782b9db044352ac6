#pragma once

#include <stdexcept>

namespace prismatic {

// Raised when input text (graph files, CLI parameters) cannot be parsed.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an operation is called outside its stated domain
// (non-prismatic input, size guard exceeded, invalid construction
// parameters, ...).  The message names the violated requirement.
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace prismatic
