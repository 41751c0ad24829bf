#pragma once

#include <stdexcept>
#include <string>

namespace cellsheaf {

// Malformed or contract-violating user input: bad faces, wrong shapes,
// non-surjective samplings, unknown names.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal invariant failed. Seeing one means an invalid object slipped
// past validation.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cellsheaf
