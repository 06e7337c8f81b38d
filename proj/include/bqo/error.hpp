#pragma once

#include <stdexcept>
#include <string>

namespace bqo {

// Malformed documents, shape mismatches, violated call preconditions.
// The CLI maps these to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A branch the constructions promise is unreachable was reached anyway.
// Audits record these as findings instead of crashing.
struct PipelineBug : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace bqo
