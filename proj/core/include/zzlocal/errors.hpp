#pragma once

#include <stdexcept>

namespace zzlocal {

// Malformed or semantically invalid input (bad JSON, out-of-range offsets,
// disconnected graphs, face-closure violations, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that is well formed but outside what the algorithms handle,
// e.g. a PL function that is constant along a cycle.
class UnsupportedInput : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace zzlocal
