#pragma once

#include <stdexcept>
#include <string>

namespace oseq {

// Base for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or violated precondition. The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// A degree, count or label outside what the fixed-width representations hold.
class OverflowError : public InputError {
 public:
  using InputError::InputError;
};

// A class-based matroid operation was handed a matroid with loops.
class LoopError : public InputError {
 public:
  using InputError::InputError;
};

class NotMatroidError : public InputError {
 public:
  using InputError::InputError;
};

// Link at a vertex that lies in no facet. The result would have no faces at all.
class VoidComplexError : public Error {
 public:
  using Error::Error;
};

// An invariant the code relies on did not hold; indicates a bug or a non-matroid
// slipping past validation.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace oseq
